#pragma once

#include "germlab/milnor.hpp"

#include <optional>

namespace germlab {

/// P = omega(exp2(u)) on the hyperplane spanned by the non-unit, non-socle
/// standard monomials; omega is the socle-coefficient functional unless a
/// different functional is supplied.
class NilPolynomial {
 public:
  NilPolynomial(const QuotientAlgebra& algebra, const std::vector<ExactScalar>& omega);
  explicit NilPolynomial(const QuotientAlgebra& algebra);

  const Polynomial& polynomial() const { return p_; }
  /// Basis index (in the algebra) of each coordinate x_k.
  const std::vector<std::size_t>& coordinates() const { return coordinates_; }
  Polynomial component(int s) const;
  /// The degree-nu component restricted to the degree-1 coordinates, renamed w1..wm.
  Polynomial top_form() const;
  int nil_index() const { return nil_index_; }

 private:
  Polynomial p_;
  std::vector<std::size_t> coordinates_;
  std::vector<Monomial> labels_;
  int nil_index_;
  std::size_t variable_count_;
};

Variables form_variables(std::size_t m);  // {w1, .., wm}

/// omega((w1 e1 + ... + wm em)^nu) computed in the quotient.
Polynomial associated_form_exp2(const QuotientAlgebra& algebra);
Polynomial associated_form_exp2(const Polynomial& q);

/// Socle coefficient of normal_form((w1 z1 + ... + wm zm)^nu) with the w's as
/// passthrough parameters of a separate Groebner run.
Polynomial associated_form_normalform(const Polynomial& q);

/// c with f = c g, if any.
std::optional<ExactScalar> proportional(const Polynomial& f, const Polynomial& g);

/// Integer primitive representative with positive leading coefficient; for
/// irrational coefficients, scaled to leading coefficient 1.
Polynomial normalize_form(const Polynomial& f);

}  // namespace germlab
