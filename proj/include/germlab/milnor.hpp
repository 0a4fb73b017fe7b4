#pragma once

#include "germlab/groebner.hpp"

#include <vector>

namespace germlab {

class NonGorensteinDetected : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Coordinates over the standard-monomial basis of a quotient algebra.
using AlgebraElement = std::vector<ExactScalar>;

/// Milnor algebra O_m / J(Q) of a homogeneous form with isolated singularity.
class QuotientAlgebra {
 public:
  /// Q must be homogeneous of degree >= 3 in 2 or 3 variables over Q.
  explicit QuotientAlgebra(const Polynomial& q, MonomialOrder order = MonomialOrder::Lex);

  const Polynomial& form() const { return form_; }
  const GroebnerBasis& basis() const { return basis_; }
  const std::vector<Monomial>& standard() const { return standard_; }
  std::size_t dimension() const { return standard_.size(); }
  int grading(std::size_t i) const { return standard_[i].degree(); }
  int nil_index() const { return nil_index_; }
  std::size_t socle_index() const { return socle_index_; }
  const Monomial& socle() const { return standard_[socle_index_]; }
  int variable_count() const { return static_cast<int>(form_.variable_count()); }
  int form_degree() const { return form_.total_degree(); }

  AlgebraElement zero() const { return AlgebraElement(dimension()); }
  AlgebraElement unit() const;
  AlgebraElement basis_element(std::size_t i) const;
  /// Class of variable z_j.
  AlgebraElement variable_class(std::size_t j) const;
  AlgebraElement element_of(const Polynomial& p) const;
  Polynomial polynomial_of(const AlgebraElement& a) const;
  std::size_t index_of(const Monomial& m) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  /// Product of two basis elements, from the structure-constant table.
  const std::vector<std::pair<std::size_t, ExactScalar>>& product(std::size_t i, std::size_t j) const;

  /// Basis elements spanning m^k: standard monomials of degree >= k.
  std::vector<AlgebraElement> power_of_maximal_ideal(int k) const;

  /// Each degree-j basis element pairs with some degree-(nu-j) element onto a
  /// nonzero multiple of the socle, and the pairing matrix is nonsingular.
  bool gorenstein_pairing_holds() const;

 private:
  void build_table();
  void verify() const;

  Polynomial form_;
  GroebnerBasis basis_;
  std::vector<Monomial> standard_;
  int nil_index_ = 0;
  std::size_t socle_index_ = 0;
  std::vector<std::vector<std::vector<std::pair<std::size_t, ExactScalar>>>> table_;
};

/// Jacobian ideal generators of a polynomial.
std::vector<Polynomial> jacobian(const Polynomial& q);

}  // namespace germlab
