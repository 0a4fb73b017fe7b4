#pragma once

#include "germlab/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace germlab {

class PolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent tuple over an ordered variable list, with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variable_count) : exponents_(variable_count, 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t variable_count, std::size_t index, int power = 1);

  std::size_t size() const { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  int degree() const { return degree_; }
  const std::vector<int>& exponents() const { return exponents_; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other) in reverse: `*this / divisor`.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial& lhs, const Monomial& rhs) { return lhs.exponents_ == rhs.exponents_; }
  friend bool operator<(const Monomial& lhs, const Monomial& rhs) { return lhs.exponents_ < rhs.exponents_; }

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

enum class MonomialOrder { Lex, GradedLex };

/// Strict "greater in the monomial order" comparison, so that ordered
/// containers list the leading term first.
struct TermOrder {
  MonomialOrder order = MonomialOrder::Lex;
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

using Variables = std::shared_ptr<const std::vector<std::string>>;

Variables make_variables(std::vector<std::string> names);
bool same_variables(const Variables& lhs, const Variables& rhs);

/// Sparse multivariate polynomial over ExactScalar.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, ExactScalar, TermOrder>;

  explicit Polynomial(Variables variables, MonomialOrder order = MonomialOrder::Lex);

  static Polynomial constant(Variables variables, const ExactScalar& value,
                             MonomialOrder order = MonomialOrder::Lex);
  static Polynomial variable(Variables variables, std::size_t index, MonomialOrder order = MonomialOrder::Lex);
  static Polynomial variable(const Variables& variables, const std::string& name,
                             MonomialOrder order = MonomialOrder::Lex);

  const Variables& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_->size(); }
  std::size_t index_of(const std::string& name) const;
  MonomialOrder order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Degree in one variable.
  int degree_in(std::size_t index) const;

  const Monomial& leading_monomial() const;
  const ExactScalar& leading_coefficient() const;
  ExactScalar coefficient(const Monomial& monomial) const;
  bool all_rational() const;

  /// Adds `value * monomial`, dropping the term if it cancels.
  void add_term(const Monomial& monomial, const ExactScalar& value);

  Polynomial with_order(MonomialOrder order) const;
  Polynomial homogeneous_component(int degree) const;
  Polynomial derivative(std::size_t index) const;
  /// Replaces variable `index` by a scalar (the variable stays in the list).
  Polynomial substitute(std::size_t index, const ExactScalar& value) const;
  /// Image under the ring map sending variable i to images[i].
  Polynomial compose(const std::vector<Polynomial>& images) const;
  /// Re-expresses the polynomial over a different variable list; every
  /// variable occurring must exist in the target list.
  Polynomial rebase(const Variables& target, MonomialOrder order) const;
  Polynomial scaled(const ExactScalar& factor) const;
  Polynomial multiply_term(const Monomial& monomial, const ExactScalar& value) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const ExactScalar& lhs, const Polynomial& rhs) { return rhs.scaled(lhs); }
  Polynomial operator-() const { return scaled(ExactScalar(-1)); }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  ExactScalar evaluate(const std::vector<ExactScalar>& point) const;
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  Variables variables_;
  MonomialOrder order_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

std::string monomial_to_string(const Monomial& monomial, const std::vector<std::string>& names);

}  // namespace germlab
