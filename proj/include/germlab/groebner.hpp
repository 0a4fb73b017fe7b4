#pragma once

#include "germlab/polynomial.hpp"

#include <vector>

namespace germlab {

class InfiniteQuotient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced Groebner basis over Q. The last `parameter_count` variables are
/// passthrough parameters: lowest in the order and absent from every leading
/// term, so they behave as coefficients under reduction.
class GroebnerBasis {
 public:
  const std::vector<Polynomial>& elements() const { return elements_; }
  const Variables& variables() const { return variables_; }
  MonomialOrder order() const { return order_; }
  std::size_t parameter_count() const { return parameter_count_; }
  std::size_t main_variable_count() const { return variables_->size() - parameter_count_; }

 private:
  friend GroebnerBasis buchberger(const std::vector<Polynomial>&, std::size_t);
  std::vector<Polynomial> elements_;
  Variables variables_;
  MonomialOrder order_ = MonomialOrder::Lex;
  std::size_t parameter_count_ = 0;
};

/// Buchberger with the coprime and chain criteria; pairs are taken by lowest
/// lcm degree, ties by pair index.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, std::size_t parameter_count = 0);

/// Complete reduction modulo the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// Monomials in the main variables not divisible by any leading monomial,
/// sorted by degree, then by the basis order. Throws InfiniteQuotient if the
/// staircase is infinite.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g);

/// True if every S-polynomial of basis pairs reduces to zero.
bool is_groebner(const GroebnerBasis& g);
bool is_reduced(const GroebnerBasis& g);

}  // namespace germlab
