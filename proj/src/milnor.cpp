#include "germlab/milnor.hpp"

#include "germlab/matrix.hpp"

#include <algorithm>

namespace germlab {

std::vector<Polynomial> jacobian(const Polynomial& q) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < q.variable_count(); ++i) out.push_back(q.derivative(i));
  return out;
}

QuotientAlgebra::QuotientAlgebra(const Polynomial& q, MonomialOrder order)
    : form_(q.with_order(order)), basis_(buchberger(jacobian(q.with_order(order)))) {
  std::size_t m = q.variable_count();
  if (m != 2 && m != 3) throw PolynomialError("Milnor algebra needs 2 or 3 variables");
  if (!q.is_homogeneous() || q.total_degree() < 3) throw PolynomialError("Milnor algebra needs a homogeneous form of degree >= 3");
  standard_ = standard_monomials(basis_);
  nil_index_ = standard_.back().degree();
  std::size_t top = 0;
  for (std::size_t i = 0; i < standard_.size(); ++i) {
    if (standard_[i].degree() == nil_index_) {
      ++top;
      socle_index_ = i;
    }
  }
  if (top != 1) throw NonGorensteinDetected("top graded piece has dimension " + std::to_string(top));
  build_table();
  verify();
}

std::size_t QuotientAlgebra::index_of(const Monomial& m) const {
  auto it = std::find(standard_.begin(), standard_.end(), m);
  if (it == standard_.end()) throw std::out_of_range("not a standard monomial");
  return static_cast<std::size_t>(it - standard_.begin());
}

AlgebraElement QuotientAlgebra::unit() const { return basis_element(0); }

AlgebraElement QuotientAlgebra::basis_element(std::size_t i) const {
  AlgebraElement e = zero();
  e.at(i) = ExactScalar(1);
  return e;
}

AlgebraElement QuotientAlgebra::variable_class(std::size_t j) const {
  return element_of(Polynomial::variable(form_.variables(), j, form_.order()));
}

AlgebraElement QuotientAlgebra::element_of(const Polynomial& p) const {
  Polynomial r = normal_form(p, basis_);
  AlgebraElement e = zero();
  for (const auto& [mono, c] : r.terms()) e[index_of(mono)] = c;
  return e;
}

Polynomial QuotientAlgebra::polynomial_of(const AlgebraElement& a) const {
  Polynomial p(form_.variables(), form_.order());
  for (std::size_t i = 0; i < a.size(); ++i) p.add_term(standard_[i], a[i]);
  return p;
}

void QuotientAlgebra::build_table() {
  std::size_t n = dimension();
  table_.assign(n, std::vector<std::vector<std::pair<std::size_t, ExactScalar>>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Polynomial p(form_.variables(), form_.order());
      p.add_term(standard_[i] * standard_[j], ExactScalar(1));
      AlgebraElement e = element_of(p);
      std::vector<std::pair<std::size_t, ExactScalar>> sparse;
      for (std::size_t k = 0; k < n; ++k) {
        if (!e[k].is_zero()) sparse.emplace_back(k, e[k]);
      }
      table_[i][j] = sparse;
      table_[j][i] = std::move(sparse);
    }
  }
}

const std::vector<std::pair<std::size_t, ExactScalar>>& QuotientAlgebra::product(std::size_t i, std::size_t j) const {
  return table_[i][j];
}

AlgebraElement QuotientAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out = zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      ExactScalar ab = a[i] * b[j];
      for (const auto& [k, c] : table_[i][j]) out[k] += ab * c;
    }
  }
  return out;
}

std::vector<AlgebraElement> QuotientAlgebra::power_of_maximal_ideal(int k) const {
  if (k < 1) throw std::invalid_argument("power_of_maximal_ideal needs k >= 1");
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (grading(i) >= k) out.push_back(basis_element(i));
  }
  return out;
}

bool QuotientAlgebra::gorenstein_pairing_holds() const {
  std::size_t n = dimension();
  Matrix pairing(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    bool partner = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : table_[i][j]) {
        if (k == socle_index_) {
          pairing(i, j) = c;
          if (grading(i) + grading(j) == nil_index_) partner = true;
        }
      }
    }
    if (!partner) return false;
  }
  return !pairing.determinant().is_zero();
}

void QuotientAlgebra::verify() const {
  int m = variable_count();
  int n = form_degree();
  if (nil_index_ != m * (n - 2)) throw NonGorensteinDetected("nil-index differs from m(n-2)");
  std::size_t expected = 1;
  for (int i = 0; i < m; ++i) expected *= static_cast<std::size_t>(n - 1);
  if (dimension() != expected) throw NonGorensteinDetected("dimension differs from (n-1)^m");
  for (std::size_t i = 0; i < dimension(); ++i) {
    for (std::size_t j = 0; j < dimension(); ++j) {
      for (const auto& [k, c] : table_[i][j]) {
        if (grading(k) != grading(i) + grading(j)) throw NonGorensteinDetected("multiplication breaks the grading");
      }
    }
  }
}

}  // namespace germlab
