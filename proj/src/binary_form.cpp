#include "germlab/binary_form.hpp"

#include "univariate.hpp"

#include <algorithm>

namespace germlab {

BinaryForm::BinaryForm(std::vector<ExactScalar> a) : a_(std::move(a)) {
  if (a_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
}

BinaryForm BinaryForm::from_coefficients(const std::vector<ExactScalar>& coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  unsigned n = static_cast<unsigned>(coefficients.size() - 1);
  std::vector<ExactScalar> a;
  a.reserve(coefficients.size());
  for (unsigned i = 0; i <= n; ++i) a.push_back(coefficients[i] / ExactScalar(binomial(n, i)));
  return BinaryForm(std::move(a));
}

BinaryForm BinaryForm::from_polynomial(const Polynomial& p) {
  if (p.variable_count() != 2) throw PolynomialError("binary form needs exactly two variables");
  if (p.is_zero()) throw DegenerateForm("zero form");
  if (!p.is_homogeneous()) throw PolynomialError("binary form must be homogeneous");
  int n = p.total_degree();
  std::vector<ExactScalar> coefficients(static_cast<std::size_t>(n) + 1);
  for (const auto& [m, c] : p.terms()) coefficients[static_cast<std::size_t>(m[0])] = c;
  return from_coefficients(coefficients);
}

ExactScalar BinaryForm::coefficient(int i) const {
  return a(i) * ExactScalar(binomial(static_cast<unsigned>(degree()), static_cast<unsigned>(i)));
}

std::vector<ExactScalar> BinaryForm::coefficients() const {
  std::vector<ExactScalar> out;
  for (int i = 0; i <= degree(); ++i) out.push_back(coefficient(i));
  return out;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : a_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool BinaryForm::all_rational() const {
  for (const auto& c : a_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

Polynomial BinaryForm::to_polynomial(const Variables& variables) const {
  if (variables->size() != 2) throw PolynomialError("binary form needs exactly two variables");
  Polynomial p(variables);
  int n = degree();
  for (int i = 0; i <= n; ++i) p.add_term(Monomial({i, n - i}), coefficient(i));
  return p;
}

BinaryForm BinaryForm::linear_change(const Matrix& m) const {
  auto vars = binary_variables();
  Polynomial image = germlab::linear_change(to_polynomial(vars), m);
  if (image.is_zero()) return BinaryForm(std::vector<ExactScalar>(a_.size()));
  return from_polynomial(image);
}

BinaryForm BinaryForm::scaled(const ExactScalar& factor) const {
  std::vector<ExactScalar> a = a_;
  for (auto& c : a) c *= factor;
  return BinaryForm(std::move(a));
}

Variables binary_variables() {
  static const Variables vars = make_variables({"z1", "z2"});
  return vars;
}

ExactScalar resultant(const std::vector<ExactScalar>& p, const std::vector<ExactScalar>& q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("resultant of empty coefficient list");
  std::size_t n = p.size() - 1;
  std::size_t k = q.size() - 1;
  std::size_t size = n + k;
  if (size == 0) return ExactScalar(1);
  Matrix s(size, size);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s(r, r + i) = p[i];
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= k; ++i) s(k + r, r + i) = q[i];
  }
  return s.determinant();
}

namespace {

std::vector<ExactScalar> descending_z1(const Polynomial& p) {
  if (p.variable_count() != 2 || !p.is_homogeneous() || p.is_zero()) {
    throw PolynomialError("resultant needs nonzero binary forms");
  }
  int n = p.total_degree();
  std::vector<ExactScalar> out(static_cast<std::size_t>(n) + 1);
  for (const auto& [m, c] : p.terms()) out[static_cast<std::size_t>(n - m[0])] = c;
  return out;
}

}  // namespace

ExactScalar resultant(const Polynomial& p, const Polynomial& q) { return resultant(descending_z1(p), descending_z1(q)); }

ExactScalar discriminant(const BinaryForm& q) {
  int n = q.degree();
  if (n < 2) throw std::invalid_argument("discriminant needs degree >= 2");
  if (q.is_zero()) throw DegenerateForm("discriminant of zero form");
  BinaryForm form = q;
  for (long k = 1; form.a(n).is_zero(); ++k) {
    Matrix shear = Matrix::from_integers({{1, 0}, {k, 1}});
    form = q.linear_change(shear);
  }
  std::vector<ExactScalar> coeffs = form.coefficients();
  std::vector<ExactScalar> p_desc(coeffs.rbegin(), coeffs.rend());
  std::vector<ExactScalar> d_desc;
  for (int i = n; i >= 1; --i) d_desc.push_back(coeffs[static_cast<std::size_t>(i)] * ExactScalar(static_cast<long>(i)));
  ExactScalar r = resultant(p_desc, d_desc);
  mpz_class nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return r / (ExactScalar(nn) * form.a(n));
}

std::vector<int> multiplicity_pattern(const BinaryForm& q) {
  if (q.is_zero()) throw DegenerateForm("multiplicity pattern of zero form");
  // Dehomogenize at z2 = 1; the variable is z1.
  detail::Dense f = q.coefficients();
  detail::trim(f);
  std::vector<int> out = detail::root_multiplicities(f);
  int at_infinity = q.degree() - detail::degree(f);
  if (at_infinity > 0) out.push_back(at_infinity);
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool is_square_free(const BinaryForm& q) {
  if (q.is_zero()) return false;
  return !discriminant(q).is_zero();
}

ExactScalar transvectant_self(const BinaryForm& q) {
  unsigned n = static_cast<unsigned>(q.degree());
  ExactScalar sum;
  for (unsigned i = 0; i <= n; ++i) {
    ExactScalar term = ExactScalar(binomial(n, i)) * q.a(static_cast<int>(i)) * q.a(static_cast<int>(n - i));
    if (i % 2 == 1) term = -term;
    sum += term;
  }
  mpz_class f = factorial(n);
  return sum * ExactScalar(mpz_class(f * f));
}

}  // namespace germlab
