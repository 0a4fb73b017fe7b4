#include "germlab/sextic.hpp"

#include "germlab/parser.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <random>

namespace germlab {

QhatMatrix qhat(const BinaryForm& q) {
  if (q.degree() != 6) throw WrongShape("Qhat needs a binary sextic");
  auto a = [&](int i) { return q.a(i); };
  ExactScalar three(3);
  Matrix m(4, 4,
           {-a(3), -three * a(2), -three * a(1), -a(0),  //
            a(4), three * a(3), three * a(2), a(1),      //
            -a(5), -three * a(4), -three * a(3), -a(2),  //
            a(6), three * a(5), three * a(4), a(3)});
  ExactScalar i2 = bracket_eval(schemes::sextic_i2(), q);
  ExactScalar i4 = bracket_eval(schemes::sextic_i4(), q);
  std::vector<ExactScalar> expected = {-(ExactScalar(6) * i4 - three * i2 * i2) / ExactScalar(16), ExactScalar(),
                                       i2 / ExactScalar(2), ExactScalar(), ExactScalar(1)};
  std::vector<ExactScalar> actual = m.characteristic_polynomial();
  if (actual != expected) throw CharPolyMismatch("Qhat characteristic polynomial disagrees with I2, I4");
  return {std::move(m), std::move(actual)};
}

std::string label_name(SexticLabel label) {
  switch (label) {
    case SexticLabel::SylvesterGeneric: return "SylvesterGeneric";
    case SexticLabel::I: return "(i)";
    case SexticLabel::II: return "(ii)";
    case SexticLabel::III: return "(iii)";
    case SexticLabel::IV: return "(iv)";
    case SexticLabel::V: return "(v)";
    case SexticLabel::VI: return "(vi)";
    case SexticLabel::VII: return "(vii)";
  }
  return "?";
}

const std::vector<std::pair<SexticLabel, std::string>>& exceptional_sextics() {
  static const std::vector<std::pair<SexticLabel, std::string>> list = {
      {SexticLabel::I, "z1^4*z2^2"},
      {SexticLabel::II, "z1^6 + z1^4*z2^2"},
      {SexticLabel::III, "z1^3*z2^3"},
      {SexticLabel::IV, "z1^5*z2"},
      {SexticLabel::V, "z1^6 + z1*z2^5"},
      {SexticLabel::VI, "2*z1^6 + 18*z1^5*z2 + 10*z1^3*z2^3 - z2^6"},
      {SexticLabel::VII,
       "184*z1^6 - 192*z1^5*z2 - 300*z1^4*z2^2 - 320*z1^3*z2^3 - 150*z1^2*z2^4 - 48*z1*z2^5 + 23*z2^6"},
  };
  return list;
}

const std::vector<ExactScalar>& stored_fingerprint_vi() {
  static const std::vector<ExactScalar> v = {ExactScalar(9, 637),  ExactScalar(1, 1217307), ExactScalar(-1, 1245699),
                                             ExactScalar(1, 637),  ExactScalar(3, 637),     ExactScalar(-1, 273),
                                             ExactScalar(-1, 91),  ExactScalar(-1, 10647)};
  return v;
}

const std::vector<ExactScalar>& stored_fingerprint_vii() {
  static const std::vector<ExactScalar> v = {
      ExactScalar(-7, 324), ExactScalar(3125, 36006768), ExactScalar(-343, 34012224), ExactScalar(-25, 2268),
      ExactScalar(-5, 324), ExactScalar(-5, 324),        ExactScalar(-7, 324),        ExactScalar(49, 104976)};
  return v;
}

SexticClass classify(const BinaryForm& q) {
  if (q.degree() != 6) throw WrongShape("classify-sextic needs a binary sextic");
  if (q.is_zero()) throw ZeroForm("zero sextic");
  SexticClass out{SexticLabel::SylvesterGeneric, discriminant(q), {}, std::nullopt};
  if (out.discriminant.is_zero()) {
    out.pattern = multiplicity_pattern(q);
    const std::vector<std::pair<std::vector<int>, SexticLabel>> known = {
        {{4, 2}, SexticLabel::I}, {{4, 1, 1}, SexticLabel::II}, {{3, 3}, SexticLabel::III}, {{5, 1}, SexticLabel::IV}};
    for (const auto& [pattern, label] : known) {
      if (out.pattern == pattern) out.label = label;
    }
    return out;
  }
  out.fingerprint = fingerprint(Family::Sextic, sextic_invariants(q));
  const auto& values = out.fingerprint->values;
  if (std::all_of(values.begin(), values.end(), [](const ExactScalar& x) { return x.is_zero(); })) {
    out.label = SexticLabel::V;
  } else if (values == stored_fingerprint_vi()) {
    out.label = SexticLabel::VI;
  } else if (values == stored_fingerprint_vii()) {
    out.label = SexticLabel::VII;
  }
  return out;
}

BinaryForm sylvester_form(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c, const ExactScalar& d) {
  auto vars = binary_variables();
  Polynomial u = Polynomial::variable(vars, 0);
  Polynomial v = Polynomial::variable(vars, 1);
  Polynomial w = -(u + v);
  Polynomial p = u.pow(6).scaled(a) + v.pow(6).scaled(b) + w.pow(6).scaled(c) +
                 (u * v * w * (u - v) * (v - w) * (w - u)).scaled(d);
  if (p.is_zero()) return BinaryForm(std::vector<ExactScalar>(7));
  return BinaryForm::from_polynomial(p);
}

bool EigencubicReport::any_square_free() const {
  return std::any_of(branches.begin(), branches.end(), [](const EigenBranch& b) { return b.square_free; });
}

namespace {

using Real = boost::multiprecision::mpfr_float;

struct Complex {
  Real re, im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real magnitude(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

Complex csqrt(const Complex& z) {
  Real r = magnitude(z);
  Real re = sqrt((r + z.re) / 2);
  Real im = sqrt((r - z.re) / 2);
  if (z.im < 0) im = -im;
  return {re, im};
}

Real to_real(const mpq_class& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

Real to_real(const ExactScalar& x) {
  Real out = to_real(x.rational_part());
  if (x.radicand() != 0) out += to_real(x.irrational_part()) * sqrt(Real(x.radicand()));
  return out;
}

std::string format(const Real& x, int digits) {
  if (x == 0) return "0";
  return x.str(digits, std::ios_base::scientific);
}

std::string format(const Complex& z, int digits) {
  if (z.im == 0) return format(z.re, digits);
  std::string im = format(abs(z.im), digits);
  return format(z.re, digits) + (z.im < 0 ? "-" : "+") + im + "*i";
}

template <typename T>
T cubic_discriminant(const T& a, const T& b, const T& c, const T& d) {
  return b * b * c * c - T(4) * a * c * c * c - T(4) * b * b * b * d - T(27) * a * a * d * d + T(18) * a * b * c * d;
}

Complex cubic_discriminant(const std::vector<Complex>& v) {
  auto k = [](long n) { return Complex{Real(n), Real(0)}; };
  const Complex &a = v[0], &b = v[1], &c = v[2], &d = v[3];
  return b * b * c * c - k(4) * a * c * c * c - k(4) * b * b * b * d - k(27) * a * a * d * d + k(18) * a * b * c * d;
}

/// Kernel of a square complex matrix by elimination with partial pivoting;
/// pivots below `tol` count as zero.
std::vector<std::vector<Complex>> numeric_kernel(std::vector<std::vector<Complex>> a, const Real& tol) {
  std::size_t n = a.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < n; ++r) {
      if (magnitude(a[r][col]) > magnitude(a[best][col])) best = r;
    }
    if (magnitude(a[best][col]) < tol) continue;
    std::swap(a[row], a[best]);
    Complex p = a[row][col];
    for (auto& x : a[row]) x = x / p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      Complex f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = a[r][c] - f * a[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<Complex>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Complex> v(n, Complex{Real(0), Real(0)});
    v[free] = Complex{Real(1), Real(0)};
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = Complex{Real(0), Real(0)} - a[k][free];
    out.push_back(std::move(v));
  }
  return out;
}

EigenBranch exact_branch(const Matrix& transposed, const ExactScalar& lambda, std::mt19937_64& rng) {
  Matrix a = transposed;
  for (std::size_t i = 0; i < 4; ++i) a(i, i) -= lambda;
  auto kernel = a.kernel();
  EigenBranch b;
  b.exact = true;
  b.eigenvalue = lambda.to_string();
  b.eigenspace_dimension = kernel.size();
  std::vector<ExactScalar> cubic = kernel.front();
  if (kernel.size() > 1) {
    std::uniform_int_distribution<long> pick(1, 9);
    cubic.assign(4, ExactScalar());
    for (const auto& v : kernel) {
      ExactScalar k(pick(rng));
      for (std::size_t i = 0; i < 4; ++i) cubic[i] += k * v[i];
    }
  }
  ExactScalar d = cubic_discriminant(cubic[0], cubic[1], cubic[2], cubic[3]);
  for (const auto& c : cubic) b.cubic.push_back(c.to_string());
  b.discriminant = d.sign() < 0 ? (-d).to_string() : d.to_string();
  b.square_free = !d.is_zero();
  return b;
}

}  // namespace

EigencubicReport eigencubics_numeric(const BinaryForm& q, int precision, std::uint64_t seed) {
  if (precision < 30) throw std::invalid_argument("eigencubic precision must be at least 30 digits");
  for (const auto& a : q.a()) {
    if (a.radicand() < 0) throw ScalarContextError("eigencubic diagnostic needs real coefficients");
  }
  QhatMatrix h = qhat(q);
  Matrix transposed = h.matrix.transpose();
  std::mt19937_64 rng(seed);

  EigencubicReport report;
  report.precision = precision;
  int threshold_exponent = 3 * precision / 5;
  report.threshold = "1e-" + std::to_string(threshold_exponent);

  // mu^2 + p mu + c0 = 0 with mu = lambda^2.
  const ExactScalar& c0 = h.charpoly[0];
  const ExactScalar& p = h.charpoly[2];
  ExactScalar disc = p * p - ExactScalar(4) * c0;

  std::vector<ExactScalar> exact_lambdas;
  std::vector<bool> exact_mu(2, false);
  if (disc.is_rational() && p.is_rational()) {
    auto root = rational_sqrt(disc.as_rational());
    if (root) {
      for (int s = 0; s < 2; ++s) {
        mpq_class mu = (-p.as_rational() + (s == 0 ? *root : -*root)) / 2;
        auto lambda = sgn(mu) >= 0 ? rational_sqrt(mu) : std::nullopt;
        if (!lambda) continue;
        exact_mu[static_cast<std::size_t>(s)] = true;
        for (const mpq_class& l : {*lambda, mpq_class(-*lambda)}) {
          ExactScalar x(l);
          if (std::find(exact_lambdas.begin(), exact_lambdas.end(), x) == exact_lambdas.end()) exact_lambdas.push_back(x);
        }
      }
    }
  }
  for (const auto& l : exact_lambdas) report.branches.push_back(exact_branch(transposed, l, rng));
  if (exact_mu[0] && exact_mu[1]) return report;

  Real::default_precision(static_cast<unsigned>(precision + 10));
  Real tiny = pow(Real(10), -threshold_exponent);
  Real scale(1);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) scale = std::max(scale, Real(abs(to_real(transposed(i, j)))));
  }
  Real pivot_tol = pow(Real(10), -precision / 2) * scale;

  Complex sq = csqrt({to_real(disc), Real(0)});
  Complex mp = {-to_real(p), Real(0)};
  std::vector<Complex> lambdas;
  for (int s = 0; s < 2; ++s) {
    if (exact_mu[static_cast<std::size_t>(s)]) continue;
    Complex mu = (s == 0 ? mp + sq : mp - sq) / Complex{Real(2), Real(0)};
    Complex l = csqrt(mu);
    for (const Complex& x : {l, Complex{-l.re, -l.im}}) {
      bool seen = std::any_of(lambdas.begin(), lambdas.end(),
                              [&](const Complex& y) { return magnitude(x - y) < pivot_tol; });
      if (!seen) lambdas.push_back(x);
    }
  }

  std::uniform_int_distribution<long> pick(1, 9);
  for (const auto& lambda : lambdas) {
    std::vector<std::vector<Complex>> a(4, std::vector<Complex>(4));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) a[i][j] = {to_real(transposed(i, j)), Real(0)};
      a[i][i] = a[i][i] - lambda;
    }
    auto kernel = numeric_kernel(std::move(a), pivot_tol);
    EigenBranch b;
    b.eigenvalue = format(lambda, 20);
    b.eigenspace_dimension = kernel.size();
    if (kernel.empty()) {
      report.branches.push_back(std::move(b));
      continue;
    }
    std::vector<Complex> cubic = kernel.front();
    if (kernel.size() > 1) {
      cubic.assign(4, Complex{Real(0), Real(0)});
      for (const auto& v : kernel) {
        Complex k{Real(pick(rng)), Real(0)};
        for (std::size_t i = 0; i < 4; ++i) cubic[i] = cubic[i] + k * v[i];
      }
    }
    Real top(0);
    for (const auto& c : cubic) top = std::max(top, magnitude(c));
    for (auto& c : cubic) c = c / Complex{top, Real(0)};
    Real d = magnitude(cubic_discriminant(cubic));
    for (const auto& c : cubic) b.cubic.push_back(format(c, 20));
    b.discriminant = format(d, 6);
    b.square_free = d >= tiny;
    report.branches.push_back(std::move(b));
  }
  return report;
}

}  // namespace germlab
