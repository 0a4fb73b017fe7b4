#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace germlab {

/// Raised when two scalars from different quadratic fields meet in one
/// operation, or when a field restriction (e.g. "rational only") is violated.
class ScalarContextError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact element of Q or of a quadratic field Q(sqrt(d)).
///
/// The value is `re + im*sqrt(d)` with `d` square-free, not 0 or 1. Negative
/// d gives an imaginary field, where sign() and to_double() throw. A value whose
/// irrational part is zero is plain rational and carries no field tag, so it
/// mixes freely with any Q(sqrt(d)). Rationals are kept canonical by GMP.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : re_(value) {}  // NOLINT: implicit by design of numeric literals
  ExactScalar(int value) : re_(value) {}   // NOLINT
  ExactScalar(const mpz_class& value) : re_(value) {}  // NOLINT
  ExactScalar(const mpq_class& value) : re_(value) { re_.canonicalize(); }  // NOLINT
  ExactScalar(long num, long den);

  /// `re + im*sqrt(radicand)`; the radicand must be square-free, not 0 or 1.
  static ExactScalar quadratic(const mpq_class& re, const mpq_class& im, long radicand);

  /// Parses "n", "n/d", "p/q + p'/q'*sqrt(d)" and "p/q - p'/q'*sqrt(d)".
  static ExactScalar parse(std::string_view text);

  const mpq_class& rational_part() const { return re_; }
  const mpq_class& irrational_part() const { return im_; }
  /// 0 for rational values.
  long radicand() const { return radicand_; }

  bool is_zero() const { return sgn(re_) == 0 && radicand_ == 0; }
  bool is_one() const { return radicand_ == 0 && re_ == 1; }
  bool is_rational() const { return radicand_ == 0; }

  /// Rational value; throws ScalarContextError for irrational values.
  const mpq_class& as_rational() const;

  /// Sign of the real number represented.
  int sign() const;

  ExactScalar conjugate() const;
  /// Field norm down to Q: re^2 - d*im^2.
  mpq_class norm() const;
  ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& lhs, const ExactScalar& rhs) {
    return lhs.radicand_ == rhs.radicand_ && lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
  }

  std::string to_string() const;
  double to_double() const;

 private:
  void check_context(const ExactScalar& other) const;
  void normalize();

  mpq_class re_{0};
  mpq_class im_{0};
  long radicand_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& value);

ExactScalar pow(const ExactScalar& base, unsigned exponent);

/// Square root of a rational square, if it is one.
std::optional<mpq_class> rational_sqrt(const mpq_class& value);

/// Returns square-free part s and cofactor c with |value| = c^2 * s.
std::pair<mpz_class, mpz_class> square_free_decompose(const mpz_class& value);

mpz_class binomial(unsigned n, unsigned k);
mpz_class factorial(unsigned n);

}  // namespace germlab
