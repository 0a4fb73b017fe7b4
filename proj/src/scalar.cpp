#include "germlab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace germlab {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

mpq_class parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string cleaned;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  if (!cleaned.empty() && cleaned.front() == '+') cleaned.erase(0, 1);
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    char ch = cleaned[i];
    bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (ch == '-' && i == 0);
    if (!ok) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  mpq_class value;
  if (value.set_str(cleaned, 10) != 0) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

}  // namespace

ExactScalar::ExactScalar(long num, long den) : re_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re_.canonicalize();
}

ExactScalar ExactScalar::quadratic(const mpq_class& re, const mpq_class& im, long radicand) {
  if (radicand == 0 || radicand == 1) throw ScalarContextError("radicand must not be 0 or 1");
  auto [free_part, cofactor] = square_free_decompose(mpz_class(radicand < 0 ? -radicand : radicand));
  if (cofactor != 1) throw ScalarContextError("radicand must be square-free");
  ExactScalar out;
  out.re_ = re;
  out.im_ = im;
  out.radicand_ = radicand;
  out.normalize();
  return out;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  text = trim(text);
  auto root = text.find("sqrt(");
  if (root == std::string_view::npos) return ExactScalar(parse_rational(text));

  auto close = text.find(')', root);
  if (close == std::string_view::npos || trim(text.substr(close + 1)) != "") {
    throw std::invalid_argument("malformed quadratic literal '" + std::string(text) + "'");
  }
  long radicand = std::stol(std::string(text.substr(root + 5, close - root - 5)));

  // Coefficient of sqrt(d) sits between the last top-level sign and the '*'.
  std::string_view head = trim(text.substr(0, root));
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  }
  mpq_class re = 0;
  std::string_view im_text = head;
  if (split != std::string_view::npos) {
    re = parse_rational(head.substr(0, split));
    im_text = head.substr(split);
  }
  im_text = trim(im_text);
  mpq_class im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = parse_rational(im_text);
  }
  return quadratic(re, im, radicand);
}

const mpq_class& ExactScalar::as_rational() const {
  if (radicand_ != 0) throw ScalarContextError("irrational scalar " + to_string() + " where Q was required");
  return re_;
}

int ExactScalar::sign() const {
  if (radicand_ == 0) return sgn(re_);
  if (radicand_ < 0) throw ScalarContextError("sign of the non-real number " + to_string());
  int a = sgn(re_);
  int b = sgn(im_);
  if (a == 0) return b;
  if (a == b) return a;
  mpq_class lhs = re_ * re_;
  mpq_class rhs = im_ * im_ * radicand_;
  int c = cmp(lhs, rhs);
  return c > 0 ? a : (c < 0 ? b : 0);
}

ExactScalar ExactScalar::conjugate() const {
  ExactScalar out = *this;
  out.im_ = -out.im_;
  return out;
}

mpq_class ExactScalar::norm() const { return re_ * re_ - im_ * im_ * radicand_; }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (radicand_ == 0) return ExactScalar(mpq_class(1 / re_));
  mpq_class n = norm();
  ExactScalar out;
  out.re_ = re_ / n;
  out.im_ = -im_ / n;
  out.radicand_ = radicand_;
  out.normalize();
  return out;
}

void ExactScalar::check_context(const ExactScalar& other) const {
  if (radicand_ != 0 && other.radicand_ != 0 && radicand_ != other.radicand_) {
    throw ScalarContextError("mixing Q(sqrt(" + std::to_string(radicand_) + ")) with Q(sqrt(" +
                             std::to_string(other.radicand_) + "))");
  }
}

void ExactScalar::normalize() {
  if (sgn(im_) == 0) radicand_ = 0;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  check_context(rhs);
  re_ += rhs.re_;
  if (rhs.radicand_ != 0) {
    im_ += rhs.im_;
    radicand_ = rhs.radicand_;
  }
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  check_context(rhs);
  re_ -= rhs.re_;
  if (rhs.radicand_ != 0) {
    im_ -= rhs.im_;
    radicand_ = rhs.radicand_;
  }
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  check_context(rhs);
  if (radicand_ == 0 && rhs.radicand_ == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  long d = radicand_ != 0 ? radicand_ : rhs.radicand_;
  mpq_class re = re_ * rhs.re_ + im_ * rhs.im_ * d;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  radicand_ = d;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.radicand_ == 0) {
    if (sgn(rhs.re_) == 0) throw std::domain_error("division by zero");
    re_ /= rhs.re_;
    if (radicand_ != 0) im_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.re_ = -out.re_;
  out.im_ = -out.im_;
  return out;
}

std::string ExactScalar::to_string() const {
  if (radicand_ == 0) return re_.get_str();
  std::string root = "sqrt(" + std::to_string(radicand_) + ")";
  std::string im_abs = mpq_class(abs(im_)).get_str();
  std::string im_term = (im_abs == "1" ? root : im_abs + "*" + root);
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_term;
  return re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + im_term;
}

double ExactScalar::to_double() const {
  if (radicand_ < 0) throw ScalarContextError("non-real number " + to_string() + " has no real value");
  double value = re_.get_d();
  if (radicand_ != 0) value += im_.get_d() * std::sqrt(static_cast<double>(radicand_));
  return value;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& value) { return os << value.to_string(); }

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
  ExactScalar result(1);
  ExactScalar factor = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent > 0) factor *= factor;
  }
  return result;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& value) {
  if (sgn(value) < 0) return std::nullopt;
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class out(rn, rd);
  out.canonicalize();
  return out;
}

std::pair<mpz_class, mpz_class> square_free_decompose(const mpz_class& value) {
  mpz_class rest = abs(value);
  mpz_class free_part = 1;
  mpz_class cofactor = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      cofactor *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      free_part *= p;
    }
  }
  free_part *= rest;
  return {free_part, cofactor};
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace germlab
