#include "germlab/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace germlab {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw PolynomialError("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t variable_count, std::size_t index, int power) {
  Monomial m(variable_count);
  m.exponents_.at(index) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] -= divisor.exponents_[i];
    if (out.exponents_[i] < 0) throw PolynomialError("monomial quotient is not a monomial");
  }
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  out.degree_ = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
    out.degree_ += out.exponents_[i];
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0 && other.exponents_[i] > 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out = lhs;
  for (std::size_t i = 0; i < lhs.exponents_.size(); ++i) out.exponents_[i] += rhs.exponents_[i];
  out.degree_ = lhs.degree_ + rhs.degree_;
  return out;
}

bool TermOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  if (order == MonomialOrder::GradedLex && lhs.degree() != rhs.degree()) return lhs.degree() > rhs.degree();
  return lhs.exponents() > rhs.exponents();
}

Variables make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_variables(const Variables& lhs, const Variables& rhs) { return lhs == rhs || *lhs == *rhs; }

Polynomial::Polynomial(Variables variables, MonomialOrder order)
    : variables_(std::move(variables)), order_(order), terms_(TermOrder{order}) {}

Polynomial Polynomial::constant(Variables variables, const ExactScalar& value, MonomialOrder order) {
  Polynomial p(std::move(variables), order);
  p.add_term(Monomial(p.variable_count()), value);
  return p;
}

Polynomial Polynomial::variable(Variables variables, std::size_t index, MonomialOrder order) {
  Polynomial p(std::move(variables), order);
  p.add_term(Monomial::variable(p.variable_count(), index), ExactScalar(1));
  return p;
}

Polynomial Polynomial::variable(const Variables& variables, const std::string& name, MonomialOrder order) {
  auto it = std::find(variables->begin(), variables->end(), name);
  if (it == variables->end()) throw PolynomialError("unknown variable " + name);
  return variable(variables, static_cast<std::size_t>(it - variables->begin()), order);
}

std::size_t Polynomial::index_of(const std::string& name) const {
  auto it = std::find(variables_->begin(), variables_->end(), name);
  if (it == variables_->end()) throw PolynomialError("unknown variable " + name);
  return static_cast<std::size_t>(it - variables_->begin());
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::total_degree() const {
  int degree = -1;
  for (const auto& [m, c] : terms_) degree = std::max(degree, m.degree());
  return degree;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int degree = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.degree() == degree; });
}

int Polynomial::degree_in(std::size_t index) const {
  int degree = -1;
  for (const auto& [m, c] : terms_) degree = std::max(degree, m[index]);
  return degree;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw PolynomialError("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const ExactScalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw PolynomialError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

ExactScalar Polynomial::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? ExactScalar() : it->second;
}

bool Polynomial::all_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

void Polynomial::add_term(const Monomial& monomial, const ExactScalar& value) {
  if (value.is_zero()) return;
  if (monomial.size() != variable_count()) throw PolynomialError("monomial length does not match variable count");
  auto [it, inserted] = terms_.try_emplace(monomial, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  Polynomial out(variables_, order);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial out(variables_, order_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  Polynomial out(variables_, order_);
  for (const auto& [m, c] : terms_) {
    int e = m[index];
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[index] -= 1;
    out.add_term(Monomial(std::move(exps)), c * ExactScalar(static_cast<long>(e)));
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t index, const ExactScalar& value) const {
  Polynomial out(variables_, order_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> exps = m.exponents();
    int e = exps[index];
    exps[index] = 0;
    out.add_term(Monomial(std::move(exps)), c * germlab::pow(value, static_cast<unsigned>(e)));
  }
  return out;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  if (images.size() != variable_count()) throw PolynomialError("compose: wrong number of images");
  const Polynomial& model = images.front();
  Polynomial out(model.variables(), model.order());
  // Cache powers of each image; the degree is small everywhere this is used.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!same_variables(images[i].variables(), model.variables())) {
      throw PolynomialError("compose: images over different variables");
    }
    powers[i].push_back(Polynomial::constant(model.variables(), ExactScalar(1), model.order()));
  }
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(model.variables(), c, model.order());
    for (std::size_t i = 0; i < images.size(); ++i) {
      int e = m[i];
      while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * images[i]);
      if (e > 0) term *= powers[i][static_cast<std::size_t>(e)];
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::rebase(const Variables& target, MonomialOrder order) const {
  std::vector<std::size_t> map(variable_count());
  for (std::size_t i = 0; i < variable_count(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*variables_)[i]);
    map[i] = it == target->end() ? target->size() : static_cast<std::size_t>(it - target->begin());
  }
  Polynomial out(target, order);
  for (const auto& [m, c] : terms_) {
    std::vector<int> exps(target->size(), 0);
    for (std::size_t i = 0; i < variable_count(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] == target->size()) throw PolynomialError("variable " + (*variables_)[i] + " missing in target list");
      exps[map[i]] += m[i];
    }
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

Polynomial Polynomial::scaled(const ExactScalar& factor) const {
  Polynomial out(variables_, order_);
  if (factor.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * factor);
  return out;
}

Polynomial Polynomial::multiply_term(const Monomial& monomial, const ExactScalar& value) const {
  Polynomial out(variables_, order_);
  if (value.is_zero()) return out;
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * monomial, c * value);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(variables_, ExactScalar(1), order_);
  Polynomial factor = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent > 0) factor *= factor;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!same_variables(variables_, other.variables_)) throw PolynomialError("mismatched variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_compatible(rhs);
  Polynomial out(lhs.variables_, lhs.order_);
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, cl * cr);
  }
  return out;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  if (!same_variables(lhs.variables_, rhs.variables_)) return false;
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (const auto& [m, c] : lhs.terms_) {
    auto it = rhs.terms_.find(m);
    if (it == rhs.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

ExactScalar Polynomial::evaluate(const std::vector<ExactScalar>& point) const {
  if (point.size() != variable_count()) throw PolynomialError("evaluate: wrong point dimension");
  ExactScalar total;
  for (const auto& [m, c] : terms_) {
    ExactScalar term = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m[i] > 0) term *= germlab::pow(point[i], static_cast<unsigned>(m[i]));
    }
    total += term;
  }
  return total;
}

std::string monomial_to_string(const Monomial& monomial, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    if (monomial[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (monomial[i] > 1) out += "^" + std::to_string(monomial[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool irrational = !c.is_rational();
    bool negative = c.is_rational() && c.sign() < 0;
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (irrational) coeff = "(" + coeff + ")";
    if (m.degree() == 0) {
      os << coeff;
    } else if (coeff == "1") {
      os << monomial_to_string(m, *variables_);
    } else {
      os << coeff << "*" << monomial_to_string(m, *variables_);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace germlab
