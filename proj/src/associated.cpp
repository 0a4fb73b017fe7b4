#include "germlab/associated.hpp"

namespace germlab {

namespace {

std::vector<ExactScalar> socle_functional(const QuotientAlgebra& algebra) {
  std::vector<ExactScalar> omega(algebra.dimension());
  omega[algebra.socle_index()] = ExactScalar(1);
  return omega;
}

/// u^s for u given by polynomial coordinates, using the structure constants.
std::vector<Polynomial> times(const QuotientAlgebra& algebra, const std::vector<Polynomial>& lhs,
                              const std::vector<Polynomial>& rhs) {
  const Polynomial& model = lhs.front();
  std::vector<Polynomial> out(algebra.dimension(), Polynomial(model.variables(), model.order()));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      if (rhs[j].is_zero()) continue;
      const auto& prod = algebra.product(i, j);
      if (prod.empty()) continue;
      Polynomial ij = lhs[i] * rhs[j];
      for (const auto& [k, c] : prod) out[k] += ij.scaled(c);
    }
  }
  return out;
}

}  // namespace

NilPolynomial::NilPolynomial(const QuotientAlgebra& algebra) : NilPolynomial(algebra, socle_functional(algebra)) {}

NilPolynomial::NilPolynomial(const QuotientAlgebra& algebra, const std::vector<ExactScalar>& omega)
    : p_(make_variables({})), nil_index_(algebra.nil_index()), variable_count_(algebra.form().variable_count()) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < algebra.dimension(); ++i) {
    if (algebra.grading(i) > 0 && i != algebra.socle_index()) {
      coordinates_.push_back(i);
      labels_.push_back(algebra.standard()[i]);
      names.push_back("x" + std::to_string(coordinates_.size()));
    }
  }
  Variables vars = make_variables(names);
  std::vector<Polynomial> u(algebra.dimension(), Polynomial(vars, MonomialOrder::GradedLex));
  for (std::size_t k = 0; k < coordinates_.size(); ++k) {
    u[coordinates_[k]] = Polynomial::variable(vars, k, MonomialOrder::GradedLex);
  }
  p_ = Polynomial(vars, MonomialOrder::GradedLex);
  std::vector<Polynomial> power = u;
  mpz_class fact = 1;
  for (int s = 2; s <= nil_index_; ++s) {
    power = times(algebra, power, u);
    fact *= s;
    ExactScalar inv(mpq_class(1, fact));
    for (std::size_t k = 0; k < power.size(); ++k) {
      if (!omega[k].is_zero()) p_ += power[k].scaled(omega[k] * inv);
    }
  }
}

Polynomial NilPolynomial::component(int s) const {
  if (s < 2 || s > nil_index_) throw std::out_of_range("nil-polynomial component out of range");
  return p_.homogeneous_component(s);
}

Polynomial NilPolynomial::top_form() const {
  Polynomial top = component(nil_index_);
  Variables w = form_variables(variable_count_);
  Polynomial out(w);
  for (const auto& [m, c] : top.terms()) {
    std::vector<int> exps(variable_count_, 0);
    for (std::size_t k = 0; k < coordinates_.size(); ++k) {
      if (m[k] == 0) continue;
      if (labels_[k].degree() != 1) throw std::logic_error("top component involves a coordinate of degree > 1");
      std::size_t j = 0;
      while (labels_[k][j] == 0) ++j;
      exps[j] += m[k];
    }
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

Variables form_variables(std::size_t m) {
  static const Variables two = make_variables({"w1", "w2"});
  static const Variables three = make_variables({"w1", "w2", "w3"});
  if (m == 2) return two;
  if (m == 3) return three;
  throw std::invalid_argument("form_variables: m must be 2 or 3");
}

Polynomial associated_form_exp2(const QuotientAlgebra& algebra) {
  std::size_t m = algebra.form().variable_count();
  Variables w = form_variables(m);
  std::vector<Polynomial> u(algebra.dimension(), Polynomial(w));
  for (std::size_t j = 0; j < m; ++j) {
    AlgebraElement e = algebra.variable_class(j);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k].is_zero()) u[k] += Polynomial::variable(w, j).scaled(e[k]);
    }
  }
  std::vector<Polynomial> power = u;
  for (int s = 2; s <= algebra.nil_index(); ++s) power = times(algebra, power, u);
  return power[algebra.socle_index()];
}

Polynomial associated_form_exp2(const Polynomial& q) { return associated_form_exp2(QuotientAlgebra(q)); }

Polynomial associated_form_normalform(const Polynomial& q) {
  std::size_t m = q.variable_count();
  if (m != 2 && m != 3) throw PolynomialError("associated form needs 2 or 3 variables");
  int n = q.total_degree();
  int nu = static_cast<int>(m) * (n - 2);
  std::vector<std::string> names = *q.variables();
  Variables w = form_variables(m);
  for (const auto& name : *w) names.push_back(name);
  Variables ring = make_variables(names);
  Polynomial lifted = q.rebase(ring, MonomialOrder::Lex);
  GroebnerBasis g = buchberger(jacobian(lifted), m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!normal_form(lifted.derivative(j), g).is_zero()) throw std::logic_error("Jacobian generator not reduced to 0");
  }
  Polynomial linear(ring);
  for (std::size_t j = 0; j < m; ++j) linear.add_term(Monomial::variable(2 * m, j) * Monomial::variable(2 * m, m + j), 1);
  Polynomial reduced = normal_form(linear.pow(static_cast<unsigned>(nu)), g);

  auto extract = [&](const std::vector<int>& main_exps) {
    Polynomial f(w);
    for (const auto& [mono, c] : reduced.terms()) {
      bool match = true;
      for (std::size_t j = 0; j < m; ++j) match = match && mono[j] == main_exps[j];
      if (!match) continue;
      std::vector<int> exps(m);
      for (std::size_t j = 0; j < m; ++j) exps[j] = mono[m + j];
      f.add_term(Monomial(std::move(exps)), c);
    }
    return f;
  };
  std::vector<int> first(m, 0);
  first[m - 1] = nu;
  Polynomial f = extract(first);
  if (!f.is_zero()) return f;
  std::vector<Monomial> standard = standard_monomials(g);
  const Monomial& socle = standard.back();
  std::vector<int> socle_exps(socle.exponents().begin(), socle.exponents().begin() + static_cast<long>(m));
  return extract(socle_exps);
}

std::optional<ExactScalar> proportional(const Polynomial& f, const Polynomial& g) {
  if (f.variable_count() != g.variable_count()) return std::nullopt;
  if (g.is_zero()) return f.is_zero() ? std::optional<ExactScalar>(ExactScalar(1)) : std::nullopt;
  Polynomial fv = f.variables() == g.variables() ? f : f.rebase(g.variables(), g.order());
  const auto& [m, c] = *g.terms().begin();
  ExactScalar ratio = fv.coefficient(m) / c;
  if (fv == g.scaled(ratio)) return ratio;
  return std::nullopt;
}

Polynomial normalize_form(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (!f.all_rational()) return f.monic();
  mpz_class den = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.as_rational().get_den_mpz_t());
  }
  Polynomial scaled = f.scaled(ExactScalar(den));
  mpz_class content = 0;
  for (const auto& [m, c] : scaled.terms()) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.as_rational().get_num_mpz_t());
  }
  scaled = scaled.scaled(ExactScalar(mpq_class(1, content)));
  if (scaled.leading_coefficient().sign() < 0) scaled = -scaled;
  return scaled;
}

}  // namespace germlab
