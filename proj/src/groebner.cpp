#include "germlab/groebner.hpp"

#include <algorithm>
#include <set>

namespace germlab {

namespace {

struct Pair {
  int degree;
  std::size_t i;
  std::size_t j;
  bool operator<(const Pair& other) const {
    return std::tie(degree, i, j) < std::tie(other.degree, other.i, other.j);
  }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial& lf = f.leading_monomial();
  const Monomial& lg = g.leading_monomial();
  Monomial l = lf.lcm(lg);
  return f.multiply_term(l.quotient(lf), f.leading_coefficient().inverse()) -
         g.multiply_term(l.quotient(lg), g.leading_coefficient().inverse());
}

/// Reduction against a list of polynomials with monic leading terms.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, const std::vector<bool>* active) {
  Polynomial rest = p;
  Polynomial result(p.variables(), p.order());
  while (!rest.is_zero()) {
    const Monomial& lead = rest.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (active && !(*active)[k]) continue;
      if (basis[k].leading_monomial().divides(lead)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor == nullptr) {
      result.add_term(lead, rest.leading_coefficient());
      rest.add_term(Monomial(lead), -rest.leading_coefficient());
      continue;
    }
    ExactScalar factor = rest.leading_coefficient() / divisor->leading_coefficient();
    rest -= divisor->multiply_term(lead.quotient(divisor->leading_monomial()), factor);
  }
  return result;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, std::size_t parameter_count) {
  if (generators.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const Variables& vars = generators.front().variables();
  MonomialOrder order = generators.front().order();
  if (parameter_count >= vars->size()) throw std::invalid_argument("buchberger: no main variables");

  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!same_variables(g.variables(), vars) || g.order() != order) {
      throw PolynomialError("buchberger: generators over different rings");
    }
    if (!g.all_rational()) throw ScalarContextError("Groebner bases are computed over Q only");
    if (!g.is_zero()) basis.push_back(reduce(g.monic(), basis, nullptr).monic());
  }
  basis.erase(std::remove_if(basis.begin(), basis.end(), [](const Polynomial& p) { return p.is_zero(); }),
              basis.end());
  if (basis.empty()) throw std::invalid_argument("buchberger: zero ideal");

  std::set<Pair> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      int degree = basis[i].leading_monomial().lcm(basis[j].leading_monomial()).degree();
      pairs.insert({degree, i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    int degree = basis[a].leading_monomial().lcm(basis[b].leading_monomial()).degree();
    return pairs.count({degree, a, b}) > 0;
  };

  while (!pairs.empty()) {
    Pair pair = *pairs.begin();
    pairs.erase(pairs.begin());
    const Monomial& li = basis[pair.i].leading_monomial();
    const Monomial& lj = basis[pair.j].leading_monomial();
    if (li.coprime(lj)) continue;
    Monomial l = li.lcm(lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = basis[k].leading_monomial().divides(l) && !pending(pair.i, k) && !pending(pair.j, k);
    }
    if (chain) continue;
    Polynomial h = reduce(s_polynomial(basis[pair.i], basis[pair.j]), basis, nullptr);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    add_pairs(basis.size() - 1);
  }

  // Minimalize, then inter-reduce.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (!(mi == mj) || j < i)) keep[i] = false;
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<bool> others(minimal.size(), true);
    others[i] = false;
    Polynomial tail = minimal[i];
    Polynomial lead_term(tail.variables(), tail.order());
    lead_term.add_term(tail.leading_monomial(), tail.leading_coefficient());
    tail -= lead_term;
    reduced.push_back((lead_term + reduce(tail, minimal, &others)).monic());
  }
  TermOrder greater{order};
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return greater(a.leading_monomial(), b.leading_monomial());
  });

  std::size_t main = vars->size() - parameter_count;
  for (const auto& g : reduced) {
    const Monomial& lead = g.leading_monomial();
    for (std::size_t v = main; v < vars->size(); ++v) {
      if (lead[v] != 0) throw PolynomialError("parameter variable " + (*vars)[v] + " occurs in a leading term");
    }
  }

  GroebnerBasis out;
  out.elements_ = std::move(reduced);
  out.variables_ = vars;
  out.order_ = order;
  out.parameter_count_ = parameter_count;
  return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  if (!same_variables(p.variables(), g.variables())) throw PolynomialError("normal_form: ring mismatch");
  Polynomial q = p.order() == g.order() ? p : p.with_order(g.order());
  return reduce(q, g.elements(), nullptr);
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& g) {
  std::size_t n = g.variables()->size();
  std::size_t main = g.main_variable_count();
  std::vector<int> bound(main, -1);
  for (const auto& element : g.elements()) {
    const Monomial& lead = element.leading_monomial();
    std::size_t nonzero = 0, which = 0;
    for (std::size_t v = 0; v < main; ++v) {
      if (lead[v] > 0) {
        ++nonzero;
        which = v;
      }
    }
    if (nonzero == 0) return {};  // unit ideal
    if (nonzero == 1 && (bound[which] < 0 || lead[which] < bound[which])) bound[which] = lead[which];
  }
  for (std::size_t v = 0; v < main; ++v) {
    if (bound[v] < 0) throw InfiniteQuotient("quotient is infinite-dimensional: no pure power of " + (*g.variables())[v]);
  }
  std::vector<Monomial> out;
  std::vector<int> exps(n, 0);
  while (true) {
    Monomial m(exps);
    bool standard = std::none_of(g.elements().begin(), g.elements().end(),
                                 [&](const Polynomial& e) { return e.leading_monomial().divides(m); });
    if (standard) out.push_back(std::move(m));
    std::size_t v = 0;
    while (v < main) {
      if (++exps[v] < bound[v]) break;
      exps[v] = 0;
      ++v;
    }
    if (v == main) break;
  }
  TermOrder greater{g.order()};
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return greater(a, b);
  });
  return out;
}

bool is_groebner(const GroebnerBasis& g) {
  const auto& e = g.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!reduce(s_polynomial(e[i], e[j]), e, nullptr).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& g) {
  const auto& e = g.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i].leading_coefficient().is_one()) return false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : e[j].terms()) {
        if (e[i].leading_monomial().divides(m)) return false;
      }
    }
  }
  return true;
}

}  // namespace germlab
