#include "germlab/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace germlab {

int BracketScheme::letters() const {
  int k = 0;
  for (const auto& f : factors) k = std::max({k, f.i, f.j});
  return k;
}

void BracketScheme::validate() const {
  std::vector<int> incident(static_cast<std::size_t>(letters()) + 1, 0);
  for (const auto& f : factors) {
    if (f.i < 1 || f.j < 1 || f.i == f.j || f.exponent < 1) throw std::invalid_argument(name + ": malformed bracket");
    incident[static_cast<std::size_t>(f.i)] += f.exponent;
    incident[static_cast<std::size_t>(f.j)] += f.exponent;
  }
  for (std::size_t v = 1; v < incident.size(); ++v) {
    if (incident[v] != degree) {
      throw std::invalid_argument(name + ": letter " + std::to_string(v) + " has degree " +
                                  std::to_string(incident[v]) + ", expected " + std::to_string(degree));
    }
  }
}

namespace {

/// Factor order: fewest live letters after the step, then most letters
/// saturated by it, then input order.
std::vector<BracketFactor> elimination_order(const BracketScheme& scheme) {
  std::vector<BracketFactor> todo = scheme.factors;
  std::map<int, int> remaining;
  for (const auto& f : todo) {
    remaining[f.i] += f.exponent;
    remaining[f.j] += f.exponent;
  }
  std::set<int> live;
  std::vector<BracketFactor> order;
  while (!todo.empty()) {
    std::size_t best = 0;
    std::pair<int, int> best_key{1 << 30, 0};
    for (std::size_t k = 0; k < todo.size(); ++k) {
      const auto& f = todo[k];
      int saturated = (remaining[f.i] == f.exponent) + (remaining[f.j] == f.exponent);
      int after = static_cast<int>(live.size()) + !live.count(f.i) + !live.count(f.j) - saturated;
      std::pair<int, int> key{after, -saturated};
      if (key < best_key) {
        best_key = key;
        best = k;
      }
    }
    BracketFactor f = todo[best];
    todo.erase(todo.begin() + static_cast<long>(best));
    order.push_back(f);
    for (int v : {f.i, f.j}) {
      live.insert(v);
      remaining[v] -= f.exponent;
      if (remaining[v] == 0) live.erase(v);
    }
  }
  return order;
}

}  // namespace

ExactScalar bracket_eval(const BracketScheme& scheme, const BinaryForm& q) {
  scheme.validate();
  if (q.degree() != scheme.degree) throw std::invalid_argument(scheme.name + ": form has the wrong degree");
  std::vector<BracketFactor> order = elimination_order(scheme);
  std::map<int, int> remaining;
  for (const auto& f : order) {
    remaining[f.i] += f.exponent;
    remaining[f.j] += f.exponent;
  }

  // Keys hold the x-exponents of the live letters, in `live` order.
  std::vector<int> live;
  std::map<std::vector<int>, ExactScalar> state{{{}, ExactScalar(1)}};
  auto slot = [&](int letter) {
    auto it = std::find(live.begin(), live.end(), letter);
    if (it != live.end()) return static_cast<std::size_t>(it - live.begin());
    live.push_back(letter);
    std::map<std::vector<int>, ExactScalar> widened;
    for (auto& [key, value] : state) {
      std::vector<int> k = key;
      k.push_back(0);
      widened.emplace(std::move(k), std::move(value));
    }
    state = std::move(widened);
    return live.size() - 1;
  };

  for (const auto& f : order) {
    std::size_t pi = slot(f.i);
    std::size_t pj = slot(f.j);
    int e = f.exponent;
    std::vector<ExactScalar> binom;
    for (int k = 0; k <= e; ++k) {
      ExactScalar c(binomial(static_cast<unsigned>(e), static_cast<unsigned>(k)));
      binom.push_back((e - k) % 2 == 1 ? -c : c);
    }
    std::map<std::vector<int>, ExactScalar> next;
    for (const auto& [key, value] : state) {
      for (int k = 0; k <= e; ++k) {
        std::vector<int> kk = key;
        kk[pi] += k;
        kk[pj] += e - k;
        auto [it, inserted] = next.try_emplace(std::move(kk), value * binom[static_cast<std::size_t>(k)]);
        if (!inserted) it->second += value * binom[static_cast<std::size_t>(k)];
      }
    }
    state.clear();
    for (auto& [key, value] : next) {
      if (!value.is_zero()) state.emplace(key, std::move(value));
    }
    remaining[f.i] -= e;
    remaining[f.j] -= e;
    for (int v : {f.i, f.j}) {
      if (remaining[v] != 0) continue;
      auto it = std::find(live.begin(), live.end(), v);
      std::size_t p = static_cast<std::size_t>(it - live.begin());
      live.erase(it);
      std::map<std::vector<int>, ExactScalar> reduced;
      for (const auto& [key, value] : state) {
        const ExactScalar& a = q.a(key[p]);
        if (a.is_zero()) continue;
        std::vector<int> k = key;
        k.erase(k.begin() + static_cast<long>(p));
        ExactScalar term = value * a;
        auto [rit, inserted] = reduced.try_emplace(std::move(k), term);
        if (!inserted) rit->second += term;
      }
      state.clear();
      for (auto& [key, value] : reduced) {
        if (!value.is_zero()) state.emplace(key, std::move(value));
      }
    }
  }
  auto it = state.find({});
  return it == state.end() ? ExactScalar() : it->second;
}

namespace schemes {

namespace {

BracketScheme make(std::string name, int degree, std::vector<BracketFactor> factors) {
  BracketScheme s{std::move(name), degree, std::move(factors)};
  s.validate();
  return s;
}

}  // namespace

const BracketScheme& sextic_i2() {
  static const BracketScheme s = make("I2", 6, {{1, 2, 6}});
  return s;
}

const BracketScheme& sextic_i4() {
  static const BracketScheme s = make("I4", 6, {{1, 2, 4}, {1, 3, 2}, {2, 4, 2}, {3, 4, 4}});
  return s;
}

const BracketScheme& sextic_i6() {
  static const BracketScheme s = make("I6", 6, {{1, 2, 4}, {1, 6, 2}, {2, 3, 2}, {3, 4, 4}, {4, 5, 2}, {5, 6, 4}});
  return s;
}

const BracketScheme& sextic_i10() {
  static const BracketScheme s = make("I10", 6,
                                      {{1, 2, 2},
                                       {1, 3, 2},
                                       {1, 10, 2},
                                       {2, 3, 4},
                                       {4, 5, 2},
                                       {4, 6, 2},
                                       {4, 10, 2},
                                       {5, 6, 4},
                                       {7, 8, 2},
                                       {7, 9, 2},
                                       {7, 10, 2},
                                       {8, 9, 4}});
  return s;
}

const BracketScheme& sextic_i15() {
  // [9,1] is written as -[1,9]; the sign is applied in sextic_invariants.
  // [4,5] carries exponent 4 so that letters 4 and 5 have degree 6.
  static const BracketScheme s = make("I15", 6,
                                      {{1, 2, 2},   {1, 3, 2},   {1, 4, 1},   {2, 3, 4},   {4, 5, 4},
                                       {4, 9, 1},   {5, 6, 2},   {6, 7, 2},   {6, 8, 2},   {7, 8, 4},
                                       {1, 9, 1},   {9, 10, 4},  {10, 11, 2}, {11, 12, 4}, {12, 13, 2},
                                       {13, 14, 2}, {13, 15, 2}, {14, 15, 4}});
  return s;
}

const BracketScheme& octavic_i2() {
  static const BracketScheme s = make("I2", 8, {{1, 2, 8}});
  return s;
}

const BracketScheme& octavic_i3() {
  static const BracketScheme s = make("I3", 8, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  return s;
}

const BracketScheme& octavic_i4() {
  static const BracketScheme s = make("I4", 8, {{1, 2, 4}, {1, 3, 4}, {2, 4, 4}, {3, 4, 4}});
  return s;
}

const BracketScheme& octavic_i5() {
  static const BracketScheme s = make("I5", 8, {{1, 2, 4}, {2, 3, 4}, {3, 4, 4}, {4, 5, 4}, {1, 5, 4}});
  return s;
}

}  // namespace schemes

void InvariantValues::set(const std::string& name, const ExactScalar& value) {
  entries_.push_back({name, value, ""});
}

void InvariantValues::set_ratio(const std::string& name, const ExactScalar& numerator, const ExactScalar& denominator,
                                const std::string& denominator_name) {
  if (denominator.is_zero()) {
    entries_.push_back({name, std::nullopt, denominator_name});
  } else {
    entries_.push_back({name, numerator / denominator, ""});
  }
}

bool InvariantValues::defined(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e.value.has_value();
  }
  return false;
}

const ExactScalar& InvariantValues::at(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name != name) continue;
    if (!e.value) throw DivisionByVanishingInvariant(name + " is undefined: " + e.vanishing + " = 0");
    return *e.value;
  }
  throw std::out_of_range("no invariant named " + name);
}

namespace {

void require_degree(const BinaryForm& q, int n) {
  if (q.degree() != n) throw WrongShape("expected a binary form of degree " + std::to_string(n));
}

ExactScalar delta_or_zero(const BinaryForm& q) { return q.is_zero() ? ExactScalar() : discriminant(q); }

}  // namespace

InvariantValues quartic_invariants(const BinaryForm& q) {
  require_degree(q, 4);
  const auto& a = q.a();
  ExactScalar i2 = a[0] * a[4] - ExactScalar(4) * a[1] * a[3] + ExactScalar(3) * a[2] * a[2];
  ExactScalar i3 = a[0] * a[2] * a[4] + ExactScalar(2) * a[1] * a[2] * a[3] - a[2] * a[2] * a[2] - a[0] * a[3] * a[3] -
                   a[1] * a[1] * a[4];
  ExactScalar delta = i2 * i2 * i2 - ExactScalar(27) * i3 * i3;
  InvariantValues out;
  out.set("I2", i2);
  out.set("I3", i3);
  out.set("Delta", delta);
  out.set_ratio("J", i2 * i2 * i2, delta, "Delta");
  out.set_ratio("K", i2 * i2 * i2, ExactScalar(27) * i3 * i3, "I3");
  return out;
}

std::vector<ExactScalar> diagonal_cubic_coefficients(const Polynomial& q) {
  if (q.variable_count() != 3 || !q.is_homogeneous() || q.total_degree() != 3) {
    throw WrongShape("expected a ternary cubic");
  }
  std::vector<ExactScalar> out(4);
  for (const auto& [m, c] : q.terms()) {
    if (m[0] == 3) {
      out[0] = c;
    } else if (m[1] == 3) {
      out[1] = c;
    } else if (m[2] == 3) {
      out[2] = c;
    } else if (m[0] == 1 && m[1] == 1 && m[2] == 1) {
      out[3] = c / ExactScalar(6);
    } else {
      throw WrongShape("ternary cubic is not of the shape a z1^3 + b z2^3 + c z3^3 + 6d z1 z2 z3");
    }
  }
  return out;
}

InvariantValues ternary_cubic_invariants(const Polynomial& q) {
  auto coeffs = diagonal_cubic_coefficients(q);
  const ExactScalar &a = coeffs[0], &b = coeffs[1], &c = coeffs[2], &d = coeffs[3];
  ExactScalar d2 = d * d, d3 = d2 * d;
  ExactScalar i4 = a * b * c * d - d2 * d2;
  ExactScalar abc = a * b * c;
  ExactScalar i6 = abc * abc - ExactScalar(20) * abc * d3 - ExactScalar(8) * d3 * d3;
  ExactScalar i4_3 = i4 * i4 * i4;
  ExactScalar delta = i6 * i6 + ExactScalar(64) * i4_3;
  InvariantValues out;
  out.set("I4", i4);
  out.set("I6", i6);
  out.set("Delta", delta);
  out.set_ratio("J", i4_3, delta, "Delta");
  out.set_ratio("K", delta, ExactScalar(4096) * i4_3, "I4");
  return out;
}

BinaryForm canonizant(const BinaryForm& q) {
  require_degree(q, 5);
  auto vars = binary_variables();
  // Entry (r, c) is a_(5-r-c) z1 + a_(4-r-c) z2.
  auto entry = [&](int r, int c) {
    Polynomial p(vars);
    p.add_term(Monomial({1, 0}), q.a(5 - r - c));
    p.add_term(Monomial({0, 1}), q.a(4 - r - c));
    return p;
  };
  Polynomial det(vars);
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int k = 0; k < 6; ++k) {
    Polynomial term = entry(0, perms[k][0]) * entry(1, perms[k][1]) * entry(2, perms[k][2]);
    det += k < 3 ? term : -term;
  }
  if (det.is_zero()) return BinaryForm(std::vector<ExactScalar>(4));
  return BinaryForm::from_polynomial(det);
}

namespace {

ExactScalar quintic_i12(const BinaryForm& q) {
  return ExactScalar(-27) * delta_or_zero(canonizant(q));
}

ExactScalar quintic_t10(const BinaryForm& q) {
  auto vars = binary_variables();
  Polynomial p = q.to_polynomial(vars);
  Polynomial square = p * p;
  if (square.is_zero()) return ExactScalar();
  return transvectant_self(BinaryForm::from_polynomial(square));
}

}  // namespace

InvariantValues quintic_invariants(const BinaryForm& q) {
  require_degree(q, 5);
  ExactScalar delta = delta_or_zero(q);
  ExactScalar t10 = quintic_t10(q);
  ExactScalar i4 = t10 / ExactScalar(mpz_class(7200000 * factorial(10)));
  ExactScalar i8 = (i4 * i4 - delta) / ExactScalar(128);
  ExactScalar i12 = quintic_i12(q);
  InvariantValues out;
  out.set("Delta", delta);
  out.set("T10", t10);
  out.set("I4", i4);
  out.set("I8", i8);
  out.set("I12", i12);
  out.set_ratio("J", t10 * t10, delta, "Delta");
  out.set_ratio("K", i12 * i12, delta * delta * delta, "Delta");
  out.set_ratio("L", t10 * i12, delta * delta, "Delta");
  return out;
}

bool i18_square_check(const BinaryForm& q) {
  if (!q.all_rational()) throw ScalarContextError("I18 check needs rational coefficients");
  auto v = quintic_invariants(q);
  ExactScalar i4 = v.at("I4"), i8 = v.at("I8"), i12 = v.at("I12");
  ExactScalar i8_2 = i8 * i8;
  ExactScalar rhs = i4 * i8_2 * i8_2 + ExactScalar(8) * i8_2 * i8 * i12 - ExactScalar(2) * i4 * i4 * i8_2 * i12 -
                    ExactScalar(72) * i4 * i8 * i12 * i12 - ExactScalar(432) * i12 * i12 * i12 +
                    i4 * i4 * i4 * i12 * i12;
  return rational_sqrt((rhs / ExactScalar(16)).as_rational()).has_value();
}

InvariantValues sextic_invariants(const BinaryForm& q, bool with_i15) {
  require_degree(q, 6);
  ExactScalar delta = delta_or_zero(q);
  ExactScalar i2 = bracket_eval(schemes::sextic_i2(), q);
  ExactScalar i4 = bracket_eval(schemes::sextic_i4(), q);
  ExactScalar i6 = bracket_eval(schemes::sextic_i6(), q);
  ExactScalar i10 = bracket_eval(schemes::sextic_i10(), q);
  ExactScalar base = i2 * i2 - ExactScalar(2) * i4;
  ExactScalar base3 = base * base * base;
  ExactScalar d2 = delta * delta;
  InvariantValues out;
  out.set("Delta", delta);
  out.set("I2", i2);
  out.set("I4", i4);
  out.set("I6", i6);
  out.set("I10", i10);
  if (with_i15) out.set("I15", -bracket_eval(schemes::sextic_i15(), q));
  out.set_ratio("J", ExactScalar(3, 5) * i2 * i2, base, "I2^2-2*I4");
  out.set_ratio("K", ExactScalar(759375) * i10 * i10, base3 * base * base, "I2^2-2*I4");
  out.set_ratio("L", ExactScalar(675) * i2 * i10, base3, "I2^2-2*I4");
  ExactScalar i2_2 = i2 * i2;
  out.set_ratio("M", i2_2 * i2_2 * i2, delta, "Delta");
  out.set_ratio("N", pow(i4, 5), d2, "Delta");
  out.set_ratio("P", pow(i6, 5), d2 * delta, "Delta");
  out.set_ratio("R", i2 * i4 * i4, delta, "Delta");
  out.set_ratio("S", i2_2 * i2 * i4, delta, "Delta");
  out.set_ratio("T", i4 * i6, delta, "Delta");
  out.set_ratio("U", i2_2 * i6, delta, "Delta");
  out.set_ratio("V", i2 * i6 * i6 * i6, d2, "Delta");
  return out;
}

InvariantValues octavic_invariants(const BinaryForm& q) {
  require_degree(q, 8);
  ExactScalar i2 = bracket_eval(schemes::octavic_i2(), q);
  ExactScalar i3 = bracket_eval(schemes::octavic_i3(), q);
  ExactScalar i4 = bracket_eval(schemes::octavic_i4(), q);
  ExactScalar i5 = bracket_eval(schemes::octavic_i5(), q);
  ExactScalar i2_2 = i2 * i2;
  ExactScalar h4 = ExactScalar(2) * i4 - i2_2;
  ExactScalar i8 = ExactScalar(297) * i2_2 * i2_2 - ExactScalar(1188) * i2_2 * i4 + ExactScalar(1188) * i4 * i4 +
                   ExactScalar(1536) * i3 * i5 - ExactScalar(1280) * i2 * i3 * i3;
  ExactScalar i10 = ExactScalar(-60) * i2 * i3 * i5 + ExactScalar(36) * i5 * i5 + ExactScalar(25) * i2_2 * i3 * i3;
  ExactScalar i12 = ExactScalar(-512) * i2 * i10 - ExactScalar(8) * h4 * i8 + ExactScalar(27) * h4 * h4 * h4;
  InvariantValues out;
  out.set("I2", i2);
  out.set("I3", i3);
  out.set("I4", i4);
  out.set("I5", i5);
  out.set("I4hat", h4);
  out.set("I8", i8);
  out.set("I10", i10);
  out.set("I12", i12);
  auto p2 = [](unsigned e) { return mpz_class(mpz_class(1) << e); };
  auto p3 = [](unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
    return r;
  };
  auto p5 = [](unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 5, e);
    return r;
  };
  auto frac = [](const mpz_class& num, const mpz_class& den) { return ExactScalar(mpq_class(num, den)); };
  ExactScalar i10_2 = i10 * i10;
  ExactScalar i10_4 = i10_2 * i10_2;
  ExactScalar i10_6 = i10_4 * i10_2;
  out.set_ratio("M", -frac(p3(8), p2(11) * 5) * pow(h4, 5), i10_2, "I10");
  out.set_ratio("N", frac(3, p2(22) * p5(12)) * pow(i8, 5), i10_4, "I10");
  out.set_ratio("P", frac(p3(4), p2(33) * p5(18)) * pow(i12, 5), i10_6, "I10");
  out.set_ratio("R", -frac(p3(2), p2(11) * p5(5)) * h4 * i8 * i8, i10_2, "I10");
  out.set_ratio("S", -frac(p3(5), p2(11) * p5(3)) * h4 * h4 * h4 * i8, i10_2, "I10");
  out.set_ratio("T", frac(3, p2(11) * p5(6)) * i8 * i12, i10_2, "I10");
  out.set_ratio("U", frac(p3(4), p2(11) * p5(4)) * h4 * h4 * i12, i10_2, "I10");
  out.set_ratio("V", -frac(p3(4), p2(22) * p5(11)) * h4 * pow(i12, 3), i10_4, "I10");
  return out;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Quartic: return "quartic";
    case Family::Quintic: return "quintic";
    case Family::Sextic: return "sextic";
    case Family::Octavic: return "octavic";
    case Family::TernaryCubic: return "ternary-cubic";
  }
  return "unknown";
}

const std::vector<std::string>& sextic_absolute_names() {
  static const std::vector<std::string> names = {"M", "N", "P", "R", "S", "T", "U", "V"};
  return names;
}

InvariantFingerprint fingerprint(Family family, const InvariantValues& values) {
  static const std::vector<std::string> j = {"J"};
  static const std::vector<std::string> jkl = {"J", "K", "L"};
  const std::vector<std::string>& names = family == Family::Quintic                                 ? jkl
                                          : family == Family::Sextic || family == Family::Octavic ? sextic_absolute_names()
                                                                                                  : j;
  InvariantFingerprint out{family, names, {}};
  for (const auto& name : names) out.values.push_back(values.at(name));
  return out;
}

}  // namespace germlab
