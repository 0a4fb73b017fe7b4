// One line per acceptance criterion. Exact checks have tolerance 0; the
// eigencubic diagnostic uses 50 digits and relative threshold 1e-30.
// Runtime limits are part of each criterion.

#include "germlab/harness.hpp"
#include "germlab/parser.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace germlab;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> notes;
  // failures explained entirely by a printed erratum whose correction passes
  bool erratum_only = false;
};

void add_suite(Outcome& o, const std::string& name, std::uint64_t seed) {
  auto r = run_suite(name, seed);
  o.checks += r.checks.size();
  if (!r.passed()) {
    o.pass = false;
    for (const auto& c : r.checks) {
      if (!c.pass) o.notes.push_back(name + ": " + c.name);
    }
  }
}

void add_erratum(Outcome& o, const Erratum& e) {
  o.checks += e.points;
  std::string counts = std::to_string(e.points - e.printed_failures) + "/" + std::to_string(e.points);
  std::string fixed = std::to_string(e.points - e.corrected_failures) + "/" + std::to_string(e.points);
  if (e.printed_failures == 0) {
    o.notes.push_back(e.item + " as printed: " + counts + " (erratum no longer reproduces)");
    o.pass = false;
    return;
  }
  o.notes.push_back(e.item + " as printed (" + e.printed + "): " + counts + " agree");
  o.notes.push_back(e.item + " corrected (" + e.corrected + "): " + fixed + " agree");
  if (o.pass && e.corrected_failures == 0) o.erratum_only = true;
  o.pass = false;
}

Outcome criterion8() {
  Outcome o;
  auto sextic = [](const std::string& text, long radicand = 0) {
    ParseOptions opts;
    opts.radicand = radicand;
    return BinaryForm::from_polynomial(parse_form(text, opts));
  };
  const auto& ex = exceptional_sextics();
  auto vii = fingerprint(Family::Sextic, sextic_invariants(sextic(ex[6].second)));
  auto root7 = fingerprint(
      Family::Sextic, sextic_invariants(sextic("z1^6 + 18*z1^5*z2 + 40*(1 - 2*r)*z1^3*z2^3 + 32*(115 - 41*r)*z2^6", 7)));
  auto expect = [&](const std::string& what, bool ok) {
    ++o.checks;
    if (!ok) {
      o.pass = false;
      o.notes.push_back(what);
    }
  };
  expect("(vii) fingerprint equals the table", vii.values == stored_fingerprint_vii());
  expect("Q(sqrt 7) sextic fingerprint equals (vii)", root7.values == vii.values);
  const std::vector<ExactScalar> m = {ExactScalar(0), ExactScalar(9, 637), ExactScalar(-7, 324)};
  for (std::size_t k = 0; k < 3; ++k) {
    auto v = sextic_invariants(sextic(ex[4 + k].second));
    expect("M of " + label_name(ex[4 + k].first), v.at("M") == m[k]);
  }
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::uint64_t seed = default_seed;
  if (const char* env = std::getenv("GERMLAB_SEED"); env && *env) seed = std::strtoull(env, nullptr, 10);
  std::vector<Erratum> errata = check_errata(seed);

  const std::vector<Criterion> criteria = {
      {1, "quartic closure K(q_t assoc) = J(q_t), closed form J", 1,
       [&] { Outcome o; add_suite(o, "quartic", seed); return o; }},
      {2, "ternary cubic closure, closed form J", 5,
       [&] { Outcome o; add_suite(o, "ternary-cubic", seed); return o; }},
      {3, "dim = (n-1)^m, nil-index m(n-2), one socle monomial", 10,
       [&] { Outcome o; add_suite(o, "structure", seed); return o; }},
      {4, "quintic identities on 11x11 and 11-point grids", 120,
       [&] {
         Outcome o;
         add_suite(o, "quintic-families", seed);
         add_erratum(o, errata[0]);
         return o;
       }},
      {5, "c1..c7 over Q, holdouts, f_t line, 25 random quintics", 60,
       [&] { Outcome o; add_suite(o, "quintic-final", seed); return o; }},
      {6, "octavic M..V of associated form = sextic M..V", 120,
       [&] { Outcome o; add_suite(o, "sextic-octavic", seed); return o; }},
      {7, "associated octavics proportional to the listed octavics", 60,
       [&] {
         Outcome o;
         add_suite(o, "appendix", seed);
         bool suite_ok = o.pass;
         add_erratum(o, errata[1]);
         bool first = o.erratum_only;
         o.pass = suite_ok;
         add_erratum(o, errata[2]);
         o.erratum_only = first && o.erratum_only;
         return o;
       }},
      {8, "(vii) invariant table, Q(sqrt 7) sextic, M of (v)-(vii)", 30, [] { return criterion8(); }},
      {9, "classifier labels, charpoly identity, eigencubic diagnostic", 120,
       [&] {
         Outcome o;
         add_suite(o, "classifier", seed);
         add_suite(o, "charpoly", seed);
         return o;
       }},
      {10, "equivariance, scale invariance, routes, I18, idempotence, pairing", 180,
       [&] {
         Outcome o;
         add_suite(o, "properties", seed);
         add_suite(o, "i18", seed);
         return o;
       }},
  };

  bool acceptable = true;
  int passed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.limit_seconds;
    bool pass = o.pass && in_time;
    passed += pass;
    std::printf("criterion %2d  %s  %-66s %5zu checks  %7.2fs / %gs\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(),
                o.checks, seconds, c.limit_seconds);
    if (!in_time) std::printf("              over the time limit\n");
    for (const auto& n : o.notes) std::printf("              %s\n", n.c_str());
    if (!pass && !(o.erratum_only && in_time)) acceptable = false;
  }
  std::printf("%d/%zu criteria pass; remaining failures are %s\n", passed, criteria.size(),
              acceptable ? "printed misprints whose corrections pass" : "unexplained");
  return acceptable ? 0 : 1;
}
