#include "cli.hpp"

#include "CLI11.hpp"
#include "germlab/associated.hpp"
#include "germlab/harness.hpp"
#include "germlab/parser.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>

namespace germlab::cli {
namespace {

using Json = nlohmann::ordered_json;

std::uint64_t seed_from_env() {
  const char* env = std::getenv("GERMLAB_SEED");
  if (env == nullptr || *env == '\0') return default_seed;
  char* end = nullptr;
  auto v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw std::invalid_argument("GERMLAB_SEED must be a non-negative integer");
  return v;
}

Polynomial read_form(const std::string& text, const std::string& field) {
  ParseOptions opts;
  opts.radicand = parse_field(field);
  auto p = parse_form(text, opts);
  if (p.is_zero()) throw ZeroForm("zero form");
  return p;
}

Json scalar(const ExactScalar& x) { return x.to_string(); }

Json values_json(const InvariantValues& v) {
  Json out = Json::object();
  for (const auto& e : v.entries()) {
    if (e.value) out[e.name] = scalar(*e.value);
  }
  return out;
}

Json fingerprint_json(const InvariantFingerprint& f) {
  Json out = Json::object();
  for (std::size_t i = 0; i < f.names.size(); ++i) out[f.names[i]] = scalar(f.values[i]);
  return out;
}

std::string monomial_text(const Monomial& m, const Variables& vars) { return monomial_to_string(m, *vars); }

Json cmd_milnor(const Polynomial& q) {
  QuotientAlgebra a(q);
  const auto& vars = q.variables();
  Json standard = Json::array(), grading = Json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    standard.push_back(monomial_text(a.standard()[i], vars));
    grading.push_back(a.grading(i));
  }
  Json out;
  out["dimension"] = a.dimension();
  out["nil_index"] = a.nil_index();
  out["socle"] = monomial_text(a.socle(), vars);
  out["standard"] = standard;
  out["grading"] = grading;
  return out;
}

Json cmd_associated(const Polynomial& q) {
  auto f = normalize_form(associated_form_exp2(q));
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back(Json{{"monomial", monomial_text(m, f.variables())}, {"coefficient", scalar(c)}});
  Json out;
  out["degree"] = f.total_degree();
  out["form"] = f.to_string();
  out["coefficients"] = terms;
  return out;
}

Family family_from_flag(const std::string& flag, const Polynomial& q) {
  Family detected = family_of(q);
  if (flag == "auto") return detected;
  static const std::vector<std::pair<std::string, Family>> names = {
      {"quartic", Family::Quartic}, {"quintic", Family::Quintic},           {"sextic", Family::Sextic},
      {"octavic", Family::Octavic}, {"ternary-cubic", Family::TernaryCubic}};
  for (const auto& [name, family] : names) {
    if (name != flag) continue;
    if (family != detected) throw UnsupportedFamily("form is a " + family_name(detected) + ", not a " + name);
    return family;
  }
  throw UnsupportedFamily("unknown family '" + flag + "'");
}

Json cmd_classify(const Polynomial& q, bool diagnose, std::uint64_t seed) {
  if (family_of(q) != Family::Sextic) throw UnsupportedFamily("classify-sextic needs a binary sextic");
  auto f = BinaryForm::from_polynomial(q);
  auto c = classify(f);
  Json evidence;
  evidence["pattern"] = c.pattern;
  if (c.fingerprint) evidence["fingerprint"] = fingerprint_json(*c.fingerprint);
  Json out;
  out["label"] = label_name(c.label);
  out["evidence"] = evidence;
  if (diagnose) {
    auto report = eigencubics_numeric(f, 50, seed);
    Json branches = Json::array();
    for (const auto& b : report.branches) {
      branches.push_back(Json{{"eigenvalue", b.eigenvalue},
                              {"exact", b.exact},
                              {"eigenspace_dimension", b.eigenspace_dimension},
                              {"cubic", b.cubic},
                              {"discriminant", b.discriminant},
                              {"square_free", b.square_free}});
    }
    out["eigencubics"] = Json{{"precision", report.precision},
                              {"threshold", report.threshold},
                              {"square_free_found", report.any_square_free()},
                              {"branches", branches}};
  }
  return out;
}

Json cmd_equivalent(const Polynomial& a, const Polynomial& b) {
  auto r = equivalent(a, b);
  Json out;
  out["verdict"] = verdict_name(r.verdict);
  out["family"] = family_name(r.family);
  out["fingerprints"] = Json::array({fingerprint_json(r.first), fingerprint_json(r.second)});
  return out;
}

Json report_json(const IdentityReport& r) {
  Json failures = Json::array();
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    Json f{{"check", c.name}};
    if (!c.lhs.empty()) f["lhs"] = c.lhs;
    if (!c.rhs.empty()) f["rhs"] = c.rhs;
    failures.push_back(f);
  }
  Json out;
  out["suite"] = r.suite;
  out["status"] = r.passed() ? "pass" : "fail";
  out["checks"] = r.checks.size();
  out["failed"] = r.failures();
  out["failures"] = failures;
  return out;
}

int cmd_verify(const std::string& which, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (which == "all") {
    names = suite_names();
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), which) == known.end()) throw UnsupportedFamily("unknown suite '" + which + "'");
    names.push_back(which);
  }
  Json reports = Json::array();
  bool all = true;
  err << std::left << std::setw(18) << "suite" << std::setw(8) << "checks" << std::setw(8) << "failed" << std::setw(8) << "status" << "seconds\n";
  for (const auto& name : names) {
    auto r = run_suite(name, seed);
    all = all && r.passed();
    err << std::setw(18) << r.suite << std::setw(8) << r.checks.size() << std::setw(8) << r.failures()
        << std::setw(8) << (r.passed() ? "pass" : "FAIL") << std::fixed << std::setprecision(2) << r.seconds << "\n";
    for (const auto& c : r.checks) {
      if (!c.pass) err << "  failed: " << c.name << (c.lhs.empty() ? "" : "  [" + c.lhs + " vs " + c.rhs + "]") << "\n";
    }
    reports.push_back(report_json(r));
  }
  out << Json{{"seed", std::to_string(seed)}, {"passed", all}, {"suites", reports}}.dump() << "\n";
  return all ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Associated forms of homogeneous germs: Milnor algebras, invariants, classification."};
  app.name("germlab");
  app.require_subcommand(1);
  app.set_version_flag("--version", "germlab 1.0 (json schema " + std::to_string(json_schema_version) + ")");

  std::string field = "Q", family = "auto", suite, poly1, poly2;
  std::optional<std::uint64_t> seed_flag;
  bool diagnose = false;

  auto with_field = [&](CLI::App* sub) { sub->add_option("--field", field, "Q or Q(d) for square-free d; r stands for sqrt(d)"); };
  auto with_seed = [&](CLI::App* sub) { sub->add_option("--seed", seed_flag, "seed for random samples (default $GERMLAB_SEED or 20111)"); };

  auto* milnor = app.add_subcommand("milnor", "Milnor algebra of a form");
  milnor->add_option("poly", poly1)->required();
  with_field(milnor);

  auto* assoc = app.add_subcommand("associated-form", "associated form, normalized");
  assoc->add_option("poly", poly1)->required();
  with_field(assoc);

  auto* inv = app.add_subcommand("invariants", "classical invariants of a form");
  inv->add_option("poly", poly1)->required();
  inv->add_option("--family", family, "auto, quartic, quintic, sextic, octavic or ternary-cubic");
  with_field(inv);

  auto* cls = app.add_subcommand("classify-sextic", "label a binary sextic");
  cls->add_option("poly", poly1)->required();
  cls->add_flag("--diagnose", diagnose, "add the numeric eigencubic report");
  with_field(cls);
  with_seed(cls);

  auto* eq = app.add_subcommand("equivalent", "decide linear equivalence of two forms");
  eq->add_option("poly1", poly1)->required();
  eq->add_option("poly2", poly2)->required();
  with_field(eq);

  auto* ver = app.add_subcommand("verify", "run identity suites");
  ver->add_option("suite", suite, "suite name or all")->required();
  with_seed(ver);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  }

  try {
    std::uint64_t seed = seed_flag ? *seed_flag : seed_from_env();
    Json result;
    if (*milnor) {
      result = cmd_milnor(read_form(poly1, field));
    } else if (*assoc) {
      result = cmd_associated(read_form(poly1, field));
    } else if (*inv) {
      auto q = read_form(poly1, field);
      result = values_json(invariants_of(family_from_flag(family, q), q));
    } else if (*cls) {
      result = cmd_classify(read_form(poly1, field), diagnose, seed);
    } else if (*eq) {
      result = cmd_equivalent(read_form(poly1, field), read_form(poly2, field));
    } else {
      return cmd_verify(suite, seed, out, err);
    }
    out << result.dump() << "\n";
    return ok;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const UnsupportedFamily& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const WrongShape& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const ScalarContextError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const DegenerateInput& e) {
    err << "degenerate: " << e.what() << "\n";
    return degenerate;
  } catch (const ZeroForm& e) {
    err << "degenerate: " << e.what() << "\n";
    return degenerate;
  } catch (const InfiniteQuotient& e) {
    err << "degenerate: " << e.what() << "\n";
    return degenerate;
  } catch (const PolynomialError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

}  // namespace germlab::cli
