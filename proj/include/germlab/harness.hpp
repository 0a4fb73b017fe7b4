#pragma once

#include "germlab/sextic.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace germlab {

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t default_seed = 20111;

struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;  // both sides are kept only for failures
  std::string rhs;
};

struct IdentityReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const;
  std::size_t failures() const;
  void expect_equal(const std::string& name, const ExactScalar& lhs, const ExactScalar& rhs);
  void expect_proportional(const std::string& name, const Polynomial& lhs, const Polynomial& rhs);
  void expect(const std::string& name, bool ok, const std::string& detail = "");
};

/// Constants in the closing identities for quintics:
///   Kb = 2^20 3^6 5^5 K + c1 L + c2 J L + c3 J^3 + c4 J^2 + c5 J
///   Lb = -12/(25*10!) L + c6 J^2 + c7 J
/// where Kb, Lb are the sextic invariants of an associated form.
struct DerivedConstants {
  std::array<ExactScalar, 7> c;
  std::vector<std::pair<long, long>> fit_points;      // (s, t) used in the solve
  std::vector<std::pair<long, long>> holdout_points;  // (s, t) checked afterwards
};

/// Throws InconsistentSystem if no rational solution fits every sample.
DerivedConstants derive_constants();

/// Associated form of a binary quintic as a sextic (computed, not looked up).
BinaryForm associated_binary(const BinaryForm& q);

const std::vector<std::string>& suite_names();
/// Unknown names throw std::invalid_argument.
IdentityReport run_suite(const std::string& name, std::uint64_t seed = default_seed);

/// A printed formula that disagrees with the computation, checked both as
/// printed and as corrected at the same sample points.
struct Erratum {
  std::string item;
  std::string printed;
  std::string corrected;
  std::size_t points = 0;
  std::size_t printed_failures = 0;
  std::size_t corrected_failures = 0;
};

std::vector<Erratum> check_errata(std::uint64_t seed = default_seed);

enum class Verdict { Equivalent, Inequivalent, Indeterminate };
std::string verdict_name(Verdict v);

struct EquivalenceResult {
  Verdict verdict;
  Family family;
  InvariantFingerprint first;
  InvariantFingerprint second;
};

/// Forms over {z1, z2} of degree 4, 5, 6, or diagonal ternary cubics.
Family family_of(const Polynomial& q);
InvariantValues invariants_of(Family family, const Polynomial& q);
EquivalenceResult equivalent(const Polynomial& q1, const Polynomial& q2);

}  // namespace germlab
