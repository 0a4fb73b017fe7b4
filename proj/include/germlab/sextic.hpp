#pragma once

#include "germlab/invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace germlab {

class CharPolyMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ZeroForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Endomorphism of binary cubics induced by a sextic. A cubic with plain
/// coefficients c (on z1^3, z1^2 z2, z1 z2^2, z2^3) maps to c * matrix.
struct QhatMatrix {
  Matrix matrix;
  /// c_0..c_4 of lambda^4 + (I2/2) lambda^2 - (6 I4 - 3 I2^2)/16.
  std::vector<ExactScalar> charpoly;
};

/// Throws CharPolyMismatch if the matrix charpoly differs from the I2/I4 formula.
QhatMatrix qhat(const BinaryForm& q);

enum class SexticLabel { SylvesterGeneric, I, II, III, IV, V, VI, VII };

std::string label_name(SexticLabel label);  // "SylvesterGeneric", "(i)", ..., "(vii)"

struct SexticClass {
  SexticLabel label;
  ExactScalar discriminant;
  std::vector<int> pattern;                        // set when Delta = 0
  std::optional<InvariantFingerprint> fingerprint;  // set when Delta != 0
};

SexticClass classify(const BinaryForm& q);

/// a u^6 + b v^6 + c w^6 + d u v w (u - v)(v - w)(w - u) with u = z1, v = z2, w = -z1 - z2.
BinaryForm sylvester_form(const ExactScalar& a, const ExactScalar& b, const ExactScalar& c, const ExactScalar& d);

/// The seven exceptional sextics, (i) first.
const std::vector<std::pair<SexticLabel, std::string>>& exceptional_sextics();
/// (vi): computed from the integer sextic, kept with a regeneration test.
const std::vector<ExactScalar>& stored_fingerprint_vi();
/// (vii): the published table.
const std::vector<ExactScalar>& stored_fingerprint_vii();

struct EigenBranch {
  std::string eigenvalue;            // decimal, "re" or "re+im*i"
  bool exact = false;                // eigenvalue rational and kernel computed exactly
  std::size_t eigenspace_dimension = 0;
  std::vector<std::string> cubic;    // coefficients on z1^3, z1^2 z2, z1 z2^2, z2^3
  std::string discriminant;          // |Delta| of the normalized cubic
  bool square_free = false;
};

struct EigencubicReport {
  int precision = 0;
  std::string threshold;
  std::vector<EigenBranch> branches;
  bool any_square_free() const;
};

/// Numeric diagnostic; precision in decimal digits, at least 30. A cubic
/// scaled to unit max coefficient counts as square-free when
/// |Delta| >= 10^(-3*precision/5). Combinations inside eigenspaces of
/// dimension > 1 use `seed`.
EigencubicReport eigencubics_numeric(const BinaryForm& q, int precision = 50, std::uint64_t seed = 1);

}  // namespace germlab
