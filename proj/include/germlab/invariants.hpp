#pragma once

#include "germlab/binary_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germlab {

class DivisionByVanishingInvariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WrongShape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BracketFactor {
  int i;
  int j;
  int exponent;
};

/// Product of brackets [i,j]^e over letters 1..k for forms of one degree.
struct BracketScheme {
  std::string name;
  int degree;
  std::vector<BracketFactor> factors;

  int letters() const;
  /// Throws if some letter's incident exponents do not sum to the degree.
  void validate() const;
};

/// Umbral evaluation: x_v^p y_v^(n-p) -> a_p, letters eliminated as soon as
/// they are saturated, factors taken greedily to keep few letters live.
ExactScalar bracket_eval(const BracketScheme& scheme, const BinaryForm& q);

namespace schemes {
const BracketScheme& sextic_i2();
const BracketScheme& sextic_i4();
const BracketScheme& sextic_i6();
const BracketScheme& sextic_i10();
const BracketScheme& sextic_i15();
const BracketScheme& octavic_i2();
const BracketScheme& octavic_i3();
const BracketScheme& octavic_i4();
const BracketScheme& octavic_i5();
}  // namespace schemes

/// Bracket I10 of a sextic in terms of Delta and products of I2, I4, I6:
/// I10 = d*Delta + c1*I2^5 + c2*I2^3*I4 + c3*I2*I4^2 + c4*I2^2*I6 + c5*I4*I6.
struct SexticI10Relation {
  mpq_class delta{64, 3125};
  mpq_class i2_5{1744, 9375};
  mpq_class i2_3_i4{-46, 25};
  mpq_class i2_i4_2{8, 3};
  mpq_class i2_2_i6{34, 15};
  mpq_class i4_i6{-4};
};

/// Named invariant values in a fixed order. Absolute invariants whose
/// denominator vanishes are present but empty.
class InvariantValues {
 public:
  struct Entry {
    std::string name;
    std::optional<ExactScalar> value;
    std::string vanishing;  // denominator name when value is empty
  };

  void set(const std::string& name, const ExactScalar& value);
  /// Stores numerator/denominator, or an empty entry if the denominator is 0.
  void set_ratio(const std::string& name, const ExactScalar& numerator, const ExactScalar& denominator,
                 const std::string& denominator_name);

  const std::vector<Entry>& entries() const { return entries_; }
  bool defined(const std::string& name) const;
  /// Throws DivisionByVanishingInvariant for an undefined entry.
  const ExactScalar& at(const std::string& name) const;

 private:
  std::vector<Entry> entries_;
};

/// I2, I3, Delta, J, K.
InvariantValues quartic_invariants(const BinaryForm& q);

/// Coefficients (a, b, c, d) of a z1^3 + b z2^3 + c z3^3 + 6d z1 z2 z3.
std::vector<ExactScalar> diagonal_cubic_coefficients(const Polynomial& q);
/// I4, I6, Delta, J, K.
InvariantValues ternary_cubic_invariants(const Polynomial& q);

/// The 3x3 determinant of linear forms whose discriminant gives I12.
BinaryForm canonizant(const BinaryForm& q);
/// Delta, T10 = (Q^2,Q^2)^(10), I4, I8, I12, J, K, L.
InvariantValues quintic_invariants(const BinaryForm& q);
bool i18_square_check(const BinaryForm& q);

/// Delta, I2, I4, I6, I10, J, K, L, M, N, P, R, S, T, U, V (and I15 on request).
InvariantValues sextic_invariants(const BinaryForm& q, bool with_i15 = false);
/// I2, I3, I4, I5, I4hat, I8, I10, I12, M, N, P, R, S, T, U, V.
InvariantValues octavic_invariants(const BinaryForm& q);

enum class Family { Quartic, Quintic, Sextic, Octavic, TernaryCubic };

std::string family_name(Family family);

/// Tuple of absolute invariants separating orbits of square-free forms.
struct InvariantFingerprint {
  Family family;
  std::vector<std::string> names;
  std::vector<ExactScalar> values;
  bool operator==(const InvariantFingerprint& other) const = default;
};

InvariantFingerprint fingerprint(Family family, const InvariantValues& values);
const std::vector<std::string>& sextic_absolute_names();

}  // namespace germlab
