#pragma once

#include "germlab/matrix.hpp"
#include "germlab/polynomial.hpp"

#include <vector>

namespace germlab {

class DegenerateForm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary form Q = sum_i C(n,i) a_i z1^i z2^(n-i), stored by its a_i.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<ExactScalar> a);

  /// From plain coefficients: coefficient(i) multiplies z1^i z2^(n-i).
  static BinaryForm from_coefficients(const std::vector<ExactScalar>& coefficients);
  /// The polynomial must be homogeneous in exactly two variables.
  static BinaryForm from_polynomial(const Polynomial& p);

  int degree() const { return static_cast<int>(a_.size()) - 1; }
  const ExactScalar& a(int i) const { return a_[static_cast<std::size_t>(i)]; }
  const std::vector<ExactScalar>& a() const { return a_; }
  /// Plain coefficient of z1^i z2^(n-i).
  ExactScalar coefficient(int i) const;
  std::vector<ExactScalar> coefficients() const;
  bool is_zero() const;
  bool all_rational() const;

  Polynomial to_polynomial(const Variables& variables) const;
  /// Q(M z) for a 2x2 matrix M.
  BinaryForm linear_change(const Matrix& m) const;
  BinaryForm scaled(const ExactScalar& factor) const;

  friend bool operator==(const BinaryForm& lhs, const BinaryForm& rhs) { return lhs.a_ == rhs.a_; }

 private:
  std::vector<ExactScalar> a_;
};

Variables binary_variables();  // {z1, z2}

/// Determinant of the Sylvester matrix of two binary forms of formal degrees
/// n and k, coefficients listed from z1^n down; rows of p first.
ExactScalar resultant(const std::vector<ExactScalar>& p_descending, const std::vector<ExactScalar>& q_descending);
ExactScalar resultant(const Polynomial& p, const Polynomial& q);

/// R(Q, dQ/dz1) / (n^n a_n), with the shear z2 -> z2 + k z1 when a_n = 0.
ExactScalar discriminant(const BinaryForm& q);

/// Root multiplicities including the root at infinity, sorted descending.
std::vector<int> multiplicity_pattern(const BinaryForm& q);
bool is_square_free(const BinaryForm& q);

/// (Q,Q)^(n) = (n!)^2 sum (-1)^i C(n,i) a_i a_(n-i).
ExactScalar transvectant_self(const BinaryForm& q);

}  // namespace germlab
