#pragma once

#include "germlab/polynomial.hpp"

#include <optional>
#include <vector>

namespace germlab {

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Small dense row-major matrix over ExactScalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> data);

  static Matrix identity(std::size_t n);
  static Matrix from_integers(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  /// Fraction-free (Bareiss) elimination with row pivoting.
  ExactScalar determinant() const;
  std::size_t rank() const;
  Matrix inverse() const;
  /// Basis of {x : A x = 0}.
  std::vector<std::vector<ExactScalar>> kernel() const;
  /// Some x with A x = b, or nothing if the system is inconsistent.
  std::optional<std::vector<ExactScalar>> solve(const std::vector<ExactScalar>& rhs) const;
  /// Coefficients c_0..c_n of det(lambda I - A), c_n = 1.
  std::vector<ExactScalar> characteristic_polynomial() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

/// Substitution z_i -> sum_j M(i,j) z_j; M must be invertible.
Polynomial linear_change(const Polynomial& p, const Matrix& m);

}  // namespace germlab
