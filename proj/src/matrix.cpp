#include "germlab/matrix.hpp"

namespace germlab {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<ExactScalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ExactScalar(1);
  return m;
}

Matrix Matrix::from_integers(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < m.rows_; ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = ExactScalar(rows[r][c]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (lhs(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  }
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

ExactScalar Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return ExactScalar(1);
  Matrix a = *this;
  ExactScalar previous(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return ExactScalar();
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = ExactScalar();
    }
    previous = a(k, k);
  }
  ExactScalar det = a(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(pivot, c));
    ExactScalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      ExactScalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix a = *this;
  return row_reduce(a).size();
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_ + r) = ExactScalar(1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < rows_ || pivots.back() >= cols_) throw SingularMatrix("matrix is singular");
  Matrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = aug(r, cols_ + c);
  }
  return out;
}

std::vector<std::vector<ExactScalar>> Matrix::kernel() const {
  Matrix a = *this;
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<ExactScalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<ExactScalar> v(cols_);
    v[free] = ExactScalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<ExactScalar>> Matrix::solve(const std::vector<ExactScalar>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = rhs[r];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<ExactScalar> x(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return x;
}

std::vector<ExactScalar> Matrix::characteristic_polynomial() const {
  if (rows_ != cols_) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier.
  std::size_t n = rows_;
  std::vector<ExactScalar> c(n + 1);
  c[n] = ExactScalar(1);
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = *this * m;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = am(i, j);
      m(i, i) += c[n - k + 1];
    }
    Matrix am2 = *this * m;
    ExactScalar trace;
    for (std::size_t i = 0; i < n; ++i) trace += am2(i, i);
    c[n - k] = -trace / ExactScalar(static_cast<long>(k));
  }
  return c;
}

Polynomial linear_change(const Polynomial& p, const Matrix& m) {
  std::size_t n = p.variable_count();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("linear_change: dimension mismatch");
  if (m.determinant().is_zero()) throw SingularMatrix("linear_change: singular matrix");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial image(p.variables(), p.order());
    for (std::size_t j = 0; j < n; ++j) image.add_term(Monomial::variable(n, j), m(i, j));
    images.push_back(std::move(image));
  }
  return p.compose(images);
}

}  // namespace germlab
