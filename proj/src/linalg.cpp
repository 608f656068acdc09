#include "polytopal/linalg.hpp"

#include <cassert>

#include "polytopal/errors.hpp"

namespace polytopal {

Rational dot(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scale(const Rational& c, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == m.cols_);
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  if (cols.empty()) return RatMatrix();
  RatMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  RatMatrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, j) += aik * rhs(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + rhs.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - rhs.a_[i];
  return r;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  assert(v.size() == cols_);
  RatVector r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

RatMatrix RatMatrix::pow(unsigned long k) const {
  assert(rows_ == cols_);
  RatMatrix result = identity(rows_);
  RatMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

namespace {

// Row echelon reduction in place; returns (rank, determinant sign flips).
// Only meaningful for determinant when the matrix is square.
std::pair<std::size_t, int> echelonize(std::vector<RatVector>& rows, std::size_t cols) {
  std::size_t rank = 0;
  int swaps = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    if (pivot != rank) {
      std::swap(rows[pivot], rows[rank]);
      ++swaps;
    }
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational factor = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return {rank, swaps};
}

}  // namespace

Rational RatMatrix::determinant() const {
  assert(rows_ == cols_);
  if (rows_ == 0) return 1;
  std::vector<RatVector> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    rows[i].resize(cols_);
    for (std::size_t j = 0; j < cols_; ++j) rows[i][j] = (*this)(i, j);
  }
  auto [rank, swaps] = echelonize(rows, cols_);
  if (rank < rows_) return 0;
  Rational det = (swaps % 2 == 0) ? 1 : -1;
  for (std::size_t i = 0; i < rows_; ++i) det *= rows[i][i];
  return det;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  assert(rows_ == cols_);
  const std::size_t n = rows_;
  // Gauss-Jordan on [A | I].
  std::vector<RatVector> w(n, RatVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = (*this)(i, j);
    w[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(w[pivot], w[col]);
    Rational inv = 1 / w[col][col];
    for (std::size_t j = col; j < 2 * n; ++j) w[col][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w[i][col] == 0) continue;
      Rational factor = w[i][col];
      for (std::size_t j = col; j < 2 * n; ++j) w[i][j] -= factor * w[col][j];
    }
  }
  RatMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = w[i][n + j];
  return r;
}

std::size_t RatMatrix::rank() const {
  std::vector<RatVector> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    rows[i].resize(cols_);
    for (std::size_t j = 0; j < cols_; ++j) rows[i][j] = (*this)(i, j);
  }
  return echelonize(rows, cols_).first;
}

std::vector<RatVector> RatMatrix::kernel_basis() const {
  const std::size_t n = cols_;
  std::vector<RatVector> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    rows[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = (*this)(i, j);
  }
  echelonize(rows, n);
  // Locate pivot columns.
  std::vector<long> pivot_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    if (rows[r][col] != 0) {
      pivot_of_col[col] = static_cast<long>(r);
      ++r;
    }
  }
  std::vector<RatVector> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (pivot_of_col[free_col] != -1) continue;
    RatVector x(n, Rational(0));
    x[free_col] = 1;
    // Back-substitute pivot variables from bottom to top.
    for (long col = static_cast<long>(free_col) - 1; col >= 0; --col) {
      long pr = pivot_of_col[col];
      if (pr < 0) continue;
      Rational s = 0;
      for (std::size_t j = col + 1; j < n; ++j) s += rows[pr][j] * x[j];
      x[col] = -s / rows[pr][col];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t linear_rank(const std::vector<RatVector>& vecs) {
  if (vecs.empty()) return 0;
  std::vector<RatVector> rows = vecs;
  return echelonize(rows, vecs[0].size()).first;
}

int affine_dim(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  std::vector<RatVector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return static_cast<int>(linear_rank(diffs));
}

}  // namespace polytopal
