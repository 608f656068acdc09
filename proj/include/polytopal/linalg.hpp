#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polytopal/rational.hpp"

namespace polytopal {

Rational dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& c, const RatVector& v);
bool is_zero(const RatVector& v);

/// Dense rational matrix, row-major. All arithmetic is exact.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix& rhs) const;

  RatVector apply(const RatVector& v) const;  // A * v
  RatMatrix transpose() const;
  RatMatrix pow(unsigned long k) const;

  Rational determinant() const;
  std::optional<RatMatrix> inverse() const;
  std::size_t rank() const;
  /// Basis of { x : A x = 0 }.
  std::vector<RatVector> kernel_basis() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

std::size_t linear_rank(const std::vector<RatVector>& vecs);

/// Dimension of the affine hull of a point set: -1 for no points, 0 for a
/// single point, and so on.
int affine_dim(const std::vector<RatVector>& points);

}  // namespace polytopal
