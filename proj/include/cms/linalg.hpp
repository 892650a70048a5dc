#pragma once

#include <optional>
#include <vector>

#include "cms/scalar.hpp"

namespace cms {

/// Dense row-major matrix over Q(params).
class Matrix {
 public:
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  void add_row(const std::vector<Scalar>& row);

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form by fraction-exact Gauss-Jordan elimination with
/// the first nonzero entry of each column as pivot.
struct Echelon {
  Matrix rref;
  std::vector<int> pivot_cols;
};
Echelon row_reduce(Matrix m);

int rank(const Matrix& m);
int nullspace_dim(const Matrix& m);
/// Basis of {x : m x = 0}; one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);
/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

}  // namespace cms
