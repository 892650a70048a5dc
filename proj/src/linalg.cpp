#include "cms/linalg.hpp"

#include <stdexcept>

namespace cms {

void Matrix::add_row(const std::vector<Scalar>& row) {
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("Matrix::add_row: width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

Echelon row_reduce(Matrix m) {
  Echelon e{m, {}};
  Matrix& a = e.rref;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (int j = c; j < a.cols(); ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (int j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

int rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivot_cols.size()); }

int nullspace_dim(const Matrix& m) { return m.cols() - rank(m); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = Scalar(1);
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.rref(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = row_reduce(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.rref(static_cast<int>(r), m.cols());
  return x;
}

}  // namespace cms
