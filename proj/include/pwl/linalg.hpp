#pragma once

#include <optional>

#include "pwl/rational.hpp"

namespace pwl {

// Exact dense Gauss-Jordan elimination over any exact scalar (no pivot
// thresholds, zero tests are exact).

// Reduces A to reduced row echelon form in place; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r) {
      if (a(r, col) != Scalar(0)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) a.row(sel).swap(a.row(row));
    Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == Scalar(0)) continue;
      Scalar f = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index rank(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

// Columns span the kernel of a.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> nullspace(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = a.cols();
  std::vector<Eigen::Index> pivots = rref_in_place(a);
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index p : pivots) is_pivot[p] = true;
  Mat basis(n, n - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    for (Eigen::Index i = 0; i < n; ++i) basis(i, k) = Scalar(0);
    basis(free_col, k) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], k) = -a(static_cast<Eigen::Index>(r), free_col);
    }
    ++k;
  }
  return basis;
}

// One solution of a*x = b, or nullopt when inconsistent.
template <typename Scalar>
std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> solve_linear(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Mat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x = Vec::Constant(a.cols(), Scalar(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

}  // namespace pwl
