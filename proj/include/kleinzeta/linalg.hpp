#pragma once

#include <vector>

#include "kleinzeta/numeric.hpp"

namespace kleinzeta {

// Exact Gauss-Jordan over a field scalar (Rational, CyclotomicNumber).
template <typename Scalar>
struct Rref {
  MatrixX<Scalar> r;
  std::vector<Eigen::Index> pivots;
};

template <typename Scalar>
Rref<Scalar> rref(MatrixX<Scalar> m) {
  const Scalar zero(0L);
  Rref<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (m(i, col) != zero) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(row));
    Scalar inv = Scalar(1L) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == zero) continue;
      Scalar f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.r = std::move(m);
  return out;
}

template <typename Scalar>
Eigen::Index rank(const MatrixX<Scalar>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

// columns span the right kernel
template <typename Scalar>
MatrixX<Scalar> kernel(const MatrixX<Scalar>& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  MatrixX<Scalar> k(m.cols(), static_cast<Eigen::Index>(free.size()));
  k.setConstant(Scalar(0L));
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = Scalar(1L);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.r(r, free[f]);
  }
  return k;
}

}  // namespace kleinzeta
