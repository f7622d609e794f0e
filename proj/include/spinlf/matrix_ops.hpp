#pragma once

// Dense multilinear constructions over an exact scalar: Kronecker products,
// exterior and symmetric squares, power traces, and the Newton-identity
// conversions between power sums, elementary and complete homogeneous
// symmetric functions.  Everything is expression-free exact arithmetic; no
// eigenvalues are ever computed.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <vector>

#include "spinlf/errors.hpp"
#include "spinlf/rational.hpp"

namespace spinlf {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Row-major Kronecker product A (x) B.
template <class Scalar>
DenseMatrix<Scalar> tensor_matrix(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

namespace detail {

inline std::vector<std::pair<int, int>> pairs_lt(int d) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) p.emplace_back(i, j);
  return p;
}

inline std::vector<std::pair<int, int>> pairs_le(int d) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) p.emplace_back(i, j);
  return p;
}

}  // namespace detail

// Matrix of the action on Lambda^2, basis e_i ^ e_j with i < j, lexicographic.
template <class Scalar>
DenseMatrix<Scalar> wedge2_matrix(const DenseMatrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw Error("wedge2_matrix needs a square matrix");
  auto basis = detail::pairs_lt(static_cast<int>(a.rows()));
  int d = static_cast<int>(basis.size());
  DenseMatrix<Scalar> w(d, d);
  for (int row = 0; row < d; ++row) {
    auto [i, j] = basis[static_cast<size_t>(row)];
    for (int col = 0; col < d; ++col) {
      auto [k, l] = basis[static_cast<size_t>(col)];
      w(row, col) = a(i, k) * a(j, l) - a(i, l) * a(j, k);
    }
  }
  return w;
}

// Matrix of the action on Sym^2, basis e_i . e_j with i <= j, lexicographic.
template <class Scalar>
DenseMatrix<Scalar> sym2_matrix(const DenseMatrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw Error("sym2_matrix needs a square matrix");
  auto basis = detail::pairs_le(static_cast<int>(a.rows()));
  int d = static_cast<int>(basis.size());
  DenseMatrix<Scalar> s(d, d);
  for (int row = 0; row < d; ++row) {
    auto [i, j] = basis[static_cast<size_t>(row)];
    for (int col = 0; col < d; ++col) {
      auto [k, l] = basis[static_cast<size_t>(col)];
      // Coefficient of e_i.e_j in (A e_k).(A e_l).
      s(row, col) = i == j ? a(i, k) * a(i, l) : a(i, k) * a(j, l) + a(j, k) * a(i, l);
    }
  }
  return s;
}

// p_0..p_r with p_j = tr(M^j); p_0 is the dimension.
template <class Scalar>
std::vector<Scalar> power_traces(const DenseMatrix<Scalar>& m, int r) {
  if (m.rows() != m.cols()) throw Error("power_traces needs a square matrix");
  std::vector<Scalar> p;
  p.reserve(static_cast<size_t>(r) + 1);
  p.push_back(Scalar(static_cast<int>(m.rows())));
  DenseMatrix<Scalar> acc = DenseMatrix<Scalar>::Identity(m.rows(), m.cols());
  for (int j = 1; j <= r; ++j) {
    acc = (acc * m).eval();
    p.push_back(acc.trace());
  }
  return p;
}

// Complete homogeneous h_0..h_r from power sums via r*h_r = sum p_i h_{r-i}.
template <class Scalar>
std::vector<Scalar> complete_homogeneous_from_power_sums(const std::vector<Scalar>& p, int r) {
  std::vector<Scalar> h(static_cast<size_t>(r) + 1, Scalar(0));
  h[0] = Scalar(1);
  for (int k = 1; k <= r; ++k) {
    Scalar acc(0);
    for (int i = 1; i <= k; ++i) acc += p[static_cast<size_t>(i)] * h[static_cast<size_t>(k - i)];
    h[static_cast<size_t>(k)] = acc / Scalar(k);
  }
  return h;
}

// Elementary e_0..e_r from power sums via k*e_k = sum (-1)^{i-1} e_{k-i} p_i.
template <class Scalar>
std::vector<Scalar> elementary_from_power_sums(const std::vector<Scalar>& p, int r) {
  std::vector<Scalar> e(static_cast<size_t>(r) + 1, Scalar(0));
  e[0] = Scalar(1);
  for (int k = 1; k <= r; ++k) {
    Scalar acc(0);
    Scalar sgn(1);
    for (int i = 1; i <= k; ++i) {
      acc += sgn * e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
      sgn = -sgn;
    }
    e[static_cast<size_t>(k)] = acc / Scalar(k);
  }
  return e;
}

// tr Sym^r(M), computed without eigenvalues.
template <class Scalar>
Scalar sym_power_trace(int r, const DenseMatrix<Scalar>& m) {
  if (r < 0) throw Error("sym_power_trace needs r >= 0");
  auto p = power_traces(m, r);
  return complete_homogeneous_from_power_sums(p, r)[static_cast<size_t>(r)];
}

// Exact determinant by fraction-producing Gaussian elimination over a field;
// pivots are chosen as the first nonzero entry (no magnitude comparisons).
template <class Scalar>
Scalar exact_det(DenseMatrix<Scalar> a) {
  if (a.rows() != a.cols()) throw Error("exact_det needs a square matrix");
  int d = static_cast<int>(a.rows());
  Scalar det(1);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row) {
      if (!(a(row, col) == Scalar(0))) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det = det * a(col, col);
    for (int row = col + 1; row < d; ++row) {
      if (a(row, col) == Scalar(0)) continue;
      Scalar f = a(row, col) / a(col, col);
      for (int j = col; j < d; ++j) a(row, j) -= f * a(col, j);
    }
  }
  return det;
}

}  // namespace spinlf
