#pragma once

// Exact dense linear algebra over the rationals on top of Eigen storage.
//
// Eigen's decompositions assume an inexact field with a meaningful epsilon, so
// the routines here do plain Gauss-Jordan elimination with exact pivots.  All
// of them accept any Eigen expression whose scalar converts to Rational.

#include <cstdint>
#include <optional>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace quiverlab {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

template <typename Derived>
RatMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

// In-place reduction to reduced row echelon form; returns the rank.
inline Eigen::Index reduce_rows(RatMatrix& m) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(rank));
    const Rational lead = m(rank, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(rank, j) /= lead;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix work = to_rational(m);
  return reduce_rows(work);
}

template <typename Derived>
std::optional<RatMatrix> exact_inverse(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) return std::nullopt;
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = to_rational(m);
  aug.rightCols(n).setZero();
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = 1;
  if (reduce_rows(aug) < n) return std::nullopt;
  for (Eigen::Index i = 0; i < n; ++i)
    if (aug(i, i) != 1) return std::nullopt;
  RatMatrix out(n, n);
  out = aug.rightCols(n);
  return out;
}

// Solves a * x = b for square invertible a.
template <typename DerivedA, typename DerivedB>
std::optional<RatVector> exact_solve(const Eigen::MatrixBase<DerivedA>& a,
                                     const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index n = a.rows();
  if (n != a.cols() || b.rows() != n) return std::nullopt;
  RatMatrix aug(n, n + 1);
  aug.leftCols(n) = to_rational(a);
  aug.col(n) = to_rational(b);
  if (reduce_rows(aug) < n) return std::nullopt;
  for (Eigen::Index i = 0; i < n; ++i)
    if (aug(i, i) != 1) return std::nullopt;
  RatVector out(n);
  out = aug.col(n);
  return out;
}

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (boost::multiprecision::denominator(m(i, j)) != 1) return false;
  return true;
}

// Integer inverse of a unimodular matrix; nullopt if singular or the inverse
// has a non-integral entry.
template <typename Derived>
std::optional<IntMatrix> unimodular_inverse(const Eigen::MatrixBase<Derived>& m) {
  auto inv = exact_inverse(m);
  if (!inv || !is_integral(*inv)) return std::nullopt;
  IntMatrix out(inv->rows(), inv->cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out(i, j) = static_cast<std::int64_t>(boost::multiprecision::numerator((*inv)(i, j)));
  return out;
}

}  // namespace quiverlab
