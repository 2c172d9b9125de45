#pragma once

// Quivers without loops or 2-cycles, their skew-symmetric exchange matrices,
// and mutation of both.  Vertices are labeled 1..n throughout.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "quiverlab/errors.hpp"
#include "quiverlab/linalg.hpp"

namespace quiverlab {

struct Arrow {
  int source = 0;
  int target = 0;
  int multiplicity = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;

  // Validating constructor from an arrow multiset.  Throws BadLabel,
  // LoopPresent or TwoCyclePresent.
  static Quiver from_arrows(int n, std::span<const std::pair<int, int>> arrows);
  static Quiver from_arrows(int n, std::initializer_list<std::pair<int, int>> arrows) {
    return from_arrows(n, std::span<const std::pair<int, int>>(arrows.begin(), arrows.size()));
  }

  int size() const { return n_; }
  // Sorted by (source, target); multiplicities positive.
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // Expanded multiset, one pair per arrow, sorted.
  std::vector<std::pair<int, int>> arrow_list() const;
  int arrow_count(int source, int target) const;

  // Vertices ordered so that every arrow i -> j has j before i (sinks first);
  // nullopt if the quiver has an oriented cycle.
  std::optional<std::vector<int>> sink_first_order() const;
  bool is_acyclic() const { return sink_first_order().has_value(); }

  Quiver opposite() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

template <typename Derived>
bool is_skew_symmetric(const Eigen::MatrixBase<Derived>& b) {
  if (b.rows() != b.cols()) return false;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = i; j < b.cols(); ++j)
      if (b(i, j) != -b(j, i)) return false;
  return true;
}

// b_ij = #(i -> j) - #(j -> i).
IntMatrix exchange_matrix(const Quiver& q);

// Inverse of exchange_matrix: b_ij > 0 yields b_ij arrows i -> j.
Quiver quiver_from_matrix(const IntMatrix& b);

// Three-step quiver mutation at vertex k: compose length-two paths through k,
// reverse the arrows at k, cancel 2-cycles.
Quiver mutate(const Quiver& q, int k);

// Matrix mutation in direction k (1-based column).  Rows beyond the square
// block are frozen rows and follow the same formula.
template <typename Derived>
typename Derived::PlainObject mutate_matrix(const Eigen::MatrixBase<Derived>& b, int k) {
  using Scalar = typename Derived::Scalar;
  if (k < 1 || k > b.cols() || b.rows() < b.cols())
    throw Error(ErrorKind::BadDirection, "mutation direction " + std::to_string(k));
  const Eigen::Index c = k - 1;
  typename Derived::PlainObject out(b.rows(), b.cols());
  const Scalar zero(0);
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (i == c || j == c) {
        out(i, j) = -b(i, j);
        continue;
      }
      const Scalar bik = b(i, c);
      const Scalar bkj = b(c, j);
      out(i, j) = b(i, j) + std::max(bik, zero) * std::max(bkj, zero) -
                  std::min(bik, zero) * std::min(bkj, zero);
    }
  }
  return out;
}

// Labeled-quiver equality up to a relabeling of vertices; brute force, meant
// for small n.
bool isomorphic(const Quiver& a, const Quiver& b);

}  // namespace quiverlab
