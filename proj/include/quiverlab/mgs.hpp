#pragma once

// Framed exchange matrices [B; C], c-vectors and maximal green sequences.
// A vertex is green when its c-vector (column of C) is nonnegative and red
// when nonpositive; a maximal green sequence mutates only at green vertices
// and ends with every vertex red.

#include <functional>
#include <map>
#include <set>
#include <optional>
#include <vector>

#include "quiverlab/silting.hpp"

namespace quiverlab {

// 2n x n: rows 1..n hold B, rows n+1..2n hold C.
using FramedMatrix = IntMatrix;

// [b; I].  Throws NotSkewSymmetric.
FramedMatrix framed(const IntMatrix& b);

inline auto exchange_part(const FramedMatrix& f) { return f.topRows(f.cols()); }
inline auto c_matrix(const FramedMatrix& f) { return f.bottomRows(f.cols()); }

// Columns of C.  Throws SignIncoherent on a mixed-sign or zero column.
std::vector<IntVector> c_vectors(const FramedMatrix& f);
std::vector<int> green_vertices(const FramedMatrix& f);
std::vector<int> red_vertices(const FramedMatrix& f);

// Matrix mutation of every row, then a sign-coherence check.
FramedMatrix mutate_framed(const FramedMatrix& f, int k);

// Framed matrices along a mutation sequence, starting with f itself.
std::vector<FramedMatrix> trace(const FramedMatrix& f, const std::vector<int>& directions);

struct MgsBudget {
  std::size_t max_depth = 32;
  std::size_t max_states = 1'000'000;
};

struct GreenSeq {
  std::vector<int> directions;
  std::vector<FramedMatrix> matrices;  // directions.size() + 1 states
};

struct MgsResult {
  std::vector<GreenSeq> sequences;  // lexicographic in directions
  bool complete = true;
  std::size_t states = 0;
};

// Depth-first search over green mutations, smallest vertex first.
MgsResult find_mgs(const IntMatrix& b, const MgsBudget& budget = {});

// The same search driven by quiver mutation of the framed quiver, which has
// frozen vertices n+1..2n and an arrow n+i -> i for each i; arrows between
// frozen vertices are discarded after every step.
Quiver framed_quiver(const Quiver& q);
Quiver mutate_framed_quiver(const Quiver& framed, int n, int k);
FramedMatrix framed_matrix_of(const Quiver& framed, int n);
MgsResult find_mgs_quiver(const Quiver& q, const MgsBudget& budget = {});

// G = -(C^T)^{-1}.
IntMatrix g_matrix_from_c(const FramedMatrix& f);

// Checks at one state: the columns of G are the g-vectors of exactly one
// silting pair; each c-vector is plus or minus the dimension vector of an
// indecomposable; g_i . c_j = -delta_ij.
struct NZReport {
  std::optional<SiltingPair> pair;
  bool g_matches = false;
  bool c_are_dims = false;
  bool pairing = false;

  bool ok() const { return g_matches && c_are_dims && pairing; }
};

class NZChecker {
 public:
  explicit NZChecker(const TypeAQuiver& q);

  NZReport report(const FramedMatrix& f) const;
  // Throws NZViolation unless report(f).ok(); returns the silting pair.
  SiltingPair check(const FramedMatrix& f) const;

 private:
  int n_;
  std::map<std::vector<std::vector<std::int64_t>>, std::vector<SiltingPair>> pairs_by_g_;
  std::set<std::vector<std::int64_t>> dims_;
};

}  // namespace quiverlab
