#pragma once

// Representations at desk scale.
//
// Cartan matrices and g-vectors work for any acyclic quiver.  The module
// calculus (submodules, Hom, Ext, Auslander-Reiten quiver) is for quivers of
// type A, where every indecomposable is thin: one-dimensional at each vertex
// of an interval of the underlying path, with identity maps on the arrows
// inside that interval.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quiverlab/linalg.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

using DimVector = IntVector;

// Column i is the dimension vector of the indecomposable projective P_i.
// Throws CyclicQuiver.
IntMatrix cartan_matrix(const Quiver& q);

enum class Side {
  Standard,  // C^{-1} d
  Opposite,  // (C^T)^{-1} d, the g-vector of the dual over the opposite quiver
};

// Cartan matrix of an acyclic quiver together with both integer inverses.
class CartanData {
 public:
  explicit CartanData(const Quiver& q);

  const IntMatrix& cartan() const { return cartan_; }
  IntVector g_vector(const DimVector& dim, Side side = Side::Standard) const;

 private:
  IntMatrix cartan_;
  IntMatrix inverse_;
  IntMatrix inverse_transpose_;
};

IntVector g_vector(const Quiver& q, const DimVector& dim, Side side = Side::Standard);

// Hereditary Euler form <d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j.
std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// ---------------------------------------------------------------------------
// Thin representations given by a vertex support, bit v-1 for vertex v.

using Support = std::uint64_t;

DimVector dim_of(int n, Support s);
Support support_of(const DimVector& d);

// Supports of all subrepresentations of the thin representation on s: the
// subsets closed under following in-support arrows.
std::vector<Support> submodule_supports(const Quiver& q, Support s);

// Dimension of Hom between two thin representations, from the rank of the
// commuting-square constraints.
int hom_dim_thin(const Quiver& q, Support from, Support to);

// ---------------------------------------------------------------------------
// Type A.

class TypeAQuiver {
 public:
  // Throws NotTypeA unless the underlying graph is a simple path.
  explicit TypeAQuiver(Quiver q);

  const Quiver& quiver() const { return quiver_; }
  int size() const { return quiver_.size(); }
  // Vertex labels in path order, starting from the end with the smaller label.
  const std::vector<int>& path() const { return path_; }
  int position(int vertex) const { return position_[vertex]; }
  const CartanData& cartan() const { return cartan_; }

  // Vertices of the path segment between a and b.
  Support segment(int a, int b) const;
  // Endpoints (smaller label first) of a connected support; nullopt otherwise.
  std::optional<std::pair<int, int>> endpoints(Support s) const;

  friend bool operator==(const TypeAQuiver& a, const TypeAQuiver& b) {
    return a.quiver_ == b.quiver_;
  }

 private:
  Quiver quiver_;
  std::vector<int> path_;
  std::vector<int> position_;
  CartanData cartan_;
};

// Linear orientation 1 <- 2 <- ... <- n.
Quiver linear_a(int n);
// Path 1 - 2 - ... - n; bit i-1 of mask set means the arrow between i and
// i+1 points right (i -> i+1).
Quiver oriented_a(int n, std::uint32_t mask);

struct ModuleDesc {
  enum class Kind { Interval, Shifted };

  Kind kind = Kind::Interval;
  int a = 0;  // Interval endpoints (a <= b), or the vertex of P_a[1]
  int b = 0;

  static ModuleDesc interval(int a, int b);
  static ModuleDesc shifted(int i) { return {Kind::Shifted, i, i}; }

  bool is_shifted() const { return kind == Kind::Shifted; }

  friend auto operator<=>(const ModuleDesc&, const ModuleDesc&) = default;
};

// "M[a,b]" or "P[i][1]".
std::string to_literal(const ModuleDesc& m);

ModuleDesc simple_module(const TypeAQuiver& q, int i);
ModuleDesc projective_module(const TypeAQuiver& q, int i);
ModuleDesc injective_module(const TypeAQuiver& q, int i);

Support support(const TypeAQuiver& q, const ModuleDesc& m);
DimVector dim(const TypeAQuiver& q, const ModuleDesc& m);
// The indecomposable with a connected thin dimension vector.
ModuleDesc module_with_dim(const TypeAQuiver& q, const DimVector& d);
// g-vector; -e_i for P_i[1].
IntVector g_vector(const TypeAQuiver& q, const ModuleDesc& m);

// All n(n+1)/2 indecomposables, ordered by (a, b).
std::vector<ModuleDesc> interval_modules(const TypeAQuiver& q);

struct Submodule {
  DimVector dim;
  Support support = 0;
};

std::vector<Submodule> submodules(const TypeAQuiver& q, const ModuleDesc& m);

// Dimension vectors (with multiplicity) of all submodules of a direct sum.
// Throws InfiniteLattice when some submodule comes in a positive-dimensional
// family.
std::vector<DimVector> submodule_dims(const TypeAQuiver& q, std::span<const ModuleDesc> summands);

int hom_dim(const TypeAQuiver& q, const ModuleDesc& m, const ModuleDesc& n);
int ext_dim(const TypeAQuiver& q, const ModuleDesc& m, const ModuleDesc& n);

// Orders ext-orthogonal indecomposables so that Hom(later, earlier) = 0.
// Ties keep input order.  Throws NotExtOrthogonal, or HomCycle.
std::vector<ModuleDesc> exceptional_order(const TypeAQuiver& q, std::span<const ModuleDesc> mods);

// ---------------------------------------------------------------------------
// Auslander-Reiten quiver, knitted from the projectives by mesh additivity.
// Node (orbit i, slice t) holds tau^{-t} P_i; after the injective ending
// orbit i sits the shifted projective P_k[1] with tau(P_k[1]) = I_k.

struct ARNode {
  ModuleDesc module;
  int orbit = 0;
  int slice = 0;
};

struct ARMesh {
  std::size_t start = 0;
  std::vector<std::size_t> middle;
  std::size_t end = 0;
};

struct ARQuiver {
  std::vector<ARNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  // (tau X, X) pairs, including (I_k, P_k[1]).
  std::vector<std::pair<std::size_t, std::size_t>> tau;
  // Meshes whose end is a module (the almost split sequences).
  std::vector<ARMesh> meshes;
  // Meshes ending at a shifted projective.
  std::vector<ARMesh> shifted_meshes;

  std::optional<std::size_t> find(int orbit, int slice) const;
  std::optional<std::size_t> find(const ModuleDesc& m) const;
  // Last slice index holding a module (not a shifted projective) in orbit i.
  int last_module_slice(int orbit) const;
};

ARQuiver ar_quiver(const TypeAQuiver& q);

}  // namespace quiverlab
