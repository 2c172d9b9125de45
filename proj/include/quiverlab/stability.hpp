#pragma once

// King stability for type A.  A module M is theta-semistable when
// theta . dim M = 0 and theta . dim L <= 0 for every submodule L (stable:
// strictly, for proper nonzero L).  The wall D(M) is the set of such theta;
// chambers are the open cones spanned by the g-vectors of a silting pair.

#include <string>
#include <variant>
#include <vector>

#include "quiverlab/silting.hpp"

namespace quiverlab {

bool is_semistable(const TypeAQuiver& q, const ModuleDesc& m, const RatVector& theta);
bool is_stable(const TypeAQuiver& q, const ModuleDesc& m, const RatVector& theta);

struct Wall {
  ModuleDesc module;
  DimVector normal;                  // dim M
  std::vector<DimVector> constraints;  // proper nonzero submodules L: theta . L <= 0

  bool contains(const RatVector& theta) const;
};

// One wall per indecomposable, in interval order.
std::vector<Wall> walls(const TypeAQuiver& q);

struct Chamber {
  SiltingPair silting;
  IntMatrix generators;  // g-vectors as columns

  // Strictly positive combination of the generators.
  bool contains(const RatVector& theta) const;
};

struct WallHit {
  std::vector<ModuleDesc> semistable;
};

using ChamberQuery = std::variant<Chamber, WallHit>;

// The chamber containing theta, or every indecomposable semistable at theta.
// Throws NoChamber if neither exists.
ChamberQuery chamber_of(const TypeAQuiver& q, const RatVector& theta);

// One chamber per silting pair, in silting_pairs order.
std::vector<Chamber> chambers(const TypeAQuiver& q);

// Integer directions in [-radius, radius]^n minus the origin.  Directions on
// no wall are generic and must lie in exactly one chamber; directions on a
// wall must lie in none.
struct SampleReport {
  std::size_t directions = 0;
  std::size_t generic = 0;
  std::size_t on_walls = 0;
  std::size_t overlaps = 0;   // generic directions inside two or more chambers
  std::size_t uncovered = 0;  // generic directions inside no chamber
  std::size_t wall_in_chamber = 0;

  bool ok() const { return overlaps == 0 && uncovered == 0 && wall_in_chamber == 0; }
};

SampleReport sample_chambers(const TypeAQuiver& q, int radius);

// Chambers joined when their cones share a facet (n-1 generators).
struct ChamberGraph {
  std::vector<Chamber> chambers;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

ChamberGraph chamber_graph(const TypeAQuiver& q);

struct SvgOptions {
  bool labels = true;
  int min_arc_segments = 64;
};

// SVG 1.1 picture: walls as black paths (class "wall"), g-vectors of all
// indecomposables and shifted projectives as red dots (class "gvector").
// Rank 2 is drawn in the plane; rank 3 on the sphere, stereographically
// projected from (1,1,1)/sqrt 3 so the chamber of the projectives is the
// outer region.  Throws UnsupportedRank otherwise.
std::string render_svg(const TypeAQuiver& q, const SvgOptions& options = {});

}  // namespace quiverlab
