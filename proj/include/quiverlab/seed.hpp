#pragma once

// Seeds (exchange matrix, cluster) and breadth-first exploration of the
// exchange graph.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "quiverlab/laurent.hpp"
#include "quiverlab/linalg.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

struct Seed {
  IntMatrix matrix;
  std::vector<LaurentPoly> cluster;

  int size() const { return static_cast<int>(cluster.size()); }
};

// (B(q), (x1, ..., xn)).
Seed initial_seed(const Quiver& q);

// Exchange relation at k:
//   x'_k = (prod_{b_ik > 0} x_i^{b_ik} + prod_{b_kj > 0} x_j^{b_kj}) / x_k
// together with matrix mutation.  Only entry k of the cluster changes.
Seed mutate(const Seed& s, int k);

struct ExchangeGraphBudget {
  std::size_t max_nodes = 10000;
  int max_depth = 64;
};

enum class ClusterIdentity {
  Unordered,  // a node is the set of its cluster variables
  Labeled,    // a node is the ordered cluster together with its matrix
};

struct ExchangeGraph {
  struct Node {
    std::vector<std::string> key;
    Seed seed;
    int depth = 0;
  };
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    int direction = 0;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  // Canonical (flat) renderings of every cluster variable met.
  std::set<std::string> variables;
  bool complete = false;

  // Number of distinct nodes adjacent to node i.
  std::size_t degree(std::size_t i) const;
  std::string to_dot() const;
};

// Breadth-first closure of the initial seed under all mutations, directions
// tried in ascending order and node ids assigned in discovery order.  A node
// beyond the budget is not added and the graph is flagged incomplete.
ExchangeGraph exchange_graph(const Quiver& q, const ExchangeGraphBudget& budget = {},
                             ClusterIdentity identity = ClusterIdentity::Unordered);

// Sorted canonical renderings of a cluster.
std::vector<std::string> cluster_key(const std::vector<LaurentPoly>& cluster);

}  // namespace quiverlab
