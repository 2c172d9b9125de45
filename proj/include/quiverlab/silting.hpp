#pragma once

// Silting pairs for type A: a support-tilting module T together with the
// shifted projectives P_j[1] for the vertices j outside the support of T.
// They are the n-cliques of the extended compatibility graph and correspond
// to clusters.

#include <string>
#include <utility>
#include <vector>

#include "quiverlab/character.hpp"
#include "quiverlab/repmod.hpp"

namespace quiverlab {

struct SiltingPair {
  std::vector<ModuleDesc> modules;  // sorted
  std::vector<int> shifted;         // sorted vertex indices

  std::size_t size() const { return modules.size() + shifted.size(); }
  // Modules first, then P_j[1] in index order.
  std::vector<ModuleDesc> members() const;
  bool contains(const ModuleDesc& m) const;

  friend auto operator<=>(const SiltingPair&, const SiltingPair&) = default;
};

// Normalizing constructor from any list of modules and shifted projectives.
SiltingPair make_pair(std::span<const ModuleDesc> members);

// "T=[M[1,1],M[3,3]];P=[2]".
std::string to_literal(const SiltingPair& p);

// Ext vanishes both ways between modules; Hom(P_i, M) = 0 for P_i[1] and M;
// P_i[1] and P_j[1] for i != j.
bool is_compatible(const TypeAQuiver& q, const ModuleDesc& a, const ModuleDesc& b);

// Throws InvalidArgument naming the first violated condition.
void validate(const TypeAQuiver& q, const SiltingPair& p);

struct CompatibilityGraph {
  std::vector<ModuleDesc> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j

  std::vector<std::vector<bool>> adjacency() const;
};

// Indecomposables in interval order, then (if requested) P_1[1]..P_n[1].
CompatibilityGraph compatibility_graph(const TypeAQuiver& q, bool with_shifted = true);

// All maximal cliques of a graph (Bron-Kerbosch with pivoting); each clique
// is a sorted vertex index list, cliques in lexicographic order.
std::vector<std::vector<std::size_t>> maximal_cliques(const CompatibilityGraph& g);

// Sorted by literal.
std::vector<SiltingPair> silting_pairs(const TypeAQuiver& q);
std::vector<SiltingPair> tilting_modules(const TypeAQuiver& q);

// Objects compatible with every member of a face, excluding the face.
// Throws NotAFace when the face itself is not pairwise compatible.
std::vector<ModuleDesc> completions(const TypeAQuiver& q, std::span<const ModuleDesc> face);

struct Exchange {
  ModuleDesc original;
  ModuleDesc other;
};

// The two ways of completing p with `removed` taken out.
Exchange complete_almost(const TypeAQuiver& q, const SiltingPair& p, const ModuleDesc& removed);

// g-vectors of the members as columns, in members() order.
IntMatrix g_matrix(const TypeAQuiver& q, const SiltingPair& p);

// chi of each member, in members() order.  Throws MissingCharacter.
std::vector<LaurentPoly> silting_to_cluster(const SiltingPair& p, const CharacterTable& table);

}  // namespace quiverlab
