#include "quiverlab/silting.hpp"

#include <algorithm>

namespace quiverlab {

std::vector<ModuleDesc> SiltingPair::members() const {
  std::vector<ModuleDesc> out = modules;
  for (int j : shifted) out.push_back(ModuleDesc::shifted(j));
  return out;
}

bool SiltingPair::contains(const ModuleDesc& m) const {
  if (m.is_shifted()) return std::binary_search(shifted.begin(), shifted.end(), m.a);
  return std::binary_search(modules.begin(), modules.end(), m);
}

SiltingPair make_pair(std::span<const ModuleDesc> members) {
  SiltingPair p;
  for (const auto& m : members) {
    if (m.is_shifted())
      p.shifted.push_back(m.a);
    else
      p.modules.push_back(m);
  }
  std::sort(p.modules.begin(), p.modules.end());
  std::sort(p.shifted.begin(), p.shifted.end());
  return p;
}

std::string to_literal(const SiltingPair& p) {
  std::string out = "T=[";
  for (std::size_t i = 0; i < p.modules.size(); ++i) {
    if (i) out += ",";
    out += to_literal(p.modules[i]);
  }
  out += "];P=[";
  for (std::size_t i = 0; i < p.shifted.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.shifted[i]);
  }
  return out + "]";
}

namespace {

void check_object(const TypeAQuiver& q, const ModuleDesc& m) {
  if (m.is_shifted()) {
    if (m.a < 1 || m.a > q.size())
      throw Error(ErrorKind::QuiverMismatch, to_literal(m) + " is not on this quiver");
  } else {
    support(q, m);
  }
}

}  // namespace

bool is_compatible(const TypeAQuiver& q, const ModuleDesc& a, const ModuleDesc& b) {
  check_object(q, a);
  check_object(q, b);
  if (a.is_shifted() && b.is_shifted()) return a.a != b.a;
  if (a.is_shifted()) return dim(q, b)(a.a - 1) == 0;
  if (b.is_shifted()) return dim(q, a)(b.a - 1) == 0;
  return ext_dim(q, a, b) == 0 && ext_dim(q, b, a) == 0;
}

void validate(const TypeAQuiver& q, const SiltingPair& p) {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidArgument, to_literal(p) + ": " + why);
  };
  if (p.size() != static_cast<std::size_t>(q.size())) fail("needs exactly n summands");
  const auto members = p.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    check_object(q, members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) fail("repeated summand " + to_literal(members[i]));
      if (!is_compatible(q, members[i], members[j]))
        fail(to_literal(members[i]) + " and " + to_literal(members[j]) + " are not compatible");
    }
  }
  Support s = 0;
  for (const auto& m : p.modules) s |= support(q, m);
  if (std::popcount(s) != static_cast<int>(p.modules.size()))
    fail("support of T must have as many vertices as T has summands");
}

std::vector<std::vector<bool>> CompatibilityGraph::adjacency() const {
  std::vector<std::vector<bool>> adj(vertices.size(), std::vector<bool>(vertices.size(), false));
  for (const auto& [i, j] : edges) adj[i][j] = adj[j][i] = true;
  return adj;
}

CompatibilityGraph compatibility_graph(const TypeAQuiver& q, bool with_shifted) {
  CompatibilityGraph g;
  g.vertices = interval_modules(q);
  if (with_shifted)
    for (int i = 1; i <= q.size(); ++i) g.vertices.push_back(ModuleDesc::shifted(i));
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (is_compatible(q, g.vertices[i], g.vertices[j])) g.edges.emplace_back(i, j);
  return g;
}

namespace {

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r,
                   std::vector<std::size_t> p, std::vector<std::size_t> x,
                   std::vector<std::vector<std::size_t>>& out) {
  if (p.empty()) {
    if (x.empty()) {
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  // Pivot on the vertex of P u X with the most neighbours in P.
  std::size_t pivot = p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (std::size_t u : *set) {
      const auto count = static_cast<std::size_t>(
          std::count_if(p.begin(), p.end(), [&](std::size_t v) { return adj[u][v]; }));
      if (count >= best) {
        best = count;
        pivot = u;
      }
    }
  const std::vector<std::size_t> candidates = p;
  for (std::size_t v : candidates) {
    if (adj[pivot][v]) continue;
    std::vector<std::size_t> np, nx;
    for (std::size_t u : p)
      if (adj[v][u]) np.push_back(u);
    for (std::size_t u : x)
      if (adj[v][u]) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const CompatibilityGraph& g) {
  const auto adj = g.adjacency();
  std::vector<std::size_t> all(g.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> r;
  bron_kerbosch(adj, r, all, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SiltingPair> silting_pairs(const TypeAQuiver& q) {
  const auto g = compatibility_graph(q, true);
  std::vector<SiltingPair> out;
  for (const auto& clique : maximal_cliques(g)) {
    if (clique.size() > static_cast<std::size_t>(q.size()))
      throw Error(ErrorKind::Internal, "compatible set larger than n");
    if (clique.size() != static_cast<std::size_t>(q.size())) continue;
    std::vector<ModuleDesc> members;
    for (std::size_t v : clique) members.push_back(g.vertices[v]);
    out.push_back(make_pair(members));
  }
  std::sort(out.begin(), out.end(), [](const SiltingPair& a, const SiltingPair& b) {
    return to_literal(a) < to_literal(b);
  });
  return out;
}

std::vector<SiltingPair> tilting_modules(const TypeAQuiver& q) {
  std::vector<SiltingPair> out;
  for (auto& p : silting_pairs(q))
    if (p.shifted.empty()) out.push_back(std::move(p));
  return out;
}

std::vector<ModuleDesc> completions(const TypeAQuiver& q, std::span<const ModuleDesc> face) {
  for (std::size_t i = 0; i < face.size(); ++i)
    for (std::size_t j = i + 1; j < face.size(); ++j)
      if (face[i] == face[j] || !is_compatible(q, face[i], face[j]))
        throw Error(ErrorKind::NotAFace, to_literal(face[i]) + " and " + to_literal(face[j]) +
                                             " are not compatible");
  std::vector<ModuleDesc> out;
  auto candidates = interval_modules(q);
  for (int i = 1; i <= q.size(); ++i) candidates.push_back(ModuleDesc::shifted(i));
  for (const auto& c : candidates) {
    if (std::find(face.begin(), face.end(), c) != face.end()) continue;
    if (std::all_of(face.begin(), face.end(),
                    [&](const ModuleDesc& f) { return is_compatible(q, c, f); }))
      out.push_back(c);
  }
  return out;
}

Exchange complete_almost(const TypeAQuiver& q, const SiltingPair& p, const ModuleDesc& removed) {
  if (!p.contains(removed))
    throw Error(ErrorKind::InvalidArgument, to_literal(removed) + " is not in " + to_literal(p));
  std::vector<ModuleDesc> face;
  for (const auto& m : p.members())
    if (m != removed) face.push_back(m);
  const auto options = completions(q, face);
  if (options.size() != 2 || std::find(options.begin(), options.end(), removed) == options.end())
    throw Error(ErrorKind::Internal, "a face of a silting pair must have exactly two completions");
  return {removed, options[0] == removed ? options[1] : options[0]};
}

IntMatrix g_matrix(const TypeAQuiver& q, const SiltingPair& p) {
  const auto members = p.members();
  IntMatrix g(q.size(), static_cast<Eigen::Index>(members.size()));
  for (std::size_t j = 0; j < members.size(); ++j)
    g.col(static_cast<Eigen::Index>(j)) = g_vector(q, members[j]);
  return g;
}

std::vector<LaurentPoly> silting_to_cluster(const SiltingPair& p, const CharacterTable& table) {
  std::vector<LaurentPoly> out;
  for (const auto& m : p.members()) {
    auto it = table.find(m);
    if (it == table.end())
      throw Error(ErrorKind::MissingCharacter, "no character for " + to_literal(m));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace quiverlab
