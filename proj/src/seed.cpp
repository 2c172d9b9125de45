#include "quiverlab/seed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace quiverlab {

Seed initial_seed(const Quiver& q) {
  Seed s;
  s.matrix = exchange_matrix(q);
  const auto n = static_cast<std::size_t>(q.size());
  for (std::size_t i = 1; i <= n; ++i) s.cluster.push_back(LaurentPoly::variable(n, i));
  return s;
}

Seed mutate(const Seed& s, int k) {
  const int n = s.size();
  if (k < 1 || k > n) throw Error(ErrorKind::BadDirection, "mutation direction " + std::to_string(k));
  const auto nvars = s.cluster.front().nvars();
  LaurentPoly incoming = LaurentPoly::constant(nvars, 1);
  LaurentPoly outgoing = LaurentPoly::constant(nvars, 1);
  for (int i = 0; i < n; ++i) {
    const auto b = s.matrix(i, k - 1);
    if (b > 0) incoming *= pow(s.cluster[i], static_cast<unsigned>(b));
    if (b < 0) outgoing *= pow(s.cluster[i], static_cast<unsigned>(-b));
  }
  Seed out;
  out.matrix = mutate_matrix(s.matrix, k);
  out.cluster = s.cluster;
  out.cluster[k - 1] = divide_exact(incoming + outgoing, s.cluster[k - 1]);
  return out;
}

std::vector<std::string> cluster_key(const std::vector<LaurentPoly>& cluster) {
  std::vector<std::string> key;
  for (const auto& x : cluster) key.push_back(render(x, RenderStyle::Flat));
  std::sort(key.begin(), key.end());
  return key;
}

namespace {

std::vector<std::string> node_key(const Seed& s, ClusterIdentity identity) {
  if (identity == ClusterIdentity::Unordered) return cluster_key(s.cluster);
  std::vector<std::string> key;
  for (const auto& x : s.cluster) key.push_back(render(x, RenderStyle::Flat));
  std::ostringstream m;
  for (Eigen::Index i = 0; i < s.matrix.size(); ++i) m << s.matrix(i) << ',';
  key.push_back(m.str());
  return key;
}

}  // namespace

std::size_t ExchangeGraph::degree(std::size_t i) const {
  std::set<std::size_t> adjacent;
  for (const auto& e : edges) {
    if (e.from == i) adjacent.insert(e.to);
    if (e.to == i) adjacent.insert(e.from);
  }
  return adjacent.size();
}

std::string ExchangeGraph::to_dot() const {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"";
    for (std::size_t j = 0; j < nodes[i].seed.cluster.size(); ++j) {
      if (j) out << "\\n";
      out << render(nodes[i].seed.cluster[j]);
    }
    out << "\"];\n";
  }
  for (const auto& e : edges)
    out << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.direction << "\"];\n";
  out << "}\n";
  return out.str();
}

ExchangeGraph exchange_graph(const Quiver& q, const ExchangeGraphBudget& budget,
                             ClusterIdentity identity) {
  if (budget.max_nodes == 0 || budget.max_depth < 0)
    throw Error(ErrorKind::InvalidArgument, "exchange graph budget must be positive");
  ExchangeGraph g;
  g.complete = true;
  std::map<std::vector<std::string>, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> seen_edges;

  auto add_node = [&](Seed seed, int depth) {
    auto key = node_key(seed, identity);
    for (const auto& x : seed.cluster) g.variables.insert(render(x, RenderStyle::Flat));
    index.emplace(key, g.nodes.size());
    g.nodes.push_back({std::move(key), std::move(seed), depth});
  };

  add_node(initial_seed(q), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (int k = 1; k <= q.size(); ++k) {
      Seed next = mutate(g.nodes[u].seed, k);
      const auto key = node_key(next, identity);
      auto it = index.find(key);
      std::size_t v;
      if (it != index.end()) {
        v = it->second;
      } else if (g.nodes[u].depth >= budget.max_depth || g.nodes.size() >= budget.max_nodes) {
        g.complete = false;
        continue;
      } else {
        v = g.nodes.size();
        add_node(std::move(next), g.nodes[u].depth + 1);
        queue.push_back(v);
      }
      if (seen_edges.insert({std::min(u, v), std::max(u, v)}).second)
        g.edges.push_back({u, v, k});
    }
  }
  return g;
}

}  // namespace quiverlab
