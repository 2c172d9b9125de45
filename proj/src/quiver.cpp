#include "quiverlab/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace quiverlab {

namespace {

using CountMap = std::map<std::pair<int, int>, int>;

Quiver from_counts(int n, const CountMap& counts) {
  std::vector<std::pair<int, int>> expanded;
  for (const auto& [edge, m] : counts)
    for (int r = 0; r < m; ++r) expanded.push_back(edge);
  return Quiver::from_arrows(n, expanded);
}

CountMap counts_of(const Quiver& q) {
  CountMap counts;
  for (const auto& a : q.arrows()) counts[{a.source, a.target}] = a.multiplicity;
  return counts;
}

}  // namespace

Quiver Quiver::from_arrows(int n, std::span<const std::pair<int, int>> arrows) {
  if (n < 0) throw Error(ErrorKind::BadLabel, "negative vertex count");
  CountMap counts;
  for (const auto& [s, t] : arrows) {
    if (s < 1 || s > n || t < 1 || t > n)
      throw Error(ErrorKind::BadLabel, "arrow (" + std::to_string(s) + "," + std::to_string(t) +
                                           ") outside 1.." + std::to_string(n));
    if (s == t) throw Error(ErrorKind::LoopPresent, "loop at vertex " + std::to_string(s));
    ++counts[{s, t}];
  }
  Quiver q;
  q.n_ = n;
  for (const auto& [edge, m] : counts) {
    if (counts.count({edge.second, edge.first}))
      throw Error(ErrorKind::TwoCyclePresent, "arrows both ways between " +
                                                  std::to_string(edge.first) + " and " +
                                                  std::to_string(edge.second));
    q.arrows_.push_back({edge.first, edge.second, m});
  }
  return q;
}

std::vector<std::pair<int, int>> Quiver::arrow_list() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : arrows_)
    for (int r = 0; r < a.multiplicity; ++r) out.emplace_back(a.source, a.target);
  return out;
}

int Quiver::arrow_count(int source, int target) const {
  for (const auto& a : arrows_)
    if (a.source == source && a.target == target) return a.multiplicity;
  return 0;
}

std::optional<std::vector<int>> Quiver::sink_first_order() const {
  // Kahn's algorithm on reversed arrows: a vertex is ready once all of its
  // targets are placed.
  std::vector<int> pending(n_ + 1, 0);
  for (const auto& a : arrows_) ++pending[a.source];
  std::vector<int> order;
  std::vector<bool> placed(n_ + 1, false);
  while (static_cast<int>(order.size()) < n_) {
    int next = 0;
    for (int v = 1; v <= n_; ++v) {
      if (!placed[v] && pending[v] == 0) {
        next = v;
        break;
      }
    }
    if (next == 0) return std::nullopt;
    placed[next] = true;
    order.push_back(next);
    for (const auto& a : arrows_)
      if (a.target == next) --pending[a.source];
  }
  return order;
}

Quiver Quiver::opposite() const {
  std::vector<std::pair<int, int>> reversed;
  for (const auto& [s, t] : arrow_list()) reversed.emplace_back(t, s);
  return from_arrows(n_, reversed);
}

IntMatrix exchange_matrix(const Quiver& q) {
  IntMatrix b = IntMatrix::Zero(q.size(), q.size());
  for (const auto& a : q.arrows()) {
    b(a.source - 1, a.target - 1) += a.multiplicity;
    b(a.target - 1, a.source - 1) -= a.multiplicity;
  }
  return b;
}

Quiver quiver_from_matrix(const IntMatrix& b) {
  if (!is_skew_symmetric(b)) throw Error(ErrorKind::NotSkewSymmetric, "exchange matrix");
  std::vector<std::pair<int, int>> arrows;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (std::int64_t r = 0; r < b(i, j); ++r)
        arrows.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
  return Quiver::from_arrows(static_cast<int>(b.rows()), arrows);
}

Quiver mutate(const Quiver& q, int k) {
  if (k < 1 || k > q.size())
    throw Error(ErrorKind::BadLabel, "mutation vertex " + std::to_string(k));
  const CountMap before = counts_of(q);

  // Step 1: a new arrow i -> j for every path i -> k -> j.
  CountMap composed = before;
  for (const auto& [in, a] : before) {
    if (in.second != k) continue;
    for (const auto& [out, b] : before) {
      if (out.first != k) continue;
      composed[{in.first, out.second}] += a * b;
    }
  }

  // Step 2: reverse every arrow incident to k.
  CountMap reversed;
  for (const auto& [edge, m] : composed) {
    if (edge.first == k || edge.second == k)
      reversed[{edge.second, edge.first}] += m;
    else
      reversed[edge] += m;
  }

  // Step 3: cancel 2-cycles pairwise.
  CountMap result;
  for (const auto& [edge, m] : reversed) {
    const auto back = reversed.find({edge.second, edge.first});
    const int net = m - (back == reversed.end() ? 0 : back->second);
    if (net > 0) result[edge] = net;
  }
  return from_counts(q.size(), result);
}

bool isomorphic(const Quiver& a, const Quiver& b) {
  if (a.size() != b.size()) return false;
  const IntMatrix ba = exchange_matrix(a);
  const IntMatrix bb = exchange_matrix(b);
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int i = 0; i < a.size() && same; ++i)
      for (int j = 0; j < a.size() && same; ++j) same = ba(i, j) == bb(perm[i], perm[j]);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace quiverlab
