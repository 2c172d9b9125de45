#include "quiverlab/repmod.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

namespace quiverlab {

IntMatrix cartan_matrix(const Quiver& q) {
  const auto order = q.sink_first_order();
  if (!order) throw Error(ErrorKind::CyclicQuiver, "Cartan matrix needs an acyclic quiver");
  const int n = q.size();
  // paths(i, j) = number of paths from i to j.
  IntMatrix paths = IntMatrix::Zero(n, n);
  for (int i : *order) {
    paths(i - 1, i - 1) = 1;
    for (const auto& a : q.arrows())
      if (a.source == i) paths.row(i - 1) += a.multiplicity * paths.row(a.target - 1);
  }
  return paths.transpose();
}

CartanData::CartanData(const Quiver& q) : cartan_(cartan_matrix(q)) {
  auto inv = unimodular_inverse(cartan_);
  if (!inv) throw Error(ErrorKind::Internal, "Cartan matrix of an acyclic quiver is unimodular");
  inverse_ = *inv;
  inverse_transpose_ = inverse_.transpose();
}

IntVector CartanData::g_vector(const DimVector& dim, Side side) const {
  if (dim.size() != cartan_.rows()) throw Error(ErrorKind::DimensionMismatch, "dimension vector");
  return side == Side::Standard ? IntVector(inverse_ * dim) : IntVector(inverse_transpose_ * dim);
}

IntVector g_vector(const Quiver& q, const DimVector& dim, Side side) {
  return CartanData(q).g_vector(dim, side);
}

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  std::int64_t value = d.dot(e);
  for (const auto& a : q.arrows()) value -= a.multiplicity * d(a.source - 1) * e(a.target - 1);
  return value;
}

DimVector dim_of(int n, Support s) {
  DimVector d = DimVector::Zero(n);
  for (int v = 0; v < n; ++v)
    if (s >> v & 1U) d(v) = 1;
  return d;
}

Support support_of(const DimVector& d) {
  Support s = 0;
  for (Eigen::Index v = 0; v < d.size(); ++v)
    if (d(v) != 0) s |= Support{1} << v;
  return s;
}

namespace {

bool has(Support s, int vertex) { return (s >> (vertex - 1)) & 1U; }

}  // namespace

std::vector<Support> submodule_supports(const Quiver& q, Support s) {
  std::vector<Support> out;
  // Enumerate every subset of s, including s itself and the empty set.
  Support sub = s;
  while (true) {
    bool closed = true;
    for (const auto& a : q.arrows()) {
      if (has(sub, a.source) && has(s, a.target) && !has(sub, a.target)) {
        closed = false;
        break;
      }
    }
    if (closed) out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & s;
  }
  std::sort(out.begin(), out.end(), [](Support x, Support y) {
    const int px = std::popcount(x);
    const int py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  return out;
}

int hom_dim_thin(const Quiver& q, Support from, Support to) {
  const Support common = from & to;
  std::vector<int> vars;
  for (int v = 1; v <= q.size(); ++v)
    if (has(common, v)) vars.push_back(v);
  if (vars.empty()) return 0;
  auto column = [&](int v) {
    return static_cast<Eigen::Index>(std::find(vars.begin(), vars.end(), v) - vars.begin());
  };
  // For an arrow u -> v: to(u->v) f_u = f_v from(u->v).
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& a : q.arrows()) {
    std::vector<std::int64_t> row(vars.size(), 0);
    bool nonzero = false;
    if (has(common, a.source) && has(to, a.target)) {
      row[column(a.source)] += 1;
      nonzero = true;
    }
    if (has(common, a.target) && has(from, a.source)) {
      row[column(a.target)] -= 1;
      nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  if (rows.empty()) return static_cast<int>(vars.size());
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(vars.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j) m(i, j) = rows[i][j];
  return static_cast<int>(vars.size() - exact_rank(m));
}

// ---------------------------------------------------------------------------

TypeAQuiver::TypeAQuiver(Quiver q) : quiver_(std::move(q)), cartan_(quiver_) {
  const int n = quiver_.size();
  if (n < 1) throw Error(ErrorKind::NotTypeA, "empty quiver");
  std::vector<std::vector<int>> adjacent(n + 1);
  for (const auto& a : quiver_.arrows()) {
    if (a.multiplicity != 1) throw Error(ErrorKind::NotTypeA, "multiple arrows");
    adjacent[a.source].push_back(a.target);
    adjacent[a.target].push_back(a.source);
  }
  if (static_cast<int>(quiver_.arrows().size()) != n - 1)
    throw Error(ErrorKind::NotTypeA, "a path on n vertices has n-1 edges");
  int start = 0;
  for (int v = 1; v <= n; ++v) {
    if (adjacent[v].size() > 2) throw Error(ErrorKind::NotTypeA, "branch vertex");
    if (start == 0 && adjacent[v].size() <= 1) start = v;
  }
  if (start == 0) throw Error(ErrorKind::NotTypeA, "no endpoint");
  position_.assign(n + 1, -1);
  int prev = 0;
  int cur = start;
  while (cur != 0) {
    position_[cur] = static_cast<int>(path_.size());
    path_.push_back(cur);
    int next = 0;
    for (int w : adjacent[cur])
      if (w != prev && position_[w] < 0) next = w;
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(path_.size()) != n) throw Error(ErrorKind::NotTypeA, "disconnected");
}

Support TypeAQuiver::segment(int a, int b) const {
  const int lo = std::min(position(a), position(b));
  const int hi = std::max(position(a), position(b));
  Support s = 0;
  for (int p = lo; p <= hi; ++p) s |= Support{1} << (path_[p] - 1);
  return s;
}

std::optional<std::pair<int, int>> TypeAQuiver::endpoints(Support s) const {
  int lo = -1;
  int hi = -1;
  for (int p = 0; p < size(); ++p) {
    if (!has(s, path_[p])) continue;
    if (lo < 0) lo = p;
    if (hi >= 0 && hi != p - 1) return std::nullopt;
    hi = p;
  }
  if (lo < 0 || s >> size() != 0) return std::nullopt;
  const int a = path_[lo];
  const int b = path_[hi];
  return std::make_pair(std::min(a, b), std::max(a, b));
}

Quiver linear_a(int n) { return oriented_a(n, 0); }

Quiver oriented_a(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i < n; ++i) {
    if (mask >> (i - 1) & 1U)
      arrows.emplace_back(i, i + 1);
    else
      arrows.emplace_back(i + 1, i);
  }
  return Quiver::from_arrows(n, arrows);
}

ModuleDesc ModuleDesc::interval(int a, int b) {
  return {Kind::Interval, std::min(a, b), std::max(a, b)};
}

std::string to_literal(const ModuleDesc& m) {
  if (m.is_shifted()) return "P[" + std::to_string(m.a) + "][1]";
  return "M[" + std::to_string(m.a) + "," + std::to_string(m.b) + "]";
}

namespace {

void check_vertex(const TypeAQuiver& q, int i) {
  if (i < 1 || i > q.size())
    throw Error(ErrorKind::QuiverMismatch, "vertex " + std::to_string(i) + " not in quiver");
}

ModuleDesc from_support(const TypeAQuiver& q, Support s) {
  const auto ends = q.endpoints(s);
  if (!ends) throw Error(ErrorKind::Internal, "support is not an interval");
  return ModuleDesc::interval(ends->first, ends->second);
}

Support reachable(const Quiver& q, int i, bool forward) {
  Support seen = Support{1} << (i - 1);
  std::deque<int> queue{i};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& a : q.arrows()) {
      const int from = forward ? a.source : a.target;
      const int to = forward ? a.target : a.source;
      if (from == v && !has(seen, to)) {
        seen |= Support{1} << (to - 1);
        queue.push_back(to);
      }
    }
  }
  return seen;
}

}  // namespace

ModuleDesc simple_module(const TypeAQuiver& q, int i) {
  check_vertex(q, i);
  return ModuleDesc::interval(i, i);
}

ModuleDesc projective_module(const TypeAQuiver& q, int i) {
  check_vertex(q, i);
  return from_support(q, reachable(q.quiver(), i, true));
}

ModuleDesc injective_module(const TypeAQuiver& q, int i) {
  check_vertex(q, i);
  return from_support(q, reachable(q.quiver(), i, false));
}

Support support(const TypeAQuiver& q, const ModuleDesc& m) {
  if (m.is_shifted())
    throw Error(ErrorKind::InvalidArgument, "shifted projectives have no support");
  check_vertex(q, m.a);
  check_vertex(q, m.b);
  return q.segment(m.a, m.b);
}

DimVector dim(const TypeAQuiver& q, const ModuleDesc& m) {
  return dim_of(q.size(), support(q, m));
}

ModuleDesc module_with_dim(const TypeAQuiver& q, const DimVector& d) {
  if (d.size() != q.size()) throw Error(ErrorKind::DimensionMismatch, "dimension vector");
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d(i) != 0 && d(i) != 1)
      throw Error(ErrorKind::InvalidArgument, "not the dimension vector of an indecomposable");
  const auto ends = q.endpoints(support_of(d));
  if (!ends) throw Error(ErrorKind::InvalidArgument, "not the dimension vector of an indecomposable");
  return ModuleDesc::interval(ends->first, ends->second);
}

IntVector g_vector(const TypeAQuiver& q, const ModuleDesc& m) {
  if (m.is_shifted()) {
    check_vertex(q, m.a);
    IntVector g = IntVector::Zero(q.size());
    g(m.a - 1) = -1;
    return g;
  }
  return q.cartan().g_vector(dim(q, m));
}

std::vector<ModuleDesc> interval_modules(const TypeAQuiver& q) {
  std::vector<ModuleDesc> out;
  for (int a = 1; a <= q.size(); ++a)
    for (int b = a; b <= q.size(); ++b) out.push_back(ModuleDesc::interval(a, b));
  return out;
}

std::vector<Submodule> submodules(const TypeAQuiver& q, const ModuleDesc& m) {
  std::vector<Submodule> out;
  for (Support s : submodule_supports(q.quiver(), support(q, m)))
    out.push_back({dim_of(q.size(), s), s});
  return out;
}

std::vector<DimVector> submodule_dims(const TypeAQuiver& q, std::span<const ModuleDesc> summands) {
  std::vector<Support> supports;
  std::vector<std::vector<Support>> subs;
  for (const auto& m : summands) {
    supports.push_back(support(q, m));
    subs.push_back(submodule_supports(q.quiver(), supports.back()));
  }
  // A submodule of A + B is (X <= A, Y <= B, f in Hom(Y, A/X)); the lattice
  // is finite exactly when every such Hom vanishes.
  for (std::size_t i = 0; i < summands.size(); ++i)
    for (std::size_t j = i + 1; j < summands.size(); ++j)
      for (Support x : subs[i])
        for (Support y : subs[j])
          if (hom_dim_thin(q.quiver(), y, supports[i] & ~x) > 0)
            throw Error(ErrorKind::InfiniteLattice,
                        to_literal(summands[i]) + " + " + to_literal(summands[j]) +
                            " has infinitely many submodules");
  std::vector<DimVector> out{DimVector::Zero(q.size())};
  for (const auto& choices : subs) {
    std::vector<DimVector> next;
    for (const auto& base : out)
      for (Support s : choices) next.push_back(base + dim_of(q.size(), s));
    out = std::move(next);
  }
  return out;
}

int hom_dim(const TypeAQuiver& q, const ModuleDesc& m, const ModuleDesc& n) {
  return hom_dim_thin(q.quiver(), support(q, m), support(q, n));
}

int ext_dim(const TypeAQuiver& q, const ModuleDesc& m, const ModuleDesc& n) {
  const auto value = hom_dim(q, m, n) - euler_form(q.quiver(), dim(q, m), dim(q, n));
  if (value < 0) throw Error(ErrorKind::Internal, "negative Ext dimension");
  return static_cast<int>(value);
}

std::vector<ModuleDesc> exceptional_order(const TypeAQuiver& q, std::span<const ModuleDesc> mods) {
  const std::size_t k = mods.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (ext_dim(q, mods[i], mods[j]) != 0)
        throw Error(ErrorKind::NotExtOrthogonal,
                    "Ext(" + to_literal(mods[i]) + ", " + to_literal(mods[j]) + ") != 0");
  // Hom(X, Y) != 0 forces X before Y.
  std::vector<std::vector<bool>> before(k, std::vector<bool>(k, false));
  std::vector<int> pending(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && mods[i] != mods[j] && hom_dim(q, mods[i], mods[j]) > 0) {
        before[i][j] = true;
        ++pending[j];
      }
  std::vector<ModuleDesc> out;
  std::vector<bool> used(k, false);
  while (out.size() < k) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!used[i] && pending[i] == 0) {
        pick = i;
        break;
      }
    if (pick == k) throw Error(ErrorKind::HomCycle, "oriented cycle of nonzero Homs");
    used[pick] = true;
    out.push_back(mods[pick]);
    for (std::size_t j = 0; j < k; ++j)
      if (before[pick][j]) --pending[j];
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> ARQuiver::find(int orbit, int slice) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].orbit == orbit && nodes[i].slice == slice) return i;
  return std::nullopt;
}

std::optional<std::size_t> ARQuiver::find(const ModuleDesc& m) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].module == m) return i;
  return std::nullopt;
}

int ARQuiver::last_module_slice(int orbit) const {
  int last = -1;
  for (const auto& node : nodes)
    if (node.orbit == orbit && !node.module.is_shifted()) last = std::max(last, node.slice);
  return last;
}

ARQuiver ar_quiver(const TypeAQuiver& q) {
  const Quiver& quiver = q.quiver();
  const int n = q.size();
  const auto order = *quiver.sink_first_order();
  const IntMatrix& c = q.cartan().cartan();

  std::map<std::vector<std::int64_t>, int> injective_of;
  for (int k = 1; k <= n; ++k) {
    const IntVector row = c.row(k - 1).transpose();
    injective_of[{row.data(), row.data() + n}] = k;
  }
  auto injective_index = [&](const DimVector& d) {
    auto it = injective_of.find({d.data(), d.data() + n});
    return it == injective_of.end() ? 0 : it->second;
  };

  std::map<std::pair<int, int>, DimVector> dims;
  for (int i = 1; i <= n; ++i) dims[{i, 0}] = c.col(i - 1);
  auto dim_at = [&](int i, int t) -> DimVector {
    auto it = dims.find({i, t});
    return it == dims.end() ? DimVector(DimVector::Zero(n)) : it->second;
  };

  // Knit: dim tau^{-1} X = (sum of successors of X) - dim X.
  for (int t = 0;; ++t) {
    bool grew = false;
    for (int i : order) {
      if (!dims.count({i, t}) || injective_index(dims[{i, t}]) != 0) continue;
      DimVector next = -dims[{i, t}];
      for (const auto& a : quiver.arrows()) {
        if (a.target == i) next += a.multiplicity * dim_at(a.source, t);
        if (a.source == i) next += a.multiplicity * dim_at(a.target, t + 1);
      }
      if (!q.endpoints(support_of(next)) || next.maxCoeff() != 1 || next.minCoeff() < 0)
        throw Error(ErrorKind::Internal, "knitting produced a non-interval dimension vector");
      dims[{i, t + 1}] = next;
      grew = true;
    }
    if (!grew) break;
  }

  ARQuiver ar;
  std::map<std::pair<int, int>, std::size_t> at;
  int max_slice = 0;
  for (const auto& [pos, d] : dims) max_slice = std::max(max_slice, pos.second);
  for (int t = 0; t <= max_slice; ++t)
    for (int i : order)
      if (dims.count({i, t})) {
        at[{i, t}] = ar.nodes.size();
        ar.nodes.push_back({module_with_dim(q, dims[{i, t}]), i, t});
      }
  std::vector<std::pair<int, int>> shifted_positions;
  for (int i : order) {
    int last = 0;
    while (dims.count({i, last + 1})) ++last;
    const int k = injective_index(dims[{i, last}]);
    if (k == 0) throw Error(ErrorKind::Internal, "tau-orbit does not end at an injective");
    shifted_positions.emplace_back(i, last + 1);
    (void)k;
  }
  std::sort(shifted_positions.begin(), shifted_positions.end(),
            [&](const auto& x, const auto& y) {
              if (x.second != y.second) return x.second < y.second;
              return std::find(order.begin(), order.end(), x.first) <
                     std::find(order.begin(), order.end(), y.first);
            });
  for (const auto& [i, t] : shifted_positions) {
    const int k = injective_index(dims[{i, t - 1}]);
    at[{i, t}] = ar.nodes.size();
    ar.nodes.push_back({ModuleDesc::shifted(k), i, t});
  }

  auto lookup = [&](int i, int t) -> std::optional<std::size_t> {
    auto it = at.find({i, t});
    if (it == at.end()) return std::nullopt;
    return it->second;
  };
  const int last_slice = max_slice + 1;
  for (int t = 0; t <= last_slice; ++t) {
    for (const auto& a : quiver.arrows()) {
      // P_target -> P_source inside a slice; X_source -> tau^{-1} X_target across.
      if (auto from = lookup(a.target, t), to = lookup(a.source, t); from && to)
        ar.arrows.emplace_back(*from, *to);
      if (auto from = lookup(a.source, t), to = lookup(a.target, t + 1); from && to)
        ar.arrows.emplace_back(*from, *to);
    }
  }
  std::sort(ar.arrows.begin(), ar.arrows.end());

  for (const auto& [pos, start] : at) {
    const auto [i, t] = pos;
    const auto end = lookup(i, t + 1);
    if (!end) continue;
    ar.tau.emplace_back(start, *end);
    ARMesh mesh{start, {}, *end};
    for (const auto& a : quiver.arrows()) {
      if (a.target == i)
        if (auto m = lookup(a.source, t)) mesh.middle.push_back(*m);
      if (a.source == i)
        if (auto m = lookup(a.target, t + 1)) mesh.middle.push_back(*m);
    }
    std::sort(mesh.middle.begin(), mesh.middle.end());
    if (ar.nodes[*end].module.is_shifted())
      ar.shifted_meshes.push_back(std::move(mesh));
    else
      ar.meshes.push_back(std::move(mesh));
  }
  std::sort(ar.tau.begin(), ar.tau.end());
  auto by_start = [](const ARMesh& x, const ARMesh& y) { return x.start < y.start; };
  std::sort(ar.meshes.begin(), ar.meshes.end(), by_start);
  std::sort(ar.shifted_meshes.begin(), ar.shifted_meshes.end(), by_start);
  return ar;
}

}  // namespace quiverlab
