#include "quiverlab/character.hpp"

#include <functional>

namespace quiverlab {

namespace {

Exponent negated(const IntVector& v) {
  Exponent e(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) e[i] = static_cast<std::int32_t>(-v(i));
  return e;
}

LaurentPoly inverse_variable(std::size_t n, int i) {
  Exponent e(n, 0);
  e[i - 1] = -1;
  return LaurentPoly::monomial(e);
}

}  // namespace

LaurentPoly char_thin(const Quiver& q, Support s) {
  const CartanData cartan(q);
  const int n = q.size();
  const DimVector d = dim_of(n, s);
  LaurentPoly chi(static_cast<std::size_t>(n));
  for (Support sub : submodule_supports(q, s)) {
    const DimVector e = dim_of(n, sub);
    const IntVector exponent = cartan.g_vector(e) + cartan.g_vector(d - e, Side::Opposite);
    chi.add_term(negated(exponent), 1);
  }
  return chi;
}

LaurentPoly char_submodule(const TypeAQuiver& q, const ModuleDesc& m) {
  if (m.is_shifted()) {
    if (m.a < 1 || m.a > q.size()) throw Error(ErrorKind::QuiverMismatch, "vertex not in quiver");
    return LaurentPoly::variable(static_cast<std::size_t>(q.size()), static_cast<std::size_t>(m.a));
  }
  return char_thin(q.quiver(), support(q, m));
}

CharacterTable char_table(const TypeAQuiver& q) {
  CharacterTable table;
  for (const auto& m : interval_modules(q)) table.emplace(m, char_submodule(q, m));
  for (int i = 1; i <= q.size(); ++i)
    table.emplace(ModuleDesc::shifted(i), char_submodule(q, ModuleDesc::shifted(i)));
  return table;
}

CharacterTable char_frieze(const TypeAQuiver& q) {
  const auto nvars = static_cast<std::size_t>(q.size());
  const ARQuiver ar = ar_quiver(q);
  const auto order = *q.quiver().sink_first_order();
  std::map<std::pair<int, int>, LaurentPoly> value;
  for (int i = 1; i <= q.size(); ++i)
    value.emplace(std::make_pair(i, -1), LaurentPoly::variable(nvars, static_cast<std::size_t>(i)));
  auto at = [&](int i, int t) {
    auto it = value.find({i, t});
    return it == value.end() ? LaurentPoly::constant(nvars, 1) : it->second;
  };
  int max_slice = 0;
  for (const auto& node : ar.nodes) max_slice = std::max(max_slice, node.slice);

  CharacterTable table;
  for (int t = 0; t <= max_slice; ++t) {
    for (int i : order) {
      const auto node = ar.find(i, t);
      if (!node) continue;
      LaurentPoly middle = LaurentPoly::constant(nvars, 1);
      for (const auto& a : q.quiver().arrows()) {
        if (a.target == i) middle *= at(a.source, t - 1);
        if (a.source == i) middle *= at(a.target, t);
      }
      LaurentPoly chi = divide_exact(middle + LaurentPoly::constant(nvars, 1), at(i, t - 1));
      const ModuleDesc& m = ar.nodes[*node].module;
      if (m.is_shifted() && chi != LaurentPoly::variable(nvars, static_cast<std::size_t>(m.a)))
        throw Error(ErrorKind::Internal, "frieze does not return to the initial cluster");
      value.emplace(std::make_pair(i, t), chi);
      table.emplace(m, std::move(chi));
    }
  }
  return table;
}

namespace {

using Recursion = std::function<LaurentPoly(int)>;

// Shared shape of both recursions: chi(X_i) = prod chi(X_j) x^{-g} + x_i^{-1}
// where j runs over arrows leaving i (projectives) or entering i (injectives).
LaurentPoly recurse(const Quiver& q, int i, bool projective) {
  if (i < 1 || i > q.size()) throw Error(ErrorKind::BadLabel, "vertex " + std::to_string(i));
  if (!q.is_acyclic())
    throw Error(ErrorKind::RecursionUngrounded, "recursion needs an acyclic quiver");
  const CartanData cartan(q);
  const auto nvars = static_cast<std::size_t>(q.size());
  std::map<int, LaurentPoly> memo;
  std::function<const LaurentPoly&(int)> chi = [&](int v) -> const LaurentPoly& {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    LaurentPoly top = LaurentPoly::constant(nvars, 1);
    for (const auto& a : q.arrows()) {
      const int next = projective ? (a.source == v ? a.target : 0) : (a.target == v ? a.source : 0);
      if (next != 0) top *= pow(chi(next), static_cast<unsigned>(a.multiplicity));
    }
    DimVector e = DimVector::Zero(q.size());
    e(v - 1) = 1;
    const IntVector g = cartan.g_vector(e, projective ? Side::Opposite : Side::Standard);
    LaurentPoly out = top * LaurentPoly::monomial(negated(g)) + inverse_variable(nvars, v);
    return memo.emplace(v, std::move(out)).first->second;
  };
  return chi(i);
}

}  // namespace

LaurentPoly char_projective(const Quiver& q, int i) { return recurse(q, i, true); }

LaurentPoly char_injective(const Quiver& q, int i) { return recurse(q, i, false); }

LaurentPoly char_direct_sum(const TypeAQuiver& q, std::span<const ModuleDesc> summands) {
  std::vector<LaurentPoly> factors;
  for (const auto& m : summands) factors.push_back(char_submodule(q, m));
  return char_direct_sum(static_cast<std::size_t>(q.size()), factors);
}

LaurentPoly char_direct_sum(std::size_t nvars, std::span<const LaurentPoly> factors) {
  LaurentPoly out = LaurentPoly::constant(nvars, 1);
  for (const auto& f : factors) out *= f;
  return out;
}

int gr_euler(const TypeAQuiver& q, const ModuleDesc& m, const DimVector& e) {
  int count = 0;
  for (const auto& sub : submodules(q, m))
    if (sub.dim == e) ++count;
  return count;
}

}  // namespace quiverlab
