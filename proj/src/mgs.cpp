#include "quiverlab/mgs.hpp"

namespace quiverlab {

FramedMatrix framed(const IntMatrix& b) {
  if (!is_skew_symmetric(b)) throw Error(ErrorKind::NotSkewSymmetric, "exchange matrix");
  const Eigen::Index n = b.rows();
  FramedMatrix f(2 * n, n);
  f.topRows(n) = b;
  f.bottomRows(n).setIdentity();
  return f;
}

namespace {

int sign_of_column(const FramedMatrix& f, Eigen::Index j) {
  const auto c = c_matrix(f).col(j);
  const bool nonneg = c.minCoeff() >= 0;
  const bool nonpos = c.maxCoeff() <= 0;
  if (nonneg == nonpos)
    throw Error(ErrorKind::SignIncoherent, "c-vector " + std::to_string(j + 1) + " is not sign-coherent");
  return nonneg ? 1 : -1;
}

}  // namespace

std::vector<IntVector> c_vectors(const FramedMatrix& f) {
  std::vector<IntVector> out;
  for (Eigen::Index j = 0; j < f.cols(); ++j) {
    sign_of_column(f, j);
    out.emplace_back(c_matrix(f).col(j));
  }
  return out;
}

std::vector<int> green_vertices(const FramedMatrix& f) {
  std::vector<int> out;
  for (Eigen::Index j = 0; j < f.cols(); ++j)
    if (sign_of_column(f, j) > 0) out.push_back(static_cast<int>(j + 1));
  return out;
}

std::vector<int> red_vertices(const FramedMatrix& f) {
  std::vector<int> out;
  for (Eigen::Index j = 0; j < f.cols(); ++j)
    if (sign_of_column(f, j) < 0) out.push_back(static_cast<int>(j + 1));
  return out;
}

FramedMatrix mutate_framed(const FramedMatrix& f, int k) {
  FramedMatrix out = mutate_matrix(f, k);
  c_vectors(out);
  return out;
}

std::vector<FramedMatrix> trace(const FramedMatrix& f, const std::vector<int>& directions) {
  std::vector<FramedMatrix> out{f};
  for (int k : directions) out.push_back(mutate_framed(out.back(), k));
  return out;
}

namespace {

// Shared depth-first driver; State is the engine's representation.
template <typename State, typename Mutate, typename Matrix>
MgsResult search(const State& initial, const MgsBudget& budget, Mutate mutate_state, Matrix matrix_of) {
  if (budget.max_depth == 0 || budget.max_states == 0)
    throw Error(ErrorKind::InvalidArgument, "MGS budget must be positive");
  MgsResult result;
  std::vector<int> path;
  std::vector<FramedMatrix> matrices;
  bool stop = false;
  std::function<void(const State&)> dfs = [&](const State& s) {
    if (stop) return;
    if (++result.states > budget.max_states) {
      result.complete = false;
      stop = true;
      return;
    }
    matrices.push_back(matrix_of(s));
    const auto greens = green_vertices(matrices.back());
    if (greens.empty()) {
      result.sequences.push_back({path, matrices});
    } else if (path.size() >= budget.max_depth) {
      result.complete = false;
    } else {
      for (int k : greens) {
        path.push_back(k);
        dfs(mutate_state(s, k));
        path.pop_back();
        if (stop) break;
      }
    }
    matrices.pop_back();
  };
  dfs(initial);
  return result;
}

}  // namespace

MgsResult find_mgs(const IntMatrix& b, const MgsBudget& budget) {
  return search(
      framed(b), budget, [](const FramedMatrix& f, int k) { return mutate_framed(f, k); },
      [](const FramedMatrix& f) { return f; });
}

Quiver framed_quiver(const Quiver& q) {
  const int n = q.size();
  auto arrows = q.arrow_list();
  for (int i = 1; i <= n; ++i) arrows.emplace_back(n + i, i);
  return Quiver::from_arrows(2 * n, arrows);
}

Quiver mutate_framed_quiver(const Quiver& framed, int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorKind::BadDirection, "only mutable vertices can be mutated");
  const Quiver mutated = mutate(framed, k);
  std::vector<std::pair<int, int>> kept;
  for (const auto& [s, t] : mutated.arrow_list())
    if (s <= n || t <= n) kept.emplace_back(s, t);
  return Quiver::from_arrows(framed.size(), kept);
}

FramedMatrix framed_matrix_of(const Quiver& framed, int n) {
  const IntMatrix b = exchange_matrix(framed);
  FramedMatrix f(2 * n, n);
  f = b.leftCols(n);
  return f;
}

MgsResult find_mgs_quiver(const Quiver& q, const MgsBudget& budget) {
  const int n = q.size();
  return search(
      framed_quiver(q), budget, [n](const Quiver& f, int k) { return mutate_framed_quiver(f, n, k); },
      [n](const Quiver& f) { return framed_matrix_of(f, n); });
}

IntMatrix g_matrix_from_c(const FramedMatrix& f) {
  const IntMatrix ct = c_matrix(f).transpose();
  const auto inv = unimodular_inverse(ct);
  if (!inv) throw Error(ErrorKind::NZViolation, "C-matrix is not unimodular");
  return -*inv;
}

NZChecker::NZChecker(const TypeAQuiver& q) : n_(q.size()) {
  for (const auto& p : silting_pairs(q)) {
    const IntMatrix g = g_matrix(q, p);
    std::vector<std::vector<std::int64_t>> key;
    for (Eigen::Index j = 0; j < g.cols(); ++j) key.emplace_back(g.col(j).data(), g.col(j).data() + n_);
    std::sort(key.begin(), key.end());
    pairs_by_g_[key].push_back(p);
  }
  for (const auto& m : interval_modules(q)) {
    const DimVector d = dim(q, m);
    dims_.insert({d.data(), d.data() + n_});
  }
}

NZReport NZChecker::report(const FramedMatrix& f) const {
  if (f.cols() != n_ || f.rows() != 2 * n_) throw Error(ErrorKind::DimensionMismatch, "framed matrix shape");
  NZReport r;
  const IntMatrix c = c_matrix(f);
  const auto ct_inv = unimodular_inverse(IntMatrix(c.transpose()));
  if (!ct_inv) return r;
  const IntMatrix g = -*ct_inv;
  std::vector<std::vector<std::int64_t>> key;
  for (Eigen::Index j = 0; j < n_; ++j) {
    const IntVector col = g.col(j);
    key.emplace_back(col.data(), col.data() + n_);
  }
  std::sort(key.begin(), key.end());
  if (auto it = pairs_by_g_.find(key); it != pairs_by_g_.end() && it->second.size() == 1) {
    r.g_matches = true;
    r.pair = it->second.front();
  }
  r.c_are_dims = true;
  for (Eigen::Index j = 0; j < n_; ++j) {
    IntVector col = c.col(j);
    if (col.sum() < 0) col = -col;
    if (!dims_.count({col.data(), col.data() + n_})) r.c_are_dims = false;
  }
  r.pairing = IntMatrix(g.transpose() * c) == -IntMatrix::Identity(n_, n_);
  return r;
}

SiltingPair NZChecker::check(const FramedMatrix& f) const {
  const auto r = report(f);
  if (!r.ok()) {
    std::string what;
    if (!r.g_matches) what += " G does not match a unique silting pair;";
    if (!r.c_are_dims) what += " a c-vector is not +-dim of an indecomposable;";
    if (!r.pairing) what += " g.c != -delta;";
    throw Error(ErrorKind::NZViolation, what);
  }
  return *r.pair;
}

}  // namespace quiverlab
