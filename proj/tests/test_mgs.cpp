#include <random>

#include "doctest.h"
#include "quiverlab/mgs.hpp"

using namespace quiverlab;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (auto x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntVector V(std::initializer_list<std::int64_t> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

const Quiver kA2 = Quiver::from_arrows(2, {{1, 2}});

std::vector<std::vector<int>> directions(const MgsResult& r) {
  std::vector<std::vector<int>> out;
  for (const auto& s : r.sequences) out.push_back(s.directions);
  return out;
}

}  // namespace

TEST_CASE("framing") {
  CHECK(framed(exchange_matrix(kA2)) == M({{0, 1}, {-1, 0}, {1, 0}, {0, 1}}));
  CHECK(framed(IntMatrix::Zero(2, 2)) == M({{0, 0}, {0, 0}, {1, 0}, {0, 1}}));
  CHECK_THROWS_AS(framed(M({{0, 1}, {1, 0}})), Error);
  const auto cs = c_vectors(framed(exchange_matrix(linear_a(3))));
  for (int i = 0; i < 3; ++i) CHECK(cs[i] == IntVector::Unit(3, i));
  CHECK(green_vertices(framed(exchange_matrix(linear_a(3)))) == std::vector<int>{1, 2, 3});
}

TEST_CASE("the A2 green sequence 1, 2, 1") {
  const auto chain = trace(framed(exchange_matrix(kA2)), {1, 2, 1});
  REQUIRE(chain.size() == 4);
  CHECK(chain[0] == M({{0, 1}, {-1, 0}, {1, 0}, {0, 1}}));
  CHECK(chain[1] == M({{0, -1}, {1, 0}, {-1, 1}, {0, 1}}));
  CHECK(chain[2] == M({{0, 1}, {-1, 0}, {0, -1}, {1, -1}}));
  CHECK(chain[3] == M({{0, -1}, {1, 0}, {0, -1}, {-1, 0}}));
  const auto cs = c_vectors(chain[1]);
  CHECK(cs[0] == V({-1, 0}));
  CHECK(cs[1] == V({1, 1}));
  CHECK(green_vertices(chain[1]) == std::vector<int>{2});
  CHECK(red_vertices(chain[1]) == std::vector<int>{1});
  CHECK(green_vertices(chain[3]).empty());
  CHECK(mutate_framed(chain[1], 1) == chain[0]);
}

TEST_CASE("sign incoherence is reported") {
  try {
    c_vectors(M({{0, 1}, {-1, 0}, {1, 0}, {-1, 1}}));
    FAIL("expected SignIncoherent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SignIncoherent);
    CHECK(is_internal(e.kind()));
  }
}

TEST_CASE("maximal green sequences") {
  CHECK(directions(find_mgs(exchange_matrix(kA2))) == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1}});
  CHECK(directions(find_mgs(IntMatrix::Zero(1, 1))) == std::vector<std::vector<int>>{{1}});
  const auto truncated = find_mgs(exchange_matrix(linear_a(3)), {32, 3});
  CHECK_FALSE(truncated.complete);
  CHECK_FALSE(find_mgs(exchange_matrix(kA2), {1, 100}).complete);
  CHECK_THROWS_AS(find_mgs(exchange_matrix(kA2), {0, 10}), Error);
}

TEST_CASE("framed quiver engine") {
  const auto f = mutate_framed_quiver(framed_quiver(kA2), 2, 1);
  CHECK(f == Quiver::from_arrows(4, {{2, 1}, {1, 3}, {3, 2}, {4, 2}}));
  for (int n = 1; n <= 4; ++n)
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      const Quiver q = oriented_a(n, mask);
      const auto a = find_mgs(exchange_matrix(q));
      const auto b = find_mgs_quiver(q);
      CHECK(a.complete);
      CHECK(b.complete);
      REQUIRE(a.sequences.size() == b.sequences.size());
      for (std::size_t i = 0; i < a.sequences.size(); ++i) {
        CHECK(a.sequences[i].directions == b.sequences[i].directions);
        CHECK(a.sequences[i].matrices == b.sequences[i].matrices);
      }
      for (const auto& s : a.sequences) {
        CHECK(green_vertices(s.matrices.back()).empty());
        for (std::size_t i = 0; i + 1 < s.matrices.size(); ++i) {
          const auto greens = green_vertices(s.matrices[i]);
          CHECK(std::find(greens.begin(), greens.end(), s.directions[i]) != greens.end());
        }
      }
    }
}

TEST_CASE("NZ duality along every A2 and A3 green sequence") {
  const TypeAQuiver a2(kA2);
  const NZChecker a2_checker(a2);
  const auto initial = a2_checker.check(framed(exchange_matrix(kA2)));
  CHECK(initial.modules.empty());
  CHECK(initial.shifted == std::vector<int>{1, 2});
  const auto after = a2_checker.check(trace(framed(exchange_matrix(kA2)), {1}).back());
  CHECK(after.modules == std::vector<ModuleDesc>{ModuleDesc::interval(1, 1)});
  CHECK(after.shifted == std::vector<int>{2});
  CHECK(g_matrix_from_c(trace(framed(exchange_matrix(kA2)), {1}).back()) == M({{1, 0}, {-1, -1}}));

  std::size_t states = 0;
  for (int n = 2; n <= 3; ++n)
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      const TypeAQuiver q(oriented_a(n, mask));
      const NZChecker checker(q);
      for (const auto& s : find_mgs(exchange_matrix(q.quiver())).sequences)
        for (const auto& f : s.matrices) {
          ++states;
          CHECK(checker.report(f).ok());
        }
    }
  CHECK(states > 0);
  // A state whose C is not reachable fails loudly.
  try {
    a2_checker.check(M({{0, 1}, {-1, 0}, {2, 0}, {0, 1}}));
    FAIL("expected NZViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NZViolation);
  }
}

TEST_CASE("sign coherence along random mutation walks") {
  std::mt19937 rng(17);
  for (int walk = 0; walk < 300; ++walk) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> arrows;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int m = static_cast<int>(rng() % 5) - 2;
        for (int k = 0; k < std::abs(m); ++k) arrows.emplace_back(m > 0 ? i : j, m > 0 ? j : i);
      }
    FramedMatrix f = framed(exchange_matrix(Quiver::from_arrows(n, arrows)));
    const int depth = 1 + static_cast<int>(rng() % 10);
    for (int step = 0; step < depth; ++step) {
      f = mutate_matrix(f, 1 + static_cast<int>(rng() % n));
      CHECK_NOTHROW(c_vectors(f));
    }
  }
}
