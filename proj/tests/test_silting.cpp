#include <set>

#include "doctest.h"
#include "quiverlab/seed.hpp"
#include "quiverlab/silting.hpp"

using namespace quiverlab;

namespace {

ModuleDesc I(int a, int b) { return ModuleDesc::interval(a, b); }
ModuleDesc Sh(int i) { return ModuleDesc::shifted(i); }

SiltingPair pair_of(std::initializer_list<ModuleDesc> ms) {
  const std::vector<ModuleDesc> v(ms);
  return make_pair(v);
}

}  // namespace

TEST_CASE("compatibility rules") {
  const TypeAQuiver a3(linear_a(3));
  CHECK_FALSE(is_compatible(a3, I(1, 1), I(2, 2)));
  CHECK(is_compatible(a3, Sh(2), I(1, 1)));
  CHECK_FALSE(is_compatible(a3, Sh(2), I(1, 2)));
  CHECK(is_compatible(a3, Sh(1), Sh(2)));
  CHECK_FALSE(is_compatible(a3, Sh(1), Sh(1)));
  CHECK_THROWS_AS(is_compatible(a3, Sh(4), I(1, 1)), Error);
}

TEST_CASE("compatibility graphs") {
  const TypeAQuiver a3(linear_a(3));
  const auto modules_only = compatibility_graph(a3, false);
  CHECK(modules_only.vertices.size() == 6);
  std::size_t triangles = 0;
  for (const auto& c : maximal_cliques(modules_only)) triangles += c.size() == 3 ? 1 : 0;
  CHECK(triangles == 5);

  const auto extended = compatibility_graph(a3);
  CHECK(extended.vertices.size() == 9);
  const auto cliques = maximal_cliques(extended);
  CHECK(cliques.size() == 14);
  for (const auto& c : cliques) CHECK(c.size() == 3);

  const auto a1 = compatibility_graph(TypeAQuiver(linear_a(1)));
  CHECK(a1.vertices.size() == 2);
  CHECK(a1.edges.empty());
}

TEST_CASE("silting pairs and tilting modules") {
  const TypeAQuiver a3(linear_a(3));
  const auto pairs = silting_pairs(a3);
  CHECK(pairs.size() == 14);
  const std::set<SiltingPair> found(pairs.begin(), pairs.end());
  CHECK(found.count(pair_of({Sh(1), Sh(2), Sh(3)})) == 1);
  const auto s1s3 = pair_of({I(1, 1), I(3, 3), Sh(2)});
  CHECK(found.count(s1s3) == 1);
  CHECK(to_literal(s1s3) == "T=[M[1,1],M[3,3]];P=[2]");
  for (const auto& p : pairs) validate(a3, p);

  CHECK(tilting_modules(a3).size() == 5);
  const auto a2 = tilting_modules(TypeAQuiver(linear_a(2)));
  REQUIRE(a2.size() == 2);
  CHECK(a2[0] == pair_of({I(1, 1), I(1, 2)}));
  CHECK(a2[1] == pair_of({I(1, 2), I(2, 2)}));
  const auto a1 = tilting_modules(TypeAQuiver(linear_a(1)));
  REQUIRE(a1.size() == 1);
  CHECK(a1[0] == pair_of({I(1, 1)}));
}

TEST_CASE("validation") {
  const TypeAQuiver a3(linear_a(3));
  CHECK_THROWS_AS(validate(a3, pair_of({I(1, 1), I(2, 2), I(3, 3)})), Error);
  CHECK_THROWS_AS(validate(a3, pair_of({I(1, 1), Sh(2)})), Error);
  CHECK_THROWS_AS(validate(a3, pair_of({I(1, 2), I(1, 1), Sh(2)})), Error);
  validate(a3, pair_of({I(1, 1), Sh(3), Sh(2)}));
}

TEST_CASE("exchange of one summand") {
  const TypeAQuiver a3(linear_a(3));
  const auto ex = complete_almost(a3, pair_of({I(1, 1), I(3, 3), Sh(2)}), Sh(2));
  CHECK(ex.original == Sh(2));
  CHECK(ex.other == projective_module(a3, 3));
  const TypeAQuiver a2(linear_a(2));
  CHECK(complete_almost(a2, pair_of({I(1, 1), I(1, 2)}), I(1, 1)).other == I(2, 2));
  CHECK_THROWS_AS(complete_almost(a2, pair_of({I(1, 1), I(1, 2)}), I(2, 2)), Error);
  const std::vector<ModuleDesc> bad{I(1, 1), I(2, 2)};
  try {
    completions(a3, bad);
    FAIL("expected NotAFace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFace);
  }
}

TEST_CASE("cluster correspondence") {
  const TypeAQuiver a3(linear_a(3));
  const auto table = char_table(a3);
  const auto initial = silting_to_cluster(pair_of({Sh(1), Sh(2), Sh(3)}), table);
  CHECK(cluster_key(initial) == cluster_key(initial_seed(a3.quiver()).cluster));
  const auto c = silting_to_cluster(pair_of({I(1, 1), I(3, 3), Sh(2)}), table);
  CHECK(c == std::vector<LaurentPoly>{table.at(I(1, 1)), table.at(I(3, 3)),
                                      LaurentPoly::variable(3, 2)});
  CharacterTable partial;
  try {
    silting_to_cluster(pair_of({I(1, 1), I(3, 3), Sh(2)}), partial);
    FAIL("expected MissingCharacter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingCharacter);
  }
}

TEST_CASE("silting invariants on every orientation, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      const TypeAQuiver q(oriented_a(n, mask));
      const auto pairs = silting_pairs(q);
      const auto table = char_table(q);
      const auto graph = exchange_graph(q.quiver());
      REQUIRE(graph.complete);
      std::set<std::vector<std::string>> clusters;
      for (const auto& node : graph.nodes) clusters.insert(node.key);
      std::set<std::vector<std::string>> images;
      for (const auto& p : pairs) {
        images.insert(cluster_key(silting_to_cluster(p, table)));
        const IntMatrix g = g_matrix(q, p);
        CHECK(exact_rank(g) == n);
        for (Eigen::Index k = 0; k < n; ++k)
          CHECK((g.row(k).minCoeff() >= 0 || g.row(k).maxCoeff() <= 0));
        for (const auto& m : p.members()) CHECK(complete_almost(q, p, m).other != m);
      }
      CHECK(images.size() == pairs.size());
      CHECK(images == clusters);
    }
}
