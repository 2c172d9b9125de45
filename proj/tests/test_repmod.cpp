#include "doctest.h"
#include "quiverlab/repmod.hpp"

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

DimVector D(std::initializer_list<std::int64_t> xs) {
  DimVector d(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) d(i++) = x;
  return d;
}

ModuleDesc I(int a, int b) { return ModuleDesc::interval(a, b); }

const Quiver kFan = Quiver::from_arrows(3, {{2, 1}, {3, 1}});

}  // namespace

TEST_CASE("Cartan matrices") {
  CHECK(cartan_matrix(kFan) == M({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(cartan_matrix(Quiver::from_arrows(3, {})) == IntMatrix::Identity(3, 3));
  CHECK(cartan_matrix(linear_a(3)) == M({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(cartan_matrix(Quiver::from_arrows(2, {{2, 1}, {2, 1}})) == M({{1, 2}, {0, 1}}));
  CHECK_THROWS_AS(cartan_matrix(Quiver::from_arrows(3, {{1, 2}, {2, 3}, {3, 1}})), Error);
}

TEST_CASE("g-vectors") {
  const CartanData fan(kFan);
  for (int i = 0; i < 3; ++i) CHECK(fan.g_vector(fan.cartan().col(i)) == IntVector::Unit(3, i));
  CHECK(fan.g_vector(D({1, 0, 0}), Side::Opposite) == D({1, -1, -1}));
  CHECK(g_vector(linear_a(3), D({0, 1, 1})) == D({-1, 0, 1}));
  const TypeAQuiver a3(linear_a(3));
  for (int i = 1; i <= 3; ++i) {
    CHECK(g_vector(a3, ModuleDesc::shifted(i)) == -IntVector::Unit(3, i - 1));
    CHECK(g_vector(a3, projective_module(a3, i)) == IntVector::Unit(3, i - 1));
  }
}

TEST_CASE("type A recognition") {
  CHECK(interval_modules(TypeAQuiver(linear_a(3))).size() == 6);
  CHECK(interval_modules(TypeAQuiver(linear_a(1))).size() == 1);
  CHECK(interval_modules(TypeAQuiver(linear_a(4))).size() == 10);
  const TypeAQuiver fan(kFan);
  CHECK(fan.path() == std::vector<int>{2, 1, 3});
  CHECK(projective_module(fan, 3) == I(1, 3));
  CHECK(injective_module(fan, 1) == I(2, 3));
  try {
    TypeAQuiver(Quiver::from_arrows(4, {{2, 1}, {3, 1}, {4, 1}}));
    FAIL("expected NotTypeA");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTypeA);
  }
  CHECK_THROWS_AS(TypeAQuiver(Quiver::from_arrows(2, {{2, 1}, {2, 1}})), Error);
}

TEST_CASE("submodules") {
  const TypeAQuiver a3(linear_a(3));
  const auto subs = submodules(a3, projective_module(a3, 3));
  REQUIRE(subs.size() == 4);
  CHECK(subs[0].dim == D({0, 0, 0}));
  CHECK(subs[1].dim == D({1, 0, 0}));
  CHECK(subs[2].dim == D({1, 1, 0}));
  CHECK(subs[3].dim == D({1, 1, 1}));
  for (int i = 1; i <= 3; ++i) CHECK(submodules(a3, simple_module(a3, i)).size() == 2);

  const TypeAQuiver fan(kFan);
  const auto p3 = submodules(fan, projective_module(fan, 3));
  REQUIRE(p3.size() == 3);
  CHECK(p3[1].dim == D({1, 0, 0}));

  const TypeAQuiver a2(linear_a(2));
  const std::vector<ModuleDesc> s2s2{I(2, 2), I(2, 2)};
  try {
    submodule_dims(a2, s2s2);
    FAIL("expected InfiniteLattice");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfiniteLattice);
  }
  const std::vector<ModuleDesc> p1p2{I(1, 1), I(1, 2)};
  CHECK_THROWS_AS(submodule_dims(a2, p1p2), Error);
  const std::vector<ModuleDesc> s1s2{I(1, 1), I(2, 2)};
  CHECK(submodule_dims(a2, s1s2).size() == 4);
}

TEST_CASE("Hom and Ext") {
  const TypeAQuiver a3(linear_a(3));
  for (const auto& m : interval_modules(a3)) {
    CHECK(hom_dim(a3, m, m) == 1);
    CHECK(ext_dim(a3, m, m) == 0);
  }
  CHECK(hom_dim(a3, projective_module(a3, 2), injective_module(a3, 2)) == 1);
  CHECK(ext_dim(a3, I(2, 3), I(1, 2)) == 1);
  CHECK(ext_dim(a3, I(3, 3), I(1, 2)) == 1);
  CHECK(ext_dim(a3, injective_module(a3, 2), projective_module(a3, 2)) == 1);
  CHECK(hom_dim(TypeAQuiver(linear_a(4)), I(1, 1), I(3, 4)) == 0);
  CHECK_THROWS_AS(hom_dim(a3, I(1, 4), I(1, 1)), Error);
}

TEST_CASE("interval Ext rule on linear A_n") {
  for (int n = 1; n <= 6; ++n) {
    const TypeAQuiver q(linear_a(n));
    const auto mods = interval_modules(q);
    for (const auto& x : mods)
      for (const auto& y : mods) {
        const int a = y.a, b = y.b, c = x.a, d = x.b;
        const bool rule = (a < c && c <= b && b < d) || (b + 1 == c);
        CHECK((ext_dim(q, x, y) > 0) == rule);
      }
  }
}

TEST_CASE("Euler form and Hom/Ext consequences on every orientation") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      const TypeAQuiver q(oriented_a(n, mask));
      const auto mods = interval_modules(q);
      for (const auto& m : mods)
        for (const auto& k : mods) {
          const DimVector dm = dim(q, m), dk = dim(q, k);
          CHECK(hom_dim(q, m, k) - ext_dim(q, m, k) == euler_form(q.quiver(), dm, dk));
          if (ext_dim(q, k, m) == 0 && hom_dim(q, m, k) > 0) {
            const bool le = (dm.array() <= dk.array()).all();
            const bool ge = (dm.array() >= dk.array()).all();
            CHECK((le || ge));
          }
        }
    }
}

TEST_CASE("exceptional order") {
  const TypeAQuiver a3(linear_a(3));
  const std::vector<ModuleDesc> pair{projective_module(a3, 2), I(1, 1)};
  CHECK(exceptional_order(a3, pair) == std::vector<ModuleDesc>{I(1, 1), I(1, 2)});
  const std::vector<ModuleDesc> apart{I(3, 3), I(1, 1)};
  CHECK(exceptional_order(a3, apart) == apart);
  const std::vector<ModuleDesc> projectives{I(1, 3), I(1, 2), I(1, 1)};
  CHECK(exceptional_order(a3, projectives) == std::vector<ModuleDesc>{I(1, 1), I(1, 2), I(1, 3)});
  const std::vector<ModuleDesc> bad{I(1, 1), I(2, 2)};
  try {
    exceptional_order(a3, bad);
    FAIL("expected NotExtOrthogonal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotExtOrthogonal);
  }
}

TEST_CASE("AR quiver of linear A3") {
  const TypeAQuiver a3(linear_a(3));
  const auto ar = ar_quiver(a3);
  REQUIRE(ar.nodes.size() == 9);
  const std::vector<ModuleDesc> knitted{I(1, 1), I(1, 2), I(1, 3), I(2, 2), I(2, 3), I(3, 3)};
  for (std::size_t i = 0; i < 6; ++i) CHECK(ar.nodes[i].module == knitted[i]);
  for (std::size_t i = 6; i < 9; ++i) CHECK(ar.nodes[i].module.is_shifted());
  CHECK(ar.nodes[*ar.find(ModuleDesc::shifted(1))].orbit == 3);
  CHECK(ar.nodes[*ar.find(ModuleDesc::shifted(3))].orbit == 1);
  // tau(P_i[1]) = I_i.
  for (int i = 1; i <= 3; ++i) {
    const auto shifted = *ar.find(ModuleDesc::shifted(i));
    bool found = false;
    for (const auto& [from, to] : ar.tau)
      if (to == shifted) {
        CHECK(ar.nodes[from].module == injective_module(a3, i));
        found = true;
      }
    CHECK(found);
  }
  CHECK(ar.meshes.size() == 3);
  CHECK(ar.shifted_meshes.size() == 3);
  // P_3 maps irreducibly onto I_2.
  const auto p3 = *ar.find(I(1, 3));
  const auto i2 = *ar.find(I(2, 3));
  CHECK(std::count(ar.arrows.begin(), ar.arrows.end(), std::make_pair(p3, i2)) == 1);
}

TEST_CASE("AR quivers: mesh additivity on every orientation") {
  for (int n = 1; n <= 6; ++n)
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      const TypeAQuiver q(oriented_a(n, mask));
      const auto ar = ar_quiver(q);
      std::size_t modules = 0;
      for (const auto& node : ar.nodes) modules += node.module.is_shifted() ? 0 : 1;
      CHECK(modules == static_cast<std::size_t>(n * (n + 1) / 2));
      CHECK(ar.nodes.size() == modules + static_cast<std::size_t>(n));
      for (const auto& mesh : ar.meshes) {
        DimVector mid = DimVector::Zero(n);
        for (auto m : mesh.middle) mid += dim(q, ar.nodes[m].module);
        CHECK(mid == dim(q, ar.nodes[mesh.start].module) + dim(q, ar.nodes[mesh.end].module));
      }
    }
}

TEST_CASE("AR quiver of A1 and of 2->1<-3") {
  const auto a1 = ar_quiver(TypeAQuiver(linear_a(1)));
  REQUIRE(a1.nodes.size() == 2);
  CHECK(a1.nodes[0].module == I(1, 1));
  CHECK(a1.nodes[1].module == ModuleDesc::shifted(1));

  const TypeAQuiver fan(kFan);
  const auto ar = ar_quiver(fan);
  const auto s1 = *ar.find(I(1, 1));
  bool found = false;
  for (const auto& mesh : ar.meshes)
    if (mesh.start == s1) {
      found = true;
      CHECK(dim(fan, ar.nodes[mesh.end].module) == D({1, 1, 1}));
      std::vector<ModuleDesc> mid;
      for (auto m : mesh.middle) mid.push_back(ar.nodes[m].module);
      std::sort(mid.begin(), mid.end());
      CHECK(mid == std::vector<ModuleDesc>{I(1, 2), I(1, 3)});
    }
  CHECK(found);
}
