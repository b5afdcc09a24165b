#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "factperm/permconstr.hpp"
#include "support/fixtures.hpp"

using namespace factperm;
using namespace factperm::permconstr;
using finstar::PointedMap;

namespace {

TruncatedSegalFunctor functor_of(const permcat::PermPtr& fx, int bound = 3) {
  return fact_functor(factop::build_fact_family(fx, bound), false, 0);
}

}  // namespace

TEST_CASE("the algebra-level functor is strictly functorial") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    TruncatedSegalFunctor f = functor_of(fx, 2);
    CHECK(check_segal_functor(f).pass);
  }
}

TEST_CASE("fibers over twisted arrows and the slot bookkeeping") {
  auto z2 = fixtures::z2();
  TruncatedSegalFunctor f = functor_of(z2, 2);
  TwIndexedProduct t = f_tw(f, 2);
  CHECK(check_f_tw(t).pass);

  int id1 = t.tw.object_id(finstar::identity_map(1));
  REQUIRE(id1 >= 0);
  CHECK(t.slot_level[id1] == std::vector<int>{1});
  CHECK(t.fiber[id1].cat->base->objects() == f.value[1]->base->objects());

  int fold2 = t.tw.object_id(finstar::fold(2));
  REQUIRE(fold2 >= 0);
  CHECK(t.slot_level[fold2] == std::vector<int>{2});
  CHECK(t.fiber[fold2].cat->base->objects() == f.value[2]->base->objects());

  int unit = t.tw.object_id(finstar::identity_map(0));
  CHECK(t.fiber[unit].cat->base->objects() == 1);
}

TEST_CASE("grothendieck over the terminal index is the fiber") {
  auto i2rel = relcat::maximal_relcat(fixtures::indiscrete(2));
  auto term = fixtures::terminal();
  GrothendieckTotal g =
      grothendieck(term, {i2rel}, {relcat::identity_rel_functor(i2rel)});
  CHECK(g.total->base->objects() == 2);
  CHECK(g.total->base->morphisms() == 4);
  // everything over a point is cartesian exactly when the fiber part is
  for (size_t m = 0; m < g.mor_data.size(); ++m) CHECK(g.cartesian[m] == 1);
  CHECK(check_grothendieck(g).pass);
}

TEST_CASE("grothendieck over the arrow with point fibers is the arrow") {
  auto a = fixtures::arrow();
  auto pt = relcat::minimal_relcat(fixtures::terminal());
  std::vector<relcat::RelFunctor> tr(3, relcat::identity_rel_functor(pt));
  GrothendieckTotal g = grothendieck(a, {pt, pt}, tr);
  CHECK(g.total->base->objects() == 2);
  CHECK(g.total->base->morphisms() == 3);
  CHECK(check_grothendieck(g).pass);
}

TEST_CASE("constant fibers give a product") {
  auto a = fixtures::arrow();
  auto c = relcat::maximal_relcat(fixtures::indiscrete(2));
  std::vector<relcat::RelFunctor> tr(3, relcat::identity_rel_functor(c));
  GrothendieckTotal g = grothendieck(a, {c, c}, tr);
  fincat::ProductCategory p = fincat::product({a, c->base});
  CHECK(g.total->base->objects() == p.cat->objects());
  CHECK(g.total->base->morphisms() == p.cat->morphisms());
  // cartesian = (anything, invertible)
  for (size_t m = 0; m < g.mor_data.size(); ++m) CHECK(g.cartesian[m] == 1);
  CHECK(check_grothendieck(g).pass);
}

TEST_CASE("non-functorial transitions are rejected") {
  auto a = fixtures::arrow();
  auto c = relcat::maximal_relcat(fixtures::indiscrete(2));
  relcat::RelFunctor swap =
      relcat::make_rel_functor(c, c, {1, 0}, {3, 2, 1, 0});
  // transition at an identity must be the identity
  std::vector<relcat::RelFunctor> tr = {swap, relcat::identity_rel_functor(c),
                                        relcat::identity_rel_functor(c)};
  CHECK_THROWS_AS(grothendieck(a, {c, c}, tr), ValidationError);
}

TEST_CASE("the truncated total category and its laws") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    TruncatedSegalFunctor f = functor_of(fx, 2);
    PermBuild pb = perm_build(f, 2);
    CHECK(check_grothendieck(pb.groth).pass);
    CHECK(permcat::validate_permutative(*pb.perm).pass);
    CHECK(relcat::check_relcat(*pb.perm->base).pass);
  }
}

TEST_CASE("tensor and braiding formulas on the total category") {
  auto z2 = fixtures::z2();
  TruncatedSegalFunctor f = functor_of(z2, 2);
  PermBuild pb = perm_build(f, 2);

  // (id<1>, X) tensor (id<1>, Y) = (id<2>, X, Y)
  int x = pb.obj_of(finstar::identity_map(1), {0});
  int y = pb.obj_of(finstar::identity_map(1), {1});
  REQUIRE(x >= 0);
  REQUIRE(y >= 0);
  int xy = pb.perm->tob(x, y);
  REQUIRE(xy >= 0);
  auto [map_xy, tup_xy] = pb.obj_data(xy);
  CHECK(map_xy == finstar::identity_map(2));
  CHECK(tup_xy.size() == 2);

  // tensoring with the unit is the identity on the nose
  for (int o = 0; o < pb.perm->cat().objects(); ++o) {
    CHECK(pb.perm->tob(o, pb.perm->unit) == o);
    CHECK(pb.perm->tob(pb.perm->unit, o) == o);
  }

  // fold-indexed objects stay within bound only when the wedge fits
  int fold_obj = pb.obj_of(finstar::fold(2), {0});
  REQUIRE(fold_obj >= 0);
  CHECK(pb.perm->tob(fold_obj, x) == -1);  // 2 + 1 exceeds the bound
  CHECK(pb.perm->tob(fold_obj, pb.perm->unit) == fold_obj);

  // the braiding covers the block swap
  int b = pb.perm->braiding(x, y);
  REQUIRE(b >= 0);
  const auto& md = pb.groth.mor_data[b];
  auto [a_map, b_map] = pb.ftw.tw.mor_maps(md.index_mor);
  CHECK(a_map == finstar::swap_blocks(1, 1));
  CHECK(b_map == finstar::swap_blocks(1, 1));

  // morphism tensors exist whenever both endpoint tensors do
  const fincat::FinCategory& total = pb.perm->cat();
  for (int m1 = 0; m1 < total.morphisms(); ++m1)
    for (int m2 = 0; m2 < total.morphisms(); ++m2) {
      bool ends = pb.perm->tob(total.dom(m1), total.dom(m2)) >= 0 &&
                  pb.perm->tob(total.cod(m1), total.cod(m2)) >= 0;
      CHECK((pb.perm->tmor(m1, m2) >= 0) == ends);
    }
}

TEST_CASE("total object census matches the fiber sizes") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    TruncatedSegalFunctor f = functor_of(fx, 2);
    PermBuild pb = perm_build(f, 2);
    // sum over active maps within bound of the product of level sizes
    long long expected = 0;
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        for (const auto& u : finstar::all_active(n, m)) {
          long long size = 1;
          for (int j = 1; j <= m; ++j) {
            int level = 0;
            for (int i = 1; i <= n; ++i)
              if (u(i) == j) ++level;
            size *= f.value[level]->base->objects();
          }
          expected += size;
        }
    CHECK(pb.perm->cat().objects() == expected);
  }
  // hand count for the discrete group of order two: 29 objects
  TruncatedSegalFunctor f = functor_of(fixtures::z2(), 2);
  CHECK(perm_build(f, 2).perm->cat().objects() == 29);
}

TEST_CASE("unit inclusion certificates") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    TruncatedSegalFunctor f = functor_of(fx);
    PermBuild pb = perm_build(f, 2);
    UnitInclusion ui = unit_inclusion(f, pb);
    CHECK(relcat::check_rel_functor(ui.incl).pass);
    CHECK(ui.pi0.pass);
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(pi0_bijection(f, n).pass);
    }
  }
}

TEST_CASE("evaluation back to the base category") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    factop::FactFamily fam = factop::build_fact_family(fx, 2);
    TruncatedSegalFunctor f = fact_functor(fam, false, 0);
    PermBuild pb = perm_build(f, 2);
    CounitResult cr = counit_functor(fam, pb);
    CHECK(relcat::check_rel_functor(cr.functor).pass);
    CHECK(cr.strict_sm.pass);
    CHECK(cr.triangle.pass);
  }
}

TEST_CASE("evaluation formulas on objects") {
  auto z2 = fixtures::z2();
  factop::FactFamily fam = factop::build_fact_family(z2, 2);
  TruncatedSegalFunctor f = fact_functor(fam, false, 0);
  PermBuild pb = perm_build(f, 2);
  CounitResult cr = counit_functor(fam, pb);

  // (id<1>, A) evaluates to A({1})
  for (size_t a = 0; a < fam.level[1].algebras.size(); ++a) {
    int o = pb.obj_of(finstar::identity_map(1), {static_cast<int>(a)});
    CHECK(cr.functor.f.object_map[o] == fam.level[1].algebras[a].obj[0b1]);
  }
  // the unit evaluates to the unit
  CHECK(cr.functor.f.object_map[pb.perm->unit] == z2->unit);
  // (fold, A) evaluates to A({1,2})
  for (size_t a = 0; a < fam.level[2].algebras.size(); ++a) {
    int o = pb.obj_of(finstar::fold(2), {static_cast<int>(a)});
    CHECK(cr.functor.f.object_map[o] == fam.level[2].algebras[a].obj[0b11]);
  }
}

TEST_CASE("unit family values and coherence") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    TruncatedSegalFunctor f = functor_of(fx);
    PermBuild pb = perm_build(f, 2);
    EtaResult e = eta(f, pb);
    CHECK(e.report.pass);

    // value formulas at level 2
    const fincat::FinCategory& f2 = *f.value[2]->base;
    for (fincat::ObjId x = 0; x < f2.objects(); ++x) {
      int img = e.eta.component[2].f.object_map[x];
      const factop::FactAlgebra& alg = e.target_family.level[2].algebras[img];
      auto [m12, t12] = pb.obj_data(alg.obj[0b11]);
      CHECK(m12 == finstar::fold(2));
      CHECK(t12 == std::vector<int>{f.act(finstar::rho(2, 0b11)).f.object_map[x]});
      auto [m0, t0] = pb.obj_data(alg.obj[0]);
      CHECK(m0 == finstar::PointedMap{0, 1, {}});
    }
    const fincat::FinCategory& f1 = *f.value[1]->base;
    for (fincat::ObjId x = 0; x < f1.objects(); ++x) {
      int img = e.eta.component[1].f.object_map[x];
      const factop::FactAlgebra& alg = e.target_family.level[1].algebras[img];
      auto [m1, t1] = pb.obj_data(alg.obj[0b1]);
      CHECK(m1 == finstar::identity_map(1));
      CHECK(t1 == std::vector<int>{x});
    }
  }
}

TEST_CASE("path of the identity comparison") {
  auto z2 = fixtures::z2();
  TruncatedSegalFunctor f = functor_of(z2, 2);
  OplaxTransformation idt;
  idt.from = f;
  idt.to = f;
  idt.from.bound = idt.to.bound = 2;
  for (int n = 0; n <= 2; ++n) idt.component.push_back(relcat::identity_rel_functor(f.value[n]));
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const auto& u : finstar::all_maps(n, m)) {
        fincat::NatTransformation fill = fincat::identity_transformation(f.act(u).f);
        idt.filler.emplace(u, std::move(fill));
      }
  REQUIRE(check_oplax(idt).pass);
  PathOfOplax p = path_of_oplax(idt);
  CHECK(p.report.pass);
  // objects are pairs (X, marked arrow out of X)
  for (int n = 0; n <= 2; ++n) {
    int count = 0;
    const auto& fn = *f.value[n];
    for (fincat::ObjId x = 0; x < fn.base->objects(); ++x)
      for (fincat::MorId w = 0; w < fn.base->morphisms(); ++w)
        if (fn.is_weq(w) && fn.base->dom(w) == x) ++count;
    CHECK(p.pieces[n].cat->base->objects() == count);
  }
}

TEST_CASE("retraction, section equation, and strict naturality") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    TruncatedSegalFunctor f = functor_of(fx);
    PermBuild pb = perm_build(f, 2);
    Report r = alpha_beta_check(f, pb);
    CHECK(r.pass);
  }
}

TEST_CASE("insufficient input bound is rejected") {
  auto z2 = fixtures::z2();
  TruncatedSegalFunctor f = functor_of(z2, 1);
  CHECK_THROWS_AS(perm_build(f, 2), ValidationError);
}
