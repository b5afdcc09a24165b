#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "factperm/fincat.hpp"
#include "support/fixtures.hpp"

using namespace factperm;
using namespace factperm::fincat;

namespace {

// independent oracle: all twisted squares (u, v) with v . g . u = f, found by
// scanning the composition table directly
int count_tw_squares(const FinCategory& c, MorId f, MorId g) {
  int count = 0;
  for (MorId u = 0; u < c.morphisms(); ++u) {
    if (c.dom(u) != c.dom(f) || c.cod(u) != c.dom(g)) continue;
    for (MorId v = 0; v < c.morphisms(); ++v) {
      if (c.dom(v) != c.cod(g) || c.cod(v) != c.cod(f)) continue;
      if (c.compose(v, c.compose(g, u)) == f) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("validation accepts the small categories") {
  CHECK(fixtures::terminal()->objects() == 1);
  CHECK(fixtures::terminal()->morphisms() == 1);
  CHECK(fixtures::arrow()->objects() == 2);
  CHECK(fixtures::arrow()->morphisms() == 3);
  CHECK(fixtures::indiscrete(3)->morphisms() == 9);
}

TEST_CASE("validation reports the offending data") {
  RawCategory raw;
  raw.objects = {"x"};
  raw.morphisms = {{"id", 0, 0}, {"s", 0, 0}, {"t", 0, 0}};
  raw.identities = {0};
  raw.compose = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2}, {2, 0, 2},
                 {1, 1, 2}, {1, 2, 0}, {2, 1, 0}, {2, 2, 2}};  // t.t breaks associativity
  try {
    validate_category(raw);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    bool named = false;
    for (const auto& d : e.report().details)
      if (d.find("associativity") != std::string::npos) named = true;
    CHECK(named);
  }

  RawCategory missing = raw;
  missing.identities = {1};
  CHECK_THROWS_AS(validate_category(missing), ValidationError);

  RawCategory dangling;
  dangling.objects = {"x"};
  dangling.morphisms = {{"id", 0, 3}};
  dangling.identities = {0};
  CHECK_THROWS_AS(validate_category(dangling), ValidationError);
}

TEST_CASE("isomorphisms by two-sided inverse search") {
  CHECK(isomorphisms(*fixtures::terminal()) == std::vector<MorId>{0});
  // the poset has no non-identity isomorphisms
  CHECK(isomorphisms(*fixtures::arrow()) == std::vector<MorId>{0, 1});
  // all four morphisms of the indiscrete pair are invertible
  CHECK(isomorphisms(*fixtures::indiscrete(2)).size() == 4);
}

TEST_CASE("functor and transformation checks") {
  auto a = fixtures::arrow();
  Functor id = identity_functor(a);
  CHECK(check_functor(id).pass);
  CHECK(check_nat_trans(identity_transformation(id)).pass);

  Functor broken = id;
  broken.object_map = {1, 0};  // dom/cod break for f
  CHECK_FALSE(check_functor(broken).pass);

  // constant functor at 1
  Functor c;
  c.source = a;
  c.target = a;
  c.object_map = {1, 1};
  c.morphism_map = {1, 1, 1};
  CHECK(check_functor(c).pass);
  CHECK(same_functor(compose(c, id), c));

  // id => constant, with components (f, id1): natural
  NatTransformation t;
  t.source_functor = id;
  t.target_functor = c;
  t.component = {2, 1};
  CHECK(check_nat_trans(t).pass);
  // wrong endpoints break the component typing
  t.source_functor = c;
  CHECK_FALSE(check_nat_trans(t).pass);
}

TEST_CASE("twisted arrow of the terminal category is terminal") {
  TwistedArrowCategory tw = twisted_arrow(fixtures::terminal());
  CHECK(tw.cat->objects() == 1);
  CHECK(tw.cat->morphisms() == 1);
}

TEST_CASE("twisted arrow of the walking arrow") {
  auto a = fixtures::arrow();
  TwistedArrowCategory tw = twisted_arrow(a);
  REQUIRE(tw.cat->objects() == 3);  // id0, id1, f
  int total = 0;
  for (MorId f = 0; f < a->morphisms(); ++f)
    for (MorId g = 0; g < a->morphisms(); ++g) total += count_tw_squares(*a, f, g);
  CHECK(tw.cat->morphisms() == total);
  CHECK(tw.cat->morphisms() == 5);  // three identities plus f->id0 and f->id1
  const int f_id = 2;
  std::set<std::pair<int, int>> nonid;
  for (MorId m = 0; m < tw.cat->morphisms(); ++m)
    if (!tw.cat->is_identity(m)) nonid.insert({tw.cat->dom(m), tw.cat->cod(m)});
  CHECK(nonid == std::set<std::pair<int, int>>{{f_id, 0}, {f_id, 1}});
  CHECK(check_functor(tw.dom_proj).pass);
}

TEST_CASE("twisted arrow of the indiscrete pair has singleton homs") {
  auto c = fixtures::indiscrete(2);
  TwistedArrowCategory tw = twisted_arrow(c);
  CHECK(tw.cat->objects() == 4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int count = 0;
      for (MorId m = 0; m < tw.cat->morphisms(); ++m)
        if (tw.cat->dom(m) == x && tw.cat->cod(m) == y) ++count;
      CHECK(count == 1);
    }
}

TEST_CASE("object count of the twisted arrow category is the morphism count") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    TwistedArrowCategory tw = twisted_arrow(fx->base->base);
    CHECK(tw.cat->objects() == fx->base->base->morphisms());
  }
}

TEST_CASE("twisted arrow is functorial") {
  auto a = fixtures::arrow();
  auto t = fixtures::terminal();
  auto i2 = fixtures::indiscrete(2);
  TwistedArrowCategory twa = twisted_arrow(a);
  TwistedArrowCategory twt = twisted_arrow(t);
  TwistedArrowCategory twi = twisted_arrow(i2);

  CHECK(same_functor(twisted_functor(identity_functor(a), twa, twa), identity_functor(twa.cat)));

  Functor swap;
  swap.source = i2;
  swap.target = i2;
  swap.object_map = {1, 0};
  swap.morphism_map = {3, 2, 1, 0};
  REQUIRE(check_functor(swap).pass);
  Functor tswap = twisted_functor(swap, twi, twi);
  CHECK(check_functor(tswap).pass);
  CHECK(same_functor(compose(tswap, tswap), identity_functor(twi.cat)));

  Functor bang;  // arrow -> terminal
  bang.source = a;
  bang.target = t;
  bang.object_map = {0, 0};
  bang.morphism_map = {0, 0, 0};
  Functor incl;  // terminal -> arrow at 0
  incl.source = t;
  incl.target = a;
  incl.object_map = {0};
  incl.morphism_map = {0};
  Functor both = compose(incl, bang);
  CHECK(same_functor(twisted_functor(both, twa, twa),
                     compose(twisted_functor(incl, twt, twa), twisted_functor(bang, twa, twt))));
}

TEST_CASE("slice and fiber product") {
  auto a = fixtures::arrow();
  SliceCategory s1 = slice(a, 1);
  CHECK(s1.cat->objects() == 2);  // id1 and f
  CHECK(check_functor(s1.forget).pass);
  SliceCategory s0 = slice(a, 0);
  CHECK(s0.cat->objects() == 1);

  FiberProductCategory p = fiber_product(s1.forget, s1.forget);
  CHECK(check_functor(p.proj1).pass);
  CHECK(check_functor(p.proj2).pass);
  for (size_t i = 0; i < p.obj_pair.size(); ++i)
    CHECK(s1.forget.object_map[p.obj_pair[i].first] ==
          s1.forget.object_map[p.obj_pair[i].second]);
}

TEST_CASE("products and pairing") {
  auto a = fixtures::arrow();
  ProductCategory p = product({a, a});
  CHECK(p.cat->objects() == 4);
  CHECK(p.cat->morphisms() == 9);
  CHECK(check_functor(p.projections[0]).pass);
  Functor diag = pairing(p, {identity_functor(a), identity_functor(a)});
  CHECK(check_functor(diag).pass);
  CHECK(same_functor(compose(p.projections[0], diag), identity_functor(a)));
  CHECK(product({}).cat->objects() == 1);
}

TEST_CASE("opposite is an involution") {
  auto a = fixtures::arrow();
  OppositeCategory op = opposite(a);
  CHECK(op.cat->dom(2) == a->cod(2));
  OppositeCategory opop = opposite(op.cat);
  CHECK(opop.cat->mor_dom == a->mor_dom);
  CHECK(opop.cat->compose_table == a->compose_table);
}

TEST_CASE("comma probes under the twisted arrow projection") {
  CommaProbe t = comma_probe(fixtures::terminal(), 0);
  CHECK(t.component_count == 1);
  CHECK(t.h1_rank == 0);
  CHECK(t.h1_torsion.empty());

  for (ObjId c : {0, 1}) {
    CommaProbe p = comma_probe(fixtures::arrow(), c);
    CHECK(p.component_count == 1);
    CHECK(p.h1_rank == 0);
    CHECK(p.h1_torsion.empty());
  }
  for (ObjId c : {0, 1}) {
    CommaProbe p = comma_probe(fixtures::indiscrete(2), c);
    CHECK(p.component_count == 1);
    CHECK(p.h1_rank == 0);
    CHECK(p.h1_torsion.empty());
  }
}

TEST_CASE("comma probes across the whole corpus") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    for (ObjId c = 0; c < fx->cat().objects(); ++c) {
      CommaProbe p = comma_probe(fx->base->base, c);
      CHECK(p.component_count == 1);
      CHECK(p.h1_rank == 0);
      CHECK(p.h1_torsion.empty());
    }
  }
}
