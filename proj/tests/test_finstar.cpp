#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "factperm/finstar.hpp"

using namespace factperm;
using namespace factperm::finstar;

TEST_CASE("classification of based maps") {
  Classification id3 = classify(identity_map(3));
  CHECK(id3.inert);
  CHECK(id3.strongly_inert);
  CHECK(id3.active);

  // <2> -> <1> killing 2 is strongly inert but not active
  PointedMap r = rho(2, 0b01);
  CHECK(to_text(r) == "2 1 : 1 0");
  Classification cr = classify(r);
  CHECK(cr.inert);
  CHECK(cr.strongly_inert);
  CHECK_FALSE(cr.active);

  Classification cf = classify(fold(2));
  CHECK(cf.active);
  CHECK_FALSE(cf.inert);

  // inert but not strongly inert: order-reversing singleton preimages
  PointedMap tw = parse_pointed_map("2 2 : 2 1");
  Classification ct = classify(tw);
  CHECK(ct.inert);
  CHECK_FALSE(ct.strongly_inert);

  // consistency on everything small: strongly inert implies inert
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : all_maps(n, m)) {
        Classification c = classify(f);
        if (c.strongly_inert) CHECK(c.inert);
      }
}

TEST_CASE("text round trip") {
  PointedMap f = parse_pointed_map("3 1 : 1 0 1");
  CHECK(to_text(f) == "3 1 : 1 0 1");
  CHECK_THROWS(parse_pointed_map("3 1 : 1 0 5"));
  CHECK_THROWS(parse_pointed_map("nonsense"));
}

TEST_CASE("factorization returns the split through the support") {
  PointedMap f = parse_pointed_map("3 1 : 1 0 1");
  auto [inert, act] = factorize(f);
  CHECK(inert == rho(3, 0b101));
  CHECK(to_text(inert) == "3 2 : 1 0 2");
  CHECK(act == fold(2));
  CHECK(compose(act, inert) == f);

  // degenerate directions
  PointedMap a = fold(3);
  CHECK(factorize(a).first == identity_map(3));
  PointedMap si = rho(4, 0b1010);
  CHECK(factorize(si).second == identity_map(2));
}

TEST_CASE("factorization is unique at small sizes") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& f : all_maps(n, m)) {
        int count = 0;
        for (int k = 0; k <= n; ++k)
          for (const auto& h : all_strongly_inert(n, k))
            for (const auto& g : all_active(k, m))
              if (compose(g, h) == f) ++count;
        CHECK(count == 1);
      }
}

TEST_CASE("restriction maps") {
  CHECK(rho(3, 0b111) == identity_map(3));
  CHECK(rho(3, 0) == parse_pointed_map("3 0 : 0 0 0"));
  CHECK(to_text(rho(3, 0b010)) == "3 1 : 0 1 0");

  // nested restrictions compose through the relative ranks
  for (int n = 0; n <= 4; ++n)
    for (Subset t = 0; t < (1u << n); ++t)
      for (Subset s = t;; s = (s - 1) & t) {
        // position of s inside t
        Subset rel = 0;
        int rank = 0;
        for (int i = 1; i <= n; ++i) {
          if (!(t & (1u << (i - 1)))) continue;
          ++rank;
          if (s & (1u << (i - 1))) rel |= 1u << (rank - 1);
        }
        CHECK(rho(n, s) == compose(rho(subset_size(t), rel), rho(n, t)));
        if (s == 0) break;
      }
}

TEST_CASE("wedge is strictly monoidal with the swap involution") {
  CHECK(wedge(identity_map(1), identity_map(1)) == identity_map(2));
  CHECK(to_text(wedge(fold(2), identity_map(1))) == "3 2 : 1 1 2");

  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const auto& f : all_maps(n, m)) {
        CHECK(wedge(f, identity_map(0)) == f);
        CHECK(wedge(identity_map(0), f) == f);
        if (is_active(f))
          for (const auto& g : all_active(2, 1)) CHECK(is_active(wedge(f, g)));
      }
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k <= 2; ++k)
        for (const auto& f : all_maps(n, 1))
          for (const auto& g : all_maps(m, 1))
            for (const auto& h : all_maps(k, 1))
              CHECK(wedge(wedge(f, g), h) == wedge(f, wedge(g, h)));

  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m + n <= 4; ++m)
      CHECK(compose(swap_blocks(m, n), swap_blocks(n, m)) == identity_map(n + m));
}

TEST_CASE("active restriction matches factorization through a subset") {
  PointedMap f = parse_pointed_map("3 2 : 2 0 2");
  PointedMap r = active_restriction(f, 0b10);
  CHECK(to_text(r) == "2 1 : 1 1");
  CHECK(active_restriction(f, 0b01).n == 0);
}

TEST_CASE("interval category maps") {
  MonotoneMap u;
  u.n = 0;
  u.m = 1;
  u.img = {0};
  NablaMap img = delta_to_nabla(u);
  CHECK(img.n == 1);
  CHECK(img.m == 0);
  CHECK(img(-1) == -1);
  CHECK(img(0) == 0);
  CHECK(img(1) == 0);

  MonotoneMap idn;
  idn.n = 2;
  idn.m = 2;
  idn.img = {0, 1, 2};
  CHECK(delta_to_nabla(idn) == identity_nabla(2));
}

TEST_CASE("interval isomorphism: bijective, functorial, class-preserving") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      auto monos = all_monotone(n, m);
      auto nabs = all_nabla(m, n);
      CHECK(monos.size() == nabs.size());
      std::set<NablaMap> seen;
      for (const auto& u : monos) {
        NablaMap img = delta_to_nabla(u);
        CHECK(check_nabla(img).pass);
        CHECK(seen.insert(img).second);
        CHECK(nabla_inert(img) == is_subinterval_inclusion(u));
        CHECK(nabla_active(img) == preserves_endpoints(u));
      }
    }
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k <= 2; ++k)
        for (const auto& u : all_monotone(n, m))
          for (const auto& v : all_monotone(m, k)) {
            MonotoneMap vu;
            vu.n = n;
            vu.m = k;
            for (int i = 0; i <= n; ++i) vu.img.push_back(v.img[u.img[i]]);
            CHECK(delta_to_nabla(vu) == compose(delta_to_nabla(u), delta_to_nabla(v)));
          }
}

TEST_CASE("truncated active category and its twisted arrows") {
  ActiveCategory a1 = active_category(1);
  CHECK(a1.cat->objects() == 2);
  // active maps with n, m <= 1: identities and the basepoint inclusion
  CHECK(a1.cat->morphisms() == 3);
  CHECK(a1.mor_id(parse_pointed_map("1 0 : 0")) == -1);  // not active

  TwActive t0 = enumerate_tw_active(0);
  CHECK(t0.tw.cat->objects() == 1);
  CHECK(t0.tw.cat->morphisms() == 1);

  TwActive t1 = enumerate_tw_active(1);
  CHECK(t1.tw.cat->objects() == 3);

  TwActive t2 = enumerate_tw_active(2);
  CHECK(t2.tw.cat->objects() == 11);
  // determinism of the id assignment
  TwActive again = enumerate_tw_active(2);
  CHECK(t2.tw.cat->mor_dom == again.tw.cat->mor_dom);
  CHECK(t2.tw.cat->compose_table == again.tw.cat->compose_table);
}

TEST_CASE("hom-sets out of the unit arrow are inhabited") {
  // (u, v) with v . f . u = id<1> exists whenever f has nonempty source
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : all_active(n, m)) {
        auto hom = tw_hom(identity_map(1), f);
        if (n >= 1)
          CHECK(!hom.empty());
        else
          CHECK(hom.empty());
        for (auto& [u, v] : hom) CHECK(compose(v, compose(f, u)) == identity_map(1));
      }
}

TEST_CASE("materialized twisted homs agree with the direct enumeration") {
  TwActive t2 = enumerate_tw_active(2);
  const auto& objs = t2.object_map();
  for (size_t a = 0; a < objs.size(); ++a)
    for (size_t b = 0; b < objs.size(); ++b) {
      int count = 0;
      for (int m = 0; m < t2.tw.cat->morphisms(); ++m)
        if (t2.tw.cat->dom(m) == static_cast<int>(a) &&
            t2.tw.cat->cod(m) == static_cast<int>(b))
          ++count;
      CHECK(count == static_cast<int>(tw_hom(objs[a], objs[b]).size()));
    }
}
