#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "doctest.h"
#include "factperm/permcat.hpp"
#include "support/fixtures.hpp"

using namespace factperm;
using namespace factperm::permcat;

TEST_CASE("the corpus fixtures satisfy every law") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    Report r = validate_permutative(*fx);
    CHECK(r.pass);
  }
  CHECK(validate_permutative(*fixtures::bz2()).pass);
}

TEST_CASE("violations are reported with witnesses") {
  // tensor of identities must be an identity
  auto base = fixtures::z2()->base;
  RawPermData raw;
  raw.unit = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      raw.tensor_obj.push_back({x, y, x ^ y});
      raw.braid.push_back({x, y, x ^ y});
    }
  raw.tensor_mor = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};  // id1 @ id1 wrong
  PermPtr broken = make_perm(base, raw);
  Report r = validate_permutative(*broken);
  CHECK_FALSE(r.pass);

  // missing table entries on a non-truncated structure
  RawPermData sparse = raw;
  sparse.tensor_mor.pop_back();
  Report r2 = validate_permutative(*make_perm(base, sparse));
  CHECK_FALSE(r2.pass);

  // a braid failing the involution: use the swap category where the braid
  // entry points at a non-inverse isomorphism
  auto i2 = fixtures::indiscrete2();
  RawPermData bent;
  bent.unit = 0;
  const fincat::FinCategory& k = i2->cat();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      bent.tensor_obj.push_back({x, y, std::max(x, y)});
      bent.braid.push_back({x, y, i2->braiding(x, y)});
    }
  for (int f = 0; f < k.morphisms(); ++f)
    for (int g = 0; g < k.morphisms(); ++g) bent.tensor_mor.push_back({f, g, i2->tmor(f, g)});
  bent.braid[1] = {0, 1, 1};  // morphism m01 : 0 -> 1 is not an endomorphism of 1
  Report r3 = validate_permutative(*make_perm(i2->base, bent));
  CHECK_FALSE(r3.pass);
}

TEST_CASE("iterated tensor folds with the unit as base case") {
  auto mp = fixtures::maxposet(false);
  CHECK(iterated_tensor(*mp, {}) == 0);
  std::vector<fincat::ObjId> one = {1};
  CHECK(iterated_tensor(*mp, one) == 1);
  std::vector<fincat::ObjId> three = {0, 1, 0};
  CHECK(iterated_tensor(*mp, three) == 1);
  std::vector<fincat::MorId> mors = {2, 1};  // f @ id1
  CHECK(iterated_tensor_mor(*mp, mors) == 1);
}

TEST_CASE("iterated tensor over concatenations") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    const int n = fx->cat().objects();
    std::vector<fincat::ObjId> xs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          xs = {a, b, c};
          std::vector<fincat::ObjId> left = {a, b}, right = {c};
          CHECK(iterated_tensor(*fx, xs) ==
                fx->tob(iterated_tensor(*fx, left), iterated_tensor(*fx, right)));
        }
  }
}

TEST_CASE("canonical symmetry on identities and swaps") {
  auto z2 = fixtures::z2();
  std::vector<fincat::ObjId> xs = {0, 1};
  CHECK(canonical_symmetry(*z2, {0, 1}, xs) == z2->cat().identity(1));
  CHECK(canonical_symmetry(*z2, {1, 0}, xs) == z2->braiding(1, 0));
  std::vector<fincat::ObjId> one = {1};
  CHECK(canonical_symmetry(*z2, {0}, one) == z2->cat().identity(1));
  std::vector<fincat::ObjId> none = {};
  CHECK(canonical_symmetry(*z2, {}, none) == z2->cat().identity(0));
}

TEST_CASE("canonical symmetry is decomposition independent") {
  // two explicitly different reduced words for the transposition (1 3):
  // s0 s1 s0 versus s1 s0 s1
  auto fx = fixtures::indiscrete2();
  std::vector<fincat::ObjId> xs = {0, 1, 0};
  auto braid_at = [&](int p, const std::vector<fincat::ObjId>& order) {
    std::vector<fincat::ObjId> pre(order.begin(), order.begin() + p);
    fincat::MorId head = fx->cat().identity(iterated_tensor(*fx, pre));
    fincat::MorId step = fx->tmor(head, fx->braiding(order[p], order[p + 1]));
    for (size_t i = p + 2; i < order.size(); ++i)
      step = fx->tmor(step, fx->cat().identity(order[i]));
    return step;
  };
  // word 1: positions 0, 1, 0 starting from (x3, x2, x1)
  std::vector<fincat::ObjId> ord = {xs[2], xs[1], xs[0]};
  fincat::MorId w1 = braid_at(0, ord);
  std::swap(ord[0], ord[1]);
  w1 = fx->cat().compose(braid_at(1, ord), w1);
  std::swap(ord[1], ord[2]);
  w1 = fx->cat().compose(braid_at(0, ord), w1);
  // word 2: positions 1, 0, 1
  ord = {xs[2], xs[1], xs[0]};
  fincat::MorId w2 = braid_at(1, ord);
  std::swap(ord[1], ord[2]);
  w2 = fx->cat().compose(braid_at(0, ord), w2);
  std::swap(ord[0], ord[1]);
  w2 = fx->cat().compose(braid_at(1, ord), w2);
  CHECK(w1 == w2);
  CHECK(canonical_symmetry(*fx, {2, 1, 0}, xs) == w1);
}

TEST_CASE("canonical symmetry is a homomorphism") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    const int nobj = fx->cat().objects();
    for (int k = 0; k <= 3; ++k) {
      std::vector<int> sigma(k), tau(k);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        std::iota(tau.begin(), tau.end(), 0);
        do {
          std::vector<fincat::ObjId> xs(k);
          for (int i = 0; i < k; ++i) xs[i] = (i * 7 + 1) % nobj;
          // c(sigma.tau; X) = c(tau; X) . c(sigma; tau-permuted inputs)
          std::vector<int> st(k);
          for (int i = 0; i < k; ++i) st[i] = sigma[tau[i]];
          std::vector<fincat::ObjId> txs(k);
          for (int i = 0; i < k; ++i) txs[tau[i]] = xs[i];
          fincat::MorId lhs = canonical_symmetry(*fx, st, xs);
          fincat::MorId rhs = fx->cat().compose(canonical_symmetry(*fx, tau, xs),
                                                canonical_symmetry(*fx, sigma, txs));
          CHECK(lhs == rhs);
        } while (std::next_permutation(tau.begin(), tau.end()));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
}

TEST_CASE("strict symmetric monoidal functor checks") {
  auto mp = fixtures::maxposet(false);
  auto mpf = fixtures::maxposet(true);
  relcat::RelFunctor up = relcat::make_rel_functor(mp->base, mpf->base, {0, 1}, {0, 1, 2});
  CHECK(check_strict_sm_functor(*mp, *mpf, up).pass);

  // multiplying by the non-unit object breaks unit preservation
  relcat::RelFunctor shift = relcat::make_rel_functor(mp->base, mp->base, {1, 1}, {1, 1, 1});
  Report r = check_strict_sm_functor(*mp, *mp, shift);
  CHECK_FALSE(r.pass);
  bool unit_named = false;
  for (auto& d : r.details)
    if (d.find("unit") != std::string::npos) unit_named = true;
  CHECK(unit_named);
}

TEST_CASE("symmetries land in the marking when braids do") {
  for (auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    const int nobj = fx->cat().objects();
    for (int x = 0; x < nobj; ++x)
      for (int y = 0; y < nobj; ++y) {
        std::vector<fincat::ObjId> xs = {x, y};
        CHECK(fx->base->is_weq(canonical_symmetry(*fx, {1, 0}, xs)));
      }
  }
}
