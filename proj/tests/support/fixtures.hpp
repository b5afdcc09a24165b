#pragma once
// Shared in-code fixtures: the discrete group of order two, the max-poset on
// two elements (minimal and maximal markings), the indiscrete pair, and the
// one-object group of order two, plus the small plain categories.

#include <string>
#include <vector>

#include "factperm/fincat.hpp"
#include "factperm/permcat.hpp"
#include "factperm/relcat.hpp"

namespace fixtures {

using factperm::fincat::CatPtr;
using factperm::fincat::RawCategory;
using factperm::permcat::PermPtr;
using factperm::permcat::RawPermData;

inline CatPtr terminal() {
  RawCategory raw;
  raw.objects = {"*"};
  raw.morphisms = {{"id", 0, 0}};
  raw.identities = {0};
  raw.compose = {{0, 0, 0}};
  return factperm::fincat::make_cat(raw);
}

inline CatPtr arrow() {  // the poset 0 < 1
  RawCategory raw;
  raw.objects = {"0", "1"};
  raw.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}, {"f", 0, 1}};
  raw.identities = {0, 1};
  raw.compose = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}};
  return factperm::fincat::make_cat(raw);
}

inline CatPtr indiscrete(int k) {
  RawCategory raw;
  for (int x = 0; x < k; ++x) raw.objects.push_back(std::to_string(x));
  auto mor = [&](int x, int y) { return x * k + y; };
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      raw.morphisms.push_back({"m" + std::to_string(x) + std::to_string(y), x, y});
  for (int x = 0; x < k; ++x) raw.identities.push_back(mor(x, x));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        raw.compose.push_back({mor(y, z), mor(x, y), mor(x, z)});
  return factperm::fincat::make_cat(raw);
}

// discrete permutative category on Z/2 with xor as the tensor
inline PermPtr z2() {
  RawCategory raw;
  raw.objects = {"0", "1"};
  raw.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}};
  raw.identities = {0, 1};
  raw.compose = {{0, 0, 0}, {1, 1, 1}};
  auto base = factperm::relcat::make_relcat(factperm::fincat::make_cat(raw), {0, 1});
  RawPermData perm;
  perm.unit = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      perm.tensor_obj.push_back({x, y, x ^ y});
      perm.tensor_mor.push_back({x, y, x ^ y});
      perm.braid.push_back({x, y, x ^ y});
    }
  return factperm::permcat::make_perm(base, perm);
}

// the poset {0 < 1} with max as tensor; full marking marks the step as well
inline PermPtr maxposet(bool full_marking = false) {
  auto base = full_marking ? factperm::relcat::make_relcat(arrow(), {0, 1, 2})
                           : factperm::relcat::make_relcat(arrow(), {0, 1});
  RawPermData perm;
  perm.unit = 0;
  // morphisms: id0 = 0 (0->0), id1 = 1 (1->1), f = 2 (0->1)
  auto unique_mor = [](int d, int c) { return d == c ? (d == 0 ? 0 : 1) : 2; };
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      perm.tensor_obj.push_back({x, y, std::max(x, y)});
      perm.braid.push_back({x, y, std::max(x, y) == 0 ? 0 : 1});
    }
  const int dom[3] = {0, 1, 0};
  const int cod[3] = {0, 1, 1};
  for (int f = 0; f < 3; ++f)
    for (int g = 0; g < 3; ++g)
      perm.tensor_mor.push_back(
          {f, g, unique_mor(std::max(dom[f], dom[g]), std::max(cod[f], cod[g]))});
  return factperm::permcat::make_perm(base, perm);
}

// both objects isomorphic, every morphism marked, max as tensor
inline PermPtr indiscrete2() {
  auto base = factperm::relcat::make_relcat(indiscrete(2), {0, 1, 2, 3});
  RawPermData perm;
  perm.unit = 0;
  auto mor = [](int x, int y) { return x * 2 + y; };
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      perm.tensor_obj.push_back({x, y, std::max(x, y)});
      int m = std::max(x, y);
      perm.braid.push_back({x, y, mor(m, m)});
    }
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g)
      perm.tensor_mor.push_back(
          {f, g, mor(std::max(f / 2, g / 2), std::max(f % 2, g % 2))});
  return factperm::permcat::make_perm(base, perm);
}

// one object, morphisms {e, s} with s.s = e; tensor is the group product
inline PermPtr bz2() {
  RawCategory raw;
  raw.objects = {"*"};
  raw.morphisms = {{"e", 0, 0}, {"s", 0, 0}};
  raw.identities = {0};
  raw.compose = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  auto base = factperm::relcat::make_relcat(factperm::fincat::make_cat(raw), {0, 1});
  RawPermData perm;
  perm.unit = 0;
  perm.tensor_obj = {{0, 0, 0}};
  perm.braid = {{0, 0, 0}};
  for (int f = 0; f < 2; ++f)
    for (int g = 0; g < 2; ++g) perm.tensor_mor.push_back({f, g, f ^ g});
  return factperm::permcat::make_perm(base, perm);
}

inline std::vector<std::pair<std::string, PermPtr>> corpus() {
  return {{"z2", z2()},
          {"maxposet", maxposet(false)},
          {"maxposet_full", maxposet(true)},
          {"indiscrete2", indiscrete2()}};
}

}  // namespace fixtures
