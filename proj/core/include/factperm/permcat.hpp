#pragma once
// Permutative relative categories: strict tensor tables, braiding, iterated
// tensors, canonical symmetry isomorphisms, and strict symmetric monoidal
// functor checking. Tables may be partial (entry -1) for truncated
// constructions; law checks then quantify over the defined instances and say
// so in their bounds field.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "factperm/relcat.hpp"

namespace factperm::permcat {

using fincat::MorId;
using fincat::ObjId;
using relcat::RelPtr;

struct PermRelCategory {
  RelPtr base;
  ObjId unit = 0;
  std::vector<ObjId> tensor_obj;  // x * objects + y, -1 when out of bound
  std::vector<MorId> tensor_mor;  // f * morphisms + g, -1 when out of bound
  std::vector<MorId> braid;       // x * objects + y, -1 when out of bound
  bool truncated = false;
  std::string bound_note;

  const fincat::FinCategory& cat() const { return *base->base; }
  ObjId tob(ObjId x, ObjId y) const {
    return tensor_obj[static_cast<size_t>(x) * base->base->objects() + y];
  }
  MorId tmor(MorId f, MorId g) const {
    return tensor_mor[static_cast<size_t>(f) * base->base->morphisms() + g];
  }
  MorId braiding(ObjId x, ObjId y) const {
    return braid[static_cast<size_t>(x) * base->base->objects() + y];
  }
};

using PermPtr = std::shared_ptr<const PermRelCategory>;

// Raw form: triples, mirroring the compose-table style.
struct RawPermData {
  ObjId unit = 0;
  std::vector<std::array<int, 3>> tensor_obj;  // (x, y, x@y)
  std::vector<std::array<int, 3>> tensor_mor;  // (f, g, f@g)
  std::vector<std::array<int, 3>> braid;       // (x, y, braid morphism)
};

PermPtr make_perm(RelPtr base, const RawPermData& raw, bool truncated = false,
                  std::string bound_note = "");

// All permutative laws: strict associativity and unit on objects and
// morphisms, bifunctoriality, braid involution, hexagon, naturality, and
// stability of weqs under tensor. Exhaustive over defined instances.
Report validate_permutative(const PermRelCategory& c);

ObjId iterated_tensor(const PermRelCategory& c, std::span<const ObjId> xs);
MorId iterated_tensor_mor(const PermRelCategory& c, std::span<const MorId> fs);

// The canonical isomorphism  (x)_i X_{sigma^{-1}(i)} -> (x)_i X_i  assembled
// from adjacent braidings; sigma is 0-based. Computes the composite along two
// different transposition decompositions and throws if they disagree.
MorId canonical_symmetry(const PermRelCategory& c, const std::vector<int>& sigma,
                         std::span<const ObjId> xs);

// Symmetry from fold(domain) to the arrangement where domain slot i sits at
// position dest[i].
MorId reorder_symmetry(const PermRelCategory& c, std::span<const ObjId> domain,
                       const std::vector<int>& dest);

// Strictness of a symmetric monoidal functor: unit, tensors of objects and
// morphisms, and braidings preserved on the nose.
Report check_strict_sm_functor(const PermRelCategory& src, const PermRelCategory& dst,
                               const relcat::RelFunctor& f);

}  // namespace factperm::permcat
