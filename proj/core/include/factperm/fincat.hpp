#pragma once
// Finite categories as fully materialized object/morphism/composition tables,
// plus functors, natural transformations and the derived categories
// (opposite, product, slice, twisted arrow, strict fiber product) the rest of
// the library is built from. Everything is exact finite data; all law checks
// are exhaustive scans.

#include <array>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "factperm/report.hpp"

namespace factperm::fincat {

using ObjId = int;
using MorId = int;

struct RawMorphism {
  std::string name;
  ObjId dom = -1;
  ObjId cod = -1;
};

// Input form of a category before validation.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::vector<MorId> identities;              // one entry per object
  std::vector<std::array<MorId, 3>> compose;  // rows (g, f, g_after_f)
};

struct FinCategory {
  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;
  std::vector<ObjId> mor_dom;
  std::vector<ObjId> mor_cod;
  std::vector<MorId> obj_identity;
  std::vector<MorId> compose_table;  // index g * morphisms() + f, -1 if not composable

  int objects() const { return static_cast<int>(obj_identity.size()); }
  int morphisms() const { return static_cast<int>(mor_dom.size()); }
  ObjId dom(MorId f) const { return mor_dom[f]; }
  ObjId cod(MorId f) const { return mor_cod[f]; }
  MorId identity(ObjId x) const { return obj_identity[x]; }
  bool is_identity(MorId f) const { return obj_identity[mor_dom[f]] == f; }
  bool composable(MorId g, MorId f) const { return mor_cod[f] == mor_dom[g]; }
  // g after f; -1 when not composable
  MorId compose(MorId g, MorId f) const {
    return compose_table[static_cast<size_t>(g) * mor_dom.size() + f];
  }
  const std::string& oname(ObjId x) const { return object_names[x]; }
  const std::string& mname(MorId f) const { return morphism_names[f]; }
};

using CatPtr = std::shared_ptr<const FinCategory>;

// Checks the three category laws (well-typed identities and composites,
// unit laws, associativity on every composable triple) and freezes the
// result. Throws ValidationError naming the offending pair/triple.
FinCategory validate_category(const RawCategory& raw);
CatPtr make_cat(const RawCategory& raw);

// All morphisms admitting a two-sided inverse, in id order.
std::vector<MorId> isomorphisms(const FinCategory& c);

struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> object_map;
  std::vector<MorId> morphism_map;

  ObjId on_obj(ObjId x) const { return object_map[x]; }
  MorId on_mor(MorId f) const { return morphism_map[f]; }
};

Functor identity_functor(CatPtr c);
Functor compose(const Functor& g, const Functor& f);
// Table equality of object and morphism maps.
bool same_functor(const Functor& a, const Functor& b);
// Preservation of dom/cod, identities and all composites.
Report check_functor(const Functor& f);

struct NatTransformation {
  Functor source_functor;  // F
  Functor target_functor;  // G, same endpoints
  std::vector<MorId> component;  // per object of the source, morphism of the target
};

NatTransformation identity_transformation(const Functor& f);
Report check_nat_trans(const NatTransformation& t);

// ---------------------------------------------------------------------------
// Derived categories. Each carries decode tables back to its inputs plus the
// canonical projections/injections as Functors.

struct OppositeCategory {
  CatPtr cat;  // same ids, dom/cod swapped, compose reversed
};
OppositeCategory opposite(CatPtr c);

struct ProductCategory {
  std::vector<CatPtr> factors;
  CatPtr cat;
  std::vector<Functor> projections;

  ObjId obj_id(const std::vector<ObjId>& component) const;
  MorId mor_id(const std::vector<MorId>& component) const;
  std::vector<ObjId> obj_tuple(ObjId x) const;
  std::vector<MorId> mor_tuple(MorId f) const;
};
ProductCategory product(std::vector<CatPtr> factors);  // empty list gives the terminal category

// Tuple of functors into the factors, as a functor into the product.
Functor pairing(const ProductCategory& p, const std::vector<Functor>& legs);

struct SliceCategory {
  CatPtr base;
  ObjId over;
  CatPtr cat;              // objects are morphisms into `over`
  std::vector<MorId> obj_mor;   // slice object -> morphism of base
  std::vector<MorId> mor_mediator;  // slice morphism -> mediating morphism of base
  Functor forget;          // slice -> base, (u : x -> c) |-> x
};
SliceCategory slice(CatPtr c, ObjId over);

struct TwistedArrowCategory {
  CatPtr base;
  CatPtr cat;  // objects are the morphisms of base
  std::vector<MorId> obj_mor;                    // Tw object -> morphism of base
  std::vector<std::pair<MorId, MorId>> mor_pair; // Tw morphism -> (u, v)
  Functor dom_proj;  // (f : x -> y) |-> x, (u, v) |-> u
  int object_of(MorId base_mor) const;
  int mor_of(MorId u, MorId v) const;  // -1 if absent
};
TwistedArrowCategory twisted_arrow(CatPtr c);

// Tw on functors: morphisms map to images, squares to image pairs.
Functor twisted_functor(const Functor& f, const TwistedArrowCategory& tw_src,
                        const TwistedArrowCategory& tw_dst);

// Strict fiber product of F : A -> C and G : B -> C.
struct FiberProductCategory {
  CatPtr cat;
  std::vector<std::pair<ObjId, ObjId>> obj_pair;
  std::vector<std::pair<MorId, MorId>> mor_pair;
  Functor proj1;
  Functor proj2;
};
FiberProductCategory fiber_product(const Functor& f, const Functor& g);

// Necessary conditions for contractibility of the comma category
// Tw(C) x_C C_{/c} built over the domain projection Tw(C) -> C:
// (component count, H1 rank, H1 torsion) of its 2-truncated nerve.
struct CommaProbe {
  int component_count = 0;
  int h1_rank = 0;
  std::vector<long long> h1_torsion;
};
CommaProbe comma_probe(CatPtr c, ObjId obj);

}  // namespace factperm::fincat
