#pragma once
// Relative categories: a finite category with a marked wide subcategory of
// weak equivalences, relative functors, zig-zags of natural weak
// equivalences, homotopy-equivalence witnesses, and the path construction
// with its adjoint retraction.

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "factperm/fincat.hpp"

namespace factperm::relcat {

using fincat::CatPtr;
using fincat::Functor;
using fincat::MorId;
using fincat::NatTransformation;
using fincat::ObjId;

struct RelCategory {
  CatPtr base;
  std::vector<char> weq;  // mask over morphisms

  bool is_weq(MorId f) const { return weq[f] != 0; }
  std::vector<MorId> weq_ids() const;
};

using RelPtr = std::shared_ptr<const RelCategory>;

// Checks that weq contains every identity and isomorphism and is closed under
// composition. With complete=true the marking is closed up instead of
// rejected; violations otherwise throw, listing the missing morphism or the
// escaping pair.
RelCategory validate_relcat(CatPtr base, const std::vector<MorId>& weq, bool complete = false);
RelPtr make_relcat(CatPtr base, const std::vector<MorId>& weq, bool complete = false);
// Marking with exactly the isomorphisms.
RelPtr minimal_relcat(CatPtr base);
// Every morphism marked (valid only when markings compose, which they do).
RelPtr maximal_relcat(CatPtr base);

Report check_relcat(const RelCategory& c);

struct RelFunctor {
  RelPtr source;
  RelPtr target;
  Functor f;
};

RelFunctor make_rel_functor(RelPtr source, RelPtr target, std::vector<ObjId> object_map,
                            std::vector<MorId> morphism_map);
RelFunctor identity_rel_functor(RelPtr c);
RelFunctor compose(const RelFunctor& g, const RelFunctor& f);
bool same_functor(const RelFunctor& a, const RelFunctor& b);
// Functor laws plus preservation of weak equivalences.
Report check_rel_functor(const RelFunctor& f);

// Relative product: weqs are the componentwise ones.
struct RelProduct {
  fincat::ProductCategory prod;
  RelPtr cat;
  std::vector<RelPtr> factors;
  std::vector<RelFunctor> projections;

  ObjId obj_id(const std::vector<ObjId>& t) const { return prod.obj_id(t); }
  MorId mor_id(const std::vector<MorId>& t) const { return prod.mor_id(t); }
  std::vector<ObjId> obj_tuple(ObjId x) const { return prod.obj_tuple(x); }
  std::vector<MorId> mor_tuple(MorId f) const { return prod.mor_tuple(f); }
};
RelProduct rel_product(std::vector<RelPtr> factors);
RelFunctor rel_pairing(const RelProduct& p, const std::vector<RelFunctor>& legs);
// Everything to one object and its identity.
RelFunctor constant_rel_functor(RelPtr src, RelPtr dst, ObjId obj);

struct ZigZagStep {
  bool forward = true;  // forward: F_i => F_{i+1}; backward: F_{i+1} => F_i
  NatTransformation t;
};

struct ZigZag {
  RelFunctor from;
  RelFunctor to;
  std::vector<ZigZagStep> steps;
};

ZigZag empty_zigzag(const RelFunctor& f);
ZigZag one_step_zigzag(const RelFunctor& from, const RelFunctor& to, bool forward,
                       NatTransformation t);
// Adjacent endpoints must match; every component must be a weq in the target.
Report check_zigzag(const ZigZag& z);
ZigZag concat(const ZigZag& a, const ZigZag& b);
// h . zz : whisker every transformation with a relative functor on the left.
ZigZag whisker_left(const RelFunctor& h, const ZigZag& z);
// zz . k : precompose every transformation with k.
ZigZag whisker_right(const ZigZag& z, const RelFunctor& k);

struct HomotopyEquivWitness {
  RelFunctor f;   // C -> D
  RelFunctor g;   // D -> C
  ZigZag zz_gf;   // from g . f to id_C
  ZigZag zz_fg;   // from f . g to id_D
};

Report verify_homotopy_equivalence(const HomotopyEquivWitness& w);
// Pastes witnesses across composable functors (whisker, then concatenate).
HomotopyEquivWitness compose_witnesses(const HomotopyEquivWitness& w1,
                                       const HomotopyEquivWitness& w2);

// Path construction on a relative functor f : X -> Y. Objects are pairs
// (x, u : f(x) -> y) with u a weq of Y; morphisms are squares; a morphism is
// marked iff its X-component and codomain Y-component both are.
struct PathCategory {
  RelPtr cat;
  RelFunctor proj_source;  // Path(f) -> X
  RelFunctor proj_target;  // Path(f) -> Y, evaluation at the codomain
  std::vector<std::pair<ObjId, MorId>> obj_data;   // (x, u)
  std::vector<std::pair<MorId, MorId>> mor_data;   // (a, b)
  std::map<std::pair<ObjId, MorId>, int> obj_index;
  std::map<std::tuple<MorId, MorId, int, int>, int> mor_index;
  int object_of(ObjId x, MorId u) const;
  int mor_of(MorId a, MorId b, int dom, int cod) const;
};
PathCategory path_construction(const RelFunctor& f);

struct PathAdjunction {
  PathCategory path;
  RelFunctor section;  // X -> Path(f), x |-> (x, id)
  HomotopyEquivWitness witness;
  Report report;  // retraction, triangle identities, weq components
};
PathAdjunction path_adjunction_witness(const RelFunctor& f);

}  // namespace factperm::relcat
