#pragma once
// The twisted-arrow indexed functor, the relative Grothendieck construction,
// the truncated permutative total category with its wedge tensor and block
// braiding, the unit-object inclusion and its connectivity certificate, the
// counit to the base category, the unit family into the algebra levels, and
// the path comparison with its section equation.

#include <map>
#include <optional>
#include <vector>

#include "factperm/factop.hpp"
#include "factperm/finstar.hpp"
#include "factperm/permcat.hpp"
#include "factperm/relcat.hpp"

namespace factperm::permconstr {

using fincat::MorId;
using fincat::ObjId;
using finstar::PointedMap;

// A functor from based maps to relative categories, materialized up to a
// bound, with strict functoriality checkable and optional Segal witnesses.
struct TruncatedSegalFunctor {
  int bound = 0;
  std::vector<relcat::RelPtr> value;                   // per n <= bound
  std::map<PointedMap, relcat::RelFunctor> action;     // per based map within bound
  bool segal_flag = false;
  std::vector<relcat::HomotopyEquivWitness> segal_witness;  // per n when flagged

  const relcat::RelFunctor& act(const PointedMap& f) const { return action.at(f); }
};

Report check_segal_functor(const TruncatedSegalFunctor& f);

// Assembles the algebra-level functor of a family, actions given by pullback.
TruncatedSegalFunctor fact_functor(const factop::FactFamily& fam, bool attach_segal,
                                   int segal_max_n);

// ---------------------------------------------------------------------------

// Fibers over the truncated twisted-arrow category of active maps: the fiber
// over (u : <n> ->> <m>) is the product of the values at the preimage sizes.
struct TwIndexedProduct {
  int bound = 0;
  finstar::TwActive tw;
  std::vector<std::vector<int>> slot_level;        // per tw object: n_i per slot
  std::vector<relcat::RelProduct> fiber;           // per tw object
  std::vector<relcat::RelFunctor> action;          // per tw morphism
};
TwIndexedProduct f_tw(const TruncatedSegalFunctor& f, int bound);
Report check_f_tw(const TwIndexedProduct& t);

// Contravariant Grothendieck construction: a morphism (c,x) -> (d,y) is an
// index morphism f : c -> d together with h : x -> transition(f)(y); it is
// cartesian iff h is invertible, and marked iff h is marked in its fiber.
struct GrothendieckTotal {
  fincat::CatPtr index;
  std::vector<relcat::RelPtr> fibers;
  std::vector<relcat::RelFunctor> transition;  // per index morphism: fiber(cod) -> fiber(dom)
  relcat::RelPtr total;
  std::vector<char> cartesian;                 // per total morphism
  fincat::Functor projection;                  // total -> index
  std::vector<std::pair<int, int>> obj_pair;   // (index object, fiber object)
  struct MorData { int index_mor; int cod_fiber_obj; int fiber_mor; };
  std::vector<MorData> mor_data;

  int total_obj(int c, int x) const;
  int total_mor(int index_mor, int cod_fiber_obj, int fiber_mor) const;
};
GrothendieckTotal grothendieck(fincat::CatPtr index, std::vector<relcat::RelPtr> fibers,
                               std::vector<relcat::RelFunctor> transitions);
// Cartesian detection and the weq marking law (fiberwise weq then cartesian).
Report check_grothendieck(const GrothendieckTotal& g);

// ---------------------------------------------------------------------------

struct PermBuild {
  int bound = 0;
  TwIndexedProduct ftw;
  GrothendieckTotal groth;
  permcat::PermPtr perm;

  // decode/encode helpers
  int obj_of(const PointedMap& active_map, const std::vector<ObjId>& fiber_tuple) const;
  std::pair<PointedMap, std::vector<ObjId>> obj_data(int total_obj) const;
};
PermBuild perm_build(const TruncatedSegalFunctor& f, int bound);

// X |-> (id_<1>, X), plus the connectivity certificate that it induces a
// bijection on components.
struct UnitInclusion {
  relcat::RelFunctor incl;
  Report pi0;
};
UnitInclusion unit_inclusion(const TruncatedSegalFunctor& f, const PermBuild& pb);

// Connectivity certificate without materializing the total category; usable
// at bounds where the full build is out of reach.
Report pi0_bijection(const TruncatedSegalFunctor& f, int bound);

// The evaluation functor Perm(Fact(C)) -> C and its checks: strict symmetric
// monoidal, and the triangle with the unit-object inclusion of level 1.
struct CounitResult {
  relcat::RelFunctor functor;
  Report strict_sm;
  Report triangle;
};
CounitResult counit_functor(const factop::FactFamily& fam, const PermBuild& pb);

// ---------------------------------------------------------------------------

struct OplaxTransformation {
  TruncatedSegalFunctor from;
  TruncatedSegalFunctor to;
  std::vector<relcat::RelFunctor> component;               // per n
  std::map<PointedMap, fincat::NatTransformation> filler;  // to(u) . comp_n <= comp_m . from(u)
};
// Fillers natural with weq components, pasting-compatible across composites.
Report check_oplax(const OplaxTransformation& a);

// The unit family eta : F<n> -> algebra level n over the built total
// category, packaged with its oplax fillers and the closure family of its
// image algebras.
struct EtaResult {
  int bound = 0;
  factop::FactFamily target_family;  // algebras over the total category
  TruncatedSegalFunctor target;      // its functor packaging
  OplaxTransformation eta;           // from F to target
  Report report;
};
EtaResult eta(const TruncatedSegalFunctor& f, const PermBuild& pb);

// Path of an oplax transformation: pointwise path categories, with the strict
// projections onto both ends.
struct PathOfOplax {
  TruncatedSegalFunctor path;
  std::vector<relcat::PathCategory> pieces;     // per n
  std::vector<relcat::RelFunctor> to_source;    // alpha components
  std::vector<relcat::RelFunctor> to_target;    // beta components
  Report report;  // functoriality and strict naturality of both projections
};
PathOfOplax path_of_oplax(const OplaxTransformation& a);

// Retraction witnesses for every alpha component, the strict naturality of
// beta, and the section equation beta . sigma = eta at level 1.
Report alpha_beta_check(const TruncatedSegalFunctor& f, const PermBuild& pb);

}  // namespace factperm::permconstr
