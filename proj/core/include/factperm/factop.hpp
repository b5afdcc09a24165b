#pragma once
// The colored operad of subset factorizations: colors are subsets of {1..n},
// multi-arrows are disjoint decompositions (unique when they exist), algebras
// live in a permutative relative category. Includes the forgetful functor to
// object tuples, its inverse on tensor-product algebras, the counit
// comparison, pullbacks along based maps, the materialized algebra categories
// with their weak equivalences, and the Segal witnesses.

#include <optional>
#include <span>
#include <vector>

#include "factperm/finstar.hpp"
#include "factperm/permcat.hpp"

namespace factperm::factop {

using fincat::MorId;
using fincat::ObjId;
using finstar::PointedMap;
using finstar::Subset;
using permcat::PermPtr;

struct MultiArrow {
  std::vector<Subset> sources;  // canonical: empty sets first, then by least element
  Subset target = 0;

  int arity() const { return static_cast<int>(sources.size()); }
  bool operator==(const MultiArrow&) const = default;
  auto operator<=>(const MultiArrow&) const = default;
};

bool sources_disjoint_cover(const std::vector<Subset>& sources, Subset target);
bool is_canonical(const MultiArrow& m);
// Returns the canonical arrow together with the destination position of every
// input slot: canonical.sources[pos[i]] == sources[i].
std::pair<MultiArrow, std::vector<int>> canonicalize(const std::vector<Subset>& sources);

struct FactOperad {
  int n = 0;
  int max_arity = 0;
  std::vector<MultiArrow> arrows;
  int arrow_id(const MultiArrow& m) const;  // -1 if outside the arity bound
};

FactOperad build_fact_operad(int n, int max_arity);
// Substituting arrows into arrows stays in the enumeration (within arity).
Report check_operad_closure(const FactOperad& op);

struct FactAlgebra {
  PermPtr ambient;
  int n = 0;
  std::vector<ObjId> obj;         // 2^n entries, indexed by subset mask
  std::vector<MorId> struct_map;  // one entry per operad arrow
};

bool same_algebra(const FactAlgebra& a, const FactAlgebra& b);

// Structure map at an arbitrary source tuple: canonical map precomposed with
// the canonical symmetry that reorders the tensor factors.
MorId derived_struct(const FactAlgebra& a, const FactOperad& op,
                     const std::vector<Subset>& sources);

// Unit, associativity (via substitution) and equivariance, within the arity
// bound; reported rather than thrown.
Report validate_fact_algebra(const FactAlgebra& a, const FactOperad& op);
// True iff every structure map is a weak equivalence of the ambient.
bool is_fact_object(const FactAlgebra& a, const FactOperad& op);

// Tensor-product algebra S |-> (x)_{s in S} X_s with canonical symmetries as
// structure maps.
FactAlgebra psi(PermPtr c, const FactOperad& op, std::span<const ObjId> xs);
// The forgetful tuple (A({1}), ..., A({n})).
std::vector<ObjId> phi(const FactAlgebra& a);

struct FactMorphism {
  std::vector<MorId> comp;  // 2^n entries
};
Report check_fact_morphism(const FactAlgebra& a, const FactAlgebra& b, const FactMorphism& h,
                           const FactOperad& op);

// The one-step natural weak equivalence PsiPhi(A) -> A: components are the
// structure maps at singleton decompositions.
FactMorphism counit_components(const FactAlgebra& a, const FactOperad& op);

// Pullback along f : <n> -> <m>, (f_* A)(S) = A(f^{-1} S).
FactAlgebra pull_algebra(const PointedMap& f, const FactAlgebra& a, const FactOperad& op_src,
                         const FactOperad& op_dst);
FactMorphism pull_morphism(const PointedMap& f, const FactMorphism& h);

// ---------------------------------------------------------------------------
// Materialized algebra categories on the pullback-closed tensor-algebra
// sample, with exhaustively searched morphisms and componentwise weqs.

struct FactCategory {
  PermPtr ambient;
  int n = 0;
  FactOperad operad;
  std::vector<FactAlgebra> algebras;
  std::vector<FactMorphism> mor_data;  // per category morphism
  relcat::RelPtr cat;

  int algebra_id(const FactAlgebra& a) const;
  int morphism_id(int dom, int cod, const FactMorphism& h) const;
};

struct FactFamily {
  PermPtr ambient;
  int bound = 0;
  int max_arity = 0;
  std::vector<FactCategory> level;  // 0..bound
};

// Seeds every level with the tensor-product algebras of all object tuples and
// closes under pullback along every based map within the bound.
FactFamily build_fact_family(PermPtr c, int bound, int max_arity = -1);
// Same closure/morphism machinery over caller-provided seed algebras.
FactFamily build_family_from_seeds(PermPtr c, int bound, int max_arity,
                                   std::vector<std::vector<FactAlgebra>> seeds);

// The pullback action as a relative functor between materialized levels.
relcat::RelFunctor pullback_rel_functor(const FactFamily& fam, const PointedMap& f);

// Phi/Psi between level n and the n-fold relative product of the ambient.
relcat::RelFunctor phi_functor(const FactFamily& fam, int n, const relcat::RelProduct& cn);
relcat::RelFunctor psi_functor(const FactFamily& fam, int n, const relcat::RelProduct& cn);
// Natural weak equivalence PsiPhi => id on level n.
fincat::NatTransformation counit_transformation(const FactFamily& fam, int n,
                                                const relcat::RelProduct& cn);
Report check_counit(const FactFamily& fam, int n, const relcat::RelProduct& cn);

// C^u : C^n -> C^m, tuples tensored over preimages.
relcat::RelFunctor power_functor(const FactFamily& fam, const PointedMap& u,
                                 const relcat::RelProduct& cn, const relcat::RelProduct& cm);
// The comparison square for u: components are structure maps at singleton
// decompositions of preimages; checks weq-ness and naturality.
Report lax_square_check(const FactFamily& fam, const PointedMap& u);
// The square of a composite equals the pasting of the squares.
Report lax_square_pasting(const FactFamily& fam, const PointedMap& u1, const PointedMap& u2);

struct SegalWitnessResult {
  relcat::RelProduct product;  // level-1 to the n
  relcat::RelFunctor inert_induced;
  relcat::HomotopyEquivWitness witness;
  Report report;
};
SegalWitnessResult segal_witness(const FactFamily& fam, int n);

// Opt-in exhaustive enumeration of all algebras (small n and ambients only).
std::vector<FactAlgebra> enumerate_all_algebras(PermPtr c, const FactOperad& op);

}  // namespace factperm::factop
