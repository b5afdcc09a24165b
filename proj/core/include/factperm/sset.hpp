#pragma once
// Truncated simplicial sets: nerves of finite categories, integral homology
// of the 2-truncation via Smith normal form, the category of simplices, the
// counting map from its nerve back to the simplicial set, and edge markings.

#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "factperm/report.hpp"

namespace factperm::fincat {
struct FinCategory;
struct FiberProductCategory;
}  // namespace factperm::fincat

namespace factperm::sset {

// Simplices are dense ids per dimension. Degenerate simplices are stored
// explicitly up to the bound.
struct TruncatedSSet {
  int dim = 0;
  std::vector<int> count;                              // count[k], k <= dim
  std::vector<std::vector<std::vector<int>>> face;     // face[k][i][s], 1 <= k <= dim
  std::vector<std::vector<std::vector<int>>> degen;    // degen[k][i][s], k < dim
  std::vector<std::vector<std::string>> label;         // optional, per dimension

  int simplices(int k) const { return count[k]; }
  int d(int k, int i, int s) const { return face[k][i][s]; }
  int s(int k, int i, int x) const { return degen[k][i][x]; }
  bool is_degenerate(int k, int x) const;
};

Report check_simplicial_identities(const TruncatedSSet& x);

// k-simplices are composable k-chains of morphisms (identity-degenerate ones
// included); faces compose or drop, degeneracies insert identities.
TruncatedSSet nerve_truncate(const fincat::FinCategory& c, int dim);

// Nerve plus the underlying chains, stored flat: the k-simplex `id` is the
// morphism list flat[k][id*k .. id*k+k). 1-simplex ids coincide with morphism
// ids of the category.
struct NerveData {
  TruncatedSSet x;
  std::vector<std::vector<int>> flat;

  std::span<const int> chain_at(int k, int id) const {
    return std::span<const int>(flat[k]).subspan(static_cast<size_t>(id) * k, k);
  }
};
NerveData nerve_data(const fincat::FinCategory& c, int dim);

// pi0 from edge connectivity; H1 = ker d1 / im d2 over Z on the normalized
// (degenerate-quotiented) chain complex, invariant factors via Smith normal
// form. Requires dim >= 2.
std::tuple<int, int, std::vector<long long>> homology(const TruncatedSSet& x);

// Smith normal form diagonal of an integer matrix (rows x cols, row-major).
std::vector<long long> smith_normal_form(std::vector<long long> m, int rows, int cols);

// Category of simplices: objects are pairs (k, simplex), morphisms
// (k,s) -> (l,t) are monotone maps [k] -> [l] pulling t back to s.
struct SimplexCategory {
  std::shared_ptr<const fincat::FinCategory> cat;
  std::vector<std::pair<int, int>> obj;                 // (dimension, simplex)
  std::vector<std::vector<int>> mor_map;                // monotone map per morphism
  int object_of(int k, int simplex) const;
};
SimplexCategory category_of_simplices(const TruncatedSSet& x, int dim);

// Applies the simplicial operator of a monotone map m : [k] -> [l] to an
// l-simplex, via the face/degeneracy factorization.
int apply_monotone(const TruncatedSSet& x, const std::vector<int>& m, int l, int simplex);

// The simplicial map N(simplex category) -> X on dimensions <= dim: a chain
// (k0,s0) -> ... -> (km,sm) goes to sm pulled back along the vertex-of-last
// map [m] -> [km].
int epsilon_eval(const TruncatedSSet& x, const SimplexCategory& sc, int start_obj,
                 std::span<const int> chain);

// Checks that epsilon commutes with every face and degeneracy up to `dim`.
Report check_epsilon(const TruncatedSSet& x, const SimplexCategory& sc, int dim);

struct MarkedSSet {
  TruncatedSSet underlying;
  std::vector<int> marked;  // 1-simplex ids, sorted; contains all degenerate edges
};

Report check_marked(const MarkedSSet& m);

// Marked morphisms of the simplex category for a set S of edges of X: those
// alpha with epsilon(alpha) degenerate, plus the vertex-0 inclusions of
// 1-simplices in S.
std::vector<int> marking(const TruncatedSSet& x, const SimplexCategory& sc,
                         const std::vector<int>& edge_set);

// The nerve of the simplex category with the induced marking; 1-simplex ids
// of the nerve coincide with morphism ids, so the marking transfers directly.
MarkedSSet marked_nerve(const TruncatedSSet& x, const SimplexCategory& sc,
                        const std::vector<int>& edge_set, int dim);

}  // namespace factperm::sset
