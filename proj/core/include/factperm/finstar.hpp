#pragma once
// The combinatorics of finite pointed sets <n>: inert/strongly-inert/active
// classification and unique factorization, the restriction maps rho^S, the
// wedge sum, the isomorphism with the interval category nabla, and truncated
// twisted-arrow categories of active maps.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "factperm/fincat.hpp"
#include "factperm/report.hpp"

namespace factperm::finstar {

// A based map <n> -> <m>; img[i-1] is the image of i, 0 denotes the basepoint.
struct PointedMap {
  int n = 0;
  int m = 0;
  std::vector<int> img;

  int operator()(int i) const { return i == 0 ? 0 : img[i - 1]; }
  bool operator==(const PointedMap&) const = default;
  auto operator<=>(const PointedMap&) const = default;
};

PointedMap identity_map(int n);
PointedMap compose(const PointedMap& g, const PointedMap& f);
// "n m : a1 ... an"
std::string to_text(const PointedMap& f);
PointedMap parse_pointed_map(const std::string& text);

struct Classification {
  bool inert = false;
  bool strongly_inert = false;
  bool active = false;
};
Classification classify(const PointedMap& f);
bool is_active(const PointedMap& f);

// Unique factorization f = f_act . f_inert with f_inert strongly inert and
// f_act active.
std::pair<PointedMap, PointedMap> factorize(const PointedMap& f);

// Subsets of {1..n} as bitmasks; bit i-1 is element i.
using Subset = std::uint32_t;
std::vector<int> subset_elements(Subset s);
int subset_size(Subset s);
std::string subset_name(Subset s);

// rho^S : <n> -> <|S|>, the strongly inert map collapsing the complement.
PointedMap rho(int n, Subset s);
// Restriction of f to the preimage of S, as an active map <|preimage|> -> <|S|>.
PointedMap active_restriction(const PointedMap& f, Subset s);

PointedMap fold(int n);                 // <n> -> <1>, everything to 1
PointedMap wedge(const PointedMap& f, const PointedMap& g);
PointedMap swap_blocks(int n, int m);   // <n+m> -> <m+n> interchanging the summands

std::vector<PointedMap> all_maps(int n, int m);
std::vector<PointedMap> all_active(int n, int m);
std::vector<PointedMap> all_strongly_inert(int n, int m);

// ---------------------------------------------------------------------------
// nabla: objects [[n]] = {-1 < 0 < ... < n}, maps preserve order and extrema.

struct NablaMap {
  int n = 0;  // source [[n]]
  int m = 0;  // target [[m]]
  std::vector<int> img;  // size n + 2, entries in -1..m; img[0] = -1, img[n+1] = m

  int operator()(int x) const { return img[x + 1]; }
  bool operator==(const NablaMap&) const = default;
  auto operator<=>(const NablaMap&) const = default;
};

NablaMap identity_nabla(int n);
NablaMap compose(const NablaMap& g, const NablaMap& f);
Report check_nabla(const NablaMap& f);

// Monotone map [n] -> [m] of nonempty ordinals, img size n + 1.
struct MonotoneMap {
  int n = 0;
  int m = 0;
  std::vector<int> img;
  bool operator==(const MonotoneMap&) const = default;
};
std::vector<MonotoneMap> all_monotone(int n, int m);
std::vector<NablaMap> all_nabla(int n, int m);

// The contravariant isomorphism: u : [n] -> [m] goes to [[m]] -> [[n]],
// S |-> u^{-1}(S) on downward-closed sets.
NablaMap delta_to_nabla(const MonotoneMap& u);

// Characterizations of the images of inert/active opposite-simplex maps:
// inert means every non-extremum of the target has a unique preimage; active
// means the preimages of both extrema are singletons.
bool nabla_inert(const NablaMap& f);
bool nabla_active(const NablaMap& f);
// On the delta side: inert maps are the subinterval inclusions, active maps
// preserve both endpoints.
bool is_subinterval_inclusion(const MonotoneMap& u);
bool preserves_endpoints(const MonotoneMap& u);

// ---------------------------------------------------------------------------
// The active subcategory truncated at <N>, and its twisted arrow category.

struct ActiveCategory {
  int bound = 0;
  fincat::CatPtr cat;                 // objects <0>..<N>
  std::vector<PointedMap> mor_of;     // morphism id -> map
  int mor_id(const PointedMap& f) const;
};
ActiveCategory active_category(int bound);

struct TwActive {
  int bound = 0;
  ActiveCategory active;
  fincat::TwistedArrowCategory tw;
  const std::vector<PointedMap>& object_map() const;  // Tw object -> active map
  int object_id(const PointedMap& f) const;
  // Tw morphism -> the pair (u, v) of active maps
  std::pair<PointedMap, PointedMap> mor_maps(int tw_mor) const;
  int mor_id(const PointedMap& u, const PointedMap& v, int dom, int cod) const;
};
TwActive enumerate_tw_active(int bound);

// Direct enumeration of Tw hom-sets, independent of the materialized tables.
std::vector<std::pair<PointedMap, PointedMap>> tw_hom(const PointedMap& from,
                                                      const PointedMap& to);

}  // namespace factperm::finstar
