#pragma once
// The standard check suite over a permutative relative fixture: law
// validation, the tensor-algebra comparisons, the truncated total category
// with its unit/counit checks, connectivity certificates, comma probes, and
// the nerve checks. Deterministic report order; byte-stable JSON.

#include <set>
#include <string>
#include <vector>

#include "factperm/permcat.hpp"
#include "factperm/report.hpp"

namespace factperm::suite {

struct RunConfig {
  int max_n = 3;      // algebra level bound
  int perm_n = 2;     // total-category truncation (tensor stays within it)
  int pi0_n = 3;      // connectivity certificate bound
  int sset_dim = 3;   // nerve/simplex-category dimension bound
  std::set<std::string> select;  // empty = everything

  bool selected(const std::string& group) const {
    return select.empty() || select.count(group) > 0;
  }
  std::string note() const;
};

// Global checks that do not depend on a fixture (based-map factorization,
// the interval-category isomorphism).
std::vector<Report> run_global_checks(const RunConfig& cfg);

// The per-fixture suite.
std::vector<Report> run_suite(const permcat::PermPtr& fixture, const RunConfig& cfg);

}  // namespace factperm::suite
