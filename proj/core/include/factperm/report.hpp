#pragma once
// Check reports: every law checker returns one of these instead of a bare
// bool, so failures always carry a concrete counterexample and the bound
// the check ran under.

#include <stdexcept>
#include <string>
#include <vector>

namespace factperm {

struct Report {
  std::string check;                 // stable name, e.g. "permcat/braid-hexagon"
  std::string bounds;                // "" or e.g. "max_n=3"
  bool pass = true;
  std::vector<std::string> details;  // counterexamples or notes, canonical order

  void fail(std::string what) {
    pass = false;
    details.push_back(std::move(what));
  }
  void note(std::string what) { details.push_back(std::move(what)); }
};

inline bool all_pass(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

// Thrown when input data fails structural validation. The report lists the
// offending ids (triple breaking associativity, missing identity, ...).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string what, Report report)
      : std::runtime_error(std::move(what)), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace factperm
