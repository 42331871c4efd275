#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncpfact {

/// Raised when a computation contradicts a structural fact the engine
/// relies on (e.g. a divisor pair without a meet). Distinct from usage
/// errors: seeing one means either corrupted input data or a bug.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

/// Outcome of one verification check. Failures carry witnesses instead of
/// throwing, so a suite can aggregate them.
struct CheckReport {
  std::string name;
  std::string group;
  bool pass = true;
  std::vector<std::string> counterexamples;
  std::string detail;  // short summary of what was covered

  void fail(std::string witness) {
    pass = false;
    if (counterexamples.size() < 32) counterexamples.push_back(std::move(witness));
  }
};

}  // namespace ncpfact
