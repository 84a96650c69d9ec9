#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace framekit {

/// Outcome of one property checked across many seeded trials. `worst` is the
/// largest observed value of the checked quantity and passes when it does
/// not exceed `limit`.
struct PropertyResult {
  std::string name;
  double worst = 0.0;
  double limit = 0.0;
  int trials = 0;
  bool passed = false;
};

/// Known suites: geometry, equivalence, naimark, admissible.
std::vector<std::string_view> suite_names();

/// Throws PreconditionError for an unknown suite name.
std::vector<PropertyResult> run_suite(std::string_view suite,
                                      std::uint64_t seed, int trials);

}  // namespace framekit
