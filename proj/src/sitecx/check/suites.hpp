#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sitecx {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;
};

/// Names of the seeded property suites, in run order.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws invalid_input for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace sitecx
