#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qvenn {

inline constexpr std::uint64_t kDefaultPropertySeed = 20261018;

/// One randomized invariant. `worst_excess` is the largest overshoot of
/// any trial beyond its tolerance; it is <= 0 when every trial passed.
struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_excess = 0.0;
  double tolerance = 0.0;

  bool passed() const { return failures == 0; }
};

struct PropertySuiteReport {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> results;

  bool all_passed() const;
};

/// Every property draws from its own generator seeded with (seed, index),
/// so results do not depend on which other properties run.
PropertySuiteReport run_property_suite(std::uint64_t seed);

/// Runs only the properties whose names are listed.
PropertySuiteReport run_property_suite(std::uint64_t seed, const std::vector<std::string>& names);

const std::vector<std::string>& property_names();

}  // namespace qvenn
