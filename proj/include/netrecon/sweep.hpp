#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netrecon/fixtures.hpp"

namespace netrecon {

struct SweepRow {
  std::string method;  // "dynamic", "glasso", "glasso-sign"
  long long samples = 0;
  double relative_error = 0.0;
  double pruning_effectiveness = 0.0;
};

struct SweepOptions {
  std::vector<long long> sample_sizes;
  std::uint64_t seed = 0;  // 0 -> the fixture's base seed
};

// For each sample count: simulate one panel, run the dynamic pipeline and both
// baseline variants on that same panel, and report error and pruning scores.
std::vector<SweepRow> run_sweep(const Fixture& fx, const SweepOptions& opts);

}  // namespace netrecon
