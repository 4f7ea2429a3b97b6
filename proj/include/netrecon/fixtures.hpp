#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netrecon/graph.hpp"
#include "netrecon/inference.hpp"
#include "netrecon/model.hpp"

namespace netrecon {

// A canonical benchmark network: model, ground truth, tuned inference
// parameters, and baseline settings.
struct Fixture {
  std::string name;
  NetworkModel model;
  EdgeSet truth;
  InferenceParams params;
  std::uint64_t base_seed = 1;
  double rho_gl_rel = 0.05;  // baseline penalty as a fraction of tr(S)/n
  double glasso_eps = 1e-3;  // baseline edge threshold on |theta|
};

std::vector<std::string> fixture_names();

// Known names: "consensus-5" (first-order path, white inputs),
// "rc-5zone" (first-order hub plus ring, serially correlated inputs),
// "swing-mesh-10" (second-order meshed ring, serially correlated inputs).
// The optional noise model replaces every node's input description.
Fixture make_fixture(const std::string& name,
                     const std::optional<NoiseModel>& noise_override = {});

}  // namespace netrecon
