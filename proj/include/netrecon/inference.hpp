#pragma once

#include <Eigen/Dense>

#include "netrecon/estimator.hpp"
#include "netrecon/graph.hpp"
#include "netrecon/model.hpp"
#include "netrecon/wiener.hpp"

namespace netrecon {

struct InferenceParams {
  FrequencyGrid grid = FrequencyGrid::standard(50);
  double rho = 1e-3;        // magnitude threshold for keeping a direction
  double tau = 0.2 * M_PI;  // phase corridor half-width around pi
  int F = 20;               // lag half-width of the predictor bank
  double gamma = 0.0;       // relative group penalty for the fit

  void validate() const;
};

// Per ordered pair (j, i): extremes of |W_ji| and |arg W_ji| over the grid.
struct ResponseSummary {
  Eigen::MatrixXd sup;        // max |W|
  Eigen::MatrixXd min_phase;  // min |arg W|
  Eigen::MatrixXd max_phase;  // max |arg W|
};

ResponseSummary summarize(const WienerSet& ws);

// Unordered pair (i, j) is kept when either direction exceeds rho in magnitude.
EdgeSet edges_above_threshold(const ResponseSummary& s, double rho);

// Remove pairs whose every above-threshold direction stays inside the phase
// corridor [pi - tau, pi] across the whole grid — the signature of a pair
// connected only through shared children.
EdgeSet prune_antiphase_pairs(const ResponseSummary& s, const EdgeSet& kept,
                              double rho, double tau);

struct InferenceResult {
  FilterBank bank;
  ResponseSummary summary;
  EdgeSet moral;     // edges plus spurious shared-child pairs
  EdgeSet topology;  // after phase pruning
};

InferenceResult infer_from_bank(const FilterBank& bank, const InferenceParams& p);
InferenceResult infer_topology(const Panel& panel, const InferenceParams& p);

}  // namespace netrecon
