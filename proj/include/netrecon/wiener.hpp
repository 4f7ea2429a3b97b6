#pragma once

#include <Eigen/Dense>
#include <vector>

#include "netrecon/estimator.hpp"
#include "netrecon/model.hpp"

namespace netrecon {

// Non-causal minimum-variance predictor coefficients sampled on a frequency
// grid: W[k](j, i) is the weight of channel i when predicting channel j from
// all other channels at grid.omegas[k]. Diagonal entries are zero.
struct WienerSet {
  FrequencyGrid grid;
  std::vector<Eigen::MatrixXcd> W;

  int n() const { return W.empty() ? 0 : static_cast<int>(W.front().rows()); }
  int points() const { return static_cast<int>(W.size()); }
};

// Closed-form route: per-pair expression assembled from the nodal transfer
// functions, input spectra, and coupling weights of the model.
WienerSet analytic_wiener(const NetworkModel& model, const FrequencyGrid& grid);

// Independent route: build the full cross-spectral matrix of the network
// output and solve the per-target conditional regression at each frequency.
WienerSet brute_force_wiener(const NetworkModel& model, const FrequencyGrid& grid);

// Frequency response of an estimated tap bank on the same grid.
WienerSet bank_response(const FilterBank& bank, const FrequencyGrid& grid);

// Largest entrywise magnitude difference over all grid points and pairs.
double max_abs_diff(const WienerSet& a, const WienerSet& b);

}  // namespace netrecon
