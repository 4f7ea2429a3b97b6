#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "netrecon/model.hpp"

namespace netrecon {

// Standard-normal stream: Box-Muller over mt19937_64 high bits. Used instead of
// std::normal_distribution so committed seeds reproduce bit-identically across
// standard library implementations.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}
  double next();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// splitmix64 mix of (base, lane): independent per-channel substreams.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t lane);

struct SimulateOptions {
  long long samples = 0;
  long long burn_in = 10000;
  std::uint64_t seed = 1;
  bool detrend = true;  // remove per-channel affine trend from the recorded block
};

// Recorded nodal time series; rows are samples, columns are nodes.
struct Panel {
  double dt = 1.0;
  Eigen::MatrixXd x;
  long long samples() const { return x.rows(); }
  int n() const { return static_cast<int>(x.cols()); }
};

// Tustin (bilinear) discretization of the network's state-space form. With
// T := I - (dt/2)A the quadruple is
//   Ad = T^{-1}(I + (dt/2)A),  Bd = dt T^{-2} B,  Cd = C,  Dd = (dt/2) C T^{-1} B,
// which matches the continuous transfer function exactly under s -> (2/dt)(1-z^{-1})/(1+z^{-1}):
// the sampled panel satisfies the same nodal relation S_i(z) X_i = sum_j b_ij X_j + P_i
// that the analytic Wiener oracle evaluates.
struct StateSpace {
  Eigen::MatrixXd Ad, Bd, Cd, Dd;
};

StateSpace tustin_discretize(const NetworkModel& model);

double spectral_radius(const Eigen::MatrixXd& A);

// Per-channel exogenous inputs (white or stationary-initialized AR(1)),
// rows = samples. Deterministic in (seed, channel index).
Eigen::MatrixXd draw_inputs(const NetworkModel& model, long long samples, std::uint64_t seed);

// Remove mean and linear trend from each column.
void detrend_affine(Eigen::MatrixXd& x);

// Zero initial state, burn_in discarded samples, then `samples` recorded.
// Throws numerical_error if the discretized system is not strictly stable.
Panel simulate(const NetworkModel& model, const SimulateOptions& opts);

}  // namespace netrecon
