#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netrecon/graph.hpp"

namespace netrecon {

enum class NoiseKind { white, ar1 };

// Per-node exogenous input: white Gaussian or AR(1)-filtered white Gaussian.
struct NoiseModel {
  NoiseKind kind = NoiseKind::white;
  double a = 0.0;       // AR(1) pole; ignored for white
  double sigma2 = 1.0;  // innovation variance
  // Power spectral density at digital frequency omega (rad/sample).
  double spectrum(double omega) const;
};

// Linearly coupled nodal dynamics
//   a2_i d2x_i/dt2 + a1_i dx_i/dt = sum_j b(i,j) (x_j - x_i) - g_i x_i + p_i
// written in generalized form S_i(s) x_i = sum_j b(i,j) x_j + p_i with
//   S_i(s) = a2_i s^2 + a1_i s + sum_j b(i,j) + g_i.
// b(i,j) >= 0 is the weight of x_j in node i's equation; g_i >= 0 couples node i
// to an unmeasured reference (ambient / slack bus / anchored agent), which keeps
// the sampled process strictly stable and wide-sense stationary.
struct NetworkModel {
  Eigen::MatrixXd coupling;  // n x n, zero diagonal, nonnegative
  Eigen::VectorXd leak;      // g_i >= 0
  Eigen::VectorXd a1;        // first-order coefficient (1 for pure integrator nodes)
  Eigen::VectorXd a2;        // second-order coefficient (0 => first-order node)
  double dt = 1.0;           // sample interval, seconds
  std::vector<NoiseModel> noise;

  int n() const { return static_cast<int>(coupling.rows()); }
  bool second_order() const { return a2.size() > 0 && a2.maxCoeff() > 0.0; }
  double self_sum(int i) const { return coupling.row(i).sum() + leak(i); }

  // Bilinear image of e^{j omega}: s = (2/dt) (1 - z^{-1})/(1 + z^{-1}).
  std::complex<double> s_of(double omega) const;
  // Characteristic function S_i at digital frequency omega.
  std::complex<double> S(int i, double omega) const;
  double input_spectrum(int i, double omega) const { return noise[i].spectrum(omega); }

  EdgeSet edges() const { return edges_from_coupling(coupling); }
  void validate() const;  // throws std::invalid_argument on malformed models

  // Convenience constructors; coupling weights are per-second rates.
  static NetworkModel first_order(const Eigen::MatrixXd& coupling,
                                  const Eigen::VectorXd& leak, double dt);
  static NetworkModel second_order(const Eigen::MatrixXd& coupling,
                                   const Eigen::VectorXd& leak,
                                   const Eigen::VectorXd& inertia,
                                   const Eigen::VectorXd& damping, double dt);
};

// Evaluation frequencies, digital radians in [0, pi], sorted and distinct.
struct FrequencyGrid {
  std::vector<double> omegas;

  int size() const { return static_cast<int>(omegas.size()); }
  void validate() const;

  // {0} plus m uniform points on (0, pi(1 - 1/m)]: stays off z = -1 where the
  // bilinear map blows up.
  static FrequencyGrid standard(int m = 50);
  // {0} plus m uniform points on (0, omega_max]: band-limited evaluation for
  // fixtures whose dynamics live well below the Nyquist frequency.
  static FrequencyGrid band(double omega_max, int m = 50);
};

}  // namespace netrecon
