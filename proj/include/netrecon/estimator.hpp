#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "netrecon/simulate.hpp"

namespace netrecon {

// Bank of two-sided FIR predictors: for each target channel j,
//   xhat_j(k) = sum_{i != j} sum_{L=-F}^{F} taps[j](i, L+F) * x_i(k-L).
struct FilterBank {
  int F = 0;
  double dt = 1.0;
  std::vector<Eigen::MatrixXd> taps;  // taps[j] is n x (2F+1); row j is zero

  int n() const { return static_cast<int>(taps.size()); }
  int lags() const { return 2 * F + 1; }
  // Frequency response of the j<-i branch at angular frequency omega (per sample).
  std::complex<double> response(int j, int i, double omega) const;
};

// Normal equations shared by every target: with column index (a, la) -> a*(2F+1)+la+F,
//   A[(a,la),(b,lb)] = (1/Ncore) sum_{k=F}^{T-1-F} x_a(k-la) x_b(k-lb)
//   rhs(., j)        = (1/Ncore) sum_{k=F}^{T-1-F} x_j(k)    x_b(k-lb)
// where Ncore = T - 2F. Built from full-overlap correlations plus exact
// boundary corrections, so the result equals the direct O(T p^2) sums.
struct NormalSystem {
  int n = 0;
  int F = 0;
  Eigen::MatrixXd A;    // P x P with P = n*(2F+1)
  Eigen::MatrixXd rhs;  // P x n

  int block() const { return 2 * F + 1; }
  // Subsystem for target j: all source blocks except j, in channel order.
  Eigen::MatrixXd sub_A(int j) const;
  Eigen::VectorXd sub_rhs(int j) const;
};

NormalSystem build_normal_system(const Panel& panel, int F);

struct EstimatorOptions {
  int F = 20;
  // Group penalty per target, as a fraction of that target's critical penalty
  // (the smallest value that zeroes every source group). 0 = plain least squares.
  double gamma = 0.0;
  double ridge = 1e-8;  // diagonal loading, relative to mean(diag(A))
};

FilterBank fit_filter_bank(const Panel& panel, const EstimatorOptions& opts);
FilterBank fit_filter_bank(const NormalSystem& sys, double dt,
                           const EstimatorOptions& opts);

}  // namespace netrecon
