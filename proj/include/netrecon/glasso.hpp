#pragma once

#include <Eigen/Dense>

#include "netrecon/graph.hpp"
#include "netrecon/simulate.hpp"

namespace netrecon {

struct GlassoOptions {
  double rho_gl = 0.0;   // l1 penalty on off-diagonal precision entries
  int max_sweeps = 2000;
  double tol = 1e-8;     // max |W - W_old| across a full sweep
};

struct GlassoResult {
  Eigen::MatrixXd theta;  // estimated precision matrix
  Eigen::MatrixXd w;      // estimated covariance (theta^-1 up to tolerance)
  int sweeps = 0;
  bool converged = false;
};

// Blockwise coordinate descent for the l1-penalized Gaussian likelihood;
// only off-diagonal entries are penalized.
GlassoResult graphical_lasso(const Eigen::MatrixXd& S, const GlassoOptions& opts);

// Worst violation of the stationarity conditions
//   theta^-1_jj = S_jj,  theta^-1_ij = S_ij + rho*sign(theta_ij) (or within rho).
double glasso_kkt_residual(const Eigen::MatrixXd& S, const Eigen::MatrixXd& theta,
                           double rho_gl);

Eigen::MatrixXd sample_covariance(const Panel& panel);

// Edges where the precision magnitude clears eps.
EdgeSet glasso_topology(const Eigen::MatrixXd& theta, double eps);
// As above, but drop entries with theta_ij > eps: a positive precision entry
// means negative partial correlation, the signature of a shared-child pair
// under attractive couplings.
EdgeSet glasso_sign_pruned(const Eigen::MatrixXd& theta, double eps);

}  // namespace netrecon
