#pragma once

#include <Eigen/Dense>
#include <vector>

namespace netrecon {

// Minimize  0.5 theta' Q theta - c' theta + gamma * sum_g ||theta_g||_2
// over theta partitioned into contiguous groups of the given sizes.
struct GroupLassoOptions {
  double gamma = 0.0;
  std::vector<int> group_sizes;
  int max_iters = 20000;
  // Relative block-KKT tolerance; convergence is declared when the worst
  // per-group stationarity residual drops below tol * max(1, ||c||_inf).
  double tol = 1e-9;
};

struct GroupLassoResult {
  Eigen::VectorXd theta;
  int iterations = 0;
  double stationarity = 0.0;  // worst per-group KKT residual at exit
  bool converged = false;
};

GroupLassoResult solve_group_lasso(const Eigen::MatrixXd& Q,
                                   const Eigen::VectorXd& c,
                                   const GroupLassoOptions& opts);

// Smallest penalty for which theta = 0 is optimal: max_g ||c_g||_2.
double critical_gamma(const Eigen::VectorXd& c,
                      const std::vector<int>& group_sizes);

// Worst per-group KKT residual of theta for the given problem.
double group_lasso_stationarity(const Eigen::MatrixXd& Q,
                                const Eigen::VectorXd& c, double gamma,
                                const std::vector<int>& group_sizes,
                                const Eigen::VectorXd& theta);

}  // namespace netrecon
