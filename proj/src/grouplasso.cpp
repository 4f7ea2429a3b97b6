#include "netrecon/grouplasso.hpp"

#include <cmath>
#include <numeric>

#include "netrecon/errors.hpp"

namespace netrecon {

namespace {

void check_problem(const Eigen::MatrixXd& Q, const Eigen::VectorXd& c,
                   double gamma, const std::vector<int>& sizes) {
  if (Q.rows() != Q.cols() || Q.rows() != c.size())
    throw usage_error("group lasso: dimension mismatch");
  if (gamma < 0) throw usage_error("group lasso: negative penalty");
  long long total = 0;
  for (int s : sizes) {
    if (s <= 0) throw usage_error("group lasso: non-positive group size");
    total += s;
  }
  if (total != c.size())
    throw usage_error("group lasso: group sizes do not cover the parameter vector");
}

double lipschitz_bound(const Eigen::MatrixXd& Q) {
  // Power iteration; Q is symmetric PSD so this converges to lambda_max.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(Q.rows()).normalized();
  double lam = 0;
  for (int it = 0; it < 100; ++it) {
    Eigen::VectorXd w = Q * v;
    lam = w.norm();
    if (lam == 0) break;
    v = w / lam;
  }
  return std::max(lam * 1.01, 1e-30);
}

}  // namespace

double group_lasso_stationarity(const Eigen::MatrixXd& Q,
                                const Eigen::VectorXd& c, double gamma,
                                const std::vector<int>& sizes,
                                const Eigen::VectorXd& theta) {
  check_problem(Q, c, gamma, sizes);
  const Eigen::VectorXd grad = Q * theta - c;
  double worst = 0;
  int off = 0;
  for (int s : sizes) {
    const auto g = grad.segment(off, s);
    const auto t = theta.segment(off, s);
    const double tn = t.norm();
    double res;
    if (tn > 0)
      res = (g + gamma / tn * t).norm();
    else
      res = std::max(0.0, g.norm() - gamma);
    worst = std::max(worst, res);
    off += s;
  }
  return worst;
}

double critical_gamma(const Eigen::VectorXd& c, const std::vector<int>& sizes) {
  long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
  if (total != c.size())
    throw usage_error("group lasso: group sizes do not cover the parameter vector");
  double worst = 0;
  int off = 0;
  for (int s : sizes) {
    worst = std::max(worst, c.segment(off, s).norm());
    off += s;
  }
  return worst;
}

GroupLassoResult solve_group_lasso(const Eigen::MatrixXd& Q,
                                   const Eigen::VectorXd& c,
                                   const GroupLassoOptions& opts) {
  check_problem(Q, c, opts.gamma, opts.group_sizes);
  const int p = static_cast<int>(c.size());
  const double lip = lipschitz_bound(Q);
  const double step = 1.0 / lip;
  const double scale = std::max(1.0, c.lpNorm<Eigen::Infinity>());

  auto objective = [&](const Eigen::VectorXd& th) {
    double obj = 0.5 * th.dot(Q * th) - c.dot(th);
    int off = 0;
    for (int s : opts.group_sizes) {
      obj += opts.gamma * th.segment(off, s).norm();
      off += s;
    }
    return obj;
  };

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd y = theta;
  double t_momentum = 1.0;
  double prev_obj = objective(theta);

  GroupLassoResult out;
  for (int it = 1; it <= opts.max_iters; ++it) {
    const Eigen::VectorXd z = y - step * (Q * y - c);
    Eigen::VectorXd next(p);
    int off = 0;
    for (int s : opts.group_sizes) {
      const auto zg = z.segment(off, s);
      const double zn = zg.norm();
      const double shrink = opts.gamma * step;
      if (zn <= shrink)
        next.segment(off, s).setZero();
      else
        next.segment(off, s) = (1.0 - shrink / zn) * zg;
      off += s;
    }

    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_momentum * t_momentum));
    y = next + ((t_momentum - 1.0) / t_next) * (next - theta);
    t_momentum = t_next;
    theta = next;

    const double obj = objective(theta);
    if (obj > prev_obj) {  // adaptive restart: drop the momentum
      y = theta;
      t_momentum = 1.0;
    }
    prev_obj = obj;

    out.iterations = it;
    if (it % 10 == 0 || it == opts.max_iters) {
      out.stationarity =
          group_lasso_stationarity(Q, c, opts.gamma, opts.group_sizes, theta);
      if (out.stationarity <= opts.tol * scale) {
        out.converged = true;
        break;
      }
    }
  }
  out.theta = theta;
  if (!out.converged)
    out.stationarity =
        group_lasso_stationarity(Q, c, opts.gamma, opts.group_sizes, theta);
  return out;
}

}  // namespace netrecon
