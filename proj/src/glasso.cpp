#include "netrecon/glasso.hpp"

#include <cmath>
#include <vector>

#include "netrecon/errors.hpp"

namespace netrecon {

namespace {

double soft(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

void check_covariance(const Eigen::MatrixXd& S) {
  if (S.rows() != S.cols() || S.rows() < 2)
    throw usage_error("graphical lasso: need a square matrix of order >= 2");
  if ((S - S.transpose()).cwiseAbs().maxCoeff() > 1e-10 * (1 + S.cwiseAbs().maxCoeff()))
    throw usage_error("graphical lasso: matrix must be symmetric");
  for (int i = 0; i < S.rows(); ++i)
    if (!(S(i, i) > 0)) throw usage_error("graphical lasso: diagonal must be positive");
}

}  // namespace

GlassoResult graphical_lasso(const Eigen::MatrixXd& S, const GlassoOptions& opts) {
  check_covariance(S);
  if (opts.rho_gl < 0) throw usage_error("graphical lasso: negative penalty");
  const int p = static_cast<int>(S.rows());

  Eigen::MatrixXd W = S;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(p, p);  // per-column regression coefs

  GlassoResult out;
  for (int sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    const Eigen::MatrixXd W_old = W;
    for (int j = 0; j < p; ++j) {
      std::vector<int> idx;
      idx.reserve(p - 1);
      for (int i = 0; i < p; ++i)
        if (i != j) idx.push_back(i);

      Eigen::MatrixXd W11(p - 1, p - 1);
      Eigen::VectorXd s12(p - 1), beta(p - 1);
      for (int a = 0; a < p - 1; ++a) {
        s12(a) = S(idx[a], j);
        beta(a) = B(idx[a], j);
        for (int b = 0; b < p - 1; ++b) W11(a, b) = W(idx[a], idx[b]);
      }

      for (int it = 0; it < 200; ++it) {
        double delta = 0;
        for (int k = 0; k < p - 1; ++k) {
          const double r =
              s12(k) - W11.row(k).dot(beta) + W11(k, k) * beta(k);
          const double nb = soft(r, opts.rho_gl) / W11(k, k);
          delta = std::max(delta, std::abs(nb - beta(k)));
          beta(k) = nb;
        }
        if (delta < 1e-9) break;
      }

      const Eigen::VectorXd w12 = W11 * beta;
      for (int a = 0; a < p - 1; ++a) {
        B(idx[a], j) = beta(a);
        W(idx[a], j) = w12(a);
        W(j, idx[a]) = w12(a);
      }
    }
    out.sweeps = sweep;
    if ((W - W_old).cwiseAbs().maxCoeff() < opts.tol) {
      out.converged = true;
      break;
    }
  }

  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    double dot = 0;
    for (int i = 0; i < p; ++i)
      if (i != j) dot += W(i, j) * B(i, j);
    const double denom = W(j, j) - dot;
    if (!(denom > 0)) throw numerical_error("graphical lasso: lost positive definiteness");
    theta(j, j) = 1.0 / denom;
    for (int i = 0; i < p; ++i)
      if (i != j) theta(i, j) = -B(i, j) / denom;
  }
  out.theta = 0.5 * (theta + theta.transpose());
  out.w = W;
  return out;
}

double glasso_kkt_residual(const Eigen::MatrixXd& S, const Eigen::MatrixXd& theta,
                           double rho_gl) {
  check_covariance(S);
  const Eigen::MatrixXd Winv = theta.partialPivLu().inverse();
  double worst = 0;
  for (int i = 0; i < S.rows(); ++i)
    for (int j = 0; j < S.cols(); ++j) {
      const double g = Winv(i, j) - S(i, j);
      double res;
      if (i == j)
        res = std::abs(g);
      else if (theta(i, j) != 0)
        res = std::abs(g - rho_gl * (theta(i, j) > 0 ? 1.0 : -1.0));
      else
        res = std::max(0.0, std::abs(g) - rho_gl);
      worst = std::max(worst, res);
    }
  return worst;
}

Eigen::MatrixXd sample_covariance(const Panel& panel) {
  const long long T = panel.samples();
  if (T < 2) throw usage_error("covariance: panel too short");
  const Eigen::RowVectorXd mean = panel.x.colwise().mean();
  const Eigen::MatrixXd centered = panel.x.rowwise() - mean;
  return centered.transpose() * centered / static_cast<double>(T);
}

EdgeSet glasso_topology(const Eigen::MatrixXd& theta, double eps) {
  EdgeSet out;
  for (int i = 0; i < theta.rows(); ++i)
    for (int j = i + 1; j < theta.cols(); ++j)
      if (std::abs(theta(i, j)) > eps) out.insert({i, j});
  return out;
}

EdgeSet glasso_sign_pruned(const Eigen::MatrixXd& theta, double eps) {
  EdgeSet out;
  for (int i = 0; i < theta.rows(); ++i)
    for (int j = i + 1; j < theta.cols(); ++j)
      if (std::abs(theta(i, j)) > eps && !(theta(i, j) > eps)) out.insert({i, j});
  return out;
}

}  // namespace netrecon
