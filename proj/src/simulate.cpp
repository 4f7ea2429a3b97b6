#include "netrecon/simulate.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "netrecon/errors.hpp"

namespace netrecon {

double GaussianStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // 53-bit mantissa uniforms; u1 shifted off zero so log stays finite
  const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1p-53;
  const double u2 = static_cast<double>(eng_() >> 11) * 0x1p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t lane) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (lane + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

StateSpace tustin_discretize(const NetworkModel& model) {
  model.validate();
  const int n = model.n();
  Eigen::MatrixXd A, B, C;
  if (!model.second_order()) {
    // dx/dt = R^{-1}((coupling - diag(self)) x + p) with R = diag(a1)
    Eigen::MatrixXd L = model.coupling;
    for (int i = 0; i < n; ++i) L(i, i) = -model.self_sum(i);
    const Eigen::VectorXd rinv = model.a1.cwiseInverse();
    A = rinv.asDiagonal() * L;
    B = rinv.asDiagonal().toDenseMatrix();
    C = Eigen::MatrixXd::Identity(n, n);
  } else {
    // states [x; dx/dt]
    Eigen::MatrixXd L = model.coupling;
    for (int i = 0; i < n; ++i) L(i, i) = -model.self_sum(i);
    const Eigen::VectorXd minv = model.a2.cwiseInverse();
    A = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    A.topRightCorner(n, n).setIdentity();
    A.bottomLeftCorner(n, n) = minv.asDiagonal() * L;
    A.bottomRightCorner(n, n) = (-minv.cwiseProduct(model.a1)).asDiagonal();
    B = Eigen::MatrixXd::Zero(2 * n, n);
    B.bottomRows(n) = minv.asDiagonal().toDenseMatrix();
    C = Eigen::MatrixXd::Zero(n, 2 * n);
    C.leftCols(n).setIdentity();
  }
  const int ns = static_cast<int>(A.rows());
  const Eigen::MatrixXd T = Eigen::MatrixXd::Identity(ns, ns) - 0.5 * model.dt * A;
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(T);
  const Eigen::MatrixXd Tinv = lu.inverse();
  StateSpace ss;
  ss.Ad = Tinv * (Eigen::MatrixXd::Identity(ns, ns) + 0.5 * model.dt * A);
  ss.Bd = model.dt * Tinv * Tinv * B;
  ss.Cd = C;
  ss.Dd = 0.5 * model.dt * C * Tinv * B;
  return ss;
}

double spectral_radius(const Eigen::MatrixXd& A) {
  return A.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXd draw_inputs(const NetworkModel& model, long long samples, std::uint64_t seed) {
  const int n = model.n();
  Eigen::MatrixXd p(samples, n);
  for (int i = 0; i < n; ++i) {
    GaussianStream g(mix_seed(seed, static_cast<std::uint64_t>(i)));
    const NoiseModel& nm = model.noise[i];
    const double sigma = std::sqrt(nm.sigma2);
    if (nm.kind == NoiseKind::white) {
      for (long long k = 0; k < samples; ++k) p(k, i) = sigma * g.next();
    } else {
      // stationary start, then the AR(1) recursion
      double prev = sigma / std::sqrt(1.0 - nm.a * nm.a) * g.next();
      p(0, i) = prev;
      for (long long k = 1; k < samples; ++k) {
        prev = nm.a * prev + sigma * g.next();
        p(k, i) = prev;
      }
    }
  }
  return p;
}

void detrend_affine(Eigen::MatrixXd& x) {
  const long long T = x.rows();
  if (T < 2) return;
  Eigen::VectorXd t(T);
  for (long long k = 0; k < T; ++k) t(k) = static_cast<double>(k) - 0.5 * static_cast<double>(T - 1);
  const double tt = t.squaredNorm();
  for (int c = 0; c < x.cols(); ++c) {
    x.col(c).array() -= x.col(c).mean();
    x.col(c) -= (t.dot(x.col(c)) / tt) * t;
  }
}

Panel simulate(const NetworkModel& model, const SimulateOptions& opts) {
  if (opts.samples <= 0) throw usage_error("simulate: samples must be positive");
  if (opts.burn_in < 0) throw usage_error("simulate: burn_in must be nonnegative");
  const StateSpace ss = tustin_discretize(model);
  const double radius = spectral_radius(ss.Ad);
  if (radius >= 1.0 - 1e-9)
    throw numerical_error("simulate: discretized system is not strictly stable (spectral radius " +
                          std::to_string(radius) + ")");
  const int n = model.n();
  const long long total = opts.burn_in + opts.samples;
  const Eigen::MatrixXd p = draw_inputs(model, total, opts.seed);

  Panel panel;
  panel.dt = model.dt;
  panel.x.resize(opts.samples, n);
  Eigen::VectorXd state = Eigen::VectorXd::Zero(ss.Ad.rows());
  Eigen::VectorXd xk(n), pk(n);
  for (long long k = 0; k < total; ++k) {
    pk = p.row(k).transpose();
    if (k >= opts.burn_in) {
      xk.noalias() = ss.Cd * state;
      xk.noalias() += ss.Dd * pk;
      panel.x.row(k - opts.burn_in) = xk.transpose();
    } else {
      // state update only; output not recorded
    }
    state = ss.Ad * state + ss.Bd * pk;
  }
  if (opts.detrend) detrend_affine(panel.x);
  return panel;
}

}  // namespace netrecon
