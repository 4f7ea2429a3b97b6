#include "netrecon/estimator.hpp"

#include <cmath>

#include "netrecon/errors.hpp"
#include "netrecon/grouplasso.hpp"

namespace netrecon {

std::complex<double> FilterBank::response(int j, int i, double omega) const {
  const auto& h = taps.at(j);
  std::complex<double> w(0.0, 0.0);
  for (int L = -F; L <= F; ++L)
    w += h(i, L + F) * std::exp(std::complex<double>(0.0, -omega * L));
  return w;
}

Eigen::MatrixXd NormalSystem::sub_A(int j) const {
  const int m = block();
  const int p = (n - 1) * m;
  Eigen::MatrixXd out(p, p);
  int ro = 0;
  for (int a = 0; a < n; ++a) {
    if (a == j) continue;
    int co = 0;
    for (int b = 0; b < n; ++b) {
      if (b == j) continue;
      out.block(ro, co, m, m) = A.block(a * m, b * m, m, m);
      co += m;
    }
    ro += m;
  }
  return out;
}

Eigen::VectorXd NormalSystem::sub_rhs(int j) const {
  const int m = block();
  Eigen::VectorXd out((n - 1) * m);
  int ro = 0;
  for (int a = 0; a < n; ++a) {
    if (a == j) continue;
    out.segment(ro, m) = rhs.col(j).segment(a * m, m);
    ro += m;
  }
  return out;
}

NormalSystem build_normal_system(const Panel& panel, int F) {
  const long long T = panel.samples();
  const int n = panel.n();
  if (F < 1) throw usage_error("estimator: lag half-width must be at least 1");
  if (n < 2) throw usage_error("estimator: need at least two channels");
  if (T < 4LL * F + 4) throw usage_error("estimator: panel too short for the lag window");

  const int m = 2 * F + 1;
  const int P = n * m;
  const double ncore = static_cast<double>(T - 2 * F);
  const Eigen::MatrixXd& X = panel.x;

  // Full-overlap correlations S[d](a,b) = sum_{u=0}^{T-1-d} x_a(u) x_b(u+d).
  std::vector<Eigen::MatrixXd> S(2 * F + 1);
  for (int d = 0; d <= 2 * F; ++d)
    S[d].noalias() = X.topRows(T - d).transpose() * X.bottomRows(T - d);

  NormalSystem sys;
  sys.n = n;
  sys.F = F;
  sys.A.resize(P, P);

  // A[(a,la),(b,lb)] = sum over the core window k in [F, T-1-F] of
  // x_a(k-la) x_b(k-lb); substituting u = k-la this is the full-overlap sum at
  // displacement d = la-lb minus the out-of-window head and tail terms.
  for (int a = 0; a < n; ++a)
    for (int la = -F; la <= F; ++la) {
      const int row = a * m + la + F;
      for (int b = 0; b < n; ++b)
        for (int lb = -F; lb <= F; ++lb) {
          const int col = b * m + lb + F;
          if (col < row) continue;
          const int d = la - lb;
          double v = d >= 0 ? S[d](a, b) : S[-d](b, a);
          const long long lo = F - la, hi = T - 1 - F - la;
          const long long u0 = std::max(0, -d), u1 = T - 1 - std::max(0, d);
          for (long long u = u0; u < lo; ++u) v -= X(u, a) * X(u + d, b);
          for (long long u = hi + 1; u <= u1; ++u) v -= X(u, a) * X(u + d, b);
          sys.A(row, col) = v / ncore;
          sys.A(col, row) = sys.A(row, col);
        }
    }

  // rhs for target j is the (j, lag 0) row of the same table.
  sys.rhs.resize(P, n);
  for (int j = 0; j < n; ++j) sys.rhs.col(j) = sys.A.row(j * m + F).transpose();
  return sys;
}

FilterBank fit_filter_bank(const NormalSystem& sys, double dt,
                           const EstimatorOptions& opts) {
  if (opts.gamma < 0) throw usage_error("estimator: negative group penalty");
  if (opts.ridge < 0) throw usage_error("estimator: negative ridge");
  const int n = sys.n, F = sys.F, m = 2 * F + 1;

  FilterBank bank;
  bank.F = F;
  bank.dt = dt;
  bank.taps.assign(n, Eigen::MatrixXd::Zero(n, m));

  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXd Q = sys.sub_A(j);
    const Eigen::VectorXd c = sys.sub_rhs(j);
    Q.diagonal().array() += opts.ridge * Q.trace() / Q.rows();

    Eigen::VectorXd theta;
    if (opts.gamma == 0.0) {
      theta = Q.ldlt().solve(c);
    } else {
      const std::vector<int> sizes(n - 1, m);
      GroupLassoOptions gl;
      gl.gamma = opts.gamma * critical_gamma(c, sizes);
      gl.group_sizes = sizes;
      theta = solve_group_lasso(Q, c, gl).theta;
    }

    int off = 0;
    for (int a = 0; a < n; ++a) {
      if (a == j) continue;
      bank.taps[j].row(a) = theta.segment(off, m).transpose();
      off += m;
    }
  }
  return bank;
}

FilterBank fit_filter_bank(const Panel& panel, const EstimatorOptions& opts) {
  return fit_filter_bank(build_normal_system(panel, opts.F), panel.dt, opts);
}

}  // namespace netrecon
