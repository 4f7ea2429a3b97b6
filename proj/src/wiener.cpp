#include "netrecon/wiener.hpp"

#include <complex>

#include "netrecon/errors.hpp"

namespace netrecon {

namespace {

using cd = std::complex<double>;

void spectra_at(const NetworkModel& m, double omega, Eigen::VectorXcd& S,
                Eigen::VectorXd& phi) {
  const int n = m.n();
  S.resize(n);
  phi.resize(n);
  for (int i = 0; i < n; ++i) {
    S(i) = m.S(i, omega);
    phi(i) = m.input_spectrum(i, omega);
  }
}

}  // namespace

WienerSet analytic_wiener(const NetworkModel& model, const FrequencyGrid& grid) {
  model.validate();
  grid.validate();
  const int n = model.n();
  const Eigen::MatrixXd& U = model.coupling;

  WienerSet out;
  out.grid = grid;
  out.W.assign(grid.size(), Eigen::MatrixXcd::Zero(n, n));

  Eigen::VectorXcd S;
  Eigen::VectorXd phi;
  for (std::size_t k = 0; k < grid.omegas.size(); ++k) {
    spectra_at(model, grid.omegas[k], S, phi);
    for (int j = 0; j < n; ++j) {
      cd denom = std::norm(S(j)) / phi(j);
      for (int l = 0; l < n; ++l)
        if (U(j, l) > 0) denom += U(l, j) * U(l, j) / phi(l);
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        cd num(0.0, 0.0);
        if (U(i, j) > 0) num += U(i, j) * S(i) / phi(i);
        if (U(j, i) > 0) num += U(j, i) * std::conj(S(j)) / phi(j);
        for (int c = 0; c < n; ++c)
          if (c != i && c != j && U(c, j) > 0 && U(c, i) > 0)
            num -= U(c, j) * U(c, i) / phi(c);
        out.W[k](j, i) = num / denom;
      }
    }
  }
  return out;
}

WienerSet brute_force_wiener(const NetworkModel& model, const FrequencyGrid& grid) {
  model.validate();
  grid.validate();
  const int n = model.n();
  const Eigen::MatrixXd& U = model.coupling;

  WienerSet out;
  out.grid = grid;
  out.W.assign(grid.size(), Eigen::MatrixXcd::Zero(n, n));

  Eigen::VectorXcd S;
  Eigen::VectorXd phi;
  for (std::size_t k = 0; k < grid.omegas.size(); ++k) {
    spectra_at(model, grid.omegas[k], S, phi);

    // x = (I - H)^-1 e with H(i,c) = U(i,c)/S_i and e_i of spectrum phi_i/|S_i|^2
    Eigen::MatrixXcd ImH = Eigen::MatrixXcd::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c)
        if (c != i) ImH(i, c) = -U(i, c) / S(i);
    const Eigen::MatrixXcd G = ImH.partialPivLu().inverse();

    Eigen::VectorXcd e_spec(n);
    for (int i = 0; i < n; ++i) e_spec(i) = phi(i) / std::norm(S(i));
    const Eigen::MatrixXcd Phi_x = G * e_spec.asDiagonal() * G.adjoint();

    for (int j = 0; j < n; ++j) {
      // regression of channel j on the others: w = Phi_x[j, -j] * Phi_x[-j, -j]^-1
      Eigen::MatrixXcd M(n - 1, n - 1);
      Eigen::VectorXcd r(n - 1);
      int a = 0;
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        r(a) = std::conj(Phi_x(j, i));
        int b = 0;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          M(a, b) = Phi_x(i, c);
          ++b;
        }
        ++a;
      }
      const Eigen::VectorXcd w = M.partialPivLu().solve(r);
      a = 0;
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        out.W[k](j, i) = std::conj(w(a));
        ++a;
      }
    }
  }
  return out;
}

WienerSet bank_response(const FilterBank& bank, const FrequencyGrid& grid) {
  grid.validate();
  const int n = bank.n();
  WienerSet out;
  out.grid = grid;
  out.W.assign(grid.size(), Eigen::MatrixXcd::Zero(n, n));
  for (std::size_t k = 0; k < grid.omegas.size(); ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (i != j) out.W[k](j, i) = bank.response(j, i, grid.omegas[k]);
  return out;
}

double max_abs_diff(const WienerSet& a, const WienerSet& b) {
  if (a.points() != b.points() || a.n() != b.n())
    throw usage_error("predictor sets are not comparable");
  double worst = 0;
  for (int k = 0; k < a.points(); ++k)
    worst = std::max(worst, (a.W[k] - b.W[k]).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace netrecon
