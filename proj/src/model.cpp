#include "netrecon/model.hpp"

#include <cmath>
#include <stdexcept>

namespace netrecon {

double NoiseModel::spectrum(double omega) const {
  if (kind == NoiseKind::white) return sigma2;
  const std::complex<double> den = 1.0 - a * std::exp(std::complex<double>(0.0, -omega));
  return sigma2 / std::norm(den);
}

std::complex<double> NetworkModel::s_of(double omega) const {
  const std::complex<double> zinv = std::exp(std::complex<double>(0.0, -omega));
  return (2.0 / dt) * (1.0 - zinv) / (1.0 + zinv);
}

std::complex<double> NetworkModel::S(int i, double omega) const {
  const std::complex<double> s = s_of(omega);
  return a2(i) * s * s + a1(i) * s + self_sum(i);
}

void NetworkModel::validate() const {
  const int nn = n();
  if (nn < 2) throw std::invalid_argument("model needs at least two nodes");
  if (coupling.cols() != nn) throw std::invalid_argument("coupling must be square");
  if (leak.size() != nn || a1.size() != nn || a2.size() != nn)
    throw std::invalid_argument("per-node parameter length mismatch");
  if (static_cast<int>(noise.size()) != nn)
    throw std::invalid_argument("need one noise model per node");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  for (int i = 0; i < nn; ++i) {
    if (coupling(i, i) != 0.0) throw std::invalid_argument("coupling diagonal must be zero");
    for (int j = 0; j < nn; ++j)
      if (coupling(i, j) < 0.0) throw std::invalid_argument("coupling weights must be nonnegative");
    if (leak(i) < 0.0) throw std::invalid_argument("leak must be nonnegative");
    if (a2(i) < 0.0 || a1(i) < 0.0) throw std::invalid_argument("dynamic coefficients must be nonnegative");
    if (a2(i) == 0.0 && a1(i) <= 0.0)
      throw std::invalid_argument("first-order node needs a positive rate coefficient");
    if (noise[i].sigma2 <= 0.0) throw std::invalid_argument("noise variance must be positive");
    if (noise[i].kind == NoiseKind::ar1 && std::abs(noise[i].a) >= 1.0)
      throw std::invalid_argument("AR(1) pole must satisfy |a| < 1");
  }
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      if ((coupling(i, j) > 0.0) != (coupling(j, i) > 0.0))
        throw std::invalid_argument("coupling support must be bidirected");
}

NetworkModel NetworkModel::first_order(const Eigen::MatrixXd& coupling,
                                       const Eigen::VectorXd& leak, double dt) {
  NetworkModel m;
  m.coupling = coupling;
  m.leak = leak;
  m.a1 = Eigen::VectorXd::Ones(coupling.rows());
  m.a2 = Eigen::VectorXd::Zero(coupling.rows());
  m.dt = dt;
  m.noise.assign(coupling.rows(), NoiseModel{});
  return m;
}

NetworkModel NetworkModel::second_order(const Eigen::MatrixXd& coupling,
                                        const Eigen::VectorXd& leak,
                                        const Eigen::VectorXd& inertia,
                                        const Eigen::VectorXd& damping, double dt) {
  NetworkModel m;
  m.coupling = coupling;
  m.leak = leak;
  m.a1 = damping;
  m.a2 = inertia;
  m.dt = dt;
  m.noise.assign(coupling.rows(), NoiseModel{});
  return m;
}

void FrequencyGrid::validate() const {
  if (omegas.empty()) throw std::invalid_argument("frequency grid is empty");
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    if (!(omegas[k] >= 0.0) || omegas[k] > M_PI)
      throw std::invalid_argument("grid frequencies must lie in [0, pi]");
    if (k > 0 && omegas[k] <= omegas[k - 1])
      throw std::invalid_argument("grid frequencies must be strictly increasing");
  }
}

FrequencyGrid FrequencyGrid::standard(int m) {
  if (m < 1) throw std::invalid_argument("grid needs at least one point");
  FrequencyGrid g;
  g.omegas.reserve(m + 1);
  g.omegas.push_back(0.0);
  const double top = M_PI * (1.0 - 1.0 / m);
  for (int k = 1; k <= m; ++k) g.omegas.push_back(top * k / m);
  return g;
}

FrequencyGrid FrequencyGrid::band(double omega_max, int m) {
  if (m < 1) throw std::invalid_argument("grid needs at least one point");
  if (!(omega_max > 0.0) || omega_max > M_PI)
    throw std::invalid_argument("omega_max must lie in (0, pi]");
  FrequencyGrid g;
  g.omegas.reserve(m + 1);
  g.omegas.push_back(0.0);
  for (int k = 1; k <= m; ++k) g.omegas.push_back(omega_max * k / m);
  return g;
}

}  // namespace netrecon
