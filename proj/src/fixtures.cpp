#include "netrecon/fixtures.hpp"

#include <cmath>

#include "netrecon/errors.hpp"

namespace netrecon {

namespace {

Fixture consensus5() {
  const int n = 5;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) c(i, i + 1) = c(i + 1, i) = 2.0;
  Fixture fx;
  fx.name = "consensus-5";
  fx.model = NetworkModel::first_order(c, Eigen::VectorXd::Constant(n, 0.1), 1.0);
  fx.params.grid = FrequencyGrid::band(2.5, 50);
  fx.params.rho = 0.08;
  fx.base_seed = 7008;
  return fx;
}

Fixture rc5zone() {
  const int n = 5;
  const double dt = 60.0;
  Eigen::VectorXd cap(n);
  cap << 1.00, 0.92, 1.06, 0.98, 1.12;
  // hub 0 exchanges with every zone; zones 1-4 form a ring; each zone leaks
  // to the ambient node. Rates are 1/(R*C) with per-pair conductances.
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j < n; ++j) {
    c(0, j) = 1.1 / (dt * cap(0));
    c(j, 0) = 1.1 / (dt * cap(j));
  }
  const int ring[4][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
  for (auto [a, b] : ring) {
    c(a, b) = 0.45 / (dt * cap(a));
    c(b, a) = 0.45 / (dt * cap(b));
  }
  Eigen::VectorXd leak(n);
  for (int i = 0; i < n; ++i) leak(i) = 0.05 / (dt * cap(i));

  Fixture fx;
  fx.name = "rc-5zone";
  fx.model = NetworkModel::first_order(c, leak, dt);
  for (auto& nm : fx.model.noise) nm = NoiseModel{NoiseKind::ar1, 0.5, 1.0};
  fx.params.grid = FrequencyGrid::band(2.5, 50);
  fx.params.rho = 0.03;
  fx.base_seed = 7101;
  return fx;
}

Fixture swingMesh10() {
  const int n = 10;
  const double dt = 0.01;
  // ring 0-1-...-9-0 plus chords (0,5) and (2,7); stiffness cycles through
  // four values along the ring, the chords are slightly weaker.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  edges.emplace_back(0, 5);
  edges.emplace_back(2, 7);

  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t t = 0; t < edges.size(); ++t) {
    const double kappa = t < 10 ? 0.040 + 0.002 * (t % 4) : 0.036;
    const auto [a, b] = edges[t];
    c(a, b) = c(b, a) = kappa / (dt * dt);
  }
  Eigen::VectorXd leak = Eigen::VectorXd::Constant(n, 0.004 / (dt * dt));
  Eigen::VectorXd mass(n), damping(n);
  for (int i = 0; i < n; ++i) {
    mass(i) = 1.0 + 0.04 * i;
    damping(i) = (0.30 + 0.01 * i) / dt;
  }

  Fixture fx;
  fx.name = "swing-mesh-10";
  fx.model = NetworkModel::second_order(c, leak, mass, damping, dt);
  for (auto& nm : fx.model.noise) nm = NoiseModel{NoiseKind::ar1, 0.5, 1.0};
  fx.params.grid = FrequencyGrid::band(0.45, 50);
  fx.params.rho = 0.05;
  fx.base_seed = 7201;
  return fx;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"consensus-5", "rc-5zone", "swing-mesh-10"};
}

Fixture make_fixture(const std::string& name,
                     const std::optional<NoiseModel>& noise_override) {
  Fixture fx;
  if (name == "consensus-5")
    fx = consensus5();
  else if (name == "rc-5zone")
    fx = rc5zone();
  else if (name == "swing-mesh-10")
    fx = swingMesh10();
  else
    throw usage_error("unknown fixture '" + name + "'");

  if (noise_override) {
    if (noise_override->kind == NoiseKind::ar1 &&
        !(std::abs(noise_override->a) < 1.0))
      throw usage_error("serial correlation coefficient must satisfy |a| < 1");
    if (!(noise_override->sigma2 > 0))
      throw usage_error("noise variance must be positive");
    for (auto& nm : fx.model.noise) nm = *noise_override;
  }

  fx.truth = fx.model.edges();
  fx.params.tau = 0.2 * M_PI;
  fx.params.F = 20;
  fx.model.validate();
  fx.params.validate();
  return fx;
}

}  // namespace netrecon
