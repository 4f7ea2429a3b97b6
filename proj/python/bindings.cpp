#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netrecon/errors.hpp"
#include "netrecon/fixtures.hpp"
#include "netrecon/glasso.hpp"
#include "netrecon/graph.hpp"
#include "netrecon/inference.hpp"
#include "netrecon/simulate.hpp"
#include "netrecon/sweep.hpp"
#include "netrecon/wiener.hpp"

namespace py = pybind11;
using namespace netrecon;

namespace {

std::optional<NoiseModel> noise_from(const std::string& spec) {
  if (spec.empty()) return {};
  if (spec == "white") return NoiseModel{NoiseKind::white, 0.0, 1.0};
  if (spec.rfind("ar1", 0) == 0) {
    double a = 0.5;
    if (spec.size() > 3) {
      if (spec[3] != ':')
        throw usage_error("noise: expected 'white' or 'ar1[:a]'");
      a = std::stod(spec.substr(4));
    }
    return NoiseModel{NoiseKind::ar1, a, 1.0};
  }
  throw usage_error("noise: expected 'white' or 'ar1[:a]', got '" + spec + "'");
}

std::vector<Edge> as_list(const EdgeSet& edges) {
  return {edges.begin(), edges.end()};
}

EdgeSet as_set(const std::vector<Edge>& edges) {
  EdgeSet out;
  for (const auto& [a, b] : edges) out.insert(make_edge(a, b));
  return out;
}

FrequencyGrid grid_from(const InferenceParams& base, int points, double top) {
  if (points <= 0 && top <= 0) return base.grid;
  const int m = points > 0 ? points : 50;
  return top > 0 ? FrequencyGrid::band(top, m) : FrequencyGrid::standard(m);
}

Panel simulate_named(const std::string& fixture, long long samples,
                     std::uint64_t seed, const std::string& noise,
                     long long burn_in) {
  const auto fx = make_fixture(fixture, noise_from(noise));
  SimulateOptions so;
  so.samples = samples;
  so.burn_in = burn_in;
  so.seed = seed ? seed : fx.base_seed;
  return simulate(fx.model, so);
}

py::dict result_dict(const InferenceResult& r) {
  py::dict d;
  d["moral"] = as_list(r.moral);
  d["topology"] = as_list(r.topology);
  d["sup"] = r.summary.sup;
  d["min_phase"] = r.summary.min_phase;
  std::vector<Eigen::MatrixXd> taps(r.bank.taps.begin(), r.bank.taps.end());
  d["taps"] = taps;
  d["F"] = r.bank.F;
  return d;
}

}  // namespace

PYBIND11_MODULE(_netrecon, m) {
  m.doc() =
      "Interaction-topology recovery for sparsely coupled dynamical networks";

  py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
  py::register_exception<data_error>(m, "DataError", PyExc_ValueError);
  py::register_exception<numerical_error>(m, "NumericalError",
                                          PyExc_ArithmeticError);

  m.def("fixture_names", &fixture_names,
        "Names of the built-in benchmark networks.");

  m.def(
      "fixture_truth",
      [](const std::string& fixture) {
        return as_list(make_fixture(fixture).truth);
      },
      py::arg("fixture"), "True undirected edge list of a benchmark.");

  m.def(
      "simulate",
      [](const std::string& fixture, long long samples, std::uint64_t seed,
         const std::string& noise, long long burn_in) {
        const Panel p = simulate_named(fixture, samples, seed, noise, burn_in);
        return py::make_tuple(p.x, p.dt);
      },
      py::arg("fixture"), py::arg("samples"), py::arg("seed") = 0,
      py::arg("noise") = "", py::arg("burn_in") = 10000,
      "Sample a benchmark network; returns (X, dt) with rows as time steps.");

  m.def(
      "infer",
      [](const Eigen::MatrixXd& x, double dt, double rho, double tau, int F,
         double gamma, int grid_points, double grid_max) {
        Panel p;
        p.dt = dt;
        p.x = x;
        InferenceParams ip;
        ip.grid = grid_from(ip, grid_points, grid_max);
        ip.rho = rho;
        ip.tau = tau;
        ip.F = F;
        ip.gamma = gamma;
        return result_dict(infer_topology(p, ip));
      },
      py::arg("x"), py::arg("dt") = 1.0, py::arg("rho") = 1e-3,
      py::arg("tau") = 0.2 * M_PI, py::arg("F") = 20, py::arg("gamma") = 0.0,
      py::arg("grid_points") = 0, py::arg("grid_max") = 0.0,
      "Recover the interaction topology from a (T x n) panel.");

  m.def(
      "infer_fixture",
      [](const std::string& fixture, long long samples, std::uint64_t seed,
         const std::string& noise) {
        const auto fx = make_fixture(fixture, noise_from(noise));
        SimulateOptions so;
        so.samples = samples;
        so.seed = seed ? seed : fx.base_seed;
        return result_dict(infer_topology(simulate(fx.model, so), fx.params));
      },
      py::arg("fixture"), py::arg("samples"), py::arg("seed") = 0,
      py::arg("noise") = "",
      "Simulate a benchmark and run recovery with its tuned settings.");

  m.def(
      "oracle",
      [](const std::string& fixture, const std::string& route,
         const std::string& noise, int grid_points, double grid_max) {
        const auto fx = make_fixture(fixture, noise_from(noise));
        const auto grid = grid_from(fx.params, grid_points, grid_max);
        const auto ws = route == "brute" ? brute_force_wiener(fx.model, grid)
                                         : analytic_wiener(fx.model, grid);
        std::vector<Eigen::MatrixXcd> w(ws.W.begin(), ws.W.end());
        return py::make_tuple(grid.omegas, w);
      },
      py::arg("fixture"), py::arg("route") = "analytic", py::arg("noise") = "",
      py::arg("grid_points") = 0, py::arg("grid_max") = 0.0,
      "Closed-form predictor weights on a frequency grid: (omegas, [W_k]).");

  m.def(
      "oracle_gap",
      [](const std::string& fixture, const std::string& noise) {
        const auto fx = make_fixture(fixture, noise_from(noise));
        return max_abs_diff(analytic_wiener(fx.model, fx.params.grid),
                            brute_force_wiener(fx.model, fx.params.grid));
      },
      py::arg("fixture"), py::arg("noise") = "",
      "Largest disagreement between the two oracle routes.");

  m.def(
      "baseline_edges",
      [](const Eigen::MatrixXd& x, double rho_gl_rel, double eps) {
        Panel p;
        p.x = x;
        const Eigen::MatrixXd S = sample_covariance(p);
        GlassoOptions go;
        go.rho_gl = rho_gl_rel * S.trace() / p.n();
        const auto gl = graphical_lasso(S, go);
        return py::make_tuple(as_list(glasso_topology(gl.theta, eps)),
                              as_list(glasso_sign_pruned(gl.theta, eps)));
      },
      py::arg("x"), py::arg("rho_gl_rel") = 0.05, py::arg("eps") = 1e-3,
      "Static precision-matrix edges: (thresholded, sign-pruned).");

  m.def(
      "sweep",
      [](const std::string& fixture, const std::vector<long long>& sizes,
         std::uint64_t seed) {
        const auto fx = make_fixture(fixture);
        SweepOptions so;
        so.sample_sizes = sizes;
        so.seed = seed;
        std::vector<py::tuple> rows;
        for (const auto& r : run_sweep(fx, so))
          rows.push_back(py::make_tuple(r.method, r.samples, r.relative_error,
                                        r.pruning_effectiveness));
        return rows;
      },
      py::arg("fixture"), py::arg("sizes"), py::arg("seed") = 0,
      "Recovery error versus sample count for every method.");

  m.def(
      "relative_error",
      [](const std::vector<Edge>& est, const std::vector<Edge>& truth) {
        return relative_error(as_set(est), as_set(truth));
      },
      py::arg("estimated"), py::arg("truth"),
      "100 * (false positives + false negatives) / number of true edges.");
}
