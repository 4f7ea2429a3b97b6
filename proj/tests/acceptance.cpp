// Acceptance gate: one test case per shipping criterion, each printing a
// single PASS/FAIL verdict line with the measured quantities beside the
// bound it is held to.  Tolerances live here, in code.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "netrecon/estimator.hpp"
#include "netrecon/fixtures.hpp"
#include "netrecon/glasso.hpp"
#include "netrecon/graph.hpp"
#include "netrecon/grouplasso.hpp"
#include "netrecon/inference.hpp"
#include "netrecon/simulate.hpp"
#include "netrecon/wiener.hpp"

using namespace netrecon;

namespace {

using Clock = std::chrono::steady_clock;

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void verdict(int k, bool ok, const std::string& detail) {
  std::printf("[criterion %d] %s — %s\n", k, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const NoiseModel kWhite{NoiseKind::white, 0.0, 1.0};
const NoiseModel kSerial{NoiseKind::ar1, 0.5, 1.0};

Panel sim_fixture(const Fixture& fx, long long samples, std::uint64_t seed) {
  SimulateOptions so;
  so.samples = samples;
  so.seed = seed;
  return simulate(fx.model, so);
}

FilterBank fit20(const Panel& panel, double gamma = 0.0) {
  EstimatorOptions eo;
  eo.F = 20;
  eo.gamma = gamma;
  return fit_filter_bank(panel, eo);
}

// Adjacent pairs with no common child: the class whose predictor weight is
// pinned to zero phase at zero frequency.
EdgeSet neighbors_without_common_child(const NetworkModel& m, const EdgeSet& truth) {
  EdgeSet out;
  for (const auto& [a, b] : truth) {
    bool shared = false;
    for (int c = 0; c < m.n() && !shared; ++c)
      if (c != a && c != b && m.coupling(c, a) > 0 && m.coupling(c, b) > 0)
        shared = true;
    if (!shared) out.insert({a, b});
  }
  return out;
}

struct GridCase {
  FrequencyGrid grid;
  const char* label;
};

std::vector<GridCase> grids_for(const Fixture& fx) {
  return {{fx.params.grid, "tuned"}, {FrequencyGrid::standard(50), "standard"}};
}

}  // namespace

TEST_CASE("criterion-1-oracle-equivalence") {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::string where = "-";
  for (const auto& name : fixture_names())
    for (const auto& noise : {kWhite, kSerial}) {
      const auto fx = make_fixture(name, noise);
      for (const auto& gc : grids_for(fx)) {
        const double d = max_abs_diff(analytic_wiener(fx.model, gc.grid),
                                      brute_force_wiener(fx.model, gc.grid));
        if (d > worst) {
          worst = d;
          where = name;
        }
      }
    }
  const double t = secs(t0);
  const bool ok = worst <= 1e-9 && t < 10.0;
  verdict(1, ok,
          "closed-form vs cross-spectral route gap " + num(worst) +
              " (bound 1e-9, worst on " + where + "), 3 benchmarks x 2 noise x 2 grids; " +
              num(t) + " s (bound 10)");
  CHECK(worst <= 1e-9);
  CHECK(t < 10.0);
}

TEST_CASE("criterion-2-phase-structure") {
  const auto t0 = Clock::now();
  double worst_spouse = 0.0;   // | |arg W| - pi | over strict-spouse pairs
  double worst_neighbor = 0.0;  // |arg W| at omega = 0 over pure neighbor pairs
  int spouse_pairs = 0, neighbor_pairs = 0;
  for (const auto& name : fixture_names())
    for (const auto& noise : {kWhite, kSerial}) {
      const auto fx = make_fixture(name, noise);
      const int n = fx.model.n();
      const auto spouses = strict_spouses(n, fx.truth);
      const auto pure = neighbors_without_common_child(fx.model, fx.truth);
      for (const auto& gc : grids_for(fx)) {
        const auto ws = analytic_wiener(fx.model, gc.grid);
        for (const auto& [a, b] : spouses) {
          ++spouse_pairs;
          for (int k = 0; k < ws.points(); ++k)
            for (auto [j, i] : {std::pair(a, b), std::pair(b, a)})
              worst_spouse = std::max(
                  worst_spouse,
                  std::abs(std::abs(std::arg(ws.W[k](j, i))) - M_PI));
        }
        for (const auto& [a, b] : pure) {
          ++neighbor_pairs;
          for (auto [j, i] : {std::pair(a, b), std::pair(b, a)})
            worst_neighbor = std::max(worst_neighbor,
                                      std::abs(std::arg(ws.W[0](j, i))));
        }
      }
    }
  const double t = secs(t0);
  const bool ok = worst_spouse <= 1e-9 && worst_neighbor <= 1e-9 && t < 10.0;
  verdict(2, ok,
          "strict-spouse |phase - pi| " + num(worst_spouse) + " over " +
              std::to_string(spouse_pairs) + " pair-cases, neighbor dc phase " +
              num(worst_neighbor) + " over " + std::to_string(neighbor_pairs) +
              " pair-cases (bounds 1e-9); " + num(t) + " s (bound 10)");
  CHECK(worst_spouse <= 1e-9);
  CHECK(worst_neighbor <= 1e-9);
  CHECK(t < 10.0);
}

TEST_CASE("criterion-3-estimation-consistency") {
  const auto t0 = Clock::now();
  const auto fx = make_fixture("consensus-5");
  const auto grid = FrequencyGrid::standard(50);
  const auto bank = fit20(sim_fixture(fx, 1000000, fx.base_seed));
  const double dev =
      max_abs_diff(bank_response(bank, grid), analytic_wiener(fx.model, grid));
  const double t = secs(t0);
  const bool ok = dev <= 0.05 && t < 300.0;
  verdict(3, ok,
          "max grid deviation of the fitted bank from the closed form " +
              num(dev) + " (bound 0.05) at T=1e6, F=20; " + num(t) +
              " s (bound 300)");
  CHECK(dev <= 0.05);
  CHECK(t < 300.0);
}

namespace {

// Shared by criteria 4 and 8: strict small-threshold recovery at two sample
// sizes, plus tuned-parameter moral/pruned recovery from the same banks.
struct RecoverySuite {
  int exact = 0;      // seeds with zero error at T=1e6, rho=1e-3
  int monotone = 0;   // seeds where err(T=1e4) >= err(T=1e6)
  int tuned_good = 0; // seeds where tuned params give moral==kin, pruned==truth
  double err_sum = 0, err_min = 1e300, err_max = 0;
};

RecoverySuite run_recovery_suite(const Fixture& fx) {
  InferenceParams strict;  // defaults: standard(50) grid, tau = 0.2*pi, F = 20
  strict.rho = 1e-3;
  const auto kin = moral_graph(fx.model.n(), fx.truth);
  RecoverySuite r;
  for (int k = 0; k < 10; ++k) {
    const std::uint64_t seed = fx.base_seed + k;
    const auto bank6 = fit20(sim_fixture(fx, 1000000, seed));
    const double e6 =
        relative_error(infer_from_bank(bank6, strict).topology, fx.truth);
    const auto bank4 = fit20(sim_fixture(fx, 10000, seed));
    const double e4 =
        relative_error(infer_from_bank(bank4, strict).topology, fx.truth);
    const auto tuned = infer_from_bank(bank6, fx.params);
    r.exact += e6 == 0.0;
    r.monotone += e4 >= e6;
    r.tuned_good += tuned.moral == kin && tuned.topology == fx.truth;
    r.err_sum += e6;
    r.err_min = std::min(r.err_min, e6);
    r.err_max = std::max(r.err_max, e6);
  }
  return r;
}

std::string recovery_detail(const RecoverySuite& r) {
  return "exact recovery " + std::to_string(r.exact) +
         "/10 at rho=1e-3 (need >=9; errors " + num(r.err_min) + ".." +
         num(r.err_max) + "%, mean " + num(r.err_sum / 10) +
         "%), err(1e4)>=err(1e6) " + std::to_string(r.monotone) + "/10";
}

}  // namespace

TEST_CASE("criterion-4-exact-recovery") {
  const auto t0 = Clock::now();
  const auto fx = make_fixture("consensus-5");
  const auto r = run_recovery_suite(fx);
  const double t = secs(t0);
  const bool ok = r.exact >= 9 && r.monotone == 10 && t < 1800.0;
  verdict(4, ok, recovery_detail(r) + "; " + num(t) + " s (bound 1800)");
  CHECK_MESSAGE(r.exact >= 9,
                "zero-error seeds at T=1e6 with rho=1e-3: ", r.exact, "/10");
  CHECK_MESSAGE(r.monotone == 10, "seeds with non-increasing error: ",
                r.monotone, "/10");
  CHECK(t < 1800.0);
}

TEST_CASE("criterion-5-spurious-edge-identification") {
  const auto t0 = Clock::now();
  const auto fx = make_fixture("consensus-5");
  const auto kin = moral_graph(fx.model.n(), fx.truth);
  int good = 0, moral_ok = 0, pruned_ok = 0;
  for (int k = 0; k < 10; ++k) {
    const auto bank = fit20(sim_fixture(fx, 1000000, fx.base_seed + k));
    const auto r = infer_from_bank(bank, fx.params);
    moral_ok += r.moral == kin;
    pruned_ok += r.topology == fx.truth;
    good += r.moral == kin && r.topology == fx.truth;
  }
  const double t = secs(t0);
  const bool ok = good >= 9;
  verdict(5, ok,
          "seeds with kept pairs == truth + strict spouses AND pruned == truth: " +
              std::to_string(good) + "/10 (need >=9; kept exact " +
              std::to_string(moral_ok) + ", pruned exact " +
              std::to_string(pruned_ok) + "); " + num(t) + " s");
  CHECK(good >= 9);
}

TEST_CASE("criterion-6-static-baseline-cycle-failure") {
  const auto t0 = Clock::now();
  const auto fx = make_fixture("rc-5zone");
  int glasso_fail = 0, signed_fail = 0, dynamic_exact = 0;
  double min_gl = 1e300, min_sg = 1e300;
  for (int k = 0; k < 10; ++k) {
    const auto panel = sim_fixture(fx, 1000000, fx.base_seed + k);
    const Eigen::MatrixXd S = sample_covariance(panel);
    GlassoOptions go;
    go.rho_gl = fx.rho_gl_rel * S.trace() / panel.n();
    const auto gl = graphical_lasso(S, go);
    const double e_gl =
        relative_error(glasso_topology(gl.theta, fx.glasso_eps), fx.truth);
    const double e_sg =
        relative_error(glasso_sign_pruned(gl.theta, fx.glasso_eps), fx.truth);
    glasso_fail += e_gl > 0;
    signed_fail += e_sg > 0;
    min_gl = std::min(min_gl, e_gl);
    min_sg = std::min(min_sg, e_sg);
    const auto r = infer_from_bank(fit20(panel), fx.params);
    dynamic_exact += relative_error(r.topology, fx.truth) == 0.0;
  }
  const double t = secs(t0);
  const bool ok = glasso_fail == 10 && signed_fail == 10 && dynamic_exact >= 9;
  verdict(6, ok,
          "static precision errs > 0: plain " + std::to_string(glasso_fail) +
              "/10 (min " + num(min_gl) + "%), sign-pruned " +
              std::to_string(signed_fail) + "/10 (min " + num(min_sg) +
              "%); dynamic exact " + std::to_string(dynamic_exact) +
              "/10 (need >=9); " + num(t) + " s");
  CHECK(glasso_fail == 10);
  CHECK(signed_fail == 10);
  CHECK(dynamic_exact >= 9);
}

TEST_CASE("criterion-7-regularization-benefit") {
  const auto t0 = Clock::now();
  const auto fx = make_fixture("rc-5zone");
  // Committed tuning grid (relative to each target's critical penalty).
  const std::vector<double> gammas = {0.0,  3e-4, 1e-3, 3e-3,
                                      1e-2, 3e-2, 1e-1};
  std::vector<double> mean_err(gammas.size(), 0.0);
  for (int k = 0; k < 10; ++k) {
    const auto panel = sim_fixture(fx, 10000, fx.base_seed + k);
    const auto sys = build_normal_system(panel, 20);
    for (std::size_t g = 0; g < gammas.size(); ++g) {
      EstimatorOptions eo;
      eo.F = 20;
      eo.gamma = gammas[g];
      const auto bank = fit_filter_bank(sys, fx.model.dt, eo);
      mean_err[g] +=
          relative_error(infer_from_bank(bank, fx.params).topology, fx.truth) /
          10.0;
    }
  }
  std::size_t best = 1;
  for (std::size_t g = 2; g < gammas.size(); ++g)
    if (mean_err[g] < mean_err[best]) best = g;
  const double t = secs(t0);
  const bool ok = mean_err[best] <= mean_err[0] + 1e-9;
  const double ratio =
      mean_err[0] > 0 ? mean_err[best] / mean_err[0]
                      : std::numeric_limits<double>::quiet_NaN();
  verdict(7, ok,
          "mean error at T=1e4 over 10 seeds: no penalty " + num(mean_err[0]) +
              "%, tuned gamma=" + num(gammas[best]) + " gives " +
              num(mean_err[best]) + "% (must not exceed); ratio " + num(ratio) +
              " (reported, not gated); " + num(t) + " s");
  CHECK(mean_err[best] <= mean_err[0] + 1e-9);
}

TEST_CASE("criterion-8-serial-noise-robustness") {
  const auto t0 = Clock::now();
  const auto fx = make_fixture("consensus-5", kSerial);
  // Consistency part on the committed seed under serially correlated inputs.
  const auto grid = FrequencyGrid::standard(50);
  const auto bank0 = fit20(sim_fixture(fx, 1000000, fx.base_seed));
  const double dev =
      max_abs_diff(bank_response(bank0, grid), analytic_wiener(fx.model, grid));
  const auto r = run_recovery_suite(fx);
  const double t = secs(t0);
  const bool ok = dev <= 0.05 && r.exact >= 9 && r.monotone == 10 &&
                  r.tuned_good >= 9;
  verdict(8, ok,
          "with AR(1) a=0.5 inputs: consistency dev " + num(dev) +
              " (bound 0.05); " + recovery_detail(r) +
              "; kept==kin AND pruned==truth " + std::to_string(r.tuned_good) +
              "/10 (need >=9); " + num(t) + " s");
  CHECK(dev <= 0.05);
  CHECK_MESSAGE(r.exact >= 9,
                "zero-error seeds at T=1e6 with rho=1e-3: ", r.exact, "/10");
  CHECK_MESSAGE(r.monotone == 10, "seeds with non-increasing error: ",
                r.monotone, "/10");
  CHECK(r.tuned_good >= 9);
}

TEST_CASE("criterion-9-pruning-effectiveness") {
  const auto t0 = Clock::now();
  const auto fx = make_fixture("swing-mesh-10");
  const auto spouses = strict_spouses(fx.model.n(), fx.truth);
  int full = 0, seeds_with_fps = 0;
  double pe_sum = 0;
  for (int k = 0; k < 10; ++k) {
    const auto bank = fit20(sim_fixture(fx, 1000000, fx.base_seed + k));
    const auto r = infer_from_bank(bank, fx.params);
    int fps = 0;
    for (const auto& e : r.moral)
      fps += spouses.count(e) && !fx.truth.count(e);
    seeds_with_fps += fps > 0;
    const double pe =
        pruning_effectiveness(r.moral, r.topology, fx.truth, fx.model.n());
    pe_sum += pe;
    full += pe == 1.0;
  }
  const double t = secs(t0);
  const bool ok = full >= 9;
  verdict(9, ok,
          "seeds removing 100% of spurious spouse pairs: " +
              std::to_string(full) + "/10 (need >=9; mean effectiveness " +
              num(pe_sum / 10) + ", seeds with spouse FPs kept before pruning " +
              std::to_string(seeds_with_fps) + "/10); " + num(t) + " s");
  CHECK(full >= 9);
}

TEST_CASE("criterion-10-solver-correctness") {
  const auto t0 = Clock::now();
  double worst_inv = 0, worst_gap = 0, worst_stat = 0;
  for (const auto& name : fixture_names()) {
    const auto fx = make_fixture(name);
    const auto panel = sim_fixture(fx, 100000, fx.base_seed);

    // Unpenalized precision solver must invert the sample covariance.
    const Eigen::MatrixXd S = sample_covariance(panel);
    const auto gl = graphical_lasso(S, GlassoOptions{});
    const int p = static_cast<int>(S.rows());
    worst_inv = std::max(
        worst_inv,
        (gl.theta * S - Eigen::MatrixXd::Identity(p, p)).cwiseAbs().maxCoeff());

    // Group solver held to its own stationarity conditions on every target.
    const auto sys = build_normal_system(panel, 20);
    const std::vector<int> sizes(panel.n() - 1, sys.block());
    for (int j = 0; j < panel.n(); ++j) {
      Eigen::MatrixXd Q = sys.sub_A(j);
      Q.diagonal().array() += 1e-8 * Q.trace() / Q.rows();
      const Eigen::VectorXd c = sys.sub_rhs(j);
      // The solver's stop rule is relative to the problem scale; the bounds
      // here are absolute, so the requested tolerance is rescaled to target
      // them with an order of magnitude to spare.
      const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
      GroupLassoOptions glo;
      glo.group_sizes = sizes;
      glo.gamma = 0.05 * critical_gamma(c, sizes);
      glo.tol = 1e-7 / scale;
      glo.max_iters = 200000;
      const auto res = solve_group_lasso(Q, c, glo);
      worst_stat = std::max(
          worst_stat, group_lasso_stationarity(Q, c, glo.gamma, sizes, res.theta));
    }
  }

  // gamma = 0 must agree with the direct least-squares solve coefficient-wise.
  // That agreement is conditioning-limited for any first-order method (the
  // reachable gap scales like cond(Q)·machine-eps), so the comparison runs on
  // a short filter where the lag columns stay far from collinear.
  {
    const auto fx = make_fixture("consensus-5");
    const auto panel = sim_fixture(fx, 100000, fx.base_seed);
    const auto sys = build_normal_system(panel, 5);
    const std::vector<int> sizes(panel.n() - 1, sys.block());
    for (int j = 0; j < panel.n(); ++j) {
      Eigen::MatrixXd Q = sys.sub_A(j);
      Q.diagonal().array() += 1e-8 * Q.trace() / Q.rows();
      const Eigen::VectorXd c = sys.sub_rhs(j);
      GroupLassoOptions ls;
      ls.group_sizes = sizes;
      ls.tol = 1e-11 / std::max(1.0, c.cwiseAbs().maxCoeff());
      ls.max_iters = 200000;
      const auto free = solve_group_lasso(Q, c, ls);
      const Eigen::VectorXd direct = Q.ldlt().solve(c);
      worst_gap =
          std::max(worst_gap, (free.theta - direct).cwiseAbs().maxCoeff());
    }
  }
  const double t = secs(t0);
  const bool ok = worst_inv <= 1e-5 && worst_gap <= 1e-6 && worst_stat <= 1e-6;
  verdict(10, ok,
          "unpenalized precision inversion residual " + num(worst_inv) +
              " (bound 1e-5); free-solver vs direct gap " + num(worst_gap) +
              " (bound 1e-6); penalized stationarity " + num(worst_stat) +
              " (bound 1e-6); " + num(t) + " s");
  CHECK(worst_inv <= 1e-5);
  CHECK(worst_gap <= 1e-6);
  CHECK(worst_stat <= 1e-6);
}
