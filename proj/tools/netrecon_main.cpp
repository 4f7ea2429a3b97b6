#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "netrecon/errors.hpp"
#include "netrecon/fixtures.hpp"
#include "netrecon/glasso.hpp"
#include "netrecon/inference.hpp"
#include "netrecon/io.hpp"
#include "netrecon/simulate.hpp"
#include "netrecon/sweep.hpp"
#include "netrecon/wiener.hpp"

namespace {

using namespace netrecon;

std::optional<NoiseModel> parse_noise(const std::string& spec) {
  if (spec.empty()) return {};
  if (spec == "white") return NoiseModel{NoiseKind::white, 0.0, 1.0};
  if (spec.rfind("ar1", 0) == 0) {
    double a = 0.5;
    if (spec.size() > 3) {
      if (spec[3] != ':') throw usage_error("noise: expected 'white' or 'ar1[:a]'");
      char* end = nullptr;
      a = std::strtod(spec.c_str() + 4, &end);
      if (end == spec.c_str() + 4 || *end != '\0')
        throw usage_error("noise: malformed coefficient in '" + spec + "'");
    }
    return NoiseModel{NoiseKind::ar1, a, 1.0};
  }
  throw usage_error("noise: expected 'white' or 'ar1[:a]', got '" + spec + "'");
}

std::string join(const std::filesystem::path& dir, const std::string& name) {
  return (dir / name).string();
}

std::filesystem::path prepare_dir(const std::string& dir) {
  std::filesystem::path p(dir.empty() ? "." : dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw data_error("cannot create output directory '" + p.string() + "'");
  return p;
}

std::vector<long long> parse_sample_list(const std::string& text) {
  std::vector<long long> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) continue;
      char* end = nullptr;
      const double v = std::strtod(cur.c_str(), &end);
      if (end == cur.c_str() || *end != '\0' || v < 1)
        throw usage_error("samples-list: bad entry '" + cur + "'");
      out.push_back(static_cast<long long>(v));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (out.empty()) throw usage_error("samples-list: no entries");
  return out;
}

std::string noise_string(const NoiseModel& nm) {
  if (nm.kind == NoiseKind::white) return "white";
  return "ar1:" + format_double(nm.a);
}

struct CommonArgs {
  std::string fixture;
  std::string noise;
  std::string config_path;
  std::string output_dir = ".";
  long long samples = 0;
  std::uint64_t seed = 0;
  long long burn_in = 10000;
  bool quiet = false;
};

// Values present in the config file fill in flags the user did not pass.
void merge_config(const Config& cfg, CLI::App* cmd, CommonArgs& c) {
  auto absent = [&](const std::string& flag) {
    const auto* opt = cmd->get_option_no_throw("--" + flag);
    return opt == nullptr || opt->count() == 0;
  };
  if (absent("fixture")) c.fixture = cfg.get("fixture", c.fixture);
  if (absent("noise")) c.noise = cfg.get("noise", c.noise);
  if (absent("samples")) c.samples = cfg.get_int("samples", c.samples);
  if (absent("seed"))
    c.seed = static_cast<std::uint64_t>(cfg.get_int("seed", static_cast<long long>(c.seed)));
  if (absent("burn-in")) c.burn_in = cfg.get_int("burn-in", c.burn_in);
  if (absent("output-dir")) c.output_dir = cfg.get("output-dir", c.output_dir);
}

Panel make_panel(const Fixture& fx, const CommonArgs& c) {
  if (c.samples <= 0)
    throw usage_error("need --samples when simulating from a fixture");
  SimulateOptions so;
  so.samples = c.samples;
  so.burn_in = c.burn_in;
  so.seed = c.seed ? c.seed : fx.base_seed;
  return simulate(fx.model, so);
}

int run(int argc, char** argv) {
  CLI::App app{
      "Interaction-topology recovery for sparsely coupled dynamical networks.\n"
      "Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical error."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  CommonArgs c;
  app.add_flag("--quiet", c.quiet, "Suppress progress output");

  // ---- simulate ----
  auto* sim = app.add_subcommand("simulate", "Sample a benchmark network to CSV");
  sim->add_option("--fixture", c.fixture, "Benchmark name")->required(false);
  sim->add_option("--samples", c.samples, "Recorded samples after burn-in");
  sim->add_option("--seed", c.seed, "Base random seed (0 = fixture default)");
  sim->add_option("--burn-in", c.burn_in, "Discarded warm-up samples");
  sim->add_option("--noise", c.noise, "Input model override: white | ar1[:a]");
  sim->add_option("--output-dir", c.output_dir, "Directory for outputs");
  sim->add_option("--config", c.config_path, "key=value defaults file");

  // ---- infer ----
  auto* inf = app.add_subcommand("infer", "Recover the interaction topology");
  std::string input_csv;
  double rho = -1, tau = -1, gamma = -1, grid_max = -1;
  int lag_F = -1, grid_points = -1;
  inf->add_option("--input", input_csv, "Panel CSV (t,x1,...,xn)");
  inf->add_option("--fixture", c.fixture, "Simulate this benchmark instead");
  inf->add_option("--samples", c.samples, "Samples when simulating");
  inf->add_option("--seed", c.seed, "Base random seed (0 = fixture default)");
  inf->add_option("--burn-in", c.burn_in, "Discarded warm-up samples");
  inf->add_option("--noise", c.noise, "Input model override: white | ar1[:a]");
  inf->add_option("--rho", rho, "Magnitude threshold for keeping a direction");
  inf->add_option("--tau", tau, "Phase corridor half-width around pi");
  inf->add_option("--lag-F", lag_F, "Lag half-width of the predictor bank");
  inf->add_option("--gamma", gamma, "Relative group penalty for the fit");
  inf->add_option("--grid-points", grid_points, "Frequency grid point count");
  inf->add_option("--grid-max", grid_max, "Top frequency of a banded grid");
  inf->add_option("--output-dir", c.output_dir, "Directory for outputs");
  inf->add_option("--config", c.config_path, "key=value defaults file");

  // ---- oracle ----
  auto* ora = app.add_subcommand("oracle",
                                 "Closed-form predictor weights of a benchmark");
  std::string route = "both";
  ora->add_option("--fixture", c.fixture, "Benchmark name");
  ora->add_option("--noise", c.noise, "Input model override: white | ar1[:a]");
  ora->add_option("--route", route, "analytic | brute | both")
      ->check(CLI::IsMember({"analytic", "brute", "both"}));
  ora->add_option("--grid-points", grid_points, "Frequency grid point count");
  ora->add_option("--grid-max", grid_max, "Top frequency of a banded grid");
  ora->add_option("--output-dir", c.output_dir, "Directory for outputs");
  ora->add_option("--config", c.config_path, "key=value defaults file");

  // ---- baseline ----
  auto* base = app.add_subcommand("baseline",
                                  "Static precision-matrix edge recovery");
  double rho_gl_rel = -1, eps = -1;
  std::string method = "all";
  base->add_option("--method", method, "glasso | glasso-sign | all")
      ->check(CLI::IsMember({"glasso", "glasso-sign", "all"}));
  base->add_option("--input", input_csv, "Panel CSV (t,x1,...,xn)");
  base->add_option("--fixture", c.fixture, "Simulate this benchmark instead");
  base->add_option("--samples", c.samples, "Samples when simulating");
  base->add_option("--seed", c.seed, "Base random seed (0 = fixture default)");
  base->add_option("--burn-in", c.burn_in, "Discarded warm-up samples");
  base->add_option("--noise", c.noise, "Input model override: white | ar1[:a]");
  base->add_option("--rho-gl-rel", rho_gl_rel,
                   "Penalty as a fraction of tr(S)/n");
  base->add_option("--eps", eps, "Edge threshold on |theta|");
  base->add_option("--output-dir", c.output_dir, "Directory for outputs");
  base->add_option("--config", c.config_path, "key=value defaults file");

  // ---- sweep ----
  auto* swp = app.add_subcommand("sweep",
                                 "Error versus sample count for all methods");
  std::string samples_list = "10000,30000,100000,300000,1000000";
  swp->add_option("--fixture", c.fixture, "Benchmark name");
  swp->add_option("--samples-list", samples_list, "Comma-separated counts");
  swp->add_option("--seed", c.seed, "Base random seed (0 = fixture default)");
  swp->add_option("--noise", c.noise, "Input model override: white | ar1[:a]");
  swp->add_option("--method", method, "all | dynamic | glasso | glasso-sign")
      ->check(CLI::IsMember({"all", "dynamic", "glasso", "glasso-sign"}));
  swp->add_option("--output-dir", c.output_dir, "Directory for outputs");
  swp->add_option("--config", c.config_path, "key=value defaults file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App* active = app.get_subcommands().front();
  const std::vector<std::string> config_keys = {
      "fixture",    "noise",      "samples",      "seed",  "burn-in",
      "rho",        "tau",        "lag-F",        "gamma", "grid-points",
      "grid-max",   "output-dir", "rho-gl-rel",   "eps",   "samples-list",
      "route",      "method",     "input"};
  Config cfg;
  if (!c.config_path.empty()) cfg = Config::parse_file(c.config_path, config_keys);
  merge_config(cfg, active, c);
  auto flag_absent = [&](const char* flag) {
    const auto* opt = active->get_option_no_throw(std::string("--") + flag);
    return opt == nullptr || opt->count() == 0;
  };
  auto cfg_num = [&](const char* flag, double& slot) {
    if (flag_absent(flag) && cfg.has(flag)) slot = cfg.get_double(flag, slot);
  };
  cfg_num("rho", rho);
  cfg_num("tau", tau);
  cfg_num("gamma", gamma);
  cfg_num("grid-max", grid_max);
  cfg_num("rho-gl-rel", rho_gl_rel);
  cfg_num("eps", eps);
  if (flag_absent("lag-F")) lag_F = static_cast<int>(cfg.get_int("lag-F", lag_F));
  if (flag_absent("grid-points"))
    grid_points = static_cast<int>(cfg.get_int("grid-points", grid_points));
  if (flag_absent("samples-list"))
    samples_list = cfg.get("samples-list", samples_list);
  if (flag_absent("route")) route = cfg.get("route", route);
  if (flag_absent("method")) method = cfg.get("method", method);
  if (flag_absent("input")) input_csv = cfg.get("input", input_csv);
  if (base->parsed() && method != "glasso" && method != "glasso-sign" &&
      method != "all")
    throw usage_error("baseline: method must be glasso, glasso-sign, or all");
  if (swp->parsed() && method != "all" && method != "dynamic" &&
      method != "glasso" && method != "glasso-sign")
    throw usage_error("sweep: method must be all, dynamic, glasso, or glasso-sign");
  if (ora->parsed() && route != "analytic" && route != "brute" && route != "both")
    throw usage_error("oracle: route must be analytic, brute, or both");

  const auto noise = parse_noise(c.noise);
  const auto dir = prepare_dir(c.output_dir);
  auto say = [&](const std::string& msg) {
    if (!c.quiet) std::cout << msg << "\n";
  };

  // Resolved settings are echoed beside the outputs; running the same
  // subcommand again with only --config <sidecar> reproduces the run.
  std::string sidecar;
  auto put = [&](const std::string& key, const std::string& value) {
    sidecar += key + "=" + value + "\n";
  };
  auto put_num = [&](const std::string& key, double value) {
    put(key, format_double(value));
  };
  auto put_grid = [&](const FrequencyGrid& g) {
    const int m = static_cast<int>(g.omegas.size()) - 1;
    put("grid-points", std::to_string(m));
    const double top = g.omegas.back();
    if (std::abs(top - M_PI * (1.0 - 1.0 / m)) > 1e-12) put_num("grid-max", top);
  };
  auto put_source = [&](const Fixture& fx) {
    put("fixture", fx.name);
    put("noise", noise_string(fx.model.noise.front()));
    put("samples", std::to_string(c.samples));
    put("seed", std::to_string(c.seed ? c.seed : fx.base_seed));
    put("burn-in", std::to_string(c.burn_in));
  };
  auto finish_sidecar = [&] {
    put("output-dir", c.output_dir);
    write_text_atomic(join(dir, "effective-config.cfg"), sidecar);
  };

  if (sim->parsed()) {
    if (c.fixture.empty()) throw usage_error("simulate: --fixture is required");
    auto fx = make_fixture(c.fixture, noise);
    const Panel panel = make_panel(fx, c);
    put_source(fx);
    finish_sidecar();
    write_panel_csv(join(dir, "panel.csv"), panel);
    write_edges(join(dir, "truth-edges.txt"), fx.truth);
    say("wrote " + join(dir, "panel.csv") + " (" +
        std::to_string(panel.samples()) + " samples, " +
        std::to_string(panel.n()) + " channels)");
    return 0;
  }

  if (inf->parsed()) {
    InferenceParams params;  // generic defaults
    Panel panel;
    std::optional<Fixture> fx;
    if (!input_csv.empty()) {
      panel = read_panel_csv(input_csv);
    } else if (!c.fixture.empty()) {
      fx = make_fixture(c.fixture, noise);
      params = fx->params;
      panel = make_panel(*fx, c);
    } else {
      throw usage_error("infer: need --input or --fixture");
    }
    if (grid_points > 0 || grid_max > 0) {
      const int m = grid_points > 0 ? grid_points : 50;
      params.grid = grid_max > 0 ? FrequencyGrid::band(grid_max, m)
                                 : FrequencyGrid::standard(m);
    }
    if (rho >= 0) params.rho = rho;
    if (tau >= 0) params.tau = tau;
    if (lag_F > 0) params.F = lag_F;
    if (gamma >= 0) params.gamma = gamma;
    if (fx)
      put_source(*fx);
    else
      put("input", input_csv);
    put_num("rho", params.rho);
    put_num("tau", params.tau);
    put("lag-F", std::to_string(params.F));
    put_num("gamma", params.gamma);
    put_grid(params.grid);
    finish_sidecar();

    const auto result = infer_topology(panel, params);
    write_report(join(dir, "report.txt"), params, result);
    write_edges(join(dir, "moral-edges.txt"), result.moral);
    write_edges(join(dir, "topology-edges.txt"), result.topology);
    write_filter_bank(join(dir, "filter-bank.txt"), result.bank);
    say("kept " + std::to_string(result.moral.size()) + " pair(s); " +
        std::to_string(result.topology.size()) + " edge(s) after pruning");
    say("wrote report.txt, moral-edges.txt, topology-edges.txt, filter-bank.txt in " +
        dir.string());
    return 0;
  }

  if (ora->parsed()) {
    if (c.fixture.empty()) throw usage_error("oracle: --fixture is required");
    auto fx = make_fixture(c.fixture, noise);
    FrequencyGrid grid = fx.params.grid;
    if (grid_points > 0 || grid_max > 0) {
      const int m = grid_points > 0 ? grid_points : 50;
      grid = grid_max > 0 ? FrequencyGrid::band(grid_max, m)
                          : FrequencyGrid::standard(m);
    }
    put("fixture", fx.name);
    put("noise", noise_string(fx.model.noise.front()));
    put("route", route);
    put_grid(grid);
    finish_sidecar();
    if (route == "analytic" || route == "both")
      write_oracle_csv(join(dir, "oracle-analytic.csv"),
                       analytic_wiener(fx.model, grid));
    if (route == "brute" || route == "both")
      write_oracle_csv(join(dir, "oracle-brute.csv"),
                       brute_force_wiener(fx.model, grid));
    if (route == "both") {
      const double d = max_abs_diff(analytic_wiener(fx.model, grid),
                                    brute_force_wiener(fx.model, grid));
      say("max-abs-diff between routes: " + format_double(d));
    }
    say("wrote oracle table(s) in " + dir.string());
    return 0;
  }

  if (base->parsed()) {
    Panel panel;
    std::optional<Fixture> fx;
    double rel = rho_gl_rel >= 0 ? rho_gl_rel : 0.05;
    double thr = eps >= 0 ? eps : 1e-3;
    if (!input_csv.empty()) {
      panel = read_panel_csv(input_csv);
    } else if (!c.fixture.empty()) {
      fx = make_fixture(c.fixture, noise);
      if (rho_gl_rel < 0) rel = fx->rho_gl_rel;
      if (eps < 0) thr = fx->glasso_eps;
      panel = make_panel(*fx, c);
    } else {
      throw usage_error("baseline: need --input or --fixture");
    }
    if (fx)
      put_source(*fx);
    else
      put("input", input_csv);
    put("method", method);
    put_num("rho-gl-rel", rel);
    put_num("eps", thr);
    finish_sidecar();
    const Eigen::MatrixXd S = sample_covariance(panel);
    GlassoOptions go;
    go.rho_gl = rel * S.trace() / panel.n();
    const auto gl = graphical_lasso(S, go);
    std::string wrote;
    if (method == "glasso" || method == "all") {
      write_edges(join(dir, "glasso-edges.txt"), glasso_topology(gl.theta, thr));
      wrote = "glasso-edges.txt";
    }
    if (method == "glasso-sign" || method == "all") {
      write_edges(join(dir, "glasso-signed-edges.txt"),
                  glasso_sign_pruned(gl.theta, thr));
      wrote += (wrote.empty() ? "" : " and ") +
               std::string("glasso-signed-edges.txt");
    }
    say("wrote " + wrote + " in " + dir.string());
    return 0;
  }

  // sweep
  if (c.fixture.empty()) throw usage_error("sweep: --fixture is required");
  auto fx = make_fixture(c.fixture, noise);
  SweepOptions so;
  so.sample_sizes = parse_sample_list(samples_list);
  so.seed = c.seed;
  {
    std::string canon;
    for (long long t : so.sample_sizes)
      canon += (canon.empty() ? "" : ",") + std::to_string(t);
    put("fixture", fx.name);
    put("noise", noise_string(fx.model.noise.front()));
    put("samples-list", canon);
    put("seed", std::to_string(c.seed ? c.seed : fx.base_seed));
    put("method", method);
    finish_sidecar();
  }
  auto rows = run_sweep(fx, so);
  if (method != "all")
    std::erase_if(rows, [&](const SweepRow& r) { return r.method != method; });
  write_sweep_csv(join(dir, "sweep.csv"), rows);
  say("wrote " + join(dir, "sweep.csv") + " (" + std::to_string(rows.size()) +
      " rows)");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
