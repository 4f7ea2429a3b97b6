#include "netrecon/sweep.hpp"

#include "netrecon/errors.hpp"
#include "netrecon/glasso.hpp"
#include "netrecon/inference.hpp"
#include "netrecon/simulate.hpp"

namespace netrecon {

std::vector<SweepRow> run_sweep(const Fixture& fx, const SweepOptions& opts) {
  if (opts.sample_sizes.empty())
    throw usage_error("sweep: need at least one sample count");
  for (long long T : opts.sample_sizes)
    if (T < 8LL * fx.params.F) throw usage_error("sweep: sample count too small");

  const std::uint64_t base = opts.seed ? opts.seed : fx.base_seed;
  const int n = fx.model.n();
  std::vector<SweepRow> rows;

  for (long long T : opts.sample_sizes) {
    SimulateOptions so;
    so.samples = T;
    so.seed = mix_seed(base, static_cast<std::uint64_t>(T));
    const Panel panel = simulate(fx.model, so);

    const auto dyn = infer_topology(panel, fx.params);
    rows.push_back({"dynamic", T, relative_error(dyn.topology, fx.truth),
                    pruning_effectiveness(dyn.moral, dyn.topology, fx.truth, n)});

    const Eigen::MatrixXd S = sample_covariance(panel);
    GlassoOptions go;
    go.rho_gl = fx.rho_gl_rel * S.trace() / n;
    const auto gl = graphical_lasso(S, go);
    const EdgeSet thick = glasso_topology(gl.theta, fx.glasso_eps);
    const EdgeSet signed_ = glasso_sign_pruned(gl.theta, fx.glasso_eps);
    rows.push_back({"glasso", T, relative_error(thick, fx.truth),
                    pruning_effectiveness(thick, thick, fx.truth, n)});
    rows.push_back({"glasso-sign", T, relative_error(signed_, fx.truth),
                    pruning_effectiveness(thick, signed_, fx.truth, n)});
  }
  return rows;
}

}  // namespace netrecon
