#include "netrecon/inference.hpp"

#include <cmath>

#include "netrecon/errors.hpp"

namespace netrecon {

void InferenceParams::validate() const {
  grid.validate();
  if (!(rho >= 0)) throw usage_error("inference: threshold must be nonnegative");
  if (!(tau > 0) || tau > M_PI)
    throw usage_error("inference: phase corridor must lie in (0, pi]");
  if (F < 1) throw usage_error("inference: lag half-width must be at least 1");
  if (gamma < 0) throw usage_error("inference: negative group penalty");
}

ResponseSummary summarize(const WienerSet& ws) {
  const int n = ws.n();
  ResponseSummary s;
  s.sup = Eigen::MatrixXd::Zero(n, n);
  s.min_phase = Eigen::MatrixXd::Constant(n, n, M_PI);
  s.max_phase = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < ws.points(); ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        const auto w = ws.W[k](j, i);
        const double ph = std::abs(std::arg(w));
        s.sup(j, i) = std::max(s.sup(j, i), std::abs(w));
        s.min_phase(j, i) = std::min(s.min_phase(j, i), ph);
        s.max_phase(j, i) = std::max(s.max_phase(j, i), ph);
      }
  return s;
}

EdgeSet edges_above_threshold(const ResponseSummary& s, double rho) {
  const int n = static_cast<int>(s.sup.rows());
  EdgeSet out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.sup(j, i) > rho || s.sup(i, j) > rho) out.insert({i, j});
  return out;
}

EdgeSet prune_antiphase_pairs(const ResponseSummary& s, const EdgeSet& kept,
                              double rho, double tau) {
  EdgeSet out;
  for (const auto& [i, j] : kept) {
    bool all_antiphase = true;
    for (auto [a, b] : {std::pair(j, i), std::pair(i, j)})
      if (s.sup(a, b) > rho && s.min_phase(a, b) < M_PI - tau)
        all_antiphase = false;
    if (!all_antiphase) out.insert({i, j});
  }
  return out;
}

InferenceResult infer_from_bank(const FilterBank& bank, const InferenceParams& p) {
  p.validate();
  InferenceResult r;
  r.bank = bank;
  r.summary = summarize(bank_response(bank, p.grid));
  r.moral = edges_above_threshold(r.summary, p.rho);
  r.topology = prune_antiphase_pairs(r.summary, r.moral, p.rho, p.tau);
  return r;
}

InferenceResult infer_topology(const Panel& panel, const InferenceParams& p) {
  p.validate();
  EstimatorOptions eo;
  eo.F = p.F;
  eo.gamma = p.gamma;
  return infer_from_bank(fit_filter_bank(panel, eo), p);
}

}  // namespace netrecon
