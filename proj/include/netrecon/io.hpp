#pragma once

#include <map>
#include <string>
#include <vector>

#include "netrecon/estimator.hpp"
#include "netrecon/graph.hpp"
#include "netrecon/inference.hpp"
#include "netrecon/simulate.hpp"
#include "netrecon/sweep.hpp"
#include "netrecon/wiener.hpp"

namespace netrecon {

// All writers are atomic (temp file + rename) and print floating-point values
// with 17 significant digits, so repeated runs are byte-identical.

void write_text_atomic(const std::string& path, const std::string& content);

// Header "t,x1,...,xn"; the t column carries k*dt so the step is recoverable.
void write_panel_csv(const std::string& path, const Panel& panel);
Panel read_panel_csv(const std::string& path);

// One "i j" line per undirected edge, ascending.
void write_edges(const std::string& path, const EdgeSet& edges);
EdgeSet read_edges(const std::string& path);

// Line 1: "n F dt"; then one line per ordered pair: "j i h(-F) ... h(+F)".
void write_filter_bank(const std::string& path, const FilterBank& bank);
FilterBank read_filter_bank(const std::string& path);

// Sections [params], [moral-edges], [topology-edges], [pair-stats]; the stats
// rows are "j,i,sup_mag,min_absphase,max_absphase".
void write_report(const std::string& path, const InferenceParams& p,
                  const InferenceResult& r);

// Rows "j,i,omega,re,im,mag,phase" for every pair at every grid point.
void write_oracle_csv(const std::string& path, const WienerSet& ws);

// Rows "method,T,relative_error,pruning_effectiveness".
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

// key=value file with '#' comments; keys outside the allowed set are rejected.
class Config {
 public:
  static Config parse_file(const std::string& path,
                           const std::vector<std::string>& allowed);
  static Config parse_string(const std::string& text,
                             const std::vector<std::string>& allowed);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;

 private:
  std::map<std::string, std::string> kv_;
};

std::string format_double(double v);  // shortest-faithful 17-digit form

}  // namespace netrecon
