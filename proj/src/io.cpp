#include "netrecon/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "netrecon/errors.hpp"

namespace netrecon {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const char*& p, const std::string& path) {
  char* end = nullptr;
  const double v = std::strtod(p, &end);
  if (end == p) throw data_error(path + ": malformed number");
  if (!std::isfinite(v)) throw data_error(path + ": non-finite value");
  p = end;
  return v;
}

void expect_comma(const char*& p, const std::string& path) {
  while (*p == ' ' || *p == '\t') ++p;
  if (*p != ',') throw data_error(path + ": expected comma-separated values");
  ++p;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw data_error("cannot open '" + tmp + "' for writing");
    out << content;
    if (!out.good()) throw data_error("failed writing '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw data_error("cannot move '" + tmp + "' into place");
}

void write_panel_csv(const std::string& path, const Panel& panel) {
  std::string out;
  out.reserve(static_cast<std::size_t>(panel.samples()) * (panel.n() + 1) * 20);
  out += "t";
  for (int c = 0; c < panel.n(); ++c) out += ",x" + std::to_string(c + 1);
  out += "\n";
  for (long long k = 0; k < panel.samples(); ++k) {
    out += format_double(static_cast<double>(k) * panel.dt);
    for (int c = 0; c < panel.n(); ++c) {
      out += ',';
      out += format_double(panel.x(k, c));
    }
    out += '\n';
  }
  write_text_atomic(path, out);
}

Panel read_panel_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw data_error(path + ": empty file");
  std::stringstream hs(trim(line));
  std::string col;
  int n = 0;
  bool first = true;
  while (std::getline(hs, col, ',')) {
    if (first) {
      if (trim(col) != "t") throw data_error(path + ": header must start with 't'");
      first = false;
    } else {
      if (trim(col) != "x" + std::to_string(n + 1))
        throw data_error(path + ": header columns must be x1,...,xn");
      ++n;
    }
  }
  if (n < 2) throw data_error(path + ": need at least two channels");

  std::vector<double> times;
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const char* p = line.c_str();
    times.push_back(parse_double(p, path));
    for (int c = 0; c < n; ++c) {
      expect_comma(p, path);
      values.push_back(parse_double(p, path));
    }
  }
  const long long T = static_cast<long long>(times.size());
  if (T < 2) throw data_error(path + ": need at least two rows");

  Panel panel;
  panel.dt = times[1] - times[0];
  if (!(panel.dt > 0)) throw data_error(path + ": time column must increase");
  panel.x.resize(T, n);
  for (long long k = 0; k < T; ++k)
    for (int c = 0; c < n; ++c) panel.x(k, c) = values[k * n + c];
  return panel;
}

void write_edges(const std::string& path, const EdgeSet& edges) {
  std::string out;
  for (const auto& [a, b] : edges)
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  write_text_atomic(path, out);
}

EdgeSet read_edges(const std::string& path) {
  auto in = open_in(path);
  EdgeSet edges;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a >> b)) throw data_error(path + ": expected 'i j' per line");
    std::string rest;
    if (ls >> rest) throw data_error(path + ": trailing tokens on edge line");
    try {
      edges.insert(make_edge(static_cast<int>(a), static_cast<int>(b)));
    } catch (const std::exception& e) {
      throw data_error(path + ": " + e.what());
    }
  }
  return edges;
}

void write_filter_bank(const std::string& path, const FilterBank& bank) {
  std::string out = std::to_string(bank.n()) + " " + std::to_string(bank.F) +
                    " " + format_double(bank.dt) + "\n";
  for (int j = 0; j < bank.n(); ++j)
    for (int i = 0; i < bank.n(); ++i) {
      if (i == j) continue;
      out += std::to_string(j) + " " + std::to_string(i);
      for (int l = 0; l < bank.lags(); ++l) {
        out += ' ';
        out += format_double(bank.taps[j](i, l));
      }
      out += '\n';
    }
  write_text_atomic(path, out);
}

FilterBank read_filter_bank(const std::string& path) {
  auto in = open_in(path);
  int n = 0, F = 0;
  double dt = 0;
  if (!(in >> n >> F >> dt) || n < 2 || F < 1 || !(dt > 0))
    throw data_error(path + ": malformed filter bank header");
  FilterBank bank;
  bank.F = F;
  bank.dt = dt;
  bank.taps.assign(n, Eigen::MatrixXd::Zero(n, 2 * F + 1));
  for (int row = 0; row < n * (n - 1); ++row) {
    int j, i;
    if (!(in >> j >> i) || j < 0 || j >= n || i < 0 || i >= n || i == j)
      throw data_error(path + ": malformed filter bank pair");
    for (int l = 0; l < 2 * F + 1; ++l)
      if (!(in >> bank.taps[j](i, l)))
        throw data_error(path + ": truncated filter bank taps");
  }
  return bank;
}

void write_report(const std::string& path, const InferenceParams& p,
                  const InferenceResult& r) {
  std::string out = "[params]\n";
  out += "rho=" + format_double(p.rho) + "\n";
  out += "tau=" + format_double(p.tau) + "\n";
  out += "F=" + std::to_string(p.F) + "\n";
  out += "gamma=" + format_double(p.gamma) + "\n";
  out += "grid=";
  for (std::size_t k = 0; k < p.grid.omegas.size(); ++k) {
    if (k) out += ',';
    out += format_double(p.grid.omegas[k]);
  }
  out += "\n\n[moral-edges]\n";
  for (const auto& [a, b] : r.moral)
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  out += "\n[topology-edges]\n";
  for (const auto& [a, b] : r.topology)
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  out += "\n[pair-stats]\n";
  out += "j,i,sup_mag,min_absphase,max_absphase\n";
  const int n = static_cast<int>(r.summary.sup.rows());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      out += std::to_string(j) + "," + std::to_string(i) + "," +
             format_double(r.summary.sup(j, i)) + "," +
             format_double(r.summary.min_phase(j, i)) + "," +
             format_double(r.summary.max_phase(j, i)) + "\n";
    }
  write_text_atomic(path, out);
}

void write_oracle_csv(const std::string& path, const WienerSet& ws) {
  std::string out = "j,i,omega,re,im,mag,phase\n";
  const int n = ws.n();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      for (int k = 0; k < ws.points(); ++k) {
        const auto w = ws.W[k](j, i);
        out += std::to_string(j) + "," + std::to_string(i) + "," +
               format_double(ws.grid.omegas[k]) + "," + format_double(w.real()) +
               "," + format_double(w.imag()) + "," + format_double(std::abs(w)) +
               "," + format_double(std::arg(w)) + "\n";
      }
    }
  write_text_atomic(path, out);
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::string out = "method,T,relative_error,pruning_effectiveness\n";
  for (const auto& r : rows)
    out += r.method + "," + std::to_string(r.samples) + "," +
           format_double(r.relative_error) + "," +
           format_double(r.pruning_effectiveness) + "\n";
  write_text_atomic(path, out);
}

Config Config::parse_string(const std::string& text,
                            const std::vector<std::string>& allowed) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw usage_error("config line " + std::to_string(lineno) +
                        ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw usage_error("config line " + std::to_string(lineno) +
                                       ": empty key");
    bool ok = false;
    for (const auto& k : allowed) ok = ok || k == key;
    if (!ok) throw usage_error("config: unknown key '" + key + "'");
    cfg.kv_[key] = value;  // later lines win
  }
  return cfg;
}

Config Config::parse_file(const std::string& path,
                          const std::vector<std::string>& allowed) {
  auto in = open_in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str(), allowed);
}

std::string Config::get(const std::string& key, const std::string& fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  char* end = nullptr;
  const double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || *end != '\0')
    throw usage_error("config: '" + key + "' is not a number");
  return v;
}

long long Config::get_int(const std::string& key, long long fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(it->second.c_str(), &end, 10);
  if (end == it->second.c_str() || *end != '\0')
    throw usage_error("config: '" + key + "' is not an integer");
  return v;
}

}  // namespace netrecon
