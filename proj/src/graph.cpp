#include "netrecon/graph.hpp"

#include <deque>
#include <stdexcept>

namespace netrecon {

Edge make_edge(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("edge endpoints must be non-negative");
  if (a == b) throw std::invalid_argument("self-loops are not edges");
  return a < b ? Edge{a, b} : Edge{b, a};
}

EdgeSet edges_from_coupling(const Eigen::MatrixXd& coupling) {
  if (coupling.rows() != coupling.cols())
    throw std::invalid_argument("coupling matrix must be square");
  EdgeSet out;
  const int n = static_cast<int>(coupling.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coupling(i, j) != 0.0 || coupling(j, i) != 0.0) out.insert({i, j});
  return out;
}

std::vector<std::vector<int>> adjacency_lists(int n, const EdgeSet& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b >= n) throw std::invalid_argument("edge endpoint out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> bfs_distances(int n, const EdgeSet& edges, int src) {
  if (src < 0 || src >= n) throw std::invalid_argument("bfs source out of range");
  auto adj = adjacency_lists(n, edges);
  std::vector<int> dist(n, -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

EdgeSet strict_spouses(int n, const EdgeSet& edges) {
  EdgeSet out;
  for (int i = 0; i < n; ++i) {
    auto dist = bfs_distances(n, edges, i);
    for (int j = i + 1; j < n; ++j)
      if (dist[j] == 2) out.insert({i, j});
  }
  return out;
}

EdgeSet moral_graph(int n, const EdgeSet& edges) {
  EdgeSet out = edges;
  EdgeSet spouses = strict_spouses(n, edges);
  out.insert(spouses.begin(), spouses.end());
  return out;
}

double relative_error(const EdgeSet& est, const EdgeSet& truth) {
  if (truth.empty()) throw std::invalid_argument("relative_error needs a nonempty truth set");
  int wrong = 0;
  for (const auto& e : est) wrong += truth.count(e) == 0;
  for (const auto& e : truth) wrong += est.count(e) == 0;
  return 100.0 * static_cast<double>(wrong) / static_cast<double>(truth.size());
}

double pruning_effectiveness(const EdgeSet& moral, const EdgeSet& topology,
                             const EdgeSet& truth, int n) {
  const EdgeSet spouses = strict_spouses(n, truth);
  int present = 0, removed = 0;
  for (const auto& e : spouses) {
    if (moral.count(e) && !truth.count(e)) {
      ++present;
      removed += topology.count(e) == 0;
    }
  }
  if (present == 0) return 1.0;
  return static_cast<double>(removed) / static_cast<double>(present);
}

}  // namespace netrecon
