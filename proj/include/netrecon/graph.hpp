#pragma once

#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace netrecon {

// Undirected edge with normalized endpoint order (first < second).
using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

// Orders endpoints; throws std::invalid_argument on self-loops or negative ids.
Edge make_edge(int a, int b);

// {i,j} is an edge iff either coupling direction is nonzero.
EdgeSet edges_from_coupling(const Eigen::MatrixXd& coupling);

std::vector<std::vector<int>> adjacency_lists(int n, const EdgeSet& edges);

// BFS hop distances from src; -1 where unreachable.
std::vector<int> bfs_distances(int n, const EdgeSet& edges, int src);

// Pairs at undirected distance exactly two (non-adjacent, sharing a neighbor).
EdgeSet strict_spouses(int n, const EdgeSet& edges);

// Edges plus strict-spouse pairs: the kin structure visible to the
// magnitude test before phase pruning.
EdgeSet moral_graph(int n, const EdgeSet& edges);

// 100 * (|est \ truth| + |truth \ est|) / |truth|; requires truth nonempty.
double relative_error(const EdgeSet& est, const EdgeSet& truth);

// Fraction of spurious strict-spouse pairs present in `moral` that are absent
// from `topology`. No spurious spouses present -> 1.0 by convention.
double pruning_effectiveness(const EdgeSet& moral, const EdgeSet& topology,
                             const EdgeSet& truth, int n);

}  // namespace netrecon
