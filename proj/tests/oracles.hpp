// Test-only oracles, deliberately independent of the BFS machinery they
// check: distances via Floyd-Warshall, distributions by pairwise counting.
#pragma once

#include <random>
#include <vector>

#include "hosoya/graph.hpp"
#include "hosoya/polynomial.hpp"

namespace oracle {

inline constexpr int kInf = 1 << 28;

// All-pairs distances by Floyd-Warshall; matrix is 1-based, kInf marks
// unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const hosoya::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, kInf));
  for (int v = 1; v <= n; ++v) d[v][v] = 0;
  for (auto [i, j] : g.edges()) d[i][j] = d[j][i] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline hosoya::Polynomial hosoya_by_floyd_warshall(const hosoya::Graph& g) {
  auto d = floyd_warshall(g);
  std::vector<long long> counts;
  for (int i = 1; i <= g.vertex_count(); ++i)
    for (int j = i + 1; j <= g.vertex_count(); ++j) {
      if (d[i][j] >= kInf) continue;
      if (static_cast<std::size_t>(d[i][j]) > counts.size())
        counts.resize(d[i][j], 0);
      ++counts[d[i][j] - 1];
    }
  return hosoya::Polynomial::from_distance_counts(counts);
}

// Small random graph (not necessarily connected) for property tests.
inline hosoya::Graph random_graph(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> n_dist(1, max_n);
  int n = n_dist(rng);
  std::uniform_real_distribution<double> p_dist(0.0, 1.0);
  double p = p_dist(rng);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p_dist(rng) < p) edges.emplace_back(i, j);
  return hosoya::Graph::from_edge_list(n, edges);
}

inline hosoya::Graph random_connected_graph(std::mt19937& rng, int max_n) {
  while (true) {
    hosoya::Graph g = random_graph(rng, max_n);
    if (g.vertex_count() >= 2 && g.is_connected()) return g;
  }
}

}  // namespace oracle
