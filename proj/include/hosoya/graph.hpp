#pragma once

#include <algorithm>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hosoya {

// Counts of unordered vertex pairs by distance: counts[k-1] pairs are at
// distance k, plus the pairs with no connecting path at all.
struct DistanceDistribution {
  std::vector<long long> counts;
  long long unreachable_pairs = 0;
  int vertex_count = 0;

  long long total_pairs() const {
    return static_cast<long long>(vertex_count) * (vertex_count - 1) / 2;
  }
};

// Immutable simple undirected graph. Vertices are 1-based, matching the
// usual V = {1, ..., n} convention; edges are stored normalized i < j.
class Graph {
public:
  static constexpr int kUnreachable = -1;

  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edge_pairs) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n + 1, {});
    g.edges_.reserve(edge_pairs.size());
    for (auto [i, j] : edge_pairs) {
      if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("edge endpoint out of range: (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      if (i == j)
        throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(i));
      if (i > j) std::swap(i, j);
      g.edges_.emplace_back(i, j);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
      throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) +
                                  "," + std::to_string(dup->second) + ")");
    for (auto [i, j] : g.edges_) {
      g.adj_[i].push_back(j);
      g.adj_[j].push_back(i);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
  }

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
  }

  bool has_isolated_vertex() const {
    for (int v = 1; v <= n_; ++v)
      if (adj_[v].empty()) return true;
    return false;
  }

  // Single-source shortest path lengths; unreachable vertices are marked
  // with kUnreachable, never a numeric distance.
  std::vector<int> bfs_distances(int source) const {
    check_vertex(source);
    std::vector<int> dist(n_ + 1, kUnreachable);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj_[v]) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    dist.erase(dist.begin());  // expose 0-based position = vertex-1
    return dist;
  }

  DistanceDistribution distance_distribution() const {
    DistanceDistribution dd;
    dd.vertex_count = n_;
    for (int s = 1; s <= n_; ++s) {
      auto dist = bfs_distances(s);
      for (int t = s + 1; t <= n_; ++t) {
        int d = dist[t - 1];
        if (d == kUnreachable) {
          ++dd.unreachable_pairs;
        } else {
          if (static_cast<std::size_t>(d) > dd.counts.size())
            dd.counts.resize(d, 0);
          ++dd.counts[d - 1];
        }
      }
    }
    long long sum = dd.unreachable_pairs;
    for (long long c : dd.counts) sum += c;
    if (sum != dd.total_pairs())
      throw std::logic_error("distance distribution does not cover all pairs");
    return dd;
  }

  // Maximum finite pairwise distance; nullopt means infinite (the graph
  // is disconnected). A single vertex has diameter 0.
  std::optional<int> diameter() const {
    auto dd = distance_distribution();
    if (dd.unreachable_pairs > 0) return std::nullopt;
    return static_cast<int>(dd.counts.size());
  }

  bool is_connected() const {
    auto dist = bfs_distances(1);
    return std::none_of(dist.begin(), dist.end(),
                        [](int d) { return d == kUnreachable; });
  }

  // Removes vertex k and its incident edges; remaining vertices are
  // re-indexed 1..n-1 preserving order.
  Graph delete_vertex(int k) const {
    check_vertex(k);
    if (n_ < 2) throw std::invalid_argument("cannot delete the only vertex");
    std::vector<std::pair<int, int>> kept;
    kept.reserve(edges_.size());
    for (auto [i, j] : edges_) {
      if (i == k || j == k) continue;
      kept.emplace_back(i > k ? i - 1 : i, j > k ? j - 1 : j);
    }
    return from_edge_list(n_ - 1, kept);
  }

private:
  Graph() = default;

  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n_));
  }

  int n_ = 1;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Edge-list text format: '#' lines are comments, the first significant
// line is the vertex count, each following significant line is "i j".
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_n) {
      if (!(fields >> n) || n < 1)
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected positive vertex count");
      have_n = true;
    } else {
      int i, j;
      if (!(fields >> i >> j))
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected edge \"i j\"");
      edges.emplace_back(i, j);
    }
    std::string rest;
    if (fields >> rest)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": trailing tokens");
  }
  if (!have_n) throw std::runtime_error("empty edge-list input");
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid edge list: ") + e.what());
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << "\n";
  for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
}

inline std::string to_edge_list_string(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace hosoya
