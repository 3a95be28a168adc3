#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hosoya/graph.hpp"

namespace hosoya {

// Mycielskian of G on vertices v_1..v_n, u_1..u_n, w with the fixed
// layout v_i -> i, u_i -> n+i, w -> 2n+1. The result has 2n+1 vertices
// and 3m+n edges.
inline Graph mycielskian(const Graph& g) {
  const int n = g.vertex_count();
  const int w = 2 * n + 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(3 * g.edges().size() + n);
  for (auto [i, j] : g.edges()) {
    edges.emplace_back(i, j);
    edges.emplace_back(n + i, j);  // u_i v_j
    edges.emplace_back(n + j, i);  // u_j v_i
  }
  for (int i = 1; i <= n; ++i) edges.emplace_back(n + i, w);
  return Graph::from_edge_list(w, edges);
}

// Join G1 (+) G2: disjoint union plus every cross edge. G2's vertices are
// shifted up by |V(G1)|.
inline Graph join_graphs(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  std::vector<std::pair<int, int>> edges(g1.edges());
  for (auto [i, j] : g2.edges()) edges.emplace_back(n1 + i, n1 + j);
  for (int i = 1; i <= n1; ++i)
    for (int j = 1; j <= n2; ++j) edges.emplace_back(i, n1 + j);
  return Graph::from_edge_list(n1 + n2, edges);
}

// P_n is the path of LENGTH n: n+1 vertices, n edges. This follows the
// convention in which the subscript counts edges, not vertices.
inline Graph make_path(int length) {
  if (length < 1) throw std::invalid_argument("path length must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= length; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(length + 1, edges);
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return Graph::from_edge_list(n, edges);
}

// S_n: center vertex 1 plus n leaves.
inline Graph make_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least 1 leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
  return Graph::from_edge_list(leaves + 1, edges);
}

inline Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

// K_{n,m} with parts {1..n} and {n+1..n+m}.
inline Graph make_complete_bipartite(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("complete bipartite parts must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) edges.emplace_back(i, n + j);
  return Graph::from_edge_list(n + m, edges);
}

// Diameter law D(mu(G)) = min(max(2, D(G)), 4). Stated for graphs without
// isolated vertices; restricted here to connected inputs, where the BFS
// diameter is finite.
inline int predicted_mycielskian_diameter(const Graph& g) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument("diameter law requires no isolated vertices");
  auto d = g.diameter();
  if (!d)
    throw std::invalid_argument("diameter law requires a connected graph");
  return std::min(std::max(2, *d), 4);
}

namespace detail {

[[noreturn]] inline void spec_error(std::string_view spec, std::size_t pos,
                                    const std::string& msg) {
  throw std::runtime_error("generator spec \"" + std::string(spec) +
                           "\": " + msg + " at position " + std::to_string(pos));
}

inline long long parse_spec_int(std::string_view spec, std::string_view token,
                                std::size_t pos) {
  if (token.empty() ||
      token.find_first_not_of("0123456789") != std::string_view::npos)
    spec_error(spec, pos, "expected a positive integer");
  long long v = 0;
  for (char c : token) {
    v = v * 10 + (c - '0');
    if (v > 1000000) spec_error(spec, pos, "parameter too large");
  }
  return v;
}

// One family:params production of the grammar (no join).
inline Graph parse_simple_spec(std::string_view full, std::string_view part,
                               std::size_t offset) {
  auto colon = part.find(':');
  if (colon == std::string_view::npos)
    spec_error(full, offset, "expected \"family:params\"");
  std::string_view family = part.substr(0, colon);
  std::string_view params = part.substr(colon + 1);
  std::size_t params_pos = offset + colon + 1;
  auto comma = params.find(',');
  if (family == "kbip") {
    if (comma == std::string_view::npos)
      spec_error(full, params_pos, "kbip takes two parameters \"n,m\"");
    long long n = parse_spec_int(full, params.substr(0, comma), params_pos);
    long long m = parse_spec_int(full, params.substr(comma + 1),
                                 params_pos + comma + 1);
    return make_complete_bipartite(static_cast<int>(n), static_cast<int>(m));
  }
  if (comma != std::string_view::npos)
    spec_error(full, params_pos + comma, "family takes a single parameter");
  long long n = parse_spec_int(full, params, params_pos);
  if (family == "path") return make_path(static_cast<int>(n));
  if (family == "cycle") return make_cycle(static_cast<int>(n));
  if (family == "star") return make_star(static_cast<int>(n));
  if (family == "complete") return make_complete(static_cast<int>(n));
  spec_error(full, offset, "unknown family \"" + std::string(family) + "\"");
}

}  // namespace detail

// Generator grammar: "path:N", "cycle:N", "star:N", "complete:N",
// "kbip:N,M", "join:SPEC+SPEC" (join operands are non-join specs).
inline Graph parse_generator_spec(std::string_view spec) {
  constexpr std::string_view join_prefix = "join:";
  try {
    if (spec.substr(0, join_prefix.size()) == join_prefix) {
      std::string_view rest = spec.substr(join_prefix.size());
      auto plus = rest.find('+');
      if (plus == std::string_view::npos)
        detail::spec_error(spec, join_prefix.size(),
                           "join takes two '+'-separated operands");
      Graph left = detail::parse_simple_spec(spec, rest.substr(0, plus),
                                             join_prefix.size());
      Graph right = detail::parse_simple_spec(spec, rest.substr(plus + 1),
                                              join_prefix.size() + plus + 1);
      return join_graphs(left, right);
    }
    return detail::parse_simple_spec(spec, spec, 0);
  } catch (const std::invalid_argument& e) {
    // family constructor rejected the parameter (e.g. cycle:2)
    throw std::runtime_error("generator spec \"" + std::string(spec) +
                             "\": " + e.what());
  }
}

}  // namespace hosoya
