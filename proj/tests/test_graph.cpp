#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "hosoya/graph.hpp"
#include "oracles.hpp"

using hosoya::Graph;

namespace {
Graph two_disjoint_edges() { return Graph::from_edge_list(4, {{1, 2}, {3, 4}}); }
Graph p2() { return Graph::from_edge_list(3, {{1, 2}, {2, 3}}); }
Graph c5() {
  return Graph::from_edge_list(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
}
}  // namespace

TEST_CASE("from_edge_list validation") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 2}}), std::invalid_argument);
  // duplicate after normalization is an error, not deduplicated
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), std::invalid_argument);

  Graph single = Graph::from_edge_list(1, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  // order-insensitive, normalized i < j
  Graph g = Graph::from_edge_list(3, {{3, 2}, {2, 1}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(g.has_edge(3, 2));
  CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("adjacency consistent with edges") {
  Graph g = p2();
  CHECK(g.neighbors(2) == std::vector<int>{1, 3});
  CHECK(g.neighbors(1) == std::vector<int>{2});
  CHECK(g.degree(2) == 2);
  CHECK_THROWS_AS(g.neighbors(4), std::out_of_range);
}

TEST_CASE("bfs distances") {
  CHECK(p2().bfs_distances(1) == std::vector<int>{0, 1, 2});
  auto d = two_disjoint_edges().bfs_distances(1);
  CHECK(d == std::vector<int>{0, 1, Graph::kUnreachable, Graph::kUnreachable});
  CHECK_THROWS_AS(p2().bfs_distances(0), std::out_of_range);
  CHECK_THROWS_AS(p2().bfs_distances(4), std::out_of_range);

  // C_5 from any source: two vertices at distance 1, two at 2
  for (int s = 1; s <= 5; ++s) {
    auto dist = c5().bfs_distances(s);
    CHECK(std::count(dist.begin(), dist.end(), 1) == 2);
    CHECK(std::count(dist.begin(), dist.end(), 2) == 2);
  }
}

TEST_CASE("distance distribution") {
  auto dd = p2().distance_distribution();
  CHECK(dd.counts == std::vector<long long>{2, 1});
  CHECK(dd.unreachable_pairs == 0);

  dd = c5().distance_distribution();
  CHECK(dd.counts == std::vector<long long>{5, 5});

  dd = two_disjoint_edges().distance_distribution();
  CHECK(dd.counts == std::vector<long long>{2});
  CHECK(dd.unreachable_pairs == 4);
}

TEST_CASE("diameter and connectivity") {
  CHECK(c5().diameter() == 2);
  CHECK_FALSE(two_disjoint_edges().diameter().has_value());
  CHECK(Graph::from_edge_list(1, {}).diameter() == 0);
  CHECK(p2().is_connected());
  CHECK_FALSE(two_disjoint_edges().is_connected());
  CHECK(Graph::from_edge_list(1, {}).is_connected());
}

TEST_CASE("delete_vertex") {
  Graph mid = p2().delete_vertex(2);
  CHECK(mid.vertex_count() == 2);
  CHECK(mid.edge_count() == 0);

  Graph path4 = c5().delete_vertex(3);
  CHECK(path4.vertex_count() == 4);
  CHECK(path4.edge_count() == 3);
  CHECK(path4.diameter() == 3);

  Graph star = Graph::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}});
  Graph isolated = star.delete_vertex(1);
  CHECK(isolated.vertex_count() == 3);
  CHECK(isolated.edge_count() == 0);

  CHECK_THROWS_AS(p2().delete_vertex(5), std::out_of_range);
  CHECK_THROWS_AS(Graph::from_edge_list(1, {}).delete_vertex(1),
                  std::invalid_argument);
}

TEST_CASE("edge list round trip and parse errors") {
  std::string text = "# comment\n3\n1 2\n2 3\n";
  std::istringstream in(text);
  Graph g = hosoya::read_edge_list(in);
  CHECK(g.vertex_count() == 3);
  CHECK(hosoya::to_edge_list_string(g) == "3\n1 2\n2 3\n");

  auto fails = [](const std::string& s) {
    std::istringstream bad(s);
    CHECK_THROWS_AS(hosoya::read_edge_list(bad), std::runtime_error);
  };
  fails("");
  fails("abc\n");
  fails("3\n1\n");
  fails("3\n1 2 3\n");
  fails("3\n1 2\n1 2\n");  // duplicate edge surfaces as parse failure
}

TEST_CASE("graph properties on random instances") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = oracle::random_graph(rng, 12);
    auto dd = g.distance_distribution();

    // pair totals
    long long sum = dd.unreachable_pairs;
    for (long long c : dd.counts) sum += c;
    CHECK(sum == dd.total_pairs());

    // a_1 is the edge count
    long long a1 = dd.counts.empty() ? 0 : dd.counts[0];
    CHECK(a1 == g.edge_count());

    // trailing entry nonzero
    if (!dd.counts.empty()) CHECK(dd.counts.back() > 0);

    // connectivity iff no unreachable pairs
    CHECK(g.is_connected() == (dd.unreachable_pairs == 0));

    // BFS agrees with the Floyd-Warshall oracle, and adjacent vertices'
    // distances differ by at most 1
    auto fw = oracle::floyd_warshall(g);
    for (int s = 1; s <= g.vertex_count(); ++s) {
      auto dist = g.bfs_distances(s);
      for (int t = 1; t <= g.vertex_count(); ++t) {
        int expected = fw[s][t] >= oracle::kInf ? Graph::kUnreachable : fw[s][t];
        CHECK(dist[t - 1] == expected);
      }
      for (auto [i, j] : g.edges()) {
        int di = dist[i - 1], dj = dist[j - 1];
        if (di != Graph::kUnreachable)
          CHECK((dj != Graph::kUnreachable && std::abs(di - dj) <= 1));
      }
    }

    // diameter is the largest k with a_k > 0 when connected
    if (g.is_connected())
      CHECK(g.diameter() == static_cast<int>(dd.counts.size()));

    // deleting a vertex never shortens a surviving pair's distance
    if (g.vertex_count() >= 2) {
      std::uniform_int_distribution<int> pick(1, g.vertex_count());
      int k = pick(rng);
      Graph h = g.delete_vertex(k);
      auto fw_h = oracle::floyd_warshall(h);
      for (int i = 1; i <= h.vertex_count(); ++i)
        for (int j = i + 1; j <= h.vertex_count(); ++j) {
          if (fw_h[i][j] >= oracle::kInf) continue;
          int oi = i >= k ? i + 1 : i;
          int oj = j >= k ? j + 1 : j;
          CHECK(fw[oi][oj] <= fw_h[i][j]);
        }
    }

    // writer/reader round trip
    std::istringstream in(hosoya::to_edge_list_string(g));
    Graph back = hosoya::read_edge_list(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}
