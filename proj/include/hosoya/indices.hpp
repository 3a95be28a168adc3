#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hosoya/arith.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/hosoya.hpp"
#include "hosoya/polynomial.hpp"

namespace hosoya {

namespace detail {

inline void require_hosoya(const Polynomial& h) {
  if (h.coeff(0) != 0)
    throw std::invalid_argument("not a Hosoya polynomial: nonzero constant term");
  for (int k = 1; k <= h.degree(); ++k)
    if (h.coeff(k) < 0)
      throw std::invalid_argument("not a Hosoya polynomial: negative coefficient");
}

inline Int rational_to_int(const Rational& r, const char* what) {
  if (!r.is_integer())
    throw std::logic_error(std::string(what) + ": expected an integer value");
  return r.numerator();
}

}  // namespace detail

// W(G) = H'(G, 1).
inline Int wiener(const Polynomial& h) {
  detail::require_hosoya(h);
  return detail::rational_to_int(h.derivative(1).eval(Rational(1)), "wiener");
}

// WW(G) = f''(1) / 2 with f(x) = x H(G, x).
inline Rational hyper_wiener(const Polynomial& h) {
  detail::require_hosoya(h);
  return h.shift_multiply(1).derivative(2).eval(Rational(1)) * Rational(Int(1), Int(2));
}

// TSZ(G) = g'''(1) / 6 with g(x) = x^2 H(G, x).
inline Rational tsz(const Polynomial& h) {
  detail::require_hosoya(h);
  return h.shift_multiply(2).derivative(3).eval(Rational(1)) * Rational(Int(1), Int(6));
}

// Har(G) = integral_0^1 H(G, x)/x dx = sum_k a_k / k, exactly.
inline Rational harary(const Polynomial& h) {
  detail::require_hosoya(h);
  Rational sum;
  for (int k = 1; k <= h.degree(); ++k) sum += Rational(h.coeff(k), Int(k));
  return sum;
}

// nth-order Wiener index: the nth derivative of H at 1.
inline Int nth_wiener(const Polynomial& h, int order) {
  if (order < 1) throw std::invalid_argument("derivative order must be >= 1");
  detail::require_hosoya(h);
  return detail::rational_to_int(h.derivative(order).eval(Rational(1)), "nth_wiener");
}

// Dangalchev closeness C(G) = 2 H(G, 1/2); unreachable pairs contribute 0.
inline Rational closeness(const Polynomial& h) {
  detail::require_hosoya(h);
  return Rational(2) * h.eval(Rational(Int(1), Int(2)));
}

// Closeness of a single vertex: sum over reachable j != i of 2^{-d(i,j)}.
inline Rational closeness_vertex(const Graph& g, int i) {
  auto dist = g.bfs_distances(i);
  Rational sum;
  for (int j = 1; j <= g.vertex_count(); ++j) {
    int d = dist[j - 1];
    if (j != i && d != Graph::kUnreachable) sum += half_power(d);
  }
  return sum;
}

// Vertex residual closeness: min over k of C(G - k).
inline Rational vertex_residual_closeness(const Graph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("residual closeness needs n >= 2");
  std::optional<Rational> best;
  for (int k = 1; k <= g.vertex_count(); ++k) {
    Rational c = closeness(hosoya_polynomial(g.delete_vertex(k)));
    if (!best || c < *best) best = c;
  }
  return *best;
}

namespace detail {

// All-pairs BFS distances and shortest-path counts. Counts use checked
// 128-bit arithmetic; they can grow exponentially in pathological inputs
// and must abort rather than wrap.
struct PathCounts {
  std::vector<std::vector<int>> dist;            // [s][t], 1-based
  std::vector<std::vector<__int128>> sigma;      // [s][t]
};

inline __int128 checked_add128(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("shortest-path count overflow");
  return r;
}

inline __int128 checked_mul128(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("shortest-path count overflow");
  return r;
}

inline PathCounts count_shortest_paths(const Graph& g) {
  const int n = g.vertex_count();
  PathCounts pc;
  pc.dist.assign(n + 1, {});
  pc.sigma.assign(n + 1, {});
  for (int s = 1; s <= n; ++s) {
    auto dist = g.bfs_distances(s);
    std::vector<__int128> sigma(n + 1, 0);
    sigma[s] = 1;
    // vertices in nondecreasing distance order
    std::vector<int> order;
    order.reserve(n);
    for (int v = 1; v <= n; ++v)
      if (dist[v - 1] != Graph::kUnreachable) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return dist[a - 1] < dist[b - 1];
    });
    for (int v : order) {
      if (v == s) continue;
      for (int u : g.neighbors(v))
        if (dist[u - 1] != Graph::kUnreachable && dist[u - 1] + 1 == dist[v - 1])
          sigma[v] = checked_add128(sigma[v], sigma[u]);
    }
    pc.dist[s].assign(n + 1, 0);
    for (int t = 1; t <= n; ++t) pc.dist[s][t] = dist[t - 1];
    pc.sigma[s] = std::move(sigma);
  }
  return pc;
}

inline Int int128_to_int(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : v;
  Int hi(static_cast<unsigned long long>(mag >> 64));
  Int result = (hi << 64) + static_cast<unsigned long long>(mag);
  return neg ? -result : result;
}

}  // namespace detail

// Betweenness of w: sum over unordered pairs {u,v} avoiding w of the
// fraction of u-v shortest paths passing through w.
inline Rational betweenness_vertex(const Graph& g, int w) {
  if (!g.is_connected())
    throw std::invalid_argument("betweenness requires a connected graph");
  if (w < 1 || w > g.vertex_count())
    throw std::out_of_range("vertex out of range");
  auto pc = detail::count_shortest_paths(g);
  const int n = g.vertex_count();
  Rational sum;
  for (int u = 1; u <= n; ++u) {
    if (u == w) continue;
    for (int v = u + 1; v <= n; ++v) {
      if (v == w) continue;
      if (pc.dist[u][w] + pc.dist[w][v] != pc.dist[u][v]) continue;
      __int128 through = detail::checked_mul128(pc.sigma[u][w], pc.sigma[w][v]);
      sum += Rational(detail::int128_to_int(through),
                      detail::int128_to_int(pc.sigma[u][v]));
    }
  }
  return sum;
}

// B^-(G): average of the vertex betweenness values. For connected G this
// equals W(G)/n - (n-1)/2, which the verification corpus asserts.
inline Rational betweenness_centrality(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("betweenness requires a connected graph");
  auto pc = detail::count_shortest_paths(g);
  const int n = g.vertex_count();
  Rational total;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      __int128 through = 0;
      for (int w = 1; w <= n; ++w) {
        if (w == u || w == v) continue;
        if (pc.dist[u][w] + pc.dist[w][v] != pc.dist[u][v]) continue;
        through = detail::checked_add128(
            through, detail::checked_mul128(pc.sigma[u][w], pc.sigma[w][v]));
      }
      if (through != 0)
        total += Rational(detail::int128_to_int(through),
                          detail::int128_to_int(pc.sigma[u][v]));
    }
  }
  return total / Rational(Int(n));
}

// Exact values of every index for one graph.
struct IndexReport {
  Int wiener;
  Rational hyper_wiener;
  Rational tsz;
  Rational harary;
  std::vector<Int> nth_wiener;  // orders 1..deg(H)
  Rational closeness;
  std::optional<Rational> betweenness_centrality;  // connected graphs only
  std::optional<Rational> vrc;
};

inline IndexReport compute_index_report(const Graph& g, bool with_vrc = false) {
  Polynomial h = hosoya_polynomial(g);
  IndexReport r;
  r.wiener = wiener(h);
  r.hyper_wiener = hyper_wiener(h);
  r.tsz = tsz(h);
  r.harary = harary(h);
  for (int order = 1; order <= h.degree(); ++order)
    r.nth_wiener.push_back(nth_wiener(h, order));
  r.closeness = closeness(h);
  if (g.is_connected()) r.betweenness_centrality = betweenness_centrality(g);
  if (with_vrc) r.vrc = vertex_residual_closeness(g);
  return r;
}

// Closed-form indices of mu(G) from (n, m, a2, a3) of G. The TSZ line
// ships the coefficients consistent with the coefficient theorem
// (22n^2 - 13n - 37m - 28a2 - 10a3); the originally published ones are
// kept in printed_mycielskian_tsz for the erratum demonstration.
inline IndexReport mycielskian_index_closed_forms(long long n, long long m,
                                                  long long a2, long long a3) {
  auto coeffs = mycielskian_hosoya_closed_form(n, m, a2, a3);
  Int N(n), M(m), A2(a2), A3(a3);
  IndexReport r;
  r.wiener = 6 * N * N - N - 7 * M - 4 * A2 - A3;
  r.hyper_wiener =
      Rational(25 * N * N - 11 * N, Int(2)) - Rational(19 * M + 13 * A2 + 4 * A3);
  r.tsz = Rational(22 * N * N - 13 * N - 37 * M - 28 * A2 - 10 * A3);
  r.harary = Rational(17 * N * N + 31 * N + 50 * M + 14 * A2 + 2 * A3, Int(24));
  r.closeness = Rational(9 * N * N + 23 * N + 38 * M + 14 * A2 + 2 * A3, Int(16));
  r.betweenness_centrality =
      Rational(4 * N * N - 2 * N - 7 * M - 4 * A2 - A3, 2 * N + 1);
  Polynomial h = coeffs.to_polynomial();
  for (int order = 1; order <= 4; ++order)
    r.nth_wiener.push_back(nth_wiener(h, order));
  return r;
}

// Identifier and value of the published TSZ closed form, which is
// inconsistent with the coefficient theorem it was derived from.
inline constexpr const char* kPrintedTszFormulaId = "tsz-mycielskian-closed-form";

inline Rational printed_mycielskian_tsz(long long n, long long m, long long a2,
                                        long long a3) {
  Int N(n), M(m), A2(a2), A3(a3);
  return Rational(22 * N * N - 8 * N - 22 * M - 28 * A2 - 10 * A3);
}

namespace detail {

inline nlohmann::json int_json(const Int& v) {
  // integers beyond 64 bits degrade to decimal strings
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

}  // namespace detail

inline nlohmann::json index_report_json(const IndexReport& r) {
  nlohmann::json j;
  j["wiener"] = detail::int_json(r.wiener);
  j["hyper_wiener"] = r.hyper_wiener.str();
  j["tsz"] = r.tsz.str();
  j["harary"] = r.harary.str();
  j["closeness"] = r.closeness.str();
  j["betweenness_centrality"] =
      r.betweenness_centrality ? nlohmann::json(r.betweenness_centrality->str())
                               : nlohmann::json(nullptr);
  j["vrc"] = r.vrc ? nlohmann::json(r.vrc->str()) : nlohmann::json(nullptr);
  nlohmann::json orders = nlohmann::json::array();
  for (const Int& v : r.nth_wiener) orders.push_back(detail::int_json(v));
  j["nth_wiener"] = orders;
  return j;
}

}  // namespace hosoya
