#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/arith.hpp"
#include "hosoya/constructions.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/polynomial.hpp"

namespace hosoya {

// Hosoya polynomial: coefficient of x^k counts unordered pairs at
// distance k (zero constant term). For a disconnected graph this is the
// finite-distance generating polynomial; unreachable pairs contribute
// nothing, which is the 2^{-inf} = 0 completion residual closeness needs.
inline Polynomial hosoya_polynomial(const Graph& g) {
  return Polynomial::from_distance_counts(g.distance_distribution().counts);
}

// Coefficients of H(mu(G), x) = b1 x + b2 x^2 + b3 x^3 + b4 x^4, derived
// from the source graph's vertex count n, edge count m, and its counts of
// pairs at distance 2 and 3.
struct MycielskianCoefficients {
  Int b1, b2, b3, b4;
  long long source_n = 0;
  long long source_m = 0;
  long long source_a2 = 0;
  long long source_a3 = 0;

  Polynomial to_polynomial() const {
    return Polynomial::from_coefficients({Int(0), b1, b2, b3, b4});
  }
};

inline MycielskianCoefficients mycielskian_hosoya_closed_form(long long n, long long m,
                                                              long long a2, long long a3) {
  if (n < 2)
    throw std::invalid_argument("Mycielskian coefficient formula needs n >= 2");
  if (m < n - 1)
    throw std::invalid_argument("connected graph needs at least n-1 edges");
  if (a2 < 0 || a3 < 0)
    throw std::invalid_argument("distance counts must be non-negative");
  if (m + a2 + a3 > n * (n - 1) / 2)
    throw std::invalid_argument("distance counts exceed the number of pairs");
  MycielskianCoefficients c;
  c.source_n = n;
  c.source_m = m;
  c.source_a2 = a2;
  c.source_a3 = a3;
  Int N(n), M(m), A2(a2), A3(a3);
  c.b1 = 3 * M + N;
  c.b2 = (N * N + 3 * N) / 2 + 3 * A2;
  c.b3 = N * N - 2 * M - N + A3 - 2 * A2;
  c.b4 = N * (N - 1) / 2 - M - A2 - A3;
  if (c.b3 < 0 || c.b4 < 0)
    throw std::invalid_argument("inconsistent inputs: negative coefficient");
  return c;
}

// Convenience wrapper validating the theorem's hypotheses on an actual graph.
inline MycielskianCoefficients mycielskian_hosoya_closed_form(const Graph& g) {
  if (g.vertex_count() < 2 || !g.is_connected())
    throw std::invalid_argument("theorem requires a connected graph with n >= 2");
  auto dd = g.distance_distribution();
  long long a2 = dd.counts.size() >= 2 ? dd.counts[1] : 0;
  long long a3 = dd.counts.size() >= 3 ? dd.counts[2] : 0;
  return mycielskian_hosoya_closed_form(g.vertex_count(), g.edge_count(), a2, a3);
}

// H(mu(G)) when D(mu(G)) = 2: only the edge count matters.
inline Polynomial diameter2_mycielskian_hosoya(long long n, long long m) {
  Int N(n), M(m);
  return Polynomial::from_coefficients({Int(0), 3 * M + N, 2 * N * N - 3 * M});
}

inline Polynomial diameter2_mycielskian_hosoya(const Graph& g) {
  // D(mu(G)) = 2 holds exactly for connected G without isolated vertices
  // and D(G) <= 2 (complete graphs included).
  std::optional<int> d;
  if (!g.has_isolated_vertex()) d = g.diameter();
  if (!d || *d > 2 || g.vertex_count() < 2)
    throw std::invalid_argument("lemma requires D(mu(G)) = 2");
  return diameter2_mycielskian_hosoya(g.vertex_count(), g.edge_count());
}

// Hosoya polynomials of G1 (+) G2 and mu(G1 (+) G2), for connected parts
// of diameter >= 2.
inline std::pair<Polynomial, Polynomial> join_hosoya_closed_form(long long n1, long long m1,
                                                                 long long n2, long long m2) {
  Int N1(n1), M1(m1), N2(n2), M2(m2);
  Polynomial joined = Polynomial::from_coefficients(
      {Int(0), M1 + M2 + N1 * N2,
       (N1 * N1 + N2 * N2 - N1 - N2 - 2 * M1 - 2 * M2) / 2});
  Polynomial mu_joined = Polynomial::from_coefficients(
      {Int(0), 3 * M1 + 3 * M2 + 3 * N1 * N2 + N1 + N2,
       2 * N1 * N1 + 2 * N2 * N2 + N1 * N2 - 3 * M1 - 3 * M2});
  return {joined, mu_joined};
}

inline std::pair<Polynomial, Polynomial> join_hosoya_closed_form(const Graph& g1,
                                                                 const Graph& g2) {
  auto d1 = g1.diameter();
  auto d2 = g2.diameter();
  if (!d1 || !d2 || *d1 < 2 || *d2 < 2)
    throw std::invalid_argument(
        "join corollary requires connected parts of diameter >= 2");
  return join_hosoya_closed_form(g1.vertex_count(), g1.edge_count(),
                                 g2.vertex_count(), g2.edge_count());
}

// H(mu(S_n)) for a star with n >= 2 leaves.
inline Polynomial star_mycielskian_hosoya(long long n) {
  if (n < 2) throw std::invalid_argument("star corollary needs n >= 2 leaves");
  Int N(n);
  return Polynomial::from_coefficients({Int(0), 4 * N + 1, 2 * N * N + N + 2});
}

// H(mu(K_{n,m})) for n, m >= 2.
inline Polynomial kbip_mycielskian_hosoya(long long n, long long m) {
  if (n < 2 || m < 2)
    throw std::invalid_argument("complete bipartite corollary needs n, m >= 2");
  Int N(n), M(m);
  return Polynomial::from_coefficients(
      {Int(0), 3 * N * M + N + M, 2 * N * N + 2 * M * M + N * M});
}

// H(P_n) = sum_{k=1}^n (n-k+1) x^k for a path of length n.
inline Polynomial path_hosoya(long long n) {
  if (n < 1) throw std::invalid_argument("path length must be >= 1");
  std::vector<Int> c(n + 1, Int(0));
  for (long long k = 1; k <= n; ++k) c[k] = n - k + 1;
  return Polynomial::from_coefficients(std::move(c));
}

// H(mu(P_n)) for a path of length n >= 2.
inline Polynomial path_mycielskian_hosoya(long long n) {
  if (n < 2) throw std::invalid_argument("path corollary needs length >= 2");
  Int N(n);
  return Polynomial::from_coefficients({Int(0), 4 * N + 1,
                                        (N * N + 11 * N - 2) / 2, N * N - 2 * N,
                                        (N * N - 5 * N + 6) / 2});
}

}  // namespace hosoya
