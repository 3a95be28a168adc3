#pragma once

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hosoya/arith.hpp"
#include "hosoya/constructions.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/hosoya.hpp"
#include "hosoya/indices.hpp"
#include "hosoya/polynomial.hpp"

namespace hosoya {

struct VerifyOptions {
  unsigned long long seed = 1;
  int count = 200;      // random connected graphs
  int max_n = 40;       // random n drawn uniformly from [2, max_n]
  int family_max = 50;  // size cap for the named families
};

struct CheckOutcome {
  std::string name;
  long long instances = 0;
  long long failures = 0;
  std::string first_counterexample;  // label + edge list
};

struct ErratumFinding {
  std::string formula_id;
  std::string counterexample_input;
  std::string printed_value;
  std::string oracle_value;
};

struct VerifyReport {
  std::string corpus_description;
  std::vector<CheckOutcome> checks;
  std::vector<ErratumFinding> erratum_findings;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.failures > 0) return false;
    return true;
  }
};

// Erdos-Renyi with p uniform in (0.1, 0.9), resampled until connected.
// After 1000 rejections the vertex count is lowered so the loop always
// terminates.
inline Graph random_connected_graph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> edge_prob(0.1, 0.9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      double p = edge_prob(rng);
      std::vector<std::pair<int, int>> edges;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (coin(rng) < p) edges.emplace_back(i, j);
      Graph g = Graph::from_edge_list(n, edges);
      if (g.is_connected()) return g;
    }
    if (n > 2) --n;
  }
}

namespace detail {

// Distances-and-Hosoya bundle computed once per corpus graph.
struct CorpusItem {
  std::string label;
  Graph g;
  Graph mu;
  Polynomial h;
  Polynomial h_mu;
  DistanceDistribution dd;
  std::optional<int> diam;
};

inline CorpusItem make_item(std::string label, Graph g) {
  Graph mu = mycielskian(g);
  Polynomial h = hosoya_polynomial(g);
  Polynomial h_mu = hosoya_polynomial(mu);
  DistanceDistribution dd = g.distance_distribution();
  std::optional<int> diam;
  if (dd.unreachable_pairs == 0) diam = static_cast<int>(dd.counts.size());
  return {std::move(label), std::move(g), std::move(mu), std::move(h),
          std::move(h_mu), std::move(dd), diam};
}

inline void record(CheckOutcome& c, bool ok, const std::string& label,
                   const Graph& g) {
  ++c.instances;
  if (!ok) {
    ++c.failures;
    if (c.first_counterexample.empty())
      c.first_counterexample = label + "\n" + to_edge_list_string(g);
  }
}

// Definitional per-pair sums over the BFS distance matrix; the second
// route the derivative-based index formulas are checked against.
struct PairSums {
  Int sum_d = 0, sum_d2 = 0, sum_d3 = 0;
  Rational sum_inv, sum_half;
};

inline PairSums per_pair_sums(const Graph& g) {
  PairSums s;
  for (int u = 1; u <= g.vertex_count(); ++u) {
    auto dist = g.bfs_distances(u);
    for (int v = u + 1; v <= g.vertex_count(); ++v) {
      int d = dist[v - 1];
      if (d == Graph::kUnreachable) continue;
      Int D(d);
      s.sum_d += D;
      s.sum_d2 += D * D;
      s.sum_d3 += D * D * D;
      s.sum_inv += Rational(Int(1), D);
      s.sum_half += half_power(d);
    }
  }
  return s;
}

inline long long count_at(const DistanceDistribution& dd, int k) {
  return static_cast<std::size_t>(k) <= dd.counts.size() ? dd.counts[k - 1] : 0;
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt) {
  using detail::CorpusItem;
  VerifyReport report;

  // ---- corpus --------------------------------------------------------
  std::vector<CorpusItem> corpus;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> n_dist(2, opt.max_n);
  for (int i = 0; i < opt.count; ++i) {
    Graph g = random_connected_graph(rng, n_dist(rng));
    corpus.push_back(detail::make_item("random[" + std::to_string(i) + "]", g));
  }
  const int fm = opt.family_max;
  for (int n = 1; n <= fm; ++n)
    corpus.push_back(detail::make_item("path:" + std::to_string(n), make_path(n)));
  for (int n = 3; n <= fm; ++n)
    corpus.push_back(detail::make_item("cycle:" + std::to_string(n), make_cycle(n)));
  for (int n = 1; n <= fm; ++n)
    corpus.push_back(detail::make_item("star:" + std::to_string(n), make_star(n)));
  for (int n = 2; n <= fm; ++n)
    corpus.push_back(
        detail::make_item("complete:" + std::to_string(n), make_complete(n)));
  for (int n = 1; n <= fm; ++n)
    for (int m = n; n + m <= fm; ++m)
      corpus.push_back(detail::make_item(
          "kbip:" + std::to_string(n) + "," + std::to_string(m),
          make_complete_bipartite(n, m)));

  {
    std::ostringstream os;
    os << opt.count << " random connected graphs (seed " << opt.seed
       << ", n in [2," << opt.max_n
       << "]) + path/cycle/star/complete/complete-bipartite families up to size "
       << fm;
    report.corpus_description = os.str();
  }

  // ---- corpus-wide theorem checks ------------------------------------
  CheckOutcome main_thm{"main-theorem-coefficients"};
  CheckOutcome diam_law{"diameter-law"};
  CheckOutcome diam2{"diameter2-lemma"};
  CheckOutcome idx_forms{"mycielskian-index-closed-forms"};
  CheckOutcome idx_ident{"index-derivative-identities"};
  CheckOutcome wiener_btw{"wiener-betweenness-relation"};
  CheckOutcome nthw{"nth-wiener-vanishing"};

  for (const auto& it : corpus) {
    const long long n = it.g.vertex_count();
    const long long m = it.g.edge_count();
    const long long a2 = detail::count_at(it.dd, 2);
    const long long a3 = detail::count_at(it.dd, 3);

    if (n >= 2) {
      auto cf = mycielskian_hosoya_closed_form(n, m, a2, a3);
      detail::record(main_thm, cf.to_polynomial() == it.h_mu, it.label, it.g);

      // all closed-form indices against the index operations on H(mu(G))
      auto closed = mycielskian_index_closed_forms(n, m, a2, a3);
      bool ok = closed.wiener == wiener(it.h_mu) &&
                closed.hyper_wiener == hyper_wiener(it.h_mu) &&
                closed.tsz == tsz(it.h_mu) &&
                closed.harary == harary(it.h_mu) &&
                closed.closeness == closeness(it.h_mu);
      for (int order = 1; order <= 4; ++order)
        ok = ok && closed.nth_wiener[order - 1] == nth_wiener(it.h_mu, order);
      // B^- closed form: via the Wiener relation on mu(G) always, and
      // against direct path counting on the smaller instances
      Rational relation = Rational(closed.wiener, Int(2 * n + 1)) - Rational(Int(n));
      ok = ok && *closed.betweenness_centrality == relation;
      if (it.mu.vertex_count() <= 61)
        ok = ok && *closed.betweenness_centrality == betweenness_centrality(it.mu);
      detail::record(idx_forms, ok, it.label, it.g);

      bool vanish = true;
      for (int order = 5; order <= 8; ++order)
        vanish = vanish && nth_wiener(it.h_mu, order) == 0;
      detail::record(nthw, vanish, it.label, it.g);
    }

    if (it.diam) {
      detail::record(diam_law,
                     *it.mu.diameter() == predicted_mycielskian_diameter(it.g),
                     it.label, it.g);
      if (n >= 2 && *it.diam <= 2)
        detail::record(diam2, diameter2_mycielskian_hosoya(it.g) == it.h_mu,
                       it.label, it.g);
    }

    {
      auto sums = detail::per_pair_sums(it.g);
      bool ok = wiener(it.h) == sums.sum_d &&
                hyper_wiener(it.h) ==
                    (Rational(sums.sum_d2) + Rational(sums.sum_d)) *
                        Rational(Int(1), Int(2)) &&
                tsz(it.h) == Rational(sums.sum_d3, Int(6)) +
                                 Rational(sums.sum_d2, Int(2)) +
                                 Rational(sums.sum_d, Int(3)) &&
                harary(it.h) == sums.sum_inv;
      Rational per_vertex;
      for (int v = 1; v <= it.g.vertex_count(); ++v)
        per_vertex += closeness_vertex(it.g, v);
      ok = ok && closeness(it.h) == per_vertex &&
           closeness(it.h) == Rational(2) * sums.sum_half;
      detail::record(idx_ident, ok, it.label, it.g);
    }

    if (n >= 2) {
      Rational expected =
          Rational(wiener(it.h), Int(n)) - Rational(Int(n - 1), Int(2));
      detail::record(wiener_btw, betweenness_centrality(it.g) == expected,
                     it.label, it.g);
    }
  }

  // ---- family closed forms -------------------------------------------
  CheckOutcome path_h{"path-hosoya"};
  for (int n = 1; n <= fm; ++n) {
    Graph p = make_path(n);
    detail::record(path_h, path_hosoya(n) == hosoya_polynomial(p),
                   "path:" + std::to_string(n), p);
  }

  CheckOutcome path_mu{"path-mycielskian"};
  for (long long n = 2; n <= fm; ++n) {
    Graph p = make_path(static_cast<int>(n));
    Graph mu = mycielskian(p);
    Polynomial h_mu = hosoya_polynomial(mu);
    Int N(n);
    bool ok = path_mycielskian_hosoya(n) == h_mu &&
              wiener(h_mu) == 6 * N * N - N + 11 &&
              closeness(h_mu) == Rational(9 * N * N + 95 * N + 14, Int(16)) &&
              betweenness_centrality(mu) ==
                  Rational(4 * N * N - 6 * N + 8, 2 * N + 3);
    detail::record(path_mu, ok, "path:" + std::to_string(n), p);
  }

  CheckOutcome star_mu{"star-mycielskian"};
  for (long long n = 2; n <= fm; ++n) {
    Graph s = make_star(static_cast<int>(n));
    detail::record(star_mu,
                   star_mycielskian_hosoya(n) == hosoya_polynomial(mycielskian(s)),
                   "star:" + std::to_string(n), s);
  }

  CheckOutcome kbip_mu{"kbip-mycielskian"};
  for (long long n = 2; n <= fm; ++n)
    for (long long m = n; m <= fm; ++m) {
      // K_{n,m} and K_{m,n} are isomorphic and the formula is symmetric,
      // so unordered parameter pairs cover the whole grid
      Graph k = make_complete_bipartite(static_cast<int>(n), static_cast<int>(m));
      detail::record(kbip_mu,
                     kbip_mycielskian_hosoya(n, m) ==
                         hosoya_polynomial(mycielskian(k)),
                     "kbip:" + std::to_string(n) + "," + std::to_string(m), k);
    }

  CheckOutcome join_cf{"join-closed-forms"};
  {
    std::vector<std::pair<std::string, Graph>> parts;
    for (int n = 2; n <= 6; ++n)
      parts.emplace_back("path:" + std::to_string(n), make_path(n));
    for (int n = 5; n <= 9; ++n)
      parts.emplace_back("cycle:" + std::to_string(n), make_cycle(n));
    for (int n = 2; n <= 6; ++n)
      parts.emplace_back("star:" + std::to_string(n), make_star(n));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i; j < parts.size(); ++j) {
        Graph joined = join_graphs(parts[i].second, parts[j].second);
        auto [h_join, h_mu_join] =
            join_hosoya_closed_form(parts[i].second, parts[j].second);
        bool ok = h_join == hosoya_polynomial(joined) &&
                  h_mu_join == hosoya_polynomial(mycielskian(joined));
        detail::record(join_cf, ok,
                       "join:" + parts[i].first + "+" + parts[j].first, joined);
      }
  }

  // ---- star vs path closeness comparison -----------------------------
  CheckOutcome star_path{"star-path-closeness-difference"};
  for (long long n = 2; n <= fm; ++n) {
    Rational c_star = closeness(hosoya_polynomial(mycielskian(make_star(static_cast<int>(n)))));
    Rational c_path = closeness(hosoya_polynomial(mycielskian(make_path(static_cast<int>(n)))));
    Rational diff = c_star - c_path;
    Int N(n);
    bool ok = diff == Rational(7 * N * N - 23 * N + 18, Int(16)) &&
              diff >= Rational(0) && (diff == Rational(0)) == (n == 2);
    detail::record(star_path, ok, "star/path n=" + std::to_string(n),
                   make_star(static_cast<int>(n)));
  }

  // ---- TSZ erratum demonstration -------------------------------------
  CheckOutcome erratum{"tsz-erratum"};
  {
    Graph p1 = make_path(1);  // mu(P_1) is C_5
    Graph mu = mycielskian(p1);
    Rational oracle = tsz(hosoya_polynomial(mu));
    Rational printed = printed_mycielskian_tsz(2, 1, 0, 0);
    Rational corrected = mycielskian_index_closed_forms(2, 1, 0, 0).tsz;
    bool ok = printed == Rational(50) && oracle == Rational(25) &&
              corrected == oracle && printed != oracle;
    detail::record(erratum, ok, "path:1", p1);
    report.erratum_findings.push_back({kPrintedTszFormulaId,
                                       "(n,m,a2,a3)=(2,1,0,0)", printed.str(),
                                       oracle.str()});
  }

  report.checks = {main_thm, diam_law, diam2,   idx_forms, idx_ident,
                   wiener_btw, nthw,   path_h,  path_mu,   star_mu,
                   kbip_mu,  join_cf,  star_path, erratum};
  return report;
}

inline std::string render_verify_report(const VerifyReport& report) {
  std::ostringstream os;
  os << "corpus: " << report.corpus_description << "\n";
  for (const auto& c : report.checks) {
    if (c.failures == 0) {
      os << "PASS " << c.name << " (" << c.instances << " instances)\n";
    } else {
      os << "FAIL " << c.name << " (" << c.instances << " instances, "
         << c.failures << " failures)\n";
      os << "first counterexample:\n" << c.first_counterexample;
    }
  }
  for (const auto& e : report.erratum_findings)
    os << "erratum: " << e.formula_id << " at " << e.counterexample_input
       << ": printed " << e.printed_value << ", oracle " << e.oracle_value
       << "\n";
  os << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline nlohmann::json verify_report_json(const VerifyReport& report) {
  nlohmann::json j;
  j["corpus_description"] = report.corpus_description;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["instances"] = c.instances;
    cj["failures"] = c.failures;
    if (!c.first_counterexample.empty())
      cj["first_counterexample"] = c.first_counterexample;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  nlohmann::json errata = nlohmann::json::array();
  for (const auto& e : report.erratum_findings)
    errata.push_back({{"formula_id", e.formula_id},
                      {"counterexample_input", e.counterexample_input},
                      {"printed_value", e.printed_value},
                      {"oracle_value", e.oracle_value}});
  j["erratum_findings"] = errata;
  j["passed"] = report.all_passed();
  return j;
}

}  // namespace hosoya
