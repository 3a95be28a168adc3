// Command-line front end: Hosoya polynomials, Mycielskian expansion,
// exact distance-based indices, graph generation, and the verification
// harness that arbitrates the closed forms against BFS oracles.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hosoya/constructions.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/hosoya.hpp"
#include "hosoya/indices.hpp"
#include "hosoya/polynomial.hpp"
#include "hosoya/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitOverflow = 3;

// Input is either a literal "gen" followed by a generator spec, or the
// path of an edge-list file.
hosoya::Graph load_graph(const std::string& input, const std::string& spec) {
  if (input == "gen") {
    if (spec.empty())
      throw std::runtime_error("input \"gen\" requires a generator spec");
    return hosoya::parse_generator_spec(spec);
  }
  if (!spec.empty())
    throw std::runtime_error("unexpected extra argument after file path");
  std::ifstream file(input);
  if (!file) throw std::runtime_error("cannot open " + input);
  return hosoya::read_edge_list(file);
}

void write_graph(const hosoya::Graph& g, const std::string& output) {
  if (output.empty() || output == "-") {
    hosoya::write_edge_list(std::cout, g);
    return;
  }
  std::ofstream file(output);
  if (!file) throw std::runtime_error("cannot open " + output + " for writing");
  hosoya::write_edge_list(file, g);
}

nlohmann::json polynomial_json(const hosoya::Polynomial& h) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 1; k <= h.degree(); ++k)
    coeffs.push_back(hosoya::detail::int_json(h.coeff(k)));
  return {{"polynomial", h.str()}, {"coefficients", coeffs}};
}

void print_index_report(const hosoya::IndexReport& r, bool decimal) {
  auto rat = [&](const hosoya::Rational& v) {
    std::string s = v.str();
    if (decimal && !v.is_integer()) s += " (~" + v.decimal_str() + ")";
    return s;
  };
  std::cout << "wiener                 " << r.wiener.str() << "\n";
  std::cout << "hyper_wiener           " << rat(r.hyper_wiener) << "\n";
  std::cout << "tsz                    " << rat(r.tsz) << "\n";
  std::cout << "harary                 " << rat(r.harary) << "\n";
  std::cout << "closeness              " << rat(r.closeness) << "\n";
  if (r.betweenness_centrality)
    std::cout << "betweenness_centrality " << rat(*r.betweenness_centrality) << "\n";
  else
    std::cout << "betweenness_centrality omitted (graph is disconnected)\n";
  if (r.vrc) std::cout << "vrc                    " << rat(*r.vrc) << "\n";
  std::cout << "nth_wiener            ";
  for (const auto& v : r.nth_wiener) std::cout << " " << v.str();
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hosoya polynomials, Mycielskian constructions, and exact "
               "distance-based graph indices"};
  app.require_subcommand(1);

  std::string input, spec, output;
  bool json_out = false;
  bool with_vrc = false;
  bool decimal = false;
  hosoya::VerifyOptions vopt;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input,
                    "edge-list file path, or \"gen\" followed by a spec")
        ->required();
    cmd->add_option("spec", spec,
                    "generator spec, e.g. path:2, kbip:2,3, join:path:2+star:4 "
                    "(path:N is the path of LENGTH N, i.e. N+1 vertices)");
  };

  auto* cmd_hosoya = app.add_subcommand("hosoya", "print the Hosoya polynomial");
  add_input(cmd_hosoya);
  cmd_hosoya->add_flag("--json", json_out, "emit JSON instead of text");

  auto* cmd_myc =
      app.add_subcommand("mycielskian", "write the Mycielskian as an edge list");
  add_input(cmd_myc);
  cmd_myc->add_option("-o,--output", output, "output path (default stdout)");

  auto* cmd_indices =
      app.add_subcommand("indices", "print the exact index report");
  add_input(cmd_indices);
  cmd_indices->add_flag("--vrc", with_vrc, "include vertex residual closeness");
  cmd_indices->add_flag("--decimal", decimal,
                        "append 6-digit decimal approximations");
  cmd_indices->add_flag("--json", json_out, "emit JSON instead of text");

  auto* cmd_gen = app.add_subcommand("gen", "generate a graph from a spec");
  cmd_gen->add_option("spec", spec, "generator spec")->required();
  cmd_gen->add_option("-o,--output", output, "output path (default stdout)");

  auto* cmd_verify = app.add_subcommand(
      "verify", "cross-validate every closed form against BFS oracles");
  cmd_verify->add_option("--seed", vopt.seed, "random corpus seed");
  cmd_verify->add_option("--count", vopt.count, "number of random graphs");
  cmd_verify->add_option("--max-n", vopt.max_n, "largest random vertex count");
  cmd_verify->add_option("--family-max", vopt.family_max,
                         "size cap for the named families");
  cmd_verify->add_flag("--json", json_out, "emit the JSON report instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_hosoya->parsed()) {
      auto h = hosoya_polynomial(load_graph(input, spec));
      if (json_out)
        std::cout << polynomial_json(h).dump(2) << "\n";
      else
        std::cout << h.str() << "\n";
    } else if (cmd_myc->parsed()) {
      write_graph(hosoya::mycielskian(load_graph(input, spec)), output);
    } else if (cmd_indices->parsed()) {
      hosoya::Graph g = load_graph(input, spec);
      auto report = hosoya::compute_index_report(g, with_vrc);
      if (json_out)
        std::cout << hosoya::index_report_json(report).dump(2) << "\n";
      else
        print_index_report(report, decimal);
    } else if (cmd_gen->parsed()) {
      write_graph(hosoya::parse_generator_spec(spec), output);
    } else if (cmd_verify->parsed()) {
      auto report = hosoya::run_verification(vopt);
      if (json_out)
        std::cout << hosoya::verify_report_json(report).dump(2) << "\n";
      else
        std::cout << hosoya::render_verify_report(report);
      if (!report.all_passed()) return kExitVerifyFailed;
    }
  } catch (const std::overflow_error& e) {
    std::cerr << "arithmetic overflow: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
