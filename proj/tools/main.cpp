// Command-line front end over the edge-ideal library: per-graph analysis,
// contraction/polarization along a matching, regular-sequence search, and
// the self-verification suites.  Exit codes: 0 success, 1 verification
// failure, 2 usage/parse error, 3 capacity error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/reductions.hpp"
#include "edgeideal/regularity.hpp"
#include "edgeideal/report.hpp"
#include "edgeideal/verify.hpp"

namespace {

edgeideal::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return edgeideal::parse_edge_list(ss.str());
}

edgeideal::Matching parse_matching(const edgeideal::Graph& g,
                                   const std::vector<std::string>& edges,
                                   const std::vector<std::string>& survivors) {
  if (!survivors.empty() && survivors.size() != edges.size())
    throw std::invalid_argument(
        "--survivors must be given once per --edges entry");
  edgeideal::Matching m;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string& spec = edges[i];
    auto comma = spec.find(',');
    if (comma == std::string::npos ||
        spec.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument("bad --edges value '" + spec +
                                  "': expected u,v");
    std::string u = spec.substr(0, comma);
    std::string v = spec.substr(comma + 1);
    int ui = g.require_vertex(u);
    int vi = g.require_vertex(v);
    if (!survivors.empty()) {
      if (survivors[i] == v)
        std::swap(ui, vi);
      else if (survivors[i] != u)
        throw std::invalid_argument("survivor '" + survivors[i] +
                                    "' is not an endpoint of " + spec);
    }
    m.edges.push_back({ui, vi});
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for edge ideals of graphs with loops"};
  app.require_subcommand(1);

  std::string path;
  std::string kind = "contract";
  std::string level = "quick";
  std::string corpus = "corpus";
  std::vector<std::string> edges;
  std::vector<std::string> survivors;

  auto* cmd_analyze =
      app.add_subcommand("analyze", "full report for one edge-list file");
  cmd_analyze->add_option("file", path, "edge-list file")->required();

  auto* cmd_reduce = app.add_subcommand(
      "reduce", "contract or polarize a disjoint edge sequence");
  cmd_reduce->add_option("file", path, "edge-list file")->required();
  cmd_reduce->add_option("--edges", edges,
                         "edge u,v (repeatable; u survives by default)");
  cmd_reduce->add_option("--kind", kind, "contract or polarize")
      ->check(CLI::IsMember({"contract", "polarize"}));
  cmd_reduce->add_option("--survivors", survivors,
                         "surviving endpoint, once per --edges entry");

  auto* cmd_regseq = app.add_subcommand(
      "regseq", "longest regular sequence of edge binomials");
  cmd_regseq->add_option("file", path, "edge-list file")->required();

  auto* cmd_verify =
      app.add_subcommand("verify", "run the self-verification suites");
  cmd_verify->add_option("--level", level, "quick or exhaustive")
      ->check(CLI::IsMember({"quick", "exhaustive"}));
  cmd_verify->add_option("--corpus", corpus, "corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_analyze) {
      std::cout << edgeideal::analyze(load_graph(path)).to_text();
      return 0;
    }
    if (*cmd_reduce) {
      edgeideal::Graph g = load_graph(path);
      edgeideal::Matching m = parse_matching(g, edges, survivors);
      auto k = kind == "contract" ? edgeideal::ReductionKind::contract
                                  : edgeideal::ReductionKind::polarize;
      auto trace = edgeideal::apply_sequence(g, m, k);
      std::string out;
      for (const auto& st : trace.steps)
        out += std::string("# ") + edgeideal::to_string(st.kind) + " " + st.u +
               " " + st.v + " -> " + st.u + "\n";
      out += edgeideal::serialize_graph(trace.result);
      std::cout << out;
      return 0;
    }
    if (*cmd_regseq) {
      edgeideal::Graph g = load_graph(path);
      auto cert = edgeideal::find_regular_matching(g);
      std::string out = "steps: " + std::to_string(cert.size()) + "\n";
      for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        auto [x, y] = cert.steps[i];
        out += "step " + std::to_string(i + 1) + ": " + g.name(x) + " " +
               g.name(y) + " (survivor " + g.name(x) + ")\n";
      }
      out += "sequence: " + edgeideal::render_certificate(g, cert) + "\n";
      std::cout << out;
      return 0;
    }
    if (*cmd_verify) {
      auto summary = edgeideal::run_verify(level == "exhaustive", corpus);
      std::cout << summary.to_text();
      return summary.ok() ? 0 : 1;
    }
  } catch (const edgeideal::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
