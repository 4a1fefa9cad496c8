#ifndef EDGEIDEAL_REPORT_HPP
#define EDGEIDEAL_REPORT_HPP

// Single-graph analysis report: per-edge regularity flags, coveredness,
// a maximal regular sequence certificate, and the Hilbert series summary,
// rendered as deterministic text (same graph, same bytes).

#include <string>
#include <vector>

#include "edgeideal/covers.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/hilbert.hpp"
#include "edgeideal/regularity.hpp"

namespace edgeideal {

// "x1 + x2, x4 + x3" — each step of the certificate as the binomial sum of
// its endpoints, designated (surviving) vertex first.
inline std::string render_certificate(const Graph& g,
                                      const RegularSequenceCertificate& cert) {
  if (cert.steps.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    if (i) out += ", ";
    out += g.name(cert.steps[i].first);
    out += " + ";
    out += g.name(cert.steps[i].second);
  }
  return out;
}

struct AnalysisReport {
  int vertices = 0;
  int edges = 0;
  int loops = 0;
  // "edge a b: property_p=yes regular=no", canonical edge order
  std::vector<std::string> edge_lines;
  std::string coveredness;   // class name, or "n/a" when loops are present
  std::string size_identity; // "holds" / "fails" / "n/a"
  RegularSequenceCertificate certificate;
  std::string certificate_text;
  SeriesReport series;
  std::vector<std::string> notes;

  std::string to_text() const {
    std::string out = "graph: " + std::to_string(vertices) + " vertices, " +
                      std::to_string(edges) + " edges, " +
                      std::to_string(loops) + " loops\n";
    for (const auto& l : edge_lines) out += l + "\n";
    out += "coveredness: " + coveredness + "\n";
    out += "size_identity: " + size_identity + "\n";
    out += "certificate_length: " +
           std::to_string(certificate.steps.size()) + "\n";
    out += "certificate: " + certificate_text + "\n";
    out += series.to_text();
    if (notes.empty()) {
      out += "notes: (none)\n";
    } else {
      out += "notes:\n";
      for (const auto& nt : notes) out += "- " + nt + "\n";
    }
    return out;
  }
};

inline AnalysisReport analyze(const Graph& g) {
  AnalysisReport r;
  r.vertices = g.vertex_count();
  r.edges = static_cast<int>(g.edges().size());
  r.loops = set_size(g.loop_set());

  for (const auto& [u, v] : g.edges()) {
    std::string line = "edge " + g.name(u) + " " + g.name(v) +
                       ": property_p=";
    line += has_property_p(g, u, v) ? "yes" : "no";
    line += " regular=";
    line += is_regular_edge(g, u, v) ? "yes" : "no";
    r.edge_lines.push_back(line);
  }

  bool very = false;
  if (g.is_simple()) {
    Coveredness c = coveredness_class(g);
    r.coveredness = to_string(c);
    very = c == Coveredness::very_well_covered;
  } else {
    r.coveredness = "n/a";
  }

  bool has_isolated = false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_isolated(v)) has_isolated = true;
  if (g.is_simple() && !has_isolated) {
    bool identity = levit_mandrescu_holds(g);
    r.size_identity = identity ? "holds" : "fails";
    if (identity != very)
      r.notes.push_back(
          "the size identity |V|-height == |E|-matching (" + r.size_identity +
          ") does not match very-well-covered status here; the identity does "
          "not characterize very-well-covered graphs");
  } else {
    r.size_identity = "n/a";
  }

  r.certificate = find_regular_matching(g);
  r.certificate_text = render_certificate(g, r.certificate);
  r.series = series_report(g);
  return r;
}

}  // namespace edgeideal

#endif  // EDGEIDEAL_REPORT_HPP
