#ifndef EDGEIDEAL_REDUCTIONS_HPP
#define EDGEIDEAL_REDUCTIONS_HPP

// Edge contraction and edge polarization, the two reductions that realize a
// regular binomial step on the graph side.
//
// Contracting an edge {x,y} into its survivor x identifies y with x: every
// edge at y is rerouted to x, and because {x,y} itself was an edge the
// identification puts x^2 into the ideal, i.e. a loop appears at x.
// Polarizing keeps y but strips it down to a leaf hanging off x: every
// OTHER edge at y is rerouted to x, while {x,y} stays.  Loops migrate to
// the survivor in both operations.  Vertices are never relabelled.

#include <string>
#include <utility>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

enum class ReductionKind { contract, polarize };

inline const char* to_string(ReductionKind k) {
  return k == ReductionKind::contract ? "contract" : "polarize";
}

struct ReductionStep {
  std::string u, v;        // the edge, survivor first
  ReductionKind kind;
};

struct ReductionTrace {
  Graph source;
  Graph result;
  std::vector<ReductionStep> steps;
};

// Identify `absorbed` with `survivor` (not necessarily adjacent): edges at
// absorbed are rerouted to survivor, an edge between the two becomes a loop
// at the survivor, and a loop at absorbed migrates to the survivor.  The
// absorbed vertex disappears; the rest keep their names and relative order.
inline Graph merge_vertices(const Graph& g, int survivor, int absorbed) {
  if (survivor == absorbed)
    throw std::domain_error("merge_vertices: endpoints coincide");
  Graph r;
  std::vector<int> pos(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != absorbed) pos[v] = r.find_or_add_vertex(g.name(v));
  int s = pos[survivor];
  for (auto [a, b] : g.edges()) {
    int na = (a == absorbed) ? s : pos[a];
    int nb = (b == absorbed) ? s : pos[b];
    if (na == nb)
      r.add_loop(s);  // the {survivor, absorbed} edge collapses to x^2
    else
      r.add_edge(na, nb);
  }
  for (VertexSet l = g.loop_set(); l; l &= l - 1) {
    int v = lowest_vertex(l);
    r.add_loop(v == absorbed ? s : pos[v]);
  }
  return r;
}

// Contraction G_e of an actual edge e = {x,y}, survivor x.  Always creates
// the loop at x.
inline Graph contract_edge(const Graph& g, int x, int y) {
  if (!g.has_edge(x, y))
    throw std::domain_error("contract_edge: not an edge of the graph");
  return merge_vertices(g, x, y);
}

// Polarization G^e of an edge e = {x,y}, survivor x: reroute every edge
// {a,y} with a != x to {a,x}, keep {x,y}, so y ends up a leaf on x.  A loop
// at y migrates to x.
inline Graph polarize_edge(const Graph& g, int x, int y) {
  if (!g.has_edge(x, y))
    throw std::domain_error("polarize_edge: not an edge of the graph");
  Graph r;
  for (int v = 0; v < g.vertex_count(); ++v) r.find_or_add_vertex(g.name(v));
  for (auto [a, b] : g.edges()) {
    if (a == y || b == y) {
      int other = (a == y) ? b : a;
      if (other == x)
        r.add_edge(x, y);
      else if (other != x)
        r.add_edge(other, x);
    } else {
      r.add_edge(a, b);
    }
  }
  for (VertexSet l = g.loop_set(); l; l &= l - 1) {
    int v = lowest_vertex(l);
    r.add_loop(v == y ? x : v);
  }
  return r;
}

// Fold a whole oriented matching through g, left to right, using each
// pair's recorded orientation (first vertex survives).  The matching is
// validated against g up front; pairwise disjointness guarantees each edge
// is still present when its step executes.  Steps are recorded by name so
// the trace stays meaningful across the intermediate graphs.
inline ReductionTrace apply_sequence(const Graph& g, const Matching& m,
                                     ReductionKind kind) {
  validate_matching(g, m);
  ReductionTrace trace;
  trace.source = g;
  Graph cur = g;
  for (auto [x, y] : m.edges) {
    std::string xn = g.name(x), yn = g.name(y);
    int cx = cur.require_vertex(xn);
    int cy = cur.require_vertex(yn);
    cur = (kind == ReductionKind::contract) ? contract_edge(cur, cx, cy)
                                            : polarize_edge(cur, cx, cy);
    trace.steps.push_back({xn, yn, kind});
  }
  trace.result = cur;
  return trace;
}

}  // namespace edgeideal

#endif
