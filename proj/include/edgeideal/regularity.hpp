#ifndef EDGEIDEAL_REGULARITY_HPP
#define EDGEIDEAL_REGULARITY_HPP

// Regular edges and regular sequences of edge binomials.
//
// An edge {x,y} is regular when x+y (equivalently x-y) is a nonzerodivisor
// on R/I(G).  The combinatorial criterion: neither endpoint carries a loop,
// every a in N(x)\{y} and b in N(y)\{x} are distinct and adjacent, and for
// graphs with loops at most one of the two open neighbourhoods meets the
// loop set.  The independent oracle checks the ideal-theoretic definition
// directly: no associated prime contains both endpoints.

#include <optional>
#include <utility>
#include <vector>

#include "edgeideal/covers.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

// Property P of an edge {x,y}: false outright if x or y has a loop;
// otherwise every a in N(x)\{y} and b in N(y)\{x} must satisfy a != b and
// {a,b} in E.  (So the two punctured neighbourhoods are disjoint and joined
// completely.)
inline bool has_property_p(const Graph& g, int x, int y) {
  if (!g.has_edge(x, y))
    throw std::domain_error("has_property_p: not an edge of the graph");
  if (g.has_loop(x) || g.has_loop(y)) return false;
  VertexSet as = g.neighbors(x) & ~vbit(y);
  VertexSet bs = g.neighbors(y) & ~vbit(x);
  if (as & bs) return false;  // a common neighbour would give a == b
  for (VertexSet s = as; s; s &= s - 1) {
    int a = lowest_vertex(s);
    if ((bs & ~g.neighbors(a)) != 0) return false;  // some b not adjacent to a
  }
  return true;
}

// Combinatorial characterization of regularity.  For simple graphs this is
// Property P alone; with loops, additionally at most one of N(x), N(y) may
// meet the loop set.
inline bool is_regular_edge(const Graph& g, int x, int y) {
  if (!has_property_p(g, x, y)) return false;
  bool xl = (g.neighbors(x) & g.loop_set()) != 0;
  bool yl = (g.neighbors(y) & g.loop_set()) != 0;
  return !(xl && yl);
}

// Ideal-theoretic definition, checked against the brute-force associated
// primes: x+y is a zerodivisor iff it lies in some associated prime, and a
// prime generated by variables contains x+y iff it contains both x and y.
inline bool is_regular_edge_oracle(const Graph& g, int x, int y) {
  if (!g.has_edge(x, y))
    throw std::domain_error("is_regular_edge_oracle: not an edge");
  VertexSet both = vbit(x) | vbit(y);
  for (const auto& q : associated_primes(g))
    if (q.contains(both)) return false;
  return true;
}

// Regularity of the binomial u+v for a NON-edge {u,v} of a simple graph:
// equivalent to Property P of {u,v} in the graph with that edge added.
inline bool is_binomial_regular(const Graph& g, int u, int v) {
  if (!g.is_simple())
    throw std::domain_error("is_binomial_regular: graph must be simple");
  if (u == v) throw std::domain_error("is_binomial_regular: u == v");
  if (g.has_edge(u, v))
    throw std::domain_error(
        "is_binomial_regular: {u,v} is an edge; use is_regular_edge");
  Graph h = g;
  h.add_edge(u, v);
  return has_property_p(h, u, v);
}

// A successful check: the matching in order, each pair oriented so that its
// first vertex is the designated x_i.  For steps beyond the first, x_i is
// the endpoint whose neighbourhood avoids every earlier matched vertex and
// every loop vertex.
struct RegularSequenceCertificate {
  std::vector<std::pair<int, int>> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
};

// Decide whether x_1+y_1, ..., x_s+y_s is a regular sequence on R/I(G) for
// the given ordered matching, reorienting pairs as needed.  Requirements:
// every edge of m is regular in G itself, and from the second step on some
// endpoint's neighbourhood must avoid all earlier matched vertices and all
// loop vertices.  Those conditions depend only on the *set* of earlier
// matched vertices, never on earlier orientations, so the greedy
// first-orientation-that-works choice is complete.  Returns nullopt on
// failure; a non-matching input is a domain error, not a failure.
inline std::optional<RegularSequenceCertificate> check_regular_sequence(
    const Graph& g, const Matching& m) {
  validate_matching(g, m);
  RegularSequenceCertificate cert;
  VertexSet earlier = 0;
  const VertexSet loops = g.loop_set();
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    auto [u, v] = m.edges[i];
    if (!is_regular_edge(g, u, v)) return std::nullopt;
    if (i == 0) {
      cert.steps.push_back({u, v});
    } else if ((g.neighbors(u) & (earlier | loops)) == 0) {
      cert.steps.push_back({u, v});
    } else if ((g.neighbors(v) & (earlier | loops)) == 0) {
      cert.steps.push_back({v, u});
    } else {
      return std::nullopt;
    }
    earlier |= vbit(u) | vbit(v);
  }
  return cert;
}

// Longest certificate obtainable from the regular edges of g, by exhaustive
// backtracking over sequences of regular edges.  Candidates are tried in
// canonical edge order at every position (the sequence ORDER matters: the
// first step carries no neighbourhood condition, later ones do), and the
// first maximum found wins, so the result is deterministic.  An empty
// certificate means g has no regular edge at all.
inline RegularSequenceCertificate find_regular_matching(const Graph& g) {
  std::vector<std::pair<int, int>> regular;
  for (auto [u, v] : g.edges())
    if (is_regular_edge(g, u, v)) regular.push_back({u, v});

  RegularSequenceCertificate best;
  std::vector<std::pair<int, int>> cur;
  const VertexSet loops = g.loop_set();

  auto dfs = [&](auto&& self, VertexSet used) -> void {
    if (cur.size() > best.steps.size()) best.steps = cur;
    for (auto [u, v] : regular) {
      VertexSet uv = vbit(u) | vbit(v);
      if (used & uv) continue;
      std::pair<int, int> oriented;
      if (cur.empty())
        oriented = {u, v};
      else if ((g.neighbors(u) & (used | loops)) == 0)
        oriented = {u, v};
      else if ((g.neighbors(v) & (used | loops)) == 0)
        oriented = {v, u};
      else
        continue;
      cur.push_back(oriented);
      self(self, used | uv);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace edgeideal

#endif
