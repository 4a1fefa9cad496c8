#ifndef EDGEIDEAL_COVERS_HPP
#define EDGEIDEAL_COVERS_HPP

// Vertex covers, coveredness classes, and the associated primes of the edge
// ideal.  For a simple graph the associated primes are exactly the monomial
// primes generated by minimal vertex covers; with loops present extra
// embedded primes appear, and an independent brute-force oracle computes
// them from first principles (colon ideals by monomials).

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

// A prime ideal generated by a set of variables, identified with that set.
struct MonomialPrime {
  VertexSet vars = 0;

  bool contains(VertexSet s) const { return (vars & s) == s; }

  friend bool operator==(MonomialPrime a, MonomialPrime b) {
    return a.vars == b.vars;
  }
  friend bool operator<(MonomialPrime a, MonomialPrime b) {
    return vertex_set_less(a.vars, b.vars);
  }
};

// Minimal vertex covers, loops included: X must meet every non-loop edge and
// contain every loop vertex (only v itself covers the loop at v).
// Equivalently V \ X is a maximal independent set disjoint from the loop
// vertices.  Canonical order: size, then lexicographic.
inline std::vector<MonomialPrime> enumerate_minimal_vertex_covers(
    const Graph& g) {
  std::vector<MonomialPrime> out;
  const VertexSet full = g.full_set();
  const VertexSet allowed = full & ~g.loop_set();
  for_each_independent_subset(g, allowed, [&](VertexSet t) {
    for (VertexSet c = allowed & ~t; c; c &= c - 1) {  // maximality check
      int v = lowest_vertex(c);
      if ((g.neighbors(v) & t) == 0) return;
    }
    out.push_back({full & ~t});
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Height of the edge ideal = size of a smallest vertex cover (loop-aware).
inline int height(const Graph& g) {
  return g.vertex_count() -
         max_independent_set_size(g, g.full_set() & ~g.loop_set());
}

enum class Coveredness { not_well_covered, well_covered, very_well_covered };

inline const char* to_string(Coveredness c) {
  switch (c) {
    case Coveredness::not_well_covered: return "not_well_covered";
    case Coveredness::well_covered: return "well_covered";
    default: return "very_well_covered";
  }
}

// Well covered: all minimal covers share one size.  Very well covered: well
// covered, no isolated vertices, and that size is |V|/2.  Simple graphs only.
inline Coveredness coveredness_class(const Graph& g) {
  if (!g.is_simple())
    throw std::domain_error("coveredness_class: graph must be simple");
  auto covers = enumerate_minimal_vertex_covers(g);
  int sz = set_size(covers.front().vars);
  for (const auto& c : covers)
    if (set_size(c.vars) != sz) return Coveredness::not_well_covered;
  bool isolated = false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_isolated(v)) isolated = true;
  if (!isolated && 2 * sz == g.vertex_count())
    return Coveredness::very_well_covered;
  return Coveredness::well_covered;
}

// The identity |V| - height == |E| - matching_number, evaluated verbatim.
// Simple graphs without isolated vertices only.
inline bool levit_mandrescu_holds(const Graph& g) {
  if (!g.is_simple())
    throw std::domain_error("levit_mandrescu_holds: graph must be simple");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_isolated(v))
      throw std::domain_error("levit_mandrescu_holds: isolated vertex");
  return g.vertex_count() - height(g) ==
         g.edge_count() - matching_stats(g).matching_number;
}

// ---- associated primes, by brute force -----------------------------------

// A monomial in the ring's variables, one exponent per vertex index.
struct Monomial {
  std::vector<std::uint8_t> e;

  explicit Monomial(int nvars) : e(nvars, 0) {}

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  // this / gcd(this, m): the generator's image in the colon ideal (I : m).
  Monomial colon_by(const Monomial& m) const {
    Monomial r(static_cast<int>(e.size()));
    for (std::size_t i = 0; i < e.size(); ++i)
      r.e[i] = e[i] > m.e[i] ? e[i] - m.e[i] : 0;
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }
};

// Generators of the edge ideal: x*y per edge, then v^2 per loop.
inline std::vector<Monomial> edge_ideal_generators(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    Monomial m(g.vertex_count());
    m.e[u] = 1;
    m.e[v] = 1;
    gens.push_back(m);
  }
  for (VertexSet l = g.loop_set(); l; l &= l - 1) {
    Monomial m(g.vertex_count());
    m.e[lowest_vertex(l)] = 2;
    gens.push_back(m);
  }
  return gens;
}

// Ass(R/I) for the edge ideal of g, via colon ideals: P is associated iff
// P = (I : m) for some monomial m.  Since (I : m) only depends on
// min(exponent, m) per generator, the divisors of lcm(generators) exhaust
// all possible colon ideals, so this walk is complete.  For the zero ideal
// (no edges, no loops) the answer is a single empty prime, matching the
// minimal-cover enumeration of an edgeless graph.
inline std::vector<MonomialPrime> associated_primes(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20)
    throw capacity_error("associated_primes: limited to 20 vertices");
  auto gens = edge_ideal_generators(g);

  Monomial lcm(n);
  for (const auto& gi : gens)
    for (int i = 0; i < n; ++i) lcm.e[i] = std::max(lcm.e[i], gi.e[i]);

  // Each generator involves at most two variables (an edge uv with exponent
  // one each, or a loop v with exponent two); record them so each colon
  // ideal can be examined without building monomials.
  std::vector<std::pair<int, int>> gvars;
  for (const auto& gi : gens) {
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      if (!gi.e[i]) continue;
      if (a < 0) a = i;
      else b = i;
      if (gi.e[i] == 2) b = i;
    }
    gvars.emplace_back(a, b < 0 ? a : b);
  }

  std::set<VertexSet> found;
  Monomial m(n);
  for (;;) {
    // Examine (I : m), generated by the quotients q_i = g_i / gcd(g_i, m).
    // A degree-0 quotient means m itself lies in I.  Otherwise (I : m)
    // equals the monomial prime on the variables appearing as degree-1
    // quotients iff every quotient is divisible by one of those variables;
    // that is exactly when (I : m) is generated by variables.
    bool unit = false;
    VertexSet vars = 0;
    for (const auto& [a, b] : gvars) {
      int d;
      if (a == b)
        d = 2 - std::min<int>(m.e[a], 2);
      else
        d = (m.e[a] ? 0 : 1) + (m.e[b] ? 0 : 1);
      if (d == 0) {
        unit = true;
        break;
      }
      if (d == 1) vars |= (a != b && m.e[a]) ? vbit(b) : vbit(a);
    }
    if (!unit) {
      bool prime = true;
      for (const auto& [a, b] : gvars) {
        VertexSet support = 0;
        if (m.e[a] < (a == b ? 2 : 1)) support |= vbit(a);
        if (a != b && !m.e[b]) support |= vbit(b);
        if (!(support & vars)) {
          prime = false;
          break;
        }
      }
      if (prime) found.insert(vars);
    }
    // Next divisor of lcm (odometer over exponent vectors).
    int i = 0;
    while (i < n && m.e[i] == lcm.e[i]) m.e[i++] = 0;
    if (i == n) break;
    ++m.e[i];
  }

  std::vector<MonomialPrime> out;
  for (VertexSet s : found) out.push_back({s});
  std::sort(out.begin(), out.end());
  return out;
}

// Structural candidate list for loop graphs: for every subset A of the loop
// vertices, take N[A] together with any minimal vertex cover of the graph
// induced on V \ N[A].  Contains Ass(R/I); generally a proper superset.
inline std::vector<MonomialPrime> loop_extended_primes(const Graph& g) {
  if (g.vertex_count() > 20)
    throw capacity_error("loop_extended_primes: limited to 20 vertices");
  std::set<VertexSet> out;
  const VertexSet loops = g.loop_set();
  VertexSet a = loops;
  for (;;) {
    VertexSet closed = 0;
    for (VertexSet t = a; t; t &= t - 1)
      closed |= g.neighbors(lowest_vertex(t), true);
    VertexSet rest = g.full_set() & ~closed;
    Graph h = induced_subgraph(g, rest);
    std::vector<int> back;  // h index -> g index
    for (VertexSet t = rest; t; t &= t - 1) back.push_back(lowest_vertex(t));
    for (const auto& k : enumerate_minimal_vertex_covers(h)) {
      VertexSet lifted = closed;
      for (VertexSet t = k.vars; t; t &= t - 1)
        lifted |= vbit(back[lowest_vertex(t)]);
      out.insert(lifted);
    }
    if (a == 0) break;
    a = (a - 1) & loops;
  }
  std::vector<MonomialPrime> res;
  for (VertexSet s : out) res.push_back({s});
  std::sort(res.begin(), res.end());
  return res;
}

}  // namespace edgeideal

#endif
