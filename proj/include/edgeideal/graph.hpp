#ifndef EDGEIDEAL_GRAPH_HPP
#define EDGEIDEAL_GRAPH_HPP

// Finite graphs with optional loops, the universal input object of this
// toolkit.  A graph stands for its edge ideal: one squarefree quadric x*y per
// edge and one square v^2 per loop.  Vertices carry user-visible names; dense
// indices follow first appearance in the source document, so every
// enumeration below is deterministic for a given input.
//
// Vertex subsets are 64-bit masks.  That caps graphs at 64 vertices, which is
// a hard capacity error by design: everything here is exact and desk-scale.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeideal/errors.hpp"

namespace edgeideal {

using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Canonical order on vertex sets: by cardinality, then lexicographic on the
// sorted index lists.  E.g. {b} < {a,c} < {a,d} < {b,d}.
inline bool vertex_set_less(VertexSet a, VertexSet b) {
  if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
  while (a && b) {
    int va = lowest_vertex(a), vu = lowest_vertex(b);
    if (va != vu) return va < vu;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

class Graph {
 public:
  static constexpr int max_vertices = 64;

  Graph() = default;

  // ---- construction ------------------------------------------------------

  int find_or_add_vertex(const std::string& name) {
    if (auto v = find_vertex(name)) return *v;
    if (n_ == max_vertices)
      throw capacity_error("graph exceeds " + std::to_string(max_vertices) +
                           " vertices");
    names_.push_back(name);
    adj_.push_back(0);
    return n_++;
  }

  // Both endpoints must already exist and differ; re-adding is a no-op
  // (edges are a set, the ideal has no multiplicity).
  void add_edge(int u, int v) {
    check_index(u);
    check_index(v);
    if (u == v) throw std::domain_error("add_edge: loops go through add_loop");
    if (has_edge(u, v)) return;
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
    std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  }

  void add_loop(int v) {
    check_index(v);
    loops_ |= vbit(v);
  }

  // ---- accessors ---------------------------------------------------------

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int loop_count() const { return set_size(loops_); }
  bool is_simple() const { return loops_ == 0; }

  const std::string& name(int v) const {
    check_index(v);
    return names_[v];
  }

  std::optional<int> find_vertex(std::string_view nm) const {
    for (int v = 0; v < n_; ++v)
      if (names_[v] == nm) return v;
    return std::nullopt;
  }

  int require_vertex(std::string_view nm) const {
    if (auto v = find_vertex(nm)) return *v;
    throw std::domain_error("unknown vertex '" + std::string(nm) + "'");
  }

  // Edges as index pairs (u < v), sorted; this is the canonical edge order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    check_index(u);
    check_index(v);
    return u != v && (adj_[u] & vbit(v));
  }

  bool has_loop(int v) const {
    check_index(v);
    return (loops_ & vbit(v)) != 0;
  }

  VertexSet loop_set() const { return loops_; }

  VertexSet full_set() const {
    return n_ == 64 ? ~VertexSet{0} : (vbit(n_) - 1);
  }

  // Open neighbourhood never contains v itself, loop or not; the closed one
  // always does.
  VertexSet neighbors(int v, bool closed = false) const {
    check_index(v);
    return closed ? (adj_[v] | vbit(v)) : adj_[v];
  }

  int degree(int v) const { return set_size(neighbors(v)); }

  // A leaf sits in exactly one edge and carries no loop.
  bool is_leaf(int v) const { return degree(v) == 1 && !has_loop(v); }

  // No incident edge and no loop: contributes a free variable to the ring.
  bool is_isolated(int v) const { return degree(v) == 0 && !has_loop(v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_ && a.loops_ == b.loops_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  void check_index(int v) const {
    if (v < 0 || v >= n_) throw std::domain_error("vertex index out of range");
  }

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;  // open neighbourhoods
  VertexSet loops_ = 0;
  std::vector<std::pair<int, int>> edges_;  // sorted (min,max) pairs
};

// ---- edge-list document format ------------------------------------------
//
//   # comment            (first non-blank character '#')
//   u v                  edge between distinct names, loop when u == v
//   u                    declares u (isolated unless mentioned again)
//
// Tokens match [A-Za-z0-9_]+; three or more tokens on a line is an error.
// Duplicate lines are idempotent.  Vertex indices follow first appearance.

inline bool valid_token(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline Graph parse_edge_list(std::string_view text) {
  Graph g;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i > start) toks.push_back(line.substr(start, i - start));
    }
    if (toks.empty()) continue;
    if (toks[0][0] == '#') continue;
    if (toks.size() > 2) throw parse_error(lineno, "expected at most 2 tokens");
    for (auto t : toks)
      if (!valid_token(t))
        throw parse_error(lineno, "bad token '" + std::string(t) +
                                      "' (want [A-Za-z0-9_]+)");
    int u = g.find_or_add_vertex(std::string(toks[0]));
    if (toks.size() == 1) continue;
    int v = g.find_or_add_vertex(std::string(toks[1]));
    if (u == v)
      g.add_loop(u);
    else
      g.add_edge(u, v);
  }
  return g;
}

// Inverse of parse_edge_list including vertex order: parsing the output
// reproduces the graph exactly.  Incidence lines are emitted in canonical
// order (isolated declarations, then loops, then edges sorted by index
// pair), and if that ordering would discover vertices out of order a full
// declaration preamble is prepended.
inline std::string serialize_graph(const Graph& g) {
  std::vector<std::pair<std::pair<int, int>, std::string>> lines;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_isolated(v)) lines.push_back({{v, -1}, g.name(v)});
    if (g.has_loop(v)) lines.push_back({{v, v}, g.name(v) + " " + g.name(v)});
  }
  for (auto [u, v] : g.edges())
    lines.push_back({{u, v}, g.name(u) + " " + g.name(v)});
  std::sort(lines.begin(), lines.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Does replaying these lines meet the vertices in index order?
  std::vector<bool> seen(g.vertex_count(), false);
  int next = 0;
  bool in_order = true;
  for (const auto& [key, _] : lines) {
    for (int v : {key.first, key.second}) {
      if (v < 0 || seen[v]) continue;
      if (v != next) {
        in_order = false;
        break;
      }
      seen[v] = true;
      ++next;
    }
    if (!in_order) break;
  }

  bool preamble = !in_order || next < g.vertex_count();
  std::string out;
  if (preamble)
    for (int v = 0; v < g.vertex_count(); ++v) out += g.name(v) + "\n";
  for (const auto& [key, text] : lines) {
    if (key.second == -1 && preamble) continue;  // already declared above
    out += text + "\n";
  }
  return out;
}

// Induced subgraph on `keep`; surviving vertices inherit their relative
// order (and names) from g.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  Graph h;
  std::vector<int> pos(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep & vbit(v)) pos[v] = h.find_or_add_vertex(g.name(v));
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) h.add_edge(pos[u], pos[v]);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (pos[v] >= 0 && g.has_loop(v)) h.add_loop(pos[v]);
  return h;
}

// ---- independent sets ----------------------------------------------------
//
// S is independent when no (non-loop) edge joins two of its members.  Loop
// vertices may belong to S: a loop bounds the exponent of its variable in
// the quotient ring, it does not exclude the vertex.

template <typename F>
void for_each_independent_subset(const Graph& g, VertexSet allowed, F&& visit) {
  auto rec = [&](auto&& self, VertexSet chosen, VertexSet avail) -> void {
    if (!avail) {
      visit(chosen);
      return;
    }
    int v = lowest_vertex(avail);
    self(self, chosen, avail & ~vbit(v));
    self(self, chosen | vbit(v), avail & ~(vbit(v) | g.neighbors(v)));
  };
  rec(rec, 0, allowed);
}

inline int max_independent_set_size(const Graph& g, VertexSet allowed) {
  int best = 0;
  for_each_independent_subset(g, allowed, [&](VertexSet s) {
    best = std::max(best, set_size(s));
  });
  return best;
}

// All independent sets (the empty set included), canonically ordered by size
// then lexicographically; optionally only those of size <= max_size.
inline std::vector<VertexSet> enumerate_independent_sets(
    const Graph& g, std::optional<int> max_size = std::nullopt) {
  std::vector<VertexSet> out;
  for_each_independent_subset(g, g.full_set(), [&](VertexSet s) {
    if (!max_size || set_size(s) <= *max_size) out.push_back(s);
  });
  std::sort(out.begin(), out.end(), vertex_set_less);
  return out;
}

// ---- matchings -----------------------------------------------------------

// An ordered, oriented matching: the first vertex of each pair is the
// designated one (the survivor under contraction, the x_i of a regular
// sequence step).  Must consist of pairwise disjoint edges of the host.
struct Matching {
  std::vector<std::pair<int, int>> edges;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
};

inline void validate_matching(const Graph& g, const Matching& m) {
  VertexSet used = 0;
  for (auto [u, v] : m.edges) {
    if (!g.has_edge(u, v))
      throw std::domain_error("matching edge {" + g.name(u) + "," + g.name(v) +
                              "} is not an edge of the graph");
    if (used & (vbit(u) | vbit(v)))
      throw std::domain_error("matching edges are not pairwise disjoint");
    used |= vbit(u) | vbit(v);
  }
}

inline bool is_perfect_matching(const Graph& g, const Matching& m) {
  validate_matching(g, m);
  VertexSet used = 0;
  for (auto [u, v] : m.edges) used |= vbit(u) | vbit(v);
  return used == g.full_set();
}

// True iff the listed edges are pairwise disjoint and no edge of g joins
// endpoints of two different listed edges.  Each listed pair must be an edge
// of g (loops never qualify).
inline bool is_induced_matching(const Graph& g,
                                const std::vector<std::pair<int, int>>& es) {
  for (auto [u, v] : es)
    if (!g.has_edge(u, v))
      throw std::domain_error("is_induced_matching: not an edge of the graph");
  VertexSet used = 0;
  for (auto [u, v] : es) {
    if (used & (vbit(u) | vbit(v))) return false;
    used |= vbit(u) | vbit(v);
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    VertexSet reach = g.neighbors(es[i].first) | g.neighbors(es[i].second);
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (reach & (vbit(es[j].first) | vbit(es[j].second))) return false;
  }
  return true;
}

namespace detail {

inline int max_matching_size(const Graph& g, VertexSet avail) {
  int v = -1;
  for (VertexSet s = avail; s; s &= s - 1) {
    int c = lowest_vertex(s);
    if (g.neighbors(c) & avail) {
      v = c;
      break;
    }
  }
  if (v < 0) return 0;
  int best = max_matching_size(g, avail & ~vbit(v));  // v left unmatched
  for (VertexSet nb = g.neighbors(v) & avail; nb; nb &= nb - 1) {
    int u = lowest_vertex(nb);
    best = std::max(
        best, 1 + max_matching_size(g, avail & ~(vbit(v) | vbit(u))));
  }
  return best;
}

// For induced matchings, picking the edge {v,u} removes both closed
// neighbourhoods from play.
inline int max_induced_matching_size(const Graph& g, VertexSet avail) {
  int v = -1;
  for (VertexSet s = avail; s; s &= s - 1) {
    int c = lowest_vertex(s);
    if (g.neighbors(c) & avail) {
      v = c;
      break;
    }
  }
  if (v < 0) return 0;
  int best = max_induced_matching_size(g, avail & ~vbit(v));
  for (VertexSet nb = g.neighbors(v) & avail; nb; nb &= nb - 1) {
    int u = lowest_vertex(nb);
    VertexSet rest = avail & ~(g.neighbors(v, true) | g.neighbors(u, true));
    best = std::max(best, 1 + max_induced_matching_size(g, rest));
  }
  return best;
}

}  // namespace detail

struct MatchingStats {
  int matching_number = 0;
  int induced_matching_number = 0;
};

inline MatchingStats matching_stats(const Graph& g) {
  return {detail::max_matching_size(g, g.full_set()),
          detail::max_induced_matching_size(g, g.full_set())};
}

// Pretty-print a vertex set as "(a,c)" in index order.
inline std::string format_vertex_set(const Graph& g, VertexSet s) {
  std::string out = "(";
  bool first = true;
  for (VertexSet t = s; t; t &= t - 1) {
    if (!first) out += ",";
    out += g.name(lowest_vertex(t));
    first = false;
  }
  return out + ")";
}

}  // namespace edgeideal

#endif
