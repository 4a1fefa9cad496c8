#ifndef EDGEIDEAL_HILBERT_HPP
#define EDGEIDEAL_HILBERT_HPP

// Hilbert series data for edge ideals: the K-polynomial (numerator over the
// full (1-t)^n), the reduced numerator (h-polynomial over (1-t)^dim),
// f-vectors of the independence complex, and the Stanley transform tying
// them together.  Everything is exact integer arithmetic.
//
// The central formula: over all independent sets S of g (loop vertices may
// belong to S),
//
//     K(t) = sum_S  t^|S| * (1-t)^(n - |S \ L|)
//
// where n counts ALL vertices and L is the loop set.  Each independent S
// contributes the Hilbert numerator of the monomials supported exactly on S
// (free variables off L, truncated-at-1 variables on L).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "edgeideal/covers.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/intpoly.hpp"
#include "edgeideal/reductions.hpp"

namespace edgeideal {

using FVector = std::vector<mpz_class>;  // (f_-1, f_0, ..): f_-1 == 1
using HVector = std::vector<mpz_class>;  // (h_0, h_1, ..): h_0 == 1

// "(1,3,-2,-1)": comma-separated, parenthesized, no spaces; optionally with
// trailing zeros trimmed (but never below one entry).
inline std::string format_int_vector(const std::vector<mpz_class>& v,
                                     bool trim_trailing_zeros = true) {
  std::size_t len = v.size();
  if (trim_trailing_zeros)
    while (len > 1 && v[len - 1] == 0) --len;
  std::string out = "(";
  for (std::size_t i = 0; i < len; ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

inline mpz_class binomial_mpz(int a, int b) {
  mpz_class r;
  if (b < 0 || a < b) return 0;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

// Numerator of the Hilbert series over (1-t)^n, never reduced; nvars
// remembers n.  K(0) == 1 always.
struct KPolynomial {
  IntPoly poly;
  int nvars = 0;

  friend bool operator==(const KPolynomial& a, const KPolynomial& b) {
    return a.poly == b.poly && a.nvars == b.nvars;
  }
};

// Pascal's triangle up to 64 (largest entry C(64,32) still fits in 64 bits),
// built once; read-only afterwards so concurrent use is fine.
inline const std::vector<std::vector<unsigned long long>>& pascal_table() {
  static const std::vector<std::vector<unsigned long long>> table = [] {
    std::vector<std::vector<unsigned long long>> t(65);
    for (int a = 0; a <= 64; ++a) {
      t[a].assign(static_cast<std::size_t>(a) + 1, 1);
      for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
  }();
  return table;
}

inline KPolynomial k_polynomial(const Graph& g) {
  const int n = g.vertex_count();
  const VertexSet loops = g.loop_set();
  // Bucket independent sets by (|S \ L|, |S|); each bucket contributes
  // count * t^|S| * (1-t)^(n-|S\L|).  Counts are bounded by C(64,32), so
  // they fit machine words; the final coefficients go through GMP.
  std::vector<std::vector<long long>> counts(
      n + 1, std::vector<long long>(n + 1, 0));
  for_each_independent_subset(g, g.full_set(), [&](VertexSet s) {
    counts[set_size(s & ~loops)][set_size(s)] += 1;
  });
  const auto& pas = pascal_table();
  // A bucket contributes up to degree sz + (n - p) = n + |S ∩ L|, so the
  // result can exceed degree n when loops are present.
  std::vector<mpz_class> c(static_cast<std::size_t>(n + set_size(loops)) + 1,
                           mpz_class(0));
  for (int p = 0; p <= n; ++p)
    for (int sz = p; sz <= n; ++sz) {
      if (counts[p][sz] == 0) continue;
      for (int i = 0; i <= n - p; ++i) {
        // the t^(sz+i) term of count * t^sz * (1-t)^(n-p)
        mpz_class term(static_cast<long>(counts[p][sz]));
        term *= static_cast<unsigned long>(pas[n - p][i]);
        if (i % 2)
          c[sz + i] -= term;
        else
          c[sz + i] += term;
      }
    }
  return {IntPoly(std::move(c)), n};
}

// f-vector of the independence complex, f_-1 = 1 first.  Simple graphs
// only: with loops present the complex story changes and callers must go
// through the K-polynomial instead.
inline FVector f_vector(const Graph& g) {
  if (!g.is_simple())
    throw std::domain_error("f_vector: graph must be simple");
  std::vector<mpz_class> f(
      static_cast<std::size_t>(
          max_independent_set_size(g, g.full_set())) + 1,
      mpz_class(0));
  for_each_independent_subset(g, g.full_set(),
                              [&](VertexSet s) { f[set_size(s)] += 1; });
  return f;
}

// Stanley's transform from f to h for a complex of dimension d-1:
//
//     h_k = sum_{i=0..k} (-1)^(k-i) * C(d-i, k-i) * f_{i-1},   k = 0..d.
//
// Requires d >= len(f)-1 (i.e. d at least the size of a largest face).
inline HVector h_from_f(const FVector& f, int d) {
  if (d < static_cast<int>(f.size()) - 1)
    throw std::domain_error("h_from_f: d smaller than the largest face size");
  HVector h(static_cast<std::size_t>(d) + 1, mpz_class(0));
  for (int k = 0; k <= d; ++k) {
    mpz_class acc = 0;
    for (int i = 0; i <= k && i < static_cast<int>(f.size()); ++i) {
      mpz_class term = binomial_mpz(d - i, k - i) * f[i];
      if ((k - i) % 2)
        acc -= term;
      else
        acc += term;
    }
    h[k] = acc;
  }
  return h;
}

// h-vector straight from the Hilbert series: divide K exactly by
// (1-t)^height and read off coefficients.  Kept to length >= dim+1 (the
// numerator may have lower degree); for graphs with loops its degree may
// legitimately exceed dim (e.g. a single looped vertex: dim 0, h = (1,1)).
inline HVector h_vector(const Graph& g) {
  KPolynomial k = k_polynomial(g);
  int ht = height(g);
  int d = g.vertex_count() - ht;
  IntPoly num = k.poly.divided_by_one_minus_t(ht);
  std::size_t len = std::max(static_cast<std::size_t>(d) + 1,
                             num.coeffs().size());
  HVector h(len, mpz_class(0));
  for (std::size_t i = 0; i < num.coeffs().size(); ++i) h[i] = num.coeff(
      static_cast<int>(i));
  return h;
}

// For a perfect matching m whose binomial sums form a regular sequence
// (caller-established), the h-vector counts induced sub-matchings:
// h_i = #(i-subsets of m that are induced matchings in g).  Length |m|+1.
inline HVector h_vector_via_matching(const Graph& g, const Matching& m) {
  if (!is_perfect_matching(g, m))
    throw std::domain_error("h_vector_via_matching: matching is not perfect");
  const std::size_t s = m.edges.size();
  HVector h(s + 1, mpz_class(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    std::vector<std::pair<int, int>> sub;
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (std::uint64_t{1} << i)) sub.push_back(m.edges[i]);
    if (is_induced_matching(g, sub)) h[sub.size()] += 1;
  }
  return h;
}

// Does contracting e = {x,y} into `survivor` preserve the K-polynomial
// exactly?  This is the Hilbert-series characterization of regularity of
// the edge binomial: the K-polynomial (over one fewer variable) is
// unchanged iff x+y is a nonzerodivisor.
inline bool regularity_hs_test(const Graph& g, std::pair<int, int> e,
                               int survivor) {
  auto [x, y] = e;
  if (!g.has_edge(x, y))
    throw std::domain_error("regularity_hs_test: not an edge");
  if (survivor != x && survivor != y)
    throw std::domain_error("regularity_hs_test: survivor not an endpoint");
  int absorbed = (survivor == x) ? y : x;
  return k_polynomial(contract_edge(g, survivor, absorbed)).poly ==
         k_polynomial(g).poly;
}

// One-stop numerical summary of a graph's Hilbert data, with a fixed key
// order and fully deterministic rendering.
struct SeriesReport {
  KPolynomial kpoly;
  IntPoly numerator;     // kpoly / (1-t)^height
  int dim = 0;
  int height = 0;
  bool has_fvector = false;  // false when loops are present
  FVector fvector;
  HVector hvector;
  MatchingStats stats;

  std::string to_text() const {
    std::string out;
    out += "kpoly: " + kpoly.poly.to_string() + "\n";
    out += "numerator: " + numerator.to_string() + "\n";
    out += "dim: " + std::to_string(dim) + "\n";
    out += "height: " + std::to_string(height) + "\n";
    out += "fvector: " +
           (has_fvector ? format_int_vector(fvector, false) : "n/a") + "\n";
    out += "hvector: " + format_int_vector(hvector) + "\n";
    out += "matching_number: " + std::to_string(stats.matching_number) + "\n";
    out += "induced_matching_number: " +
           std::to_string(stats.induced_matching_number) + "\n";
    return out;
  }
};

inline SeriesReport series_report(const Graph& g) {
  SeriesReport r;
  r.kpoly = k_polynomial(g);
  r.height = edgeideal::height(g);
  r.dim = g.vertex_count() - r.height;
  r.numerator = r.kpoly.poly.divided_by_one_minus_t(r.height);
  r.has_fvector = g.is_simple();
  if (r.has_fvector) r.fvector = f_vector(g);
  r.hvector = h_vector(g);
  r.stats = matching_stats(g);
  return r;
}

}  // namespace edgeideal

#endif
