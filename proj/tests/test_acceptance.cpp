// Acceptance checks, one test case per criterion, each printing a single
// "criterion N: PASS/FAIL -- detail" line.  Criterion 7's third leg (the
// size identity |V|-height == |E|-matching as a characterization of very
// well covered) is false as stated -- P4 is very well covered yet fails the
// identity -- so that criterion reports FAIL with the counterexample count
// rather than being quietly weakened.

#include <catch2/catch_amalgamated.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "edgeideal/graph.hpp"
#include "edgeideal/hilbert.hpp"
#include "edgeideal/reductions.hpp"
#include "edgeideal/regularity.hpp"
#include "edgeideal/verify.hpp"

using namespace edgeideal;

namespace {

const std::string kCorpus = EDGEIDEAL_CORPUS_DIR;

Graph load(const std::string& name) {
  std::ifstream in(kCorpus + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

void report(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " -- "
            << detail << std::endl;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

}  // namespace

TEST_CASE("criterion 1: example2 h-vector three ways") {
  Timer t;
  Graph g = load("example2.el");
  auto want = make_vec({1, 3, -2, -1});

  bool ok = padded_equal(h_vector(g), want);
  auto f = f_vector(g);
  ok = ok && f == make_vec({1, 7, 13, 8, 1});
  ok = ok && padded_equal(h_from_f(f, 4), want);
  ok = ok && padded_equal(series_report(g).hvector, want);
  double el = t.seconds();
  ok = ok && el < 1.0;

  report(1, ok,
         "h-vector (1,3,-2,-1) by K-division, f-transform on (1,7,13,8,1), "
         "and series report; " + secs(el));
  CHECK(ok);
}

TEST_CASE("criterion 2: example3 h-vector and mixed sequence") {
  Timer t;
  Graph g = load("example3.el");

  bool ok = padded_equal(h_vector(g), make_vec({1, 2, -2}));
  ok = ok && series_report(g).numerator.to_string() == "1+2t-2t^2";
  ok = ok && is_binomial_regular(g, g.require_vertex("x3"),
                                 g.require_vertex("x5"));

  // x1+x2, x4+x6 (both edges), then the binomial x3+x5 on a non-edge: the
  // K-polynomial must survive all three specializations.
  const auto kp = k_polynomial(g).poly;
  Graph g1 = contract_edge(g, g.require_vertex("x1"), g.require_vertex("x2"));
  ok = ok && k_polynomial(g1).poly == kp;
  Graph g2 =
      contract_edge(g1, g1.require_vertex("x4"), g1.require_vertex("x6"));
  ok = ok && k_polynomial(g2).poly == kp;
  Graph g3 =
      merge_vertices(g2, g2.require_vertex("x3"), g2.require_vertex("x5"));
  ok = ok && k_polynomial(g3).poly == kp;
  double el = t.seconds();
  ok = ok && el < 1.0;

  report(2, ok,
         "h-vector (1,2,-2), numerator 1+2t-2t^2, x3+x5 regular, K preserved "
         "through x1+x2, x4+x6, x3+x5; " + secs(el));
  CHECK(ok);
}

TEST_CASE("criterion 3: example1 internal agreement plus discrepancy note") {
  Timer t;
  Graph g = load("example1.el");

  auto h = h_vector(g);
  auto f = f_vector(g);
  bool agree = padded_equal(h, h_from_f(f, static_cast<int>(f.size()) - 1));
  Matching diag;
  for (int i = 1; i <= 4; ++i)
    diag.edges.push_back({g.require_vertex("x" + std::to_string(i)),
                          g.require_vertex("y" + std::to_string(i))});
  agree = agree && padded_equal(h, h_vector_via_matching(g, diag));

  // The three paths agree on (1,4,1); the value (1,4,2) sometimes quoted
  // for this figure is surfaced as a note by the verify command.
  auto summary = run_verify(false, kCorpus);
  bool note = false;
  for (const auto& n : summary.notes)
    if (n.find("(1,4,2)") != std::string::npos &&
        n.find("example1") != std::string::npos)
      note = true;

  double el = t.seconds();
  bool ok = agree && note && el < 1.0;
  report(3, ok,
         "division, transform, and matching h-vectors all equal " +
             format_int_vector(h) + "; verify emits the (1,4,2) note; " +
             secs(el));
  CHECK(agree);
  CHECK(note);
  CHECK(el < 1.0);
}

TEST_CASE("criterion 4: regularity three ways, simple graphs to 6 vertices") {
  Timer t;
  auto s = suite_regularity_threeway(6, 0);
  double el = t.seconds();
  bool ok = s.failed == 0 && s.passed > 0 && el < 300.0;
  report(4, ok,
         std::to_string(s.passed) + " edges agree, " +
             std::to_string(s.failed) + " disagree; " + secs(el));
  INFO((s.failures.empty() ? std::string() : s.failures.front()));
  CHECK(ok);
}

TEST_CASE("criterion 5: regularity three ways, loop graphs to 5 vertices") {
  Timer t;
  auto s = suite_regularity_threeway(5, 2);
  double el = t.seconds();
  bool ok = s.failed == 0 && s.passed > 0;
  // The disagreements are real: when Property P holds but looped vertices
  // neighbour BOTH endpoints, the combinatorial test declines the edge even
  // though no associated prime contains both endpoints (smallest case: a
  // 4-cycle with loops on two adjacent vertices).  The oracle and the
  // series-preservation legs agree with each other on every graph; only the
  // combinatorial leg diverges, so this criterion fails as stated.
  report(5, ok,
         std::to_string(s.passed) + " edges agree, " +
             std::to_string(s.failed) + " disagree (<=2 loops)" +
             (s.failures.empty() ? std::string()
                                 : "; first: " + s.failures.front()) +
             "; " + secs(el));
  INFO((s.failures.empty() ? std::string() : s.failures.front()));
  CHECK(ok);
}

TEST_CASE("criterion 6: binomial regularity seven ways, simple to 6") {
  Timer t;
  auto s = suite_binomial(6);
  double el = t.seconds();
  bool ok = s.failed == 0 && s.passed > 0;
  report(6, ok,
         std::to_string(s.passed) + " non-adjacent pairs agree across all "
         "seven criteria, " + std::to_string(s.failed) + " disagree; " +
             secs(el));
  INFO((s.failures.empty() ? std::string() : s.failures.front()));
  CHECK(ok);
}

TEST_CASE("criterion 7: very-well-covered characterizations to 7 vertices") {
  Timer t;
  auto w = suite_wellcovered(7);
  double el = t.seconds();

  bool matching_leg = w.suite.failed == 0 && w.suite.passed > 0;
  bool identity_leg = w.identity_mismatch == 0;
  report(7, matching_leg && identity_leg,
         "perfect-matching-with-property-P leg: " +
             std::to_string(w.suite.passed) + " agree, " +
             std::to_string(w.suite.failed) + " disagree; size-identity leg: " +
             std::to_string(w.identity_mismatch) + " of " +
             std::to_string(w.identity_checked) +
             " graphs disagree (first: " + w.first_mismatch + "); " + secs(el));

  // The matching characterization is exact.
  CHECK(matching_leg);
  // The size identity is NOT equivalent to very-well-covered (P4 already
  // fails it); this assertion states the criterion as written and fails.
  CHECK(identity_leg);
}

TEST_CASE("criterion 8: certificates contract without changing the series") {
  Timer t;
  bool ok = true;
  long long checked = 0;

  for (const auto& nm : corpus_file_names()) {
    Graph g = load(nm);
    auto cert = find_regular_matching(g);
    ok = ok && check_regular_sequence(g, Matching{cert.steps}).has_value();
    const auto kp = k_polynomial(g).poly;
    Graph cur = g;
    for (auto [x, y] : cert.steps) {
      cur = contract_edge(cur, cur.require_vertex(g.name(x)),
                          cur.require_vertex(g.name(y)));
      ok = ok && k_polynomial(cur).poly == kp;
      ++checked;
    }
  }

  auto simple = suite_certificate_contraction(6, 0);
  auto loops = suite_certificate_contraction(5, 2);
  ok = ok && simple.failed == 0 && loops.failed == 0 && simple.passed > 0;
  double el = t.seconds();

  report(8, ok,
         std::to_string(checked) + " corpus contraction steps plus " +
             std::to_string(simple.passed + loops.passed) +
             " exhaustive checks, all series-preserving; " + secs(el));
  INFO((simple.failures.empty() ? std::string() : simple.failures.front()));
  INFO((loops.failures.empty() ? std::string() : loops.failures.front()));
  CHECK(ok);
}

TEST_CASE("criterion 9: bipartite family h-vectors and the degree bound") {
  Timer t;
  auto s = suite_cm_family();
  double el = t.seconds();
  bool ok = s.failed == 0 && s.passed > 0 && el < 30.0;
  report(9, ok,
         std::to_string(s.passed) + " family checks (matching h-vector == "
         "series h-vector, h_i >= 0, degree <= induced matching number); " +
             secs(el));
  INFO((s.failures.empty() ? std::string() : s.failures.front()));
  CHECK(ok);
}
