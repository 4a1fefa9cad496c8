// End-to-end tests of the command-line tool: spawn the real binary, compare
// bytes and exit codes.  EDGEIDEAL_CLI_PATH and EDGEIDEAL_CORPUS_DIR come in
// from the build.

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>
#include <sys/wait.h>

#include "edgeideal/graph.hpp"

namespace {

const std::string kCli = EDGEIDEAL_CLI_PATH;
const std::string kCorpus = EDGEIDEAL_CORPUS_DIR;

struct RunResult {
  int code = -1;
  std::string out;
};

// Run a shell command, capturing stdout (stderr too when merged).
RunResult run(const std::string& cmd, bool merge_stderr = false) {
  RunResult r;
  std::string full = cmd + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(full.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Strip "# ..." trace lines so reduce output can be parsed as a graph.
std::string without_comments(const std::string& text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    if (pos == nl || text[pos] != '#')
      out += text.substr(pos, nl - pos) + "\n";
    pos = nl + 1;
  }
  return out;
}

std::set<std::pair<std::string, std::string>> named_edges(
    const edgeideal::Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) {
    auto a = g.name(u), b = g.name(v);
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

// A scratch directory for negative tests.
std::string make_temp_dir() {
  std::string tmpl = "/tmp/edgeideal-cli-XXXXXX";
  char* raw = mkdtemp(tmpl.data());
  REQUIRE(raw != nullptr);
  return std::string(raw);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_CASE("analyze") {
  auto r2 = run(kCli + " analyze " + kCorpus + "/example2.el");
  CHECK(r2.code == 0);
  CHECK(contains(r2.out, "graph: 7 vertices, 8 edges, 0 loops\n"));
  CHECK(contains(r2.out, "hvector: (1,3,-2,-1)\n"));
  CHECK(contains(r2.out, "numerator: 1+3t-2t^2-t^3\n"));
  CHECK(contains(r2.out, "fvector: (1,7,13,8,1)\n"));
  CHECK(contains(r2.out, "coveredness: not_well_covered\n"));
  CHECK(contains(r2.out, "certificate: x1 + x2, x4 + x3, x6 + x7\n"));

  auto rt = run(kCli + " analyze " + kCorpus + "/triangle.el");
  CHECK(rt.code == 0);
  CHECK(contains(rt.out, "edge a b: property_p=no regular=no\n"));
  CHECK(contains(rt.out, "edge a c: property_p=no regular=no\n"));
  CHECK(contains(rt.out, "edge b c: property_p=no regular=no\n"));
  CHECK(contains(rt.out, "certificate_length: 0\n"));
  CHECK(contains(rt.out, "certificate: (none)\n"));
  CHECK(contains(rt.out, "coveredness: well_covered\n"));

  auto rc = run(kCli + " analyze " + kCorpus + "/c4.el");
  CHECK(rc.code == 0);
  CHECK(contains(rc.out, "edge x1 x2: property_p=yes regular=yes\n"));
  CHECK(contains(rc.out, "edge x1 x4: property_p=yes regular=yes\n"));
  CHECK(contains(rc.out, "edge x2 x3: property_p=yes regular=yes\n"));
  CHECK(contains(rc.out, "edge x3 x4: property_p=yes regular=yes\n"));
  CHECK(contains(rc.out, "certificate_length: 1\n"));
  CHECK(contains(rc.out, "coveredness: very_well_covered\n"));
  CHECK(contains(rc.out, "size_identity: holds\n"));

  // Loop graph: coveredness and the identity are out of scope, not errors.
  auto rl = run(kCli + " analyze " + kCorpus + "/remark-counterexample.el");
  CHECK(rl.code == 0);
  CHECK(contains(rl.out, "coveredness: n/a\n"));
  CHECK(contains(rl.out, "size_identity: n/a\n"));
  CHECK(contains(rl.out, "fvector: n/a\n"));
}

TEST_CASE("reports are byte-deterministic") {
  const std::string cmd = kCli + " analyze " + kCorpus + "/example1.el";
  auto a = run(cmd);
  auto b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("reduce") {
  // Contract one C4 edge: trace line plus the canonical serialization of
  // the triangle-with-loop.
  auto rc = run(kCli + " reduce " + kCorpus +
                "/c4.el --edges x1,x2 --kind contract");
  CHECK(rc.code == 0);
  CHECK(rc.out ==
        "# contract x1 x2 -> x1\n"
        "x1 x1\nx1 x3\nx1 x4\nx3 x4\n");

  // Survivor override flips the orientation.
  auto rs = run(kCli + " reduce " + kCorpus +
                "/c4.el --edges x1,x2 --survivors x2 --kind contract");
  CHECK(rs.code == 0);
  CHECK(rs.out ==
        "# contract x2 x1 -> x2\n"
        "x2 x2\nx2 x3\nx2 x4\nx3 x4\n");

  // No edges: the output is the graph itself (canonical order).
  auto re = run(kCli + " reduce " + kCorpus + "/c4.el --kind contract");
  CHECK(re.code == 0);
  CHECK(edgeideal::parse_edge_list(re.out) ==
        edgeideal::parse_edge_list("x1 x2\nx2 x3\nx3 x4\nx4 x1"));

  // Polarize the whole diagonal matching of the bipartite example: the
  // result is the x-side core with whiskers y1..y4.
  auto rp = run(kCli + " reduce " + kCorpus +
                "/example1.el --edges x1,y1 --edges x2,y2 --edges x3,y3 "
                "--edges x4,y4 --kind polarize");
  CHECK(rp.code == 0);
  auto g = edgeideal::parse_edge_list(without_comments(rp.out));
  CHECK(g.vertex_count() == 8);
  CHECK(g.is_simple());
  CHECK(named_edges(g) ==
        std::set<std::pair<std::string, std::string>>{
            {"x1", "y1"},
            {"x2", "y2"},
            {"x3", "y3"},
            {"x4", "y4"},
            {"x1", "x2"},
            {"x1", "x3"},
            {"x1", "x4"},
            {"x2", "x3"},
            {"x2", "x4"}});

  // Usage errors: malformed pair, unknown survivor, survivor count
  // mismatch, bad kind.
  CHECK(run(kCli + " reduce " + kCorpus +
            "/c4.el --edges x1x2 --kind contract").code == 2);
  CHECK(run(kCli + " reduce " + kCorpus +
            "/c4.el --edges x1,x2 --survivors x3 --kind contract").code == 2);
  CHECK(run(kCli + " reduce " + kCorpus +
            "/c4.el --edges x1,x2 --survivors x1 --survivors x2 "
            "--kind contract").code == 2);
  CHECK(run(kCli + " reduce " + kCorpus +
            "/c4.el --edges x1,x2 --kind shrink").code == 2);
  // The pair must be an actual edge.
  CHECK(run(kCli + " reduce " + kCorpus +
            "/c4.el --edges x1,x3 --kind contract").code == 2);
}

TEST_CASE("regseq") {
  auto r2 = run(kCli + " regseq " + kCorpus + "/example2.el");
  CHECK(r2.code == 0);
  CHECK(r2.out ==
        "steps: 3\n"
        "step 1: x1 x2 (survivor x1)\n"
        "step 2: x4 x3 (survivor x4)\n"
        "step 3: x6 x7 (survivor x6)\n"
        "sequence: x1 + x2, x4 + x3, x6 + x7\n");

  auto rs = run(kCli + " regseq " + kCorpus + "/star.el");
  CHECK(rs.code == 0);
  CHECK(rs.out ==
        "steps: 1\n"
        "step 1: x y1 (survivor x)\n"
        "sequence: x + y1\n");

  auto rt = run(kCli + " regseq " + kCorpus + "/triangle.el");
  CHECK(rt.code == 0);
  CHECK(rt.out == "steps: 0\nsequence: (none)\n");
}

TEST_CASE("verify quick") {
  auto r = run(kCli + " verify --level quick --corpus " + kCorpus);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "level: quick\n"));
  CHECK(contains(r.out, "suite corpus-files: passed 11 failed 0\n"));
  CHECK(contains(r.out, "result: PASS\n"));
  // The documented discrepancy: the drawn 9-edge figure gives (1,4,1).
  CHECK(contains(r.out, "(1,4,2)"));
  CHECK(contains(r.out, "example1.el"));

  // Determinism of the whole summary.
  auto again = run(kCli + " verify --level quick --corpus " + kCorpus);
  CHECK(again.out == r.out);
}

TEST_CASE("failure exit codes") {
  // 1: verification failure (corrupted corpus).
  std::string dir = make_temp_dir();
  write_file(dir + "/example1.el", "a b c\n");
  auto rv = run(kCli + " verify --level quick --corpus " + dir);
  CHECK(rv.code == 1);
  CHECK(contains(rv.out, "result: FAIL\n"));

  // 2: usage and parse errors.
  CHECK(run(kCli + " analyze " + dir + "/missing.el", true).code == 2);
  write_file(dir + "/bad.el", "a b c\n");
  auto rp = run(kCli + " analyze " + dir + "/bad.el", true);
  CHECK(rp.code == 2);
  CHECK(contains(rp.out, "line 1"));
  CHECK(run(kCli + " analyze", true).code == 2);
  CHECK(run(kCli, true).code == 2);
  CHECK(run(kCli + " analyze --bogus x", true).code == 2);
  CHECK(run(kCli + " verify --level sometimes", true).code == 2);

  // 3: capacity overflow (65 distinct vertices).
  std::string big;
  for (int i = 1; i <= 65; ++i) big += "v" + std::to_string(i) + "\n";
  write_file(dir + "/big.el", big);
  auto rb = run(kCli + " analyze " + dir + "/big.el", true);
  CHECK(rb.code == 3);
  CHECK(contains(rb.out, "error:"));
}
