#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "rootpoly/error.hpp"
#include "rootpoly/instance_io.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/report.hpp"
#include "rootpoly/verify.hpp"

using namespace rp;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("parse digraph") {
  Instance inst = parse_instance("digraph 2 1\n0 1\n");
  CHECK(inst.kind == InstanceKind::digraph);
  CHECK(inst.digraph.n == 2);
  REQUIRE(inst.digraph.m() == 1);
  CHECK(inst.digraph.edges[0].tail == 0);

  Instance two = parse_instance("digraph 2 3\n0 1\n1 0\n1 0\n");
  CHECK(two.digraph.m() == 3);

  Instance mat = parse_instance("matrix 2 3\n1 0 1\n0 1 1\n");
  CHECK(mat.kind == InstanceKind::matrix);
  CHECK(mat.matrix_rows == 2);
  REQUIRE(mat.matrix_columns.size() == 3);
  CHECK(mat.matrix_columns[2] == IntVec({1, 1}));
}

TEST_CASE("comments and blank lines") {
  Instance inst = parse_instance("# heading\n\ndigraph 2 1 # inline\n\n0 1\n# trailing\n");
  CHECK(inst.digraph.m() == 1);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_instance(""), "PARSE_ERROR: empty instance", Error);
  CHECK_THROWS_AS(parse_instance("graph 2 1\n0 1\n"), Error);
  CHECK_THROWS_AS(parse_instance("digraph 2 1\n0 1\n1 0\n"), Error);  // extra line
  CHECK_THROWS_AS(parse_instance("digraph 2 2\n0 1\n"), Error);       // missing line
  CHECK_THROWS_AS(parse_instance("digraph 2 1\n0 x\n"), Error);
  try {
    parse_instance("digraph 2 1\n0 5\n");
    FAIL("range error expected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::range_error);
  }
}

TEST_CASE("render round trip is idempotent") {
  for (const char* text :
       {"digraph 3 3\n0 1\n1 2\n2 0\n", "ugraph 3 2\n0 1\n1 2\n", "matrix 2 2\n1 0\n-1 1\n"}) {
    Instance inst = parse_instance(text);
    std::string canon = render_instance(inst);
    CHECK(render_instance(parse_instance(canon)) == canon);
  }
}

TEST_CASE("digest is stable") {
  Instance a = parse_instance("digraph 2 1\n0 1\n");
  Instance b = parse_instance("# comment\ndigraph 2 1\n  0   1\n");
  CHECK(instance_digest(a) == instance_digest(b));
  Instance c = parse_instance("digraph 2 1\n1 0\n");
  CHECK(instance_digest(a) != instance_digest(c));
}

TEST_CASE("machine report is deterministic and matches the golden file") {
  Instance inst = parse_instance(slurp(std::string(RP_INSTANCE_DIR) + "/triangle_acyclic.digraph"));
  auto build = [&] {
    Report report("interior", inst);
    report.add_polynomial("interior_polynomial", interior_polynomial(inst.digraph));
    report.set_wall_ms(123.0);  // must not leak into the machine form
    return report.machine_text();
  };
  std::string text = build();
  CHECK(text == build());
  std::string golden_path = std::string(RP_GOLDEN_DIR) + "/interior_triangle.json";
  std::ifstream golden(golden_path);
  REQUIRE_MESSAGE(golden.good(), "golden file missing: " << golden_path);
  std::ostringstream os;
  os << golden.rdbuf();
  CHECK(text == os.str());
}

TEST_CASE("instance files parse") {
  for (const char* name :
       {"cycle3.digraph", "triangle_acyclic.digraph", "single_edge.digraph", "two_squares.digraph",
        "eulerian6.digraph", "diamond.digraph", "counterexample2.digraph", "bidirected2.digraph",
        "nonbipartite7.ugraph", "theta4.ugraph"}) {
    Instance inst = parse_instance(slurp(std::string(RP_INSTANCE_DIR) + "/" + name));
    CHECK((inst.kind == InstanceKind::digraph || inst.kind == InstanceKind::ugraph));
  }
}
