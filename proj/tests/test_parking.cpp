#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rootpoly/error.hpp"
#include "rootpoly/greedoid.hpp"
#include "rootpoly/parking.hpp"
#include "support/families.hpp"

using namespace rp;

namespace {

DiGraph cycle3() { return DiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
DiGraph triangle_acyclic() { return DiGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
DiGraph counterexample2() { return DiGraph(2, {{0, 1}, {1, 0}, {1, 0}}); }
DiGraph diamond() { return DiGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}}); }

}  // namespace

TEST_CASE("is_parking_function") {
  // The four parking functions of the diamond digraph rooted at 0.
  CHECK(is_parking_function(diamond(), 0, {0, 0, 0}).ok);
  CHECK(is_parking_function(diamond(), 0, {0, 1, 0}).ok);
  CHECK(is_parking_function(diamond(), 0, {0, 0, 1}).ok);
  CHECK(is_parking_function(diamond(), 0, {0, 1, 1}).ok);
  CHECK(!is_parking_function(diamond(), 0, {0, 2, 0}).ok);

  auto bad = is_parking_function(triangle_acyclic(), 0, {0, 2});
  CHECK(!bad.ok);
  CHECK(bad.violating_set == std::vector<int>{2});

  // The zero function parks on any root-connected digraph.
  family::DigraphFamilyOptions opts;
  opts.max_vertices = 4;
  opts.max_edges = 5;
  for (const DiGraph& g : family::connected_digraphs(opts))
    for (int s = 0; s < g.n; ++s) {
      if (!is_root_connected(g, s)) continue;
      CHECK(is_parking_function(g, s, std::vector<int>(g.n - 1, 0)).ok);
    }
}

TEST_CASE("parking enumerators") {
  CHECK(parking_enumerator(diamond(), 0) == Polynomial({1, 2, 1}));
  CHECK(parking_enumerator(counterexample2(), 0) == Polynomial({1}));
  CHECK(parking_enumerator(DiGraph(1, {}), 0) == Polynomial({1}));
  CHECK(parking_enumerator(triangle_acyclic(), 0) == Polynomial({1, 1}));
  // park(1) = number of spanning arborescences.
  CHECK(parking_enumerator(diamond(), 0).eval(Int(1)) == 4);
}

TEST_CASE("chan transform") {
  CHECK(chan_transform(diamond(), 0) == Polynomial({1, 2, 1}));
  CHECK(chan_transform(triangle_acyclic(), 0) == Polynomial({1, 1}));
  CHECK(chan_transform(counterexample2(), 0) == Polynomial({0, 0, 1}));
  CHECK_THROWS_AS(chan_transform(triangle_acyclic(), 1), Error);
}

TEST_CASE("chan transform equals the greedoid polynomial on a family") {
  family::DigraphFamilyOptions opts;
  opts.max_vertices = 4;
  opts.max_edges = 5;
  opts.allow_loops = true;
  for (const DiGraph& g : family::connected_digraphs(opts))
    for (int s = 0; s < g.n; ++s) {
      if (!is_root_connected(g, s)) continue;
      // chan_transform itself asserts the equality; crossing the paths here
      // keeps the check visible.
      CHECK(chan_transform(g, s) == branching_greedoid(g, s).greedoid_polynomial());
    }
}

TEST_CASE("eulerian duality") {
  auto report = eulerian_duality_check(cycle3());
  CHECK(report.parking_matches_dual);
  CHECK(report.root_independent);
  CHECK(report.dual_interior == Polynomial({1}));

  auto bid = eulerian_duality_check(DiGraph(2, {{0, 1}, {1, 0}}));
  CHECK(bid.parking_matches_dual);
  CHECK(bid.root_independent);

  auto eulerian6 = DiGraph(6, {{0, 1}, {2, 0}, {0, 3}, {4, 0}, {2, 3}, {1, 2}, {5, 2}, {3, 5}, {3, 4}});
  auto rep2 = eulerian_duality_check(eulerian6);
  CHECK(rep2.parking_matches_dual);
  CHECK(rep2.root_independent);

  CHECK_THROWS_AS(eulerian_duality_check(triangle_acyclic()), Error);
}

TEST_CASE("parking depends on the root for non-eulerian digraphs") {
  CHECK(parking_enumerator(counterexample2(), 0) == Polynomial({1}));
  CHECK(parking_enumerator(counterexample2(), 1) == Polynomial({1, 1}));
}

TEST_CASE("serial and parallel enumerators agree") {
  CHECK(parking_enumerator(diamond(), 0, Exec::serial) ==
        parking_enumerator(diamond(), 0, Exec::parallel));
}
