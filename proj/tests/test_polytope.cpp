#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rootpoly/error.hpp"
#include "rootpoly/polytope.hpp"
#include "support/families.hpp"
#include "support/oracles.hpp"

using namespace rp;

namespace {

DiGraph cycle3() { return DiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
DiGraph triangle_acyclic() { return DiGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

int count_tag(const Polytope& p, Facet::Tag tag) {
  int n = 0;
  for (const Facet& f : p.facets())
    if (f.tag == tag) ++n;
  return n;
}

}  // namespace

TEST_CASE("single edge polytope") {
  Polytope p = Polytope::from_digraph(DiGraph(2, {{0, 1}}));
  CHECK(p.dim() == 1);
  REQUIRE(p.generators().size() == 2);  // the segment from the origin to (-1,1)
  CHECK(p.generators()[0] == IntVec({0, 0}));
  CHECK(p.generators()[1] == IntVec({-1, 1}));
  CHECK(p.facets().size() == 2);
  CHECK(count_tag(p, Facet::Tag::cut) == 1);
  CHECK(count_tag(p, Facet::Tag::layering) == 1);
  CHECK(p.hstar() == Polynomial({1}));
  CHECK(p.first_interior_dilate() == 2);
}

TEST_CASE("transitive triangle polytope") {
  Polytope p = Polytope::from_digraph(triangle_acyclic());
  CHECK(p.dim() == 2);
  CHECK(p.generators().size() == 4);  // 0 and three edge vectors, x02 distinct
  CHECK(p.facets().size() == 4);
  CHECK(count_tag(p, Facet::Tag::cut) == 2);
  CHECK(count_tag(p, Facet::Tag::layering) == 2);

  CHECK(p.lattice_count(1, CountMode::closed) == 4);
  CHECK(p.lattice_count(0, CountMode::closed) == 1);
  CHECK(p.lattice_count(0, CountMode::interior) == 0);
  CHECK(p.lattice_count(2, CountMode::interior) == 1);
  auto pts = p.lattice_points(2, CountMode::interior);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == IntVec({-1, 0, 1}));

  CHECK(p.hstar() == Polynomial({1, 1}));
  CHECK(p.first_interior_dilate() == 2);

  // Counts match the membership-oracle box scan.
  for (int k = 0; k <= 2; ++k) {
    std::vector<IntVec> gens = p.generators();
    CHECK(p.lattice_count(k, CountMode::closed) == oracle::lattice_count_bruteforce(gens, k));
  }
}

TEST_CASE("directed triangle polytope") {
  Polytope p = Polytope::from_digraph(cycle3());
  CHECK(p.dim() == 2);
  CHECK(p.facets().size() == 3);
  CHECK(count_tag(p, Facet::Tag::cut) == 0);
  CHECK(p.first_interior_dilate() == 1);  // the origin is interior
  auto inner = p.lattice_points(1, CountMode::interior);
  REQUIRE(inner.size() == 1);
  CHECK(inner[0] == IntVec({0, 0, 0}));  // (x01 + x12 + x20) / 3
  Polynomial h = p.hstar();
  CHECK(h == Polynomial({1, 1, 1}));
  CHECK(h.is_palindromic());
}

TEST_CASE("plain root polytope of the transitive triangle") {
  Polytope q = Polytope::from_digraph_plain(triangle_acyclic());
  CHECK(q.dim() == 2);
  CHECK(q.hstar() == Polynomial({1}));
}

TEST_CASE("interior polynomial wrapper") {
  CHECK(interior_polynomial(triangle_acyclic()) == Polynomial({1, 1}));
  CHECK_THROWS_AS(interior_polynomial(DiGraph(2, {})), Error);
}

TEST_CASE("facets are degenerate only in dimension zero") {
  Polytope point = Polytope::from_digraph(DiGraph(1, {}));
  CHECK(point.dim() == 0);
  CHECK_THROWS_AS(point.facets(), Error);
  CHECK(point.lattice_count(3, CountMode::closed) == 1);
  CHECK(point.hstar() == Polynomial({1}));
}

TEST_CASE("forest simplices count by the closed formula") {
  // Lattice points of k * (extended forest polytope) = C(k + |F|, |F|).
  std::vector<DiGraph> forests = {
      DiGraph(2, {{0, 1}}),
      DiGraph(3, {{0, 1}, {1, 2}}),
      DiGraph(4, {{0, 1}, {1, 2}, {2, 3}}),
      DiGraph(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}}),
  };
  for (const DiGraph& f : forests) {
    Polytope p = Polytope::from_digraph(f);
    for (int k = 0; k <= 4; ++k)
      CHECK(p.lattice_count(k, CountMode::closed) == binomial(Int(k + f.m()), f.m()));
  }
}

TEST_CASE("classification of small polytopes") {
  auto tri = classify_facets(Polytope::from_digraph(triangle_acyclic()), triangle_acyclic());
  CHECK(tri.cut_matches.size() == 2);
  CHECK(tri.layering_matches.size() == 2);

  auto cyc = classify_facets(Polytope::from_digraph(cycle3()), cycle3());
  CHECK(cyc.cut_matches.empty());
  CHECK(cyc.layering_matches.size() == 3);

  DiGraph single(2, {{0, 1}});
  auto s = classify_facets(Polytope::from_digraph(single), single);
  CHECK(s.cut_matches.size() == 1);
  CHECK(s.layering_matches.size() == 1);
}

TEST_CASE("classification matches directly enumerated layerings") {
  family::DigraphFamilyOptions opts;
  opts.max_vertices = 4;
  opts.max_edges = 5;
  for (const DiGraph& g : family::connected_digraphs(opts)) {
    if (g.n == 1) continue;
    Polytope p = Polytope::from_digraph(g);
    auto cls = classify_facets(p, g);
    auto expected = enumerate_admissible_layerings(g);
    std::set<std::vector<long>> want(expected.begin(), expected.end());
    std::set<std::vector<long>> got;
    for (const auto& [fi, ell] : cls.layering_matches) got.insert(ell);
    CHECK(want == got);
    // Every generator satisfies every facet inequality; tight sets are big.
    for (const Facet& f : p.facets()) {
      CHECK(int(f.tight.size()) >= p.dim());
      for (const IntVec& g2 : p.generators()) {
        Int dot = 0;
        for (size_t v = 0; v < g2.size(); ++v) dot += f.normal[v] * g2[v];
        CHECK(dot <= f.offset);
      }
    }
  }
}

TEST_CASE("hstar consistency on a small family") {
  family::DigraphFamilyOptions opts;
  opts.max_vertices = 4;
  opts.max_edges = 5;
  for (const DiGraph& g : family::connected_digraphs(opts)) {
    Polytope p = Polytope::from_digraph(g);
    Polynomial h = p.hstar();
    CHECK(h.coeff(0) == 1);
    // h*_1 = #distinct nonzero generators - dim.
    Int nonzero = Int(int(p.generators().size()) - 1);
    CHECK(h.coeff(1) == nonzero - p.dim());
    // h*(1) equals the pulling-triangulation normalized volume.
    if (p.dim() >= 1) CHECK(h.eval(Int(1)) == oracle::normalized_volume(p));
  }
}

TEST_CASE("serial and parallel counts agree") {
  DiGraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}});
  Polytope p = Polytope::from_digraph(g);
  for (int k = 0; k <= 4; ++k) {
    CHECK(p.lattice_count(k, CountMode::closed, Exec::serial) ==
          p.lattice_count(k, CountMode::closed, Exec::parallel));
    CHECK(p.lattice_count(k, CountMode::interior, Exec::serial) ==
          p.lattice_count(k, CountMode::interior, Exec::parallel));
  }
  CHECK(p.hstar(Exec::serial) == p.hstar(Exec::parallel));
}
