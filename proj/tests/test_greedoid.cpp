#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootpoly/error.hpp"
#include "rootpoly/greedoid.hpp"
#include "support/families.hpp"
#include "support/oracles.hpp"

using namespace rp;

namespace {

DiGraph cycle3() { return DiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
DiGraph triangle_acyclic() { return DiGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Eulerian digraph, root 0. One-based edge labels give readable words.
DiGraph eulerian6() {
  return DiGraph(6, {{0, 1}, {2, 0}, {0, 3}, {4, 0}, {2, 3}, {1, 2}, {5, 2}, {3, 5}, {3, 4}});
}

DiGraph diamond() { return DiGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}}); }

uint32_t mask_of(const std::vector<int>& edges) {
  uint32_t m = 0;
  for (int e : edges) m |= 1u << e;
  return m;
}

}  // namespace

TEST_CASE("axiom verification accepts matroids and rejects junk") {
  // Free matroid on 3 elements.
  auto free3 = Greedoid::from_oracle(3, [](uint32_t) { return true; });
  CHECK(free3.rank() == 3);
  CHECK(free3.bases().size() == 1);

  // Not accessible: {0,1} feasible but neither {0} nor {1}.
  auto bad = [](uint32_t mask) { return mask == 0 || mask == 3; };
  CHECK_THROWS_AS(Greedoid::from_oracle(2, bad), Error);
}

TEST_CASE("branching greedoid ranks and bases") {
  auto x = branching_greedoid(diamond(), 0);
  CHECK(x.rank() == 3);
  CHECK(x.bases().size() == 4);

  // Not root-connected: bases span only the reachable part.
  auto y = branching_greedoid(triangle_acyclic(), 1);
  CHECK(y.rank() == 1);  // only v2 -> v3 reachable
  CHECK(y.bases().size() == 1);
}

TEST_CASE("lexicographically minimal feasible word") {
  auto x = branching_greedoid(eulerian6(), 0);
  uint32_t basis = mask_of({0, 2, 6, 7, 8});  // labels 1,3,7,8,9
  auto word = x.lexmin_feasible_word(basis, identity_order(9));
  CHECK(word == std::vector<int>({0, 2, 7, 6, 8}));  // labels 1,3,8,7,9

  CHECK_THROWS_AS(x.lexmin_feasible_word(mask_of({0, 1}), identity_order(9)), Error);
}

TEST_CASE("greedy lexmin agrees with full permutation search") {
  auto x = branching_greedoid(eulerian6(), 0);
  ElementOrder order = identity_order(9);
  for (uint32_t basis : x.bases())
    CHECK(x.lexmin_feasible_word(basis, order) == oracle::lexmin_word_bruteforce(x, basis, order));

  family::DigraphFamilyOptions opts;
  opts.max_vertices = 4;
  opts.max_edges = 5;
  opts.allow_loops = true;
  for (const DiGraph& g : family::connected_digraphs(opts)) {
    for (int s = 0; s < g.n; ++s) {
      if (!is_root_connected(g, s)) continue;
      auto gr = branching_greedoid(g, s);
      for (int seed = 0; seed < 2; ++seed) {
        ElementOrder ord = seed ? seeded_random_order(g.m(), seed) : identity_order(g.m());
        for (uint32_t basis : gr.bases())
          CHECK(gr.lexmin_feasible_word(basis, ord) ==
                oracle::lexmin_word_bruteforce(gr, basis, ord));
      }
    }
  }

  // Rank-8 instance: three chains out of the root plus alternate in-edges.
  DiGraph wide(9, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {0, 6}, {6, 7}, {7, 8}, {3, 8},
                   {5, 3}});
  auto large = branching_greedoid(wide, 0);
  CHECK(large.rank() == 8);
  for (int seed = 0; seed < 2; ++seed) {
    ElementOrder ord = seed ? seeded_random_order(wide.m(), 99) : identity_order(wide.m());
    for (uint32_t basis : large.bases())
      CHECK(large.lexmin_feasible_word(basis, ord) ==
            oracle::lexmin_word_bruteforce(large, basis, ord));
  }
}

TEST_CASE("activity on a spanning arborescence of eulerian6") {
  auto x = branching_greedoid(eulerian6(), 0);
  uint32_t basis = mask_of({0, 2, 6, 7, 8});
  auto activity = x.external_activity(basis, identity_order(9));
  // Label-2 edge (index 1) is active; label-6 edge (index 5) is passive.
  CHECK(std::count(activity.active.begin(), activity.active.end(), 1) == 1);
  CHECK(std::count(activity.active.begin(), activity.active.end(), 5) == 0);

  auto semi = semi_active_edges(eulerian6(), 0, {0, 2, 6, 7, 8}, identity_order(9));
  CHECK(std::count(semi.begin(), semi.end(), 1) == 1);
  CHECK(std::count(semi.begin(), semi.end(), 5) == 0);
}

TEST_CASE("vacuous activity") {
  // Complement of the basis empty: activity 0.
  auto x = branching_greedoid(DiGraph(2, {{0, 1}}), 0);
  CHECK(x.external_activity(1, identity_order(1)).count == 0);
}

TEST_CASE("greedoid polynomials of the small examples") {
  CHECK(branching_greedoid(triangle_acyclic(), 0).greedoid_polynomial() == Polynomial({1, 1}));
  CHECK(branching_greedoid(diamond(), 0).greedoid_polynomial() == Polynomial({1, 2, 1}));
  CHECK(branching_greedoid(cycle3(), 0).greedoid_polynomial() == Polynomial({0, 1}));
  // lambda(1) = number of bases.
  auto x = branching_greedoid(eulerian6(), 0);
  CHECK(x.greedoid_polynomial().eval(Int(1)) == Int((long)x.bases().size()));
}

TEST_CASE("non-root-connected shift") {
  // Root 1 of the transitive triangle reaches only edge v2->v3.
  auto x = branching_greedoid(triangle_acyclic(), 1);
  Polynomial lambda = x.greedoid_polynomial();
  // Reachable subgraph has lambda' = 1 on one basis; two unreachable edges.
  CHECK(lambda == Polynomial({0, 0, 1}));
}

TEST_CASE("semi-activity polynomial equals the greedoid polynomial") {
  family::DigraphFamilyOptions opts;
  opts.max_vertices = 4;
  opts.max_edges = 6;
  for (const DiGraph& g : family::connected_digraphs(opts)) {
    for (int s = 0; s < g.n; ++s) {
      if (!is_root_connected(g, s)) continue;
      auto x = branching_greedoid(g, s);
      Polynomial lambda = x.greedoid_polynomial(Exec::serial, /*extra_orders=*/1);
      CHECK(semi_activity_polynomial(g, s, identity_order(g.m())) == lambda);
    }
  }
}

TEST_CASE("restriction") {
  auto x = branching_greedoid(diamond(), 0);
  std::vector<int> everything{0, 1, 2, 3, 4};
  CHECK(x.restriction(everything).greedoid_polynomial() == x.greedoid_polynomial());
  auto empty = x.restriction({});
  CHECK(empty.rank() == 0);
  CHECK(empty.greedoid_polynomial() == Polynomial({1}));
}

TEST_CASE("min restriction k") {
  CHECK(branching_greedoid(triangle_acyclic(), 0).min_restriction_k() == 0);
  CHECK(branching_greedoid(diamond(), 0).min_restriction_k() == 0);
  for (int root = 0; root < 3; ++root)
    CHECK(branching_greedoid(cycle3(), root).min_restriction_k() == 1);
}

TEST_CASE("all bases of every constructed greedoid share a cardinality") {
  family::DigraphFamilyOptions opts;
  opts.max_vertices = 4;
  opts.max_edges = 5;
  for (const DiGraph& g : family::connected_digraphs(opts)) {
    for (int s = 0; s < g.n; ++s) {
      auto x = branching_greedoid(g, s);
      for (uint32_t b : x.bases()) CHECK(__builtin_popcount(b) == x.rank());
      // The native oracle satisfies the greedoid axioms.
      if (g.m() <= 6) {
        auto copy = Greedoid::from_oracle(
            g.m(), [&](uint32_t mask) { return is_arborescence(g, s, mask); });
        CHECK(copy.bases() == x.bases());
      }
    }
  }
}
