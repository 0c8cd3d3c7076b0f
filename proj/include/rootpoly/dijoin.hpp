#pragma once

#include <cstdint>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/numbers.hpp"
#include "rootpoly/polytope.hpp"

namespace rp {

struct DijoinOptions {
  int max_edges = 20;  // exhaustive-search budget guard, overridable
  bool debug_full_search = false;  // also scan cycle-containing subsets
  Exec exec = Exec::parallel;
};

/// All minimum-cardinality dijoins with their distinct net degree vectors.
struct DijoinCertificate {
  int nu = 0;
  std::vector<std::vector<int>> min_dijoins;  // ascending edge sets, sorted
  std::vector<IntVec> net_degree_vectors;     // distinct, sorted
};

/// K meets every directed cut. Elementary cuts suffice; DijoinOptions'
/// debug flag re-checks against all cuts. Requires weak connectivity.
bool is_dijoin(const DiGraph& g, const std::vector<int>& k_edges,
               bool check_all_cuts = false);

DijoinCertificate min_dijoins(const DiGraph& g, const DijoinOptions& opts = {});

struct DisjointCutFamily {
  int count = 0;
  std::vector<std::vector<int>> cuts;  // edge sets of one maximum family
};

/// Maximum pairwise edge-disjoint family of directed cuts, exhaustive.
DisjointCutFamily max_disjoint_directed_cuts(const DiGraph& g, const DijoinOptions& opts = {});

struct FeedbackArcSet {
  int size = 0;
  std::vector<int> edges;  // lexicographically least witness
};

/// Minimum feedback arc set (meets every directed cycle), exhaustive by
/// cardinality.
FeedbackArcSet minfas(const DiGraph& g, const DijoinOptions& opts = {});

/// Minimum F with G[E-F] acyclic and still s-root-connected.
FeedbackArcSet minfas_rooted(const DiGraph& g, int s, const DijoinOptions& opts = {});

}  // namespace rp
