#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rootpoly/numbers.hpp"

namespace rp {

struct Edge {
  int tail;
  int head;
  bool operator==(const Edge& o) const { return tail == o.tail && head == o.head; }
};

/// Multidigraph with loops and parallel edges. Edge identity is the position
/// in the edge sequence; vertices are 0..n-1.
struct DiGraph {
  int n = 0;
  std::vector<Edge> edges;

  DiGraph() = default;
  DiGraph(int n_, std::vector<Edge> e);

  int m() const { return int(edges.size()); }
  int indegree(int v, bool count_loops = true) const;
  int outdegree(int v) const;
  /// x_e = 1_head - 1_tail (the zero vector for a loop).
  IntVec edge_vector(int e) const;
  IntVec net_degree_vector(uint32_t edge_mask) const;
  DiGraph subgraph(uint32_t edge_mask) const;
  DiGraph reversed() const;
};

struct ConnectivityFlags {
  bool weakly_connected;
  bool strongly_connected;
  bool s_root_connected;
  bool eulerian;
};

ConnectivityFlags connectivity_flags(const DiGraph& g, int s);

bool is_weakly_connected(const DiGraph& g);
bool is_acyclic(const DiGraph& g);
bool is_root_connected(const DiGraph& g, int s);
int weak_component_count(const DiGraph& g);

/// Directed cut: all crossing edges point from shore V0 into shore V1.
struct DirectedCut {
  std::vector<int> edges;       // ascending
  uint32_t edge_mask;
  std::vector<int> head_shore;  // V1, the shore containing the heads
  bool elementary;              // removal leaves exactly two weak components
};

/// All directed cuts by scanning every vertex bipartition, deduplicated by
/// edge set and ordered lexicographically by edge-index set.
/// Requires a weakly connected input.
std::vector<DirectedCut> enumerate_directed_cuts(const DiGraph& g);

/// Signed cycle of the underlying multigraph; the split satisfies
/// sum_{C+} x_e = sum_{C-} x_e and the lowest-index edge lies in C+.
struct SignedCycle {
  std::vector<int> plus;   // ascending
  std::vector<int> minus;  // ascending
  std::vector<int> edges() const;
  uint32_t edge_mask() const;
};

/// Every cycle of the underlying undirected multigraph (loops give length-1
/// cycles, parallel pairs length-2), canonically signed, ordered by edge set.
std::vector<SignedCycle> enumerate_signed_cycles(const DiGraph& g);

/// All spanning arborescences rooted at s, as ascending edge-index sets;
/// empty iff the graph is not s-root-connected.
std::vector<std::vector<int>> enumerate_spanning_arborescences(const DiGraph& g, int s);

bool is_arborescence(const DiGraph& g, int s, uint32_t edge_mask);
bool is_spanning_arborescence(const DiGraph& g, int s, uint32_t edge_mask);

/// Vertex labels rising by exactly one along every edge, ell(0) = 0.
struct Layering {
  std::vector<long> level;
};

/// A layering iff the graph is semi-balanced. Requires weak connectivity.
std::optional<Layering> find_layering(const DiGraph& g);

/// All admissible layerings (rises at most one per edge, tight edges weakly
/// connected and spanning), normalized to ell(0) = 0, deduplicated.
std::vector<std::vector<long>> enumerate_admissible_layerings(const DiGraph& g);

/// Undirected multigraph; endpoints are unordered but stored as written.
struct UndirectedGraph {
  int n = 0;
  std::vector<Edge> edges;
  int m() const { return int(edges.size()); }
};

UndirectedGraph underlying(const DiGraph& g);

/// Orientation by bitmask: edge i keeps its written direction iff bit i is
/// set, otherwise it is reversed.
DiGraph orient(const UndirectedGraph& u, uint32_t mask);

/// All 2^m orientations in mask order (mask 2^m - 1 last, all edges as
/// written). Materialized; capped at 14 edges.
std::vector<DiGraph> enumerate_orientations(const UndirectedGraph& u);

bool is_connected(const UndirectedGraph& u);

/// Partite classes when bipartite (class id 0/1 per vertex), else nullopt.
/// Loops make a graph non-bipartite.
std::optional<std::vector<int>> bipartition(const UndirectedGraph& u);

std::vector<int> bridge_edges(const UndirectedGraph& u);

/// Block index per edge (maximal 2-connected components; bridges and loops
/// are their own blocks).
std::vector<int> block_of_edge(const UndirectedGraph& u);

/// Edge sets of all spanning trees of the underlying multigraph.
std::vector<uint32_t> enumerate_spanning_tree_masks(const DiGraph& g);

/// Undirected edge set acyclicity (loops and parallel pairs are cycles).
bool edge_set_is_forest(const DiGraph& g, uint32_t edge_mask);

}  // namespace rp
