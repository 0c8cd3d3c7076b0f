#pragma once

#include <optional>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/polynomial.hpp"
#include "rootpoly/polytope.hpp"

namespace rp {

/// p maps each non-root vertex to a nonnegative integer; indexing follows
/// vertex order with the root skipped.
struct ParkingCheck {
  bool ok = true;
  std::vector<int> violating_set;  // smallest witness, ascending vertices
};

/// Exhaustive check of the defining condition over all nonempty subsets of
/// V - s: some u in S must satisfy p(u) < #edges from V-S into u.
ParkingCheck is_parking_function(const DiGraph& g, int s, const std::vector<int>& p);

/// park(x) = sum over parking functions of x^{|p|}; enumeration stays inside
/// the componentwise box p(v) <= indegree(v) - 1 (loops excluded).
Polynomial parking_enumerator(const DiGraph& g, int s, Exec exec = Exec::parallel);

/// lambda from park by coefficient reversal into degree |E| - |V| + 1;
/// checked against the branching-greedoid polynomial.
Polynomial chan_transform(const DiGraph& g, int s, Exec exec = Exec::parallel);

struct EulerianDualityReport {
  Polynomial dual_interior;              // interior polynomial of the dual matroid
  std::vector<Polynomial> park_by_root;  // one entry per root vertex
  bool parking_matches_dual = true;
  bool root_independent = true;
};

/// For connected Eulerian inputs: park equals the dual-matroid interior
/// polynomial for every root, and is root-independent.
EulerianDualityReport eulerian_duality_check(const DiGraph& g, Exec exec = Exec::parallel);

}  // namespace rp
