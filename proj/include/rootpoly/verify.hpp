#pragma once

#include <string>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/dijoin.hpp"
#include "rootpoly/polytope.hpp"

namespace rp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  DijoinOptions dijoin;
  Exec exec = Exec::parallel;
  bool include_eulerian_checks = true;  // run the duality block on Eulerian inputs
};

/// Per-instance theorem suite over a weakly connected digraph: the degree
/// and leading-coefficient formulas, the interior-point characterization,
/// the h*-vs-first-interior-dilate relation, the min-dijoin/disjoint-cut
/// equality, facet classification, the parking/greedoid reversal and rooted
/// feedback-arc-set degree law per reachable root, order independence, and
/// (Eulerian only) the dual-matroid duality and root independence.
std::vector<CheckResult> run_verify(const DiGraph& g, const VerifyOptions& opts = {});

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace rp
