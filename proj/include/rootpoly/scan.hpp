#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/polynomial.hpp"
#include "rootpoly/polytope.hpp"

namespace rp {

struct OrientScanOptions {
  int max_edges = 14;
  Exec exec = Exec::parallel;
};

/// Orientations grouped by identical interior polynomial.
struct OrientationClass {
  Polynomial poly;
  std::vector<uint32_t> masks;  // ascending
};

struct OrientScanReport {
  std::vector<OrientationClass> classes;  // ascending by coefficient vector
  int min_degree = 0;
  int max_degree = 0;
  long long min_degree_attainers = 0;
  long long max_degree_attainers = 0;
  bool has_coefficientwise_minimum = false;
  bool has_coefficientwise_maximum = false;
  // Set on bipartite inputs: the all-edges-one-way orientation attains the
  // minimum degree.
  std::optional<bool> standard_orientation_minimizes;
  // Set on bridgeless inputs: maximum degree is attained exactly when every
  // 2-connected block is strongly connected.
  std::optional<bool> block_rule_maximizers;

  const Polynomial& poly_of(uint32_t mask) const;
};

/// Interior polynomial of every orientation of a connected multigraph.
OrientScanReport orient_scan(const UndirectedGraph& u, const OrientScanOptions& opts = {});

}  // namespace rp
