#include "rootpoly/scan.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rootpoly/error.hpp"

namespace rp {

const Polynomial& OrientScanReport::poly_of(uint32_t mask) const {
  for (const OrientationClass& c : classes)
    if (std::binary_search(c.masks.begin(), c.masks.end(), mask)) return c.poly;
  throw Error(Errc::internal, "orientation mask outside the scan");
}

namespace {

bool block_vertices_strongly_connected(const DiGraph& g, const std::vector<int>& block_edges) {
  std::set<int> verts;
  for (int e : block_edges) {
    verts.insert(g.edges[e].tail);
    verts.insert(g.edges[e].head);
  }
  for (int a : verts) {
    std::set<int> seen{a};
    std::vector<int> stack{a};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : block_edges) {
        if (g.edges[e].tail == v && !seen.count(g.edges[e].head)) {
          seen.insert(g.edges[e].head);
          stack.push_back(g.edges[e].head);
        }
      }
    }
    if (seen.size() != verts.size()) return false;
  }
  return true;
}

}  // namespace

OrientScanReport orient_scan(const UndirectedGraph& u, const OrientScanOptions& opts) {
  if (!is_connected(u)) throw Error(Errc::disconnected_input, "orient-scan");
  if (u.m() > opts.max_edges)
    throw Error(Errc::too_large, "orient-scan handles at most " +
                                     std::to_string(opts.max_edges) + " edges");
  long long total = 1ll << u.m();
  std::vector<Polynomial> polys(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.exec == Exec::parallel)
#endif
  for (long long mask = 0; mask < total; ++mask)
    polys[mask] = interior_polynomial(orient(u, uint32_t(mask)), Exec::serial);

  OrientScanReport report;
  std::map<Polynomial, std::vector<uint32_t>> by_poly;
  for (long long mask = 0; mask < total; ++mask) by_poly[polys[mask]].push_back(uint32_t(mask));
  for (auto& [p, masks] : by_poly) report.classes.push_back({p, masks});

  report.min_degree = polys[0].degree();
  report.max_degree = polys[0].degree();
  for (const auto& c : report.classes) {
    report.min_degree = std::min(report.min_degree, c.poly.degree());
    report.max_degree = std::max(report.max_degree, c.poly.degree());
  }
  for (long long mask = 0; mask < total; ++mask) {
    if (polys[mask].degree() == report.min_degree) ++report.min_degree_attainers;
    if (polys[mask].degree() == report.max_degree) ++report.max_degree_attainers;
  }

  auto leq_all = [&](const Polynomial& p) {
    for (const auto& c : report.classes)
      if (!p.coefficientwise_leq(c.poly)) return false;
    return true;
  };
  auto geq_all = [&](const Polynomial& p) {
    for (const auto& c : report.classes)
      if (!c.poly.coefficientwise_leq(p)) return false;
    return true;
  };
  for (const auto& c : report.classes) {
    if (leq_all(c.poly)) report.has_coefficientwise_minimum = true;
    if (geq_all(c.poly)) report.has_coefficientwise_maximum = true;
  }

  if (auto classes2 = bipartition(u)) {
    // Standard orientation: every edge toward class 1.
    uint32_t standard = 0;
    for (int e = 0; e < u.m(); ++e)
      if ((*classes2)[u.edges[e].tail] == 0) standard |= 1u << e;
    report.standard_orientation_minimizes = polys[standard].degree() == report.min_degree;
  }

  if (bridge_edges(u).empty()) {
    std::vector<int> block = block_of_edge(u);
    int blocks = u.m() ? 1 + *std::max_element(block.begin(), block.end()) : 0;
    std::vector<std::vector<int>> block_edges(blocks);
    for (int e = 0; e < u.m(); ++e) block_edges[block[e]].push_back(e);
    bool exact = true;
    for (long long mask = 0; mask < total; ++mask) {
      DiGraph g = orient(u, uint32_t(mask));
      bool all_blocks_strong = true;
      for (const auto& be : block_edges)
        if (!block_vertices_strongly_connected(g, be)) all_blocks_strong = false;
      if (all_blocks_strong != (polys[mask].degree() == report.max_degree)) exact = false;
    }
    report.block_rule_maximizers = exact;
  }

  return report;
}

}  // namespace rp
