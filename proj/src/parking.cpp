#include "rootpoly/parking.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rootpoly/error.hpp"
#include "rootpoly/greedoid.hpp"
#include "rootpoly/matroid.hpp"

namespace rp {

namespace {

std::vector<int> non_root_vertices(const DiGraph& g, int s) {
  std::vector<int> vs;
  for (int v = 0; v < g.n; ++v)
    if (v != s) vs.push_back(v);
  return vs;
}

}  // namespace

ParkingCheck is_parking_function(const DiGraph& g, int s, const std::vector<int>& p) {
  std::vector<int> vs = non_root_vertices(g, s);
  if (p.size() != vs.size()) throw Error(Errc::internal, "parking vector length mismatch");
  std::vector<int> value(g.n, 0);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (p[i] < 0) throw Error(Errc::internal, "parking values must be nonnegative");
    value[vs[i]] = p[i];
  }
  int k = int(vs.size());
  ParkingCheck result;
  // Subsets ordered by size then lexicographically: the reported witness is
  // the smallest failing one.
  std::vector<std::pair<int, uint32_t>> subsets;
  for (uint32_t mask = 1; mask < (1u << k); ++mask)
    subsets.emplace_back(__builtin_popcount(mask), mask);
  std::sort(subsets.begin(), subsets.end());
  for (auto [size, mask] : subsets) {
    std::vector<bool> in_s(g.n, false);
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) in_s[vs[i]] = true;
    bool ok = false;
    for (int i = 0; i < k && !ok; ++i) {
      if (!(mask >> i & 1)) continue;
      int u = vs[i];
      int incoming = 0;
      for (const Edge& e : g.edges)
        if (e.head == u && !in_s[e.tail]) ++incoming;
      if (value[u] < incoming) ok = true;
    }
    if (!ok) {
      result.ok = false;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) result.violating_set.push_back(vs[i]);
      return result;
    }
  }
  return result;
}

Polynomial parking_enumerator(const DiGraph& g, int s, Exec exec) {
  std::vector<int> vs = non_root_vertices(g, s);
  int k = int(vs.size());
  std::vector<int> box(k);
  for (int i = 0; i < k; ++i) {
    box[i] = g.indegree(vs[i], /*count_loops=*/false);
    if (box[i] == 0) return Polynomial();  // the singleton condition fails for all p
  }
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= box[i];
  std::vector<long long> weight_count;  // index = |p|
  int max_weight = 0;
  for (int i = 0; i < k; ++i) max_weight += box[i] - 1;
  weight_count.assign(max_weight + 1, 0);
  auto candidate = [&](long long idx) {
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) {
      p[i] = int(idx % box[i]);
      idx /= box[i];
    }
    return p;
  };
#ifdef _OPENMP
  if (exec == Exec::parallel) {
    std::vector<long long> local(max_weight + 1, 0);
#pragma omp parallel
    {
      std::vector<long long> mine(max_weight + 1, 0);
#pragma omp for schedule(dynamic, 16) nowait
      for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> p = candidate(idx);
        if (is_parking_function(g, s, p).ok) {
          int w = 0;
          for (int x : p) w += x;
          ++mine[w];
        }
      }
#pragma omp critical
      for (int w = 0; w <= max_weight; ++w) local[w] += mine[w];
    }
    IntVec coeffs(max_weight + 1, 0);
    for (int w = 0; w <= max_weight; ++w) coeffs[w] = Int((long)local[w]);
    return Polynomial(coeffs);
  }
#else
  (void)exec;
#endif
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<int> p = candidate(idx);
    if (is_parking_function(g, s, p).ok) {
      int w = 0;
      for (int x : p) w += x;
      ++weight_count[w];
    }
  }
  IntVec coeffs(max_weight + 1, 0);
  for (int w = 0; w <= max_weight; ++w) coeffs[w] = Int((long)weight_count[w]);
  return Polynomial(coeffs);
}

Polynomial chan_transform(const DiGraph& g, int s, Exec exec) {
  if (!is_root_connected(g, s)) throw Error(Errc::not_root_connected, "chan_transform");
  Polynomial park = parking_enumerator(g, s, exec);
  int genus = g.m() - g.n + 1;
  if (park.degree() > genus)
    throw Error(Errc::negative_exponent, "parking enumerator degree exceeds |E| - |V| + 1");
  Polynomial lambda = park.reversed_into_degree(genus);
  Polynomial via_greedoid = branching_greedoid(g, s).greedoid_polynomial(exec);
  if (lambda != via_greedoid)
    throw Error(Errc::internal, "parking reversal disagrees with the greedoid polynomial");
  return lambda;
}

EulerianDualityReport eulerian_duality_check(const DiGraph& g, Exec exec) {
  ConnectivityFlags flags = connectivity_flags(g, 0);
  if (!flags.eulerian || !flags.weakly_connected)
    throw Error(Errc::not_eulerian, "eulerian_duality_check needs a connected Eulerian digraph");
  EulerianDualityReport report;
  OrientedRegularMatroid dual = dual_matroid(graphic_matroid(g));
  report.dual_interior = matroid_interior_polynomial(dual, exec);
  for (int s = 0; s < g.n; ++s) {
    report.park_by_root.push_back(parking_enumerator(g, s, exec));
    if (report.park_by_root.back() != report.dual_interior) report.parking_matches_dual = false;
    if (report.park_by_root.back() != report.park_by_root.front()) report.root_independent = false;
  }
  return report;
}

}  // namespace rp
