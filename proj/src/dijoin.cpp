#include "rootpoly/dijoin.hpp"

#include <algorithm>
#include <functional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rootpoly/error.hpp"

namespace rp {

namespace {

void check_budget(const DiGraph& g, const DijoinOptions& opts, const char* what) {
  if (g.m() > opts.max_edges)
    throw Error(Errc::budget_exceeded,
                std::string(what) + ": " + std::to_string(g.m()) +
                    " edges exceed the exhaustive-search budget of " +
                    std::to_string(opts.max_edges));
  if (g.m() > 30 || g.n > 24) throw Error(Errc::too_large, what);
}

std::vector<uint32_t> cut_masks(const DiGraph& g, bool elementary_only) {
  std::vector<uint32_t> masks;
  for (const DirectedCut& c : enumerate_directed_cuts(g))
    if (!elementary_only || c.elementary) masks.push_back(c.edge_mask);
  return masks;
}

bool mask_hits_all(uint32_t mask, const std::vector<uint32_t>& cuts) {
  for (uint32_t c : cuts)
    if (!(mask & c)) return false;
  return true;
}

std::vector<int> mask_to_edges(uint32_t mask, int m) {
  std::vector<int> edges;
  for (int e = 0; e < m; ++e)
    if (mask >> e & 1) edges.push_back(e);
  return edges;
}

// All edge subsets of the given size that hit every cut, optionally
// restricted to undirected-cycle-free sets; ascending mask order.
std::vector<uint32_t> hitting_sets_of_size(const DiGraph& g, const std::vector<uint32_t>& cuts,
                                           int size, bool forest_only, Exec exec) {
  std::vector<uint32_t> hits;
  int m = g.m();
  std::vector<uint32_t> candidates;
  if (size == 0) {
    candidates.push_back(0);
  } else {
    uint32_t mask = (1u << size) - 1;
    while (mask < (1u << m)) {
      candidates.push_back(mask);
      uint32_t c = mask & -mask, r = mask + c;  // next same-popcount mask
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  std::vector<char> ok(candidates.size(), 0);
  auto test = [&](size_t i) {
    uint32_t mask = candidates[i];
    if (forest_only && !edge_set_is_forest(g, mask)) return;
    if (mask_hits_all(mask, cuts)) ok[i] = 1;
  };
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)candidates.size(); ++i) test(size_t(i));
  } else
#endif
  {
    (void)exec;
    for (size_t i = 0; i < candidates.size(); ++i) test(i);
  }
  for (size_t i = 0; i < candidates.size(); ++i)
    if (ok[i]) hits.push_back(candidates[i]);
  return hits;
}

}  // namespace

bool is_dijoin(const DiGraph& g, const std::vector<int>& k_edges, bool check_all_cuts) {
  if (!is_weakly_connected(g)) throw Error(Errc::disconnected_input, "is_dijoin");
  uint32_t mask = 0;
  for (int e : k_edges) mask |= 1u << e;
  bool elementary_ok = mask_hits_all(mask, cut_masks(g, true));
  if (check_all_cuts) {
    bool all_ok = mask_hits_all(mask, cut_masks(g, false));
    if (all_ok != elementary_ok)
      throw Error(Errc::internal, "elementary cuts do not suffice");
  }
  return elementary_ok;
}

DijoinCertificate min_dijoins(const DiGraph& g, const DijoinOptions& opts) {
  check_budget(g, opts, "min_dijoins");
  if (!is_weakly_connected(g)) throw Error(Errc::disconnected_input, "min_dijoins");
  auto cuts = cut_masks(g, true);
  DijoinCertificate cert;
  for (int size = 0; size <= g.m(); ++size) {
    // Minimum dijoins are cycle-free; the debug flag drops the restriction.
    auto hits = hitting_sets_of_size(g, cuts, size, !opts.debug_full_search, opts.exec);
    if (hits.empty()) continue;
    cert.nu = size;
    std::set<IntVec> vectors;
    for (uint32_t mask : hits) {
      cert.min_dijoins.push_back(mask_to_edges(mask, g.m()));
      vectors.insert(g.net_degree_vector(mask));
    }
    std::sort(cert.min_dijoins.begin(), cert.min_dijoins.end());
    cert.net_degree_vectors.assign(vectors.begin(), vectors.end());
    return cert;
  }
  throw Error(Errc::internal, "the full edge set is always a dijoin");
}

DisjointCutFamily max_disjoint_directed_cuts(const DiGraph& g, const DijoinOptions& opts) {
  check_budget(g, opts, "max_disjoint_directed_cuts");
  auto cuts = enumerate_directed_cuts(g);
  DisjointCutFamily best;
  std::vector<int> chosen;
  // Depth-first over the cut list with a remaining-count bound.
  auto rec = [&](auto&& self, size_t from, uint32_t used) -> void {
    if (int(chosen.size()) > best.count) {
      best.count = int(chosen.size());
      best.cuts.clear();
      for (int ci : chosen) best.cuts.push_back(cuts[ci].edges);
    }
    if (int(chosen.size() + (cuts.size() - from)) <= best.count) return;
    for (size_t i = from; i < cuts.size(); ++i) {
      if (cuts[i].edge_mask & used) continue;
      chosen.push_back(int(i));
      self(self, i + 1, used | cuts[i].edge_mask);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

namespace {

FeedbackArcSet min_subset_with(const DiGraph& g, const DijoinOptions& opts,
                               const std::function<bool(uint32_t)>& removal_ok) {
  int m = g.m();
  for (int size = 0; size <= m; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      uint32_t mask = 0;
      for (int e : pick) mask |= 1u << e;
      if (removal_ok(mask)) {
        FeedbackArcSet f;
        f.size = size;
        f.edges = mask_to_edges(mask, m);
        return f;
      }
      if (size == 0) break;
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  (void)opts;
  throw Error(Errc::internal, "removing all edges always qualifies");
}

}  // namespace

FeedbackArcSet minfas(const DiGraph& g, const DijoinOptions& opts) {
  check_budget(g, opts, "minfas");
  return min_subset_with(g, opts, [&](uint32_t mask) { return is_acyclic(g.subgraph(~mask)); });
}

FeedbackArcSet minfas_rooted(const DiGraph& g, int s, const DijoinOptions& opts) {
  check_budget(g, opts, "minfas_rooted");
  if (!is_root_connected(g, s)) throw Error(Errc::not_root_connected, "minfas_rooted");
  return min_subset_with(g, opts, [&](uint32_t mask) {
    DiGraph h = g.subgraph(~mask);
    return is_acyclic(h) && is_root_connected(h, s);
  });
}

}  // namespace rp
