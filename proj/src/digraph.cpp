#include "rootpoly/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rootpoly/error.hpp"

namespace rp {

DiGraph::DiGraph(int n_, std::vector<Edge> e) : n(n_), edges(std::move(e)) {
  for (const Edge& ed : edges)
    if (ed.tail < 0 || ed.tail >= n || ed.head < 0 || ed.head >= n)
      throw Error(Errc::range_error, "edge endpoint out of range");
}

int DiGraph::indegree(int v, bool count_loops) const {
  int d = 0;
  for (const Edge& e : edges)
    if (e.head == v && (count_loops || e.tail != v)) ++d;
  return d;
}

int DiGraph::outdegree(int v) const {
  int d = 0;
  for (const Edge& e : edges)
    if (e.tail == v) ++d;
  return d;
}

IntVec DiGraph::edge_vector(int e) const {
  IntVec x(n, 0);
  x[edges[e].head] += 1;
  x[edges[e].tail] -= 1;
  return x;
}

IntVec DiGraph::net_degree_vector(uint32_t edge_mask) const {
  IntVec x(n, 0);
  for (int e = 0; e < m(); ++e)
    if (edge_mask >> e & 1) {
      x[edges[e].head] += 1;
      x[edges[e].tail] -= 1;
    }
  return x;
}

DiGraph DiGraph::subgraph(uint32_t edge_mask) const {
  DiGraph h;
  h.n = n;
  for (int e = 0; e < m(); ++e)
    if (edge_mask >> e & 1) h.edges.push_back(edges[e]);
  return h;
}

DiGraph DiGraph::reversed() const {
  DiGraph h;
  h.n = n;
  for (const Edge& e : edges) h.edges.push_back({e.head, e.tail});
  return h;
}

namespace {

std::vector<int> weak_components(const DiGraph& g) {
  std::vector<int> comp(g.n, -1);
  int c = 0;
  for (int start = 0; start < g.n; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = c;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Edge& e : g.edges) {
        int w = -1;
        if (e.tail == v) w = e.head;
        else if (e.head == v) w = e.tail;
        if (w >= 0 && comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  return comp;
}

std::vector<bool> reachable_from(const DiGraph& g, int s) {
  std::vector<bool> seen(g.n, false);
  seen[s] = true;
  std::vector<int> stack{s};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges)
      if (e.tail == v && !seen[e.head]) {
        seen[e.head] = true;
        stack.push_back(e.head);
      }
  }
  return seen;
}

}  // namespace

int weak_component_count(const DiGraph& g) {
  auto comp = weak_components(g);
  return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool is_weakly_connected(const DiGraph& g) { return weak_component_count(g) <= 1; }

bool is_root_connected(const DiGraph& g, int s) {
  auto seen = reachable_from(g, s);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_acyclic(const DiGraph& g) {
  std::vector<int> indeg(g.n, 0);
  for (const Edge& e : g.edges) ++indeg[e.head];
  std::vector<int> queue;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (const Edge& e : g.edges)
      if (e.tail == v && --indeg[e.head] == 0) queue.push_back(e.head);
  }
  return removed == g.n;  // a loop keeps its vertex's indegree positive
}

ConnectivityFlags connectivity_flags(const DiGraph& g, int s) {
  ConnectivityFlags f{};
  f.weakly_connected = is_weakly_connected(g);
  f.s_root_connected = is_root_connected(g, s);
  auto fwd = reachable_from(g, 0);
  auto bwd = reachable_from(g.reversed(), 0);
  f.strongly_connected = true;
  for (int v = 0; v < g.n; ++v)
    if (!fwd[v] || !bwd[v]) f.strongly_connected = false;
  f.eulerian = true;
  for (int v = 0; v < g.n; ++v)
    if (g.indegree(v) != g.outdegree(v)) f.eulerian = false;
  return f;
}

std::vector<DirectedCut> enumerate_directed_cuts(const DiGraph& g) {
  if (!is_weakly_connected(g)) throw Error(Errc::disconnected_input, "directed cut enumeration");
  std::vector<DirectedCut> cuts;
  std::set<uint32_t> seen;
  for (uint32_t shore = 1; shore + 1 < (1u << g.n); ++shore) {
    // `shore` encodes V1 (the head side); edges must all cross V0 -> V1.
    uint32_t mask = 0;
    bool directed = true;
    for (int e = 0; e < g.m() && directed; ++e) {
      bool tail_in = shore >> g.edges[e].tail & 1;
      bool head_in = shore >> g.edges[e].head & 1;
      if (tail_in && !head_in) directed = false;
      else if (!tail_in && head_in) mask |= 1u << e;
    }
    if (!directed || mask == 0 || !seen.insert(mask).second) continue;
    DirectedCut cut;
    cut.edge_mask = mask;
    for (int e = 0; e < g.m(); ++e)
      if (mask >> e & 1) cut.edges.push_back(e);
    for (int v = 0; v < g.n; ++v)
      if (shore >> v & 1) cut.head_shore.push_back(v);
    cut.elementary = weak_component_count(g.subgraph(~mask)) == 2;
    cuts.push_back(std::move(cut));
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const DirectedCut& a, const DirectedCut& b) { return a.edges < b.edges; });
  return cuts;
}

std::vector<int> SignedCycle::edges() const {
  std::vector<int> all = plus;
  all.insert(all.end(), minus.begin(), minus.end());
  std::sort(all.begin(), all.end());
  return all;
}

uint32_t SignedCycle::edge_mask() const {
  uint32_t m = 0;
  for (int e : plus) m |= 1u << e;
  for (int e : minus) m |= 1u << e;
  return m;
}

namespace {

struct CycleSearch {
  const DiGraph& g;
  std::vector<std::vector<int>> incident;  // edge indices per vertex
  std::map<uint32_t, SignedCycle> found;
  std::vector<bool> on_path_vertex;
  std::vector<int> path_edges;
  std::vector<bool> path_forward;  // traversal used the edge tail->head
  int anchor_edge = -1;
  int anchor_vertex = -1;

  explicit CycleSearch(const DiGraph& g_) : g(g_), incident(g_.n), on_path_vertex(g_.n, false) {
    for (int e = 0; e < g.m(); ++e) {
      incident[g.edges[e].tail].push_back(e);
      if (g.edges[e].head != g.edges[e].tail) incident[g.edges[e].head].push_back(e);
    }
  }

  void record() {
    SignedCycle c;
    for (size_t i = 0; i < path_edges.size(); ++i)
      (path_forward[i] ? c.plus : c.minus).push_back(path_edges[i]);
    std::sort(c.plus.begin(), c.plus.end());
    std::sort(c.minus.begin(), c.minus.end());
    int lowest = std::min(c.plus.empty() ? INT32_MAX : c.plus[0],
                          c.minus.empty() ? INT32_MAX : c.minus[0]);
    bool flip = !c.plus.empty() || !c.minus.empty();
    flip = flip && (c.plus.empty() || c.plus[0] != lowest);
    if (flip) std::swap(c.plus, c.minus);
    found.emplace(c.edge_mask(), std::move(c));
  }

  void dfs(int v) {
    for (int e : incident[v]) {
      if (e <= anchor_edge) continue;  // the anchor is the cycle's minimum edge
      bool used = false;
      for (int pe : path_edges) used |= pe == e;
      if (used) continue;
      const Edge& ed = g.edges[e];
      if (ed.tail == ed.head) continue;  // loops handled separately
      int w = ed.tail == v ? ed.head : ed.tail;
      if (w == anchor_vertex) {
        path_edges.push_back(e);
        path_forward.push_back(ed.tail == v);
        record();
        path_edges.pop_back();
        path_forward.pop_back();
        continue;
      }
      if (on_path_vertex[w]) continue;
      on_path_vertex[w] = true;
      path_edges.push_back(e);
      path_forward.push_back(ed.tail == v);
      dfs(w);
      path_edges.pop_back();
      path_forward.pop_back();
      on_path_vertex[w] = false;
    }
  }
};

}  // namespace

std::vector<SignedCycle> enumerate_signed_cycles(const DiGraph& g) {
  CycleSearch search(g);
  for (int e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edges[e];
    if (ed.tail == ed.head) {
      SignedCycle c;
      c.plus = {e};
      search.found.emplace(c.edge_mask(), std::move(c));
      continue;
    }
    search.anchor_edge = e;
    search.anchor_vertex = ed.tail;
    search.on_path_vertex.assign(g.n, false);
    search.on_path_vertex[ed.tail] = true;
    search.on_path_vertex[ed.head] = true;
    search.path_edges = {e};
    search.path_forward = {true};
    search.dfs(ed.head);
  }
  std::vector<SignedCycle> out;
  std::vector<std::pair<std::vector<int>, uint32_t>> order;
  for (auto& [mask, c] : search.found) order.emplace_back(c.edges(), mask);
  std::sort(order.begin(), order.end());
  for (auto& [key, mask] : order) out.push_back(search.found.at(mask));
  return out;
}

bool is_arborescence(const DiGraph& g, int s, uint32_t edge_mask) {
  std::vector<int> indeg(g.n, 0);
  for (int e = 0; e < g.m(); ++e)
    if (edge_mask >> e & 1) {
      const Edge& ed = g.edges[e];
      if (ed.head == s || ed.head == ed.tail) return false;
      if (++indeg[ed.head] > 1) return false;
    }
  // Every edge must hang off a path from s.
  std::vector<bool> reached(g.n, false);
  reached[s] = true;
  uint32_t remaining = edge_mask;
  bool progress = true;
  while (remaining && progress) {
    progress = false;
    for (int e = 0; e < g.m(); ++e)
      if (remaining >> e & 1) {
        const Edge& ed = g.edges[e];
        if (reached[ed.tail]) {
          reached[ed.head] = true;
          remaining &= ~(1u << e);
          progress = true;
        }
      }
  }
  return remaining == 0;
}

bool is_spanning_arborescence(const DiGraph& g, int s, uint32_t edge_mask) {
  return __builtin_popcount(edge_mask) == g.n - 1 && is_arborescence(g, s, edge_mask);
}

std::vector<std::vector<int>> enumerate_spanning_arborescences(const DiGraph& g, int s) {
  std::vector<std::vector<int>> result;
  if (g.n == 1) {
    result.push_back({});
    return result;
  }
  // One in-edge per non-root vertex; the combination is an arborescence iff
  // everything is reachable from s.
  std::vector<std::vector<int>> in_edges;
  for (int v = 0; v < g.n; ++v) {
    if (v == s) continue;
    std::vector<int> own;
    for (int e = 0; e < g.m(); ++e)
      if (g.edges[e].head == v && g.edges[e].tail != v) own.push_back(e);
    if (own.empty()) return result;
    in_edges.push_back(std::move(own));
  }
  std::vector<size_t> choice(in_edges.size(), 0);
  while (true) {
    uint32_t mask = 0;
    for (size_t i = 0; i < choice.size(); ++i) mask |= 1u << in_edges[i][choice[i]];
    if (is_arborescence(g, s, mask)) {
      std::vector<int> edges;
      for (int e = 0; e < g.m(); ++e)
        if (mask >> e & 1) edges.push_back(e);
      result.push_back(std::move(edges));
    }
    size_t i = 0;
    while (i < choice.size() && ++choice[i] == in_edges[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<Layering> find_layering(const DiGraph& g) {
  if (!is_weakly_connected(g)) throw Error(Errc::disconnected_input, "layering");
  std::vector<long> level(g.n, 0);
  std::vector<bool> assigned(g.n, false);
  assigned[0] = true;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges) {
      int w = -1;
      long lw = 0;
      if (e.tail == v) {
        w = e.head;
        lw = level[v] + 1;
      } else if (e.head == v) {
        w = e.tail;
        lw = level[v] - 1;
      }
      if (w < 0 || assigned[w]) continue;
      level[w] = lw;
      assigned[w] = true;
      stack.push_back(w);
    }
  }
  for (const Edge& e : g.edges)
    if (level[e.head] - level[e.tail] != 1) return std::nullopt;
  return Layering{std::move(level)};
}

std::vector<uint32_t> enumerate_spanning_tree_masks(const DiGraph& g) {
  std::vector<uint32_t> trees;
  if (g.n == 1) return {0u};
  if (g.m() < g.n - 1) return trees;
  std::vector<int> pick(g.n - 1);
  // All (n-1)-subsets, kept when they form a spanning tree.
  for (int i = 0; i < g.n - 1; ++i) pick[i] = i;
  while (true) {
    uint32_t mask = 0;
    for (int e : pick) mask |= 1u << e;
    if (edge_set_is_forest(g, mask) && weak_component_count(g.subgraph(mask)) == 1)
      trees.push_back(mask);
    int i = g.n - 2;
    while (i >= 0 && pick[i] == g.m() - (g.n - 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < g.n - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  return trees;
}

bool edge_set_is_forest(const DiGraph& g, uint32_t edge_mask) {
  std::vector<int> parent(g.n);
  for (int v = 0; v < g.n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e = 0; e < g.m(); ++e)
    if (edge_mask >> e & 1) {
      int a = find(g.edges[e].tail), b = find(g.edges[e].head);
      if (a == b) return false;  // covers loops and parallel pairs
      parent[a] = b;
    }
  return true;
}

std::vector<std::vector<long>> enumerate_admissible_layerings(const DiGraph& g) {
  // Every admissible layering is determined by a spanning tree of its tight
  // edges, so scanning all spanning trees is exhaustive.
  std::set<std::vector<long>> classes;
  for (uint32_t tree : enumerate_spanning_tree_masks(g)) {
    std::vector<long> level(g.n, 0);
    std::vector<bool> assigned(g.n, false);
    assigned[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e = 0; e < g.m(); ++e) {
        if (!(tree >> e & 1)) continue;
        const Edge& ed = g.edges[e];
        int w = -1;
        long lw = 0;
        if (ed.tail == v) {
          w = ed.head;
          lw = level[v] + 1;
        } else if (ed.head == v) {
          w = ed.tail;
          lw = level[v] - 1;
        }
        if (w < 0 || assigned[w]) continue;
        level[w] = lw;
        assigned[w] = true;
        stack.push_back(w);
      }
    }
    bool admissible = true;
    for (const Edge& e : g.edges)
      if (level[e.head] - level[e.tail] > 1) admissible = false;
    if (admissible) classes.insert(level);
  }
  return {classes.begin(), classes.end()};
}

UndirectedGraph underlying(const DiGraph& g) {
  UndirectedGraph u;
  u.n = g.n;
  u.edges = g.edges;
  return u;
}

DiGraph orient(const UndirectedGraph& u, uint32_t mask) {
  DiGraph g;
  g.n = u.n;
  for (int e = 0; e < u.m(); ++e) {
    if (mask >> e & 1) g.edges.push_back(u.edges[e]);
    else g.edges.push_back({u.edges[e].head, u.edges[e].tail});
  }
  return g;
}

std::vector<DiGraph> enumerate_orientations(const UndirectedGraph& u) {
  if (u.m() > 14) throw Error(Errc::too_large, "orientation enumeration above 14 edges");
  std::vector<DiGraph> all;
  all.reserve(size_t(1) << u.m());
  for (uint32_t mask = 0; mask < (1u << u.m()); ++mask) all.push_back(orient(u, mask));
  return all;
}

bool is_connected(const UndirectedGraph& u) {
  DiGraph g;
  g.n = u.n;
  g.edges = u.edges;
  return is_weakly_connected(g);
}

std::optional<std::vector<int>> bipartition(const UndirectedGraph& u) {
  std::vector<int> color(u.n, -1);
  for (int start = 0; start < u.n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Edge& e : u.edges) {
        int w = -1;
        if (e.tail == v) w = e.head;
        else if (e.head == v) w = e.tail;
        if (w < 0) continue;
        if (w == v) return std::nullopt;  // loop
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<int> bridge_edges(const UndirectedGraph& u) {
  std::vector<int> bridges;
  DiGraph g;
  g.n = u.n;
  g.edges = u.edges;
  int base = weak_component_count(g);
  for (int e = 0; e < u.m(); ++e) {
    if (u.edges[e].tail == u.edges[e].head) continue;
    if (weak_component_count(g.subgraph(~(1u << e))) > base) bridges.push_back(e);
  }
  return bridges;
}

std::vector<int> block_of_edge(const UndirectedGraph& u) {
  // Two edges share a block iff some cycle contains both; union-find over
  // that relation yields the 2-connected blocks at desk scale.
  DiGraph g;
  g.n = u.n;
  g.edges = u.edges;
  std::vector<int> parent(u.m());
  for (int e = 0; e < u.m(); ++e) parent[e] = e;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const SignedCycle& c : enumerate_signed_cycles(g)) {
    std::vector<int> es = c.edges();
    for (size_t i = 1; i < es.size(); ++i) {
      int a = find(es[0]), b = find(es[i]);
      if (a != b) parent[a] = b;
    }
  }
  std::vector<int> block(u.m());
  std::map<int, int> ids;
  for (int e = 0; e < u.m(); ++e) {
    int r = find(e);
    auto [it, fresh] = ids.emplace(r, int(ids.size()));
    block[e] = it->second;
  }
  return block;
}

}  // namespace rp
