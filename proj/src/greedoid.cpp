#include "rootpoly/greedoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rootpoly/error.hpp"

namespace rp {

ElementOrder identity_order(int m) {
  ElementOrder order(m);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

ElementOrder seeded_random_order(int m, uint64_t seed) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  ElementOrder order(m);
  for (int i = 0; i < m; ++i) order[perm[i]] = i;
  return order;
}

Greedoid Greedoid::from_oracle(int m, std::function<bool(uint32_t)> feasible,
                               bool verify_axioms) {
  if (m > 16) throw Error(Errc::too_large, "greedoid ground set above 16");
  Greedoid x;
  x.m_ = m;
  // Memoized subset table.
  std::vector<char> table(size_t(1) << m);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) table[mask] = feasible(mask) ? 1 : 0;
  x.feasible_ = [table = std::move(table)](uint32_t mask) { return table[mask] != 0; };
  if (verify_axioms && m <= 12) x.verify_axioms_exhaustively();
  x.enumerate_bases();
  return x;
}

void Greedoid::verify_axioms_exhaustively() const {
  if (!feasible_(0)) throw Error(Errc::internal, "greedoid axiom: empty set not feasible");
  std::vector<std::vector<uint32_t>> by_size(m_ + 1);
  for (uint32_t mask = 0; mask < (1u << m_); ++mask)
    if (feasible_(mask)) by_size[__builtin_popcount(mask)].push_back(mask);
  for (int size = 1; size <= m_; ++size) {
    for (uint32_t x : by_size[size]) {
      bool accessible = false;
      for (int e = 0; e < m_ && !accessible; ++e)
        if ((x >> e & 1) && feasible_(x & ~(1u << e))) accessible = true;
      if (!accessible) throw Error(Errc::internal, "greedoid axiom: accessibility fails");
    }
    for (uint32_t x : by_size[size])
      for (uint32_t y : by_size[size - 1]) {
        bool exchange = false;
        uint32_t candidates = x & ~y;
        for (int e = 0; e < m_ && !exchange; ++e)
          if ((candidates >> e & 1) && feasible_(y | (1u << e))) exchange = true;
        if (!exchange) throw Error(Errc::internal, "greedoid axiom: exchange fails");
      }
  }
}

void Greedoid::enumerate_bases() {
  // Rank by greedy growth, then collect the feasible sets of that size.
  uint32_t current = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int e = 0; e < m_ && !grew; ++e)
      if (!(current >> e & 1) && feasible_(current | (1u << e))) {
        current |= 1u << e;
        grew = true;
      }
  }
  rank_ = __builtin_popcount(current);
  for (uint32_t mask = 0; mask < (1u << m_); ++mask)
    if (__builtin_popcount(mask) == rank_ && feasible_(mask)) bases_.push_back(mask);
}

std::vector<int> Greedoid::lexmin_feasible_word(uint32_t basis, const ElementOrder& order) const {
  if (__builtin_popcount(basis) != rank_ || !feasible_(basis))
    throw Error(Errc::not_a_basis, "lexmin word requested for a non-basis");
  std::vector<int> word;
  uint32_t prefix = 0;
  while (prefix != basis) {
    int best = -1;
    for (int e = 0; e < m_; ++e) {
      if (!((basis & ~prefix) >> e & 1)) continue;
      if (!feasible_(prefix | (1u << e))) continue;
      if (best < 0 || order[e] < order[best]) best = e;
    }
    if (best < 0) throw Error(Errc::internal, "feasible prefix with no feasible extension");
    prefix |= 1u << best;
    word.push_back(best);
  }
  return word;
}

namespace {

bool word_less(const std::vector<int>& a, const std::vector<int>& b, const ElementOrder& order) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (order[a[i]] != order[b[i]]) return order[a[i]] < order[b[i]];
  }
  return a.size() < b.size();
}

}  // namespace

Greedoid::Activity Greedoid::external_activity(uint32_t basis, const ElementOrder& order) const {
  if (__builtin_popcount(basis) != rank_ || !feasible_(basis))
    throw Error(Errc::not_a_basis, "activity requested for a non-basis");
  Activity result;
  std::vector<int> base_word = lexmin_feasible_word(basis, order);
  for (int e = 0; e < m_; ++e) {
    if (basis >> e & 1) continue;
    bool active = true;
    for (int f = 0; f < m_ && active; ++f) {
      if (!(basis >> f & 1)) continue;
      uint32_t exchanged = (basis & ~(1u << f)) | (1u << e);
      if (!feasible_(exchanged)) continue;
      std::vector<int> other = lexmin_feasible_word(exchanged, order);
      if (!word_less(base_word, other, order)) active = false;
    }
    if (active) {
      ++result.count;
      result.active.push_back(e);
    }
  }
  return result;
}

Polynomial Greedoid::greedoid_polynomial(Exec exec, int extra_orders) const {
  if (bases_.empty()) throw Error(Errc::no_basis, "greedoid polynomial");
  auto lambda_under = [&](const ElementOrder& order) {
    std::vector<int> activity(bases_.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
    for (long long i = 0; i < (long long)bases_.size(); ++i)
      activity[i] = external_activity(bases_[i], order).count;
    IntVec coeffs(m_ + 1, 0);
    for (int a : activity) coeffs[a] += 1;
    return Polynomial(coeffs);
  };
  Polynomial reference = lambda_under(identity_order(m_));
  for (int i = 0; i < extra_orders; ++i) {
    Polynomial other = lambda_under(seeded_random_order(m_, 0x9e3779b97f4a7c15ull + i));
    if (other != reference)
      throw Error(Errc::internal, "greedoid polynomial depends on the element order");
  }
  (void)exec;
  return reference;
}

Greedoid Greedoid::restriction(const std::vector<int>& s) const {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  auto parent = feasible_;
  Greedoid x;
  x.m_ = int(sorted.size());
  x.feasible_ = [parent, sorted](uint32_t mask) {
    uint32_t expanded = 0;
    for (size_t i = 0; i < sorted.size(); ++i)
      if (mask >> i & 1) expanded |= 1u << sorted[i];
    return parent(expanded);
  };
  x.enumerate_bases();
  return x;
}

int Greedoid::min_restriction_k(Exec exec) const {
  if (bases_.empty()) throw Error(Errc::no_basis, "min_restriction_k");
  auto has_zero_activity_basis = [&](const Greedoid& g) {
    ElementOrder order = identity_order(g.ground_size());
    for (uint32_t b : g.bases())
      if (g.external_activity(b, order).count == 0) return true;
    return false;
  };
  int answer = -1;
  for (int size = 0; size <= m_ && answer < 0; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<int> keep;
      {
        std::vector<bool> removed(m_, false);
        for (int e : pick) removed[e] = true;
        for (int e = 0; e < m_; ++e)
          if (!removed[e]) keep.push_back(e);
      }
      Greedoid restricted = restriction(keep);
      if (restricted.rank() == rank_ && has_zero_activity_basis(restricted)) {
        answer = size;
        break;
      }
      if (size == 0) break;
      int i = size - 1;
      while (i >= 0 && pick[i] == m_ - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  if (answer < 0) throw Error(Errc::internal, "no restriction with nonzero constant term");
  int lowest = greedoid_polynomial(exec).lowest_exponent();
  if (lowest != answer)
    throw Error(Errc::internal, "restriction minimum differs from the lowest lambda exponent");
  return answer;
}

Greedoid Greedoid::from_native(int m, std::function<bool(uint32_t)> feasible) {
  if (m > 16) throw Error(Errc::too_large, "greedoid ground set above 16");
  Greedoid x;
  x.m_ = m;
  x.feasible_ = std::move(feasible);
  x.enumerate_bases();
  return x;
}

Greedoid branching_greedoid(const DiGraph& g, int s) {
  return Greedoid::from_native(
      g.m(), [g, s](uint32_t mask) { return is_arborescence(g, s, mask); });
}

namespace {

// Tree path between two vertices inside an edge set (undirected traversal).
std::vector<std::pair<int, bool>> tree_path(const DiGraph& g, const std::vector<int>& tree,
                                            int from, int to) {
  // pair: (edge, traversed tail->head)
  std::vector<std::vector<std::pair<int, bool>>> paths(g.n);
  std::vector<bool> seen(g.n, false);
  seen[from] = true;
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : tree) {
      const Edge& ed = g.edges[e];
      int w = -1;
      bool forward = false;
      if (ed.tail == v) {
        w = ed.head;
        forward = true;
      } else if (ed.head == v) {
        w = ed.tail;
      }
      if (w < 0 || seen[w]) continue;
      seen[w] = true;
      paths[w] = paths[v];
      paths[w].emplace_back(e, forward);
      stack.push_back(w);
    }
  }
  if (!seen[to]) throw Error(Errc::internal, "tree path endpoints disconnected");
  return paths[to];
}

}  // namespace

std::vector<int> semi_active_edges(const DiGraph& g, int s, const std::vector<int>& arborescence,
                                   const ElementOrder& order) {
  uint32_t mask = 0;
  for (int e : arborescence) mask |= 1u << e;
  if (!is_spanning_arborescence(g, s, mask))
    throw Error(Errc::not_an_arborescence, "semi-activity needs a spanning arborescence");
  std::vector<int> result;
  for (int e = 0; e < g.m(); ++e) {
    if (mask >> e & 1) continue;
    const Edge& ed = g.edges[e];
    if (ed.tail == ed.head) {
      // Loop: the fundamental cycle is {e} and e stands parallel to itself.
      result.push_back(e);
      continue;
    }
    // Cycle direction: follow e tail->head, return along the tree path
    // head -> tail. A tree edge traversed tail->head on that walk stands
    // parallel to e.
    auto path = tree_path(g, arborescence, ed.head, ed.tail);
    int max_edge = e;
    bool max_parallel = true;
    for (auto [f, forward] : path)
      if (order[f] > order[max_edge]) {
        max_edge = f;
        max_parallel = forward;
      }
    if (max_parallel) result.push_back(e);
  }
  return result;
}

Polynomial semi_activity_polynomial(const DiGraph& g, int s, const ElementOrder& order) {
  IntVec coeffs(g.m() + 1, 0);
  for (const auto& arb : enumerate_spanning_arborescences(g, s))
    coeffs[semi_active_edges(g, s, arb, order).size()] += 1;
  return Polynomial(coeffs);
}

}  // namespace rp
