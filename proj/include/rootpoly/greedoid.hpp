#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/polynomial.hpp"
#include "rootpoly/polytope.hpp"

namespace rp {

/// Element order for activity computations: order[i] is the rank of element
/// i (smaller rank = lexicographically smaller).
using ElementOrder = std::vector<int>;

ElementOrder identity_order(int m);
ElementOrder seeded_random_order(int m, uint64_t seed);

/// Greedoid as a feasibility oracle over subsets of {0..m-1}. Axioms are
/// verified exhaustively on construction of table-backed greedoids with
/// m <= 12; branching greedoids use a native arborescence test instead.
class Greedoid {
 public:
  static Greedoid from_oracle(int m, std::function<bool(uint32_t)> feasible,
                              bool verify_axioms = true);

  /// Wraps a fast native feasibility test directly, skipping the memo table
  /// and the axiom verification (for oracle families known to be greedoids).
  static Greedoid from_native(int m, std::function<bool(uint32_t)> feasible);

  int ground_size() const { return m_; }
  int rank() const { return rank_; }
  bool feasible(uint32_t mask) const { return feasible_(mask); }

  /// All bases (maximal feasible sets) as masks, ascending.
  const std::vector<uint32_t>& bases() const { return bases_; }

  /// Lexicographically minimal feasible word of a basis under the order,
  /// computed greedily. Throws not_a_basis.
  std::vector<int> lexmin_feasible_word(uint32_t basis, const ElementOrder& order) const;

  struct Activity {
    int count = 0;
    std::vector<int> active;  // ascending element ids
  };
  /// External activity of a basis: e not in B is active iff every feasible
  /// exchange B+e-f has a lexicographically larger minimal word (vacuously
  /// active when no exchange exists).
  Activity external_activity(uint32_t basis, const ElementOrder& order) const;

  /// lambda(t) = sum over bases of t^{e(B)} under the identity reference
  /// order; recomputed under `extra_orders` seeded random orders and checked
  /// for equality. Throws no_basis on an oracle without bases.
  Polynomial greedoid_polynomial(Exec exec = Exec::parallel, int extra_orders = 3) const;

  /// Restriction to S: ground set re-indexed to 0..|S|-1 in ascending
  /// original order, feasible sets those contained in S.
  Greedoid restriction(const std::vector<int>& s) const;

  /// Smallest |S| with rank(X|_{E-S}) = rank and constant term of
  /// lambda(X|_{E-S}) nonzero; asserted equal to the lowest nonzero exponent
  /// of lambda(X).
  int min_restriction_k(Exec exec = Exec::parallel) const;

 private:
  Greedoid() = default;
  void enumerate_bases();
  void verify_axioms_exhaustively() const;

  int m_ = 0;
  int rank_ = 0;
  std::function<bool(uint32_t)> feasible_;
  std::vector<uint32_t> bases_;
};

/// Branching greedoid of (G, s): feasible sets are the arborescences rooted
/// at s; bases are spanning arborescences when G is s-root-connected.
Greedoid branching_greedoid(const DiGraph& g, int s);

/// Edges outside A whose fundamental-cycle maximum stands parallel to them.
/// Throws not_an_arborescence when A is not a spanning arborescence.
std::vector<int> semi_active_edges(const DiGraph& g, int s, const std::vector<int>& arborescence,
                                   const ElementOrder& order);

/// Generating polynomial of semi-activity over all spanning arborescences.
Polynomial semi_activity_polynomial(const DiGraph& g, int s, const ElementOrder& order);

}  // namespace rp
