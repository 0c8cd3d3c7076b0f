#pragma once

#include <utility>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/numbers.hpp"
#include "rootpoly/polynomial.hpp"

namespace rp {

enum class CountMode { closed, interior };

/// Execution policy for the data-parallel kernels. The serial path is the
/// reference implementation; results must be identical.
enum class Exec { serial, parallel };

/// Supporting hyperplane a.x = b with a.x <= b valid on the polytope, (a, b)
/// jointly primitive, normal taken inside the span of the generators.
struct Facet {
  enum class Tag { cut, layering, none };
  IntVec normal;
  Int offset;
  std::vector<int> tight;  // generator indices on the facet, ascending
  Tag tag = Tag::none;

  bool tight_contains(int gen_index) const;
};

/// Lattice polytope given by generators, with the exact H-representation
/// computed eagerly by exhaustive hyperplane search: every d-subset of
/// generators spanning a hyperplane of the affine hull is tested for
/// one-sidedness. Immutable afterwards; safe for concurrent reads.
class Polytope {
 public:
  /// Generic constructor; duplicates collapsed, first occurrence kept.
  explicit Polytope(const std::vector<IntVec>& generators);

  /// conv({0} u vectors); the zero generator is stored first. `provenance`
  /// maps input positions to stored generator indices.
  static Polytope extended(int ambient_dim, const std::vector<IntVec>& vectors);

  /// Extended root polytope of a digraph: conv({0} u {1_head - 1_tail}).
  static Polytope from_digraph(const DiGraph& g);

  /// Non-extended root polytope conv({x_e}); only meaningful for acyclic
  /// non-semi-balanced comparisons. Requires at least one edge.
  static Polytope from_digraph_plain(const DiGraph& g);

  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<IntVec>& generators() const { return gens_; }
  /// Input position -> stored generator index (identity when no duplicates).
  const std::vector<int>& provenance() const { return provenance_; }
  bool has_origin() const { return origin_index_ >= 0; }
  int origin_index() const { return origin_index_; }

  /// Irredundant facet list; throws degenerate_dimension when dim() == 0.
  const std::vector<Facet>& facets() const;
  /// Affine hull as pairs (q, c) with q.x = c on the polytope.
  const std::vector<std::pair<IntVec, Int>>& hull_equations() const { return hull_eqs_; }
  /// Linearly independent generator differences spanning the direction space.
  const std::vector<IntVec>& span_basis() const { return span_basis_; }

  /// |(k P) cap Z^n| (closed) or the relative-interior count.
  Int lattice_count(int k, CountMode mode, Exec exec = Exec::parallel) const;
  /// The counted points themselves, ascending lexicographic.
  std::vector<IntVec> lattice_points(int k, CountMode mode) const;

  /// h*-polynomial via exact binomial-basis interpolation of the counts
  /// L(0..d). Verifies nonnegative integer coefficients, h*_0 = 1, the
  /// degree relation deg = d + 1 - first_interior_dilate, and that the
  /// leading coefficient equals the first positive interior count.
  Polynomial hstar(Exec exec = Exec::parallel) const;

  /// Smallest k >= 1 whose dilate has an interior lattice point (<= d + 1).
  int first_interior_dilate(Exec exec = Exec::parallel) const;

 private:
  void build();

  int ambient_ = 0;
  int dim_ = 0;
  std::vector<IntVec> gens_;
  std::vector<int> provenance_;
  int origin_index_ = -1;
  std::vector<IntVec> span_basis_;
  std::vector<RatVec> local_coords_;  // generator coordinates in span_basis_
  std::vector<std::pair<IntVec, Int>> hull_eqs_;
  std::vector<Facet> facets_;
};

/// Interior polynomial of a weakly connected digraph (h* of the extended
/// root polytope).
Polynomial interior_polynomial(const DiGraph& g, Exec exec = Exec::parallel);

/// Facet classification against the source digraph: facets through the
/// origin correspond to elementary directed cuts, the others to admissible
/// layering classes (representative normalized to ell(0) = 0). Throws
/// classification_mismatch if either bijection fails.
struct FacetClassification {
  std::vector<std::pair<int, int>> cut_matches;  // facet index -> cut index
  std::vector<DirectedCut> cuts;                 // elementary directed cuts
  std::vector<std::pair<int, std::vector<long>>> layering_matches;
};

FacetClassification classify_facets(const Polytope& p, const DiGraph& source);

}  // namespace rp
