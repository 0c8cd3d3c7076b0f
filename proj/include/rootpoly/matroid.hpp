#pragma once

#include <optional>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/numbers.hpp"
#include "rootpoly/polynomial.hpp"
#include "rootpoly/polytope.hpp"

namespace rp {

/// Witness for a failed total-unimodularity check.
struct TuViolation {
  std::vector<int> rows;
  std::vector<int> cols;
  Int det;
};

struct TuCheck {
  bool ok = true;
  std::optional<TuViolation> violation;
};

/// Exhaustive square-submatrix determinant check.
TuCheck is_totally_unimodular(const std::vector<IntVec>& columns, Exec exec = Exec::parallel);

/// Signed circuit or cocircuit: a {-1,0,+1} vector over the ground set with
/// the first nonzero entry +1.
struct SignedVector {
  IntVec sign;               // length = ground-set size
  std::vector<int> support;  // ascending
  bool directed = false;     // all nonzero entries +1

  std::vector<int> plus() const;
  std::vector<int> minus() const;
};

/// Oriented regular matroid represented by the columns of a totally
/// unimodular matrix. Ground set = column indices.
class OrientedRegularMatroid {
 public:
  /// Verifies total unimodularity unless trusted. `ambient_if_empty` sizes
  /// the column space of a matroid with an empty ground set.
  explicit OrientedRegularMatroid(std::vector<IntVec> columns, bool trust_tu = false,
                                  Exec exec = Exec::parallel, int ambient_if_empty = 1);

  int ground_size() const { return int(cols_.size()); }
  int ambient() const { return ambient_; }
  int rank() const { return rank_; }
  const std::vector<IntVec>& columns() const { return cols_; }
  IntVec column_sum(const std::vector<int>& subset) const;
  int subset_rank(const std::vector<int>& subset) const;

  /// All minimal dependent column sets with canonical kernel vectors.
  std::vector<SignedVector> signed_circuits() const;
  /// All cocircuits (complement supports of rank r-1 flats), canonical.
  std::vector<SignedVector> signed_cocircuits() const;

  bool is_co_eulerian() const;

 private:
  std::vector<IntVec> cols_;
  int ambient_;
  int rank_;
};

OrientedRegularMatroid graphic_matroid(const DiGraph& g);

/// Oriented dual via exact pivoting to [I | D] and output [-D^T | I], ground
/// set order preserved. Verifies that circuits and cocircuits swap.
OrientedRegularMatroid dual_matroid(const OrientedRegularMatroid& m);

struct MatroidDijoinCertificate {
  int nu = 0;
  std::vector<std::vector<int>> min_dijoins;
  std::vector<IntVec> vectors;  // distinct column sums over minimum dijoins
};

/// Exhaustive search over independent subsets hitting every directed
/// cocircuit, by increasing size.
MatroidDijoinCertificate matroid_min_dijoins(const OrientedRegularMatroid& m);

/// h* of conv({0} u columns); checks the degree and leading-coefficient
/// relations against matroid_min_dijoins.
Polynomial matroid_interior_polynomial(const OrientedRegularMatroid& m,
                                       Exec exec = Exec::parallel);

Polytope matroid_polytope(const OrientedRegularMatroid& m);

/// Facet description check: origin facets match directed cocircuits, the
/// others are admissible vectors (values <= 1, tight set of full rank).
struct MatroidFacetCheck {
  bool pass = true;
  bool co_eulerian = false;
  std::string note;
};

MatroidFacetCheck matroid_facet_check(const OrientedRegularMatroid& m);

}  // namespace rp
