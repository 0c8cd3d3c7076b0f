#pragma once

#include <optional>
#include <vector>

#include "rootpoly/numbers.hpp"

namespace rp {

/// Dense rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix from_int_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  RatMatrix transposed() const;
  RatMatrix columns(const std::vector<int>& idx) const;

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

/// Rank over the rationals via fraction-free (Bareiss) elimination.
int mat_rank(const RatMatrix& m);

/// Exact solution of M x = b, or nullopt when inconsistent. Throws
/// singular_underdetermined when the solution space is positive-dimensional.
std::optional<RatVec> solve_rational(const RatMatrix& m, const RatVec& b);

/// If the columns indexed by `support` are minimally dependent, the kernel
/// vector with that support, entries in {-1,0,+1}, first nonzero entry +1,
/// zero outside the support; nullopt when independent or not minimally
/// dependent. Throws non_tu_relation when the normalized relation leaves
/// {-1,0,+1}.
std::optional<IntVec> kernel_vector_on_support(const RatMatrix& m, const std::vector<int>& support);

/// Primitive integer basis of {q : q . col = 0 for every column}, deterministic
/// (from the reduced echelon form of the transposed kernel).
std::vector<IntVec> integer_kernel_basis(const RatMatrix& m);

/// Determinant of a square integer matrix (Bareiss).
Int det_int(const std::vector<IntVec>& rows);

int rank_int_columns(const std::vector<IntVec>& cols);

}  // namespace rp
