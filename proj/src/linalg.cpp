#include "rootpoly/linalg.hpp"

#include <algorithm>

#include "rootpoly/error.hpp"

namespace rp {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVec>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rat(rows[i][j]);
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::columns(const std::vector<int>& idx) const {
  RatMatrix m(rows_, int(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) m.at(i, int(j)) = at(i, idx[j]);
  return m;
}

namespace {

// Rows scaled to integers (rank-preserving), for fraction-free elimination.
std::vector<IntVec> integerized_rows(const RatMatrix& m) {
  std::vector<IntVec> rows(m.rows(), IntVec(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    Int lcm = 1;
    for (int j = 0; j < m.cols(); ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      Rat scaled = m.at(i, j) * Rat(lcm);
      scaled.canonicalize();
      rows[i][j] = scaled.get_num();
    }
  }
  return rows;
}

// Bareiss elimination in place; returns rank. `sign` (if given) accumulates
// the row-swap parity.
int bareiss(std::vector<IntVec>& a, int* sign = nullptr) {
  int rows = int(a.size());
  int cols = rows ? int(a[0].size()) : 0;
  Int prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      if (sign) *sign = -*sign;
    }
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Int num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Reduced row echelon form over the rationals; returns pivot column list.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Rat inv = m.at(r, col);
    for (int j = col; j < m.cols(); ++j) m.at(r, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

int mat_rank(const RatMatrix& m) {
  auto rows = integerized_rows(m);
  return bareiss(rows);
}

std::optional<RatVec> solve_rational(const RatMatrix& m, const RatVec& b) {
  if (int(b.size()) != m.rows()) throw Error(Errc::internal, "solve_rational: size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  // A pivot in the rhs column marks inconsistency.
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  for (int i = int(pivots.size()); i < m.rows(); ++i)
    if (aug.at(i, m.cols()) != 0) return std::nullopt;
  if (int(pivots.size()) < m.cols())
    throw Error(Errc::singular_underdetermined, "solution space is positive-dimensional");
  // Full column rank: pivots are exactly columns 0..cols-1.
  RatVec x(m.cols());
  for (int i = 0; i < m.cols(); ++i) x[i] = aug.at(i, m.cols());
  return x;
}

std::optional<IntVec> kernel_vector_on_support(const RatMatrix& m, const std::vector<int>& support) {
  RatMatrix sub = m.columns(support);
  RatMatrix work = sub;
  std::vector<int> pivots = rref(work);
  int nullity = sub.cols() - int(pivots.size());
  if (nullity != 1) return std::nullopt;
  // Kernel vector from the single free column of the echelon form.
  std::vector<bool> is_pivot(sub.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  int free_col = -1;
  for (int j = 0; j < sub.cols(); ++j)
    if (!is_pivot[j]) free_col = j;
  RatVec k(sub.cols(), Rat(0));
  k[free_col] = 1;
  for (size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -work.at(int(i), free_col);
  IntVec prim = primitive_integer(k);
  for (const Int& x : prim)
    if (x == 0) return std::nullopt;  // dependence on a proper subset: not minimal
  canonical_sign(prim);
  for (const Int& x : prim)
    if (abs(x) > 1)
      throw Error(Errc::non_tu_relation,
                  "minimal dependence with coefficients outside {-1,0,+1}: " + vec_to_string(prim));
  IntVec full(m.cols(), 0);
  for (size_t i = 0; i < support.size(); ++i) full[support[i]] = prim[i];
  return full;
}

std::vector<IntVec> integer_kernel_basis(const RatMatrix& m) {
  RatMatrix work = m;
  std::vector<int> pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<IntVec> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    RatVec k(m.cols(), Rat(0));
    k[j] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -work.at(int(i), j);
    IntVec prim = primitive_integer(k);
    canonical_sign(prim);
    basis.push_back(std::move(prim));
  }
  return basis;
}

Int det_int(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 1;
  std::vector<IntVec> a = rows;
  int sign = 1;
  int rank = bareiss(a, &sign);
  int n = int(rows.size());
  if (rank < n) return 0;
  return sign * a[n - 1][n - 1];
}

int rank_int_columns(const std::vector<IntVec>& cols) {
  if (cols.empty()) return 0;
  std::vector<IntVec> rows = cols;  // rank(A) = rank(A^T)
  return bareiss(rows);
}

}  // namespace rp
