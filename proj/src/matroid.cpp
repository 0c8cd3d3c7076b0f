#include "rootpoly/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rootpoly/error.hpp"
#include "rootpoly/linalg.hpp"

namespace rp {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

TuCheck is_totally_unimodular(const std::vector<IntVec>& columns, Exec exec) {
  TuCheck result;
  int m = int(columns.size());
  int n = m ? int(columns[0].size()) : 0;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      if (abs(columns[j][i]) > 1) {
        result.ok = false;
        result.violation = TuViolation{{i}, {j}, columns[j][i]};
        return result;
      }
  int maxk = std::min(n, m);
  for (int k = 2; k <= maxk; ++k) {
    auto row_sets = combinations(n, k);
    auto col_sets = combinations(m, k);
    // Witness chosen deterministically: the first violating (rows, cols)
    // pair in enumeration order, independent of the schedule.
    std::atomic<long long> best(-1);
    TuViolation witness;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
    for (long long ri = 0; ri < (long long)row_sets.size(); ++ri) {
      for (long long ci = 0; ci < (long long)col_sets.size(); ++ci) {
        long long rank = ri * (long long)col_sets.size() + ci;
        long long seen = best.load(std::memory_order_relaxed);
        if (seen >= 0 && seen < rank) continue;
        const auto& cs = col_sets[ci];
        std::vector<IntVec> sub(k, IntVec(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = columns[cs[j]][row_sets[ri][i]];
        Int d = det_int(sub);
        if (abs(d) > 1) {
#ifdef _OPENMP
#pragma omp critical
#endif
          {
            long long cur = best.load(std::memory_order_relaxed);
            if (cur < 0 || rank < cur) {
              best.store(rank, std::memory_order_relaxed);
              witness = TuViolation{row_sets[ri], cs, d};
            }
          }
        }
      }
    }
    if (best.load() >= 0) {
      result.ok = false;
      result.violation = witness;
      return result;
    }
  }
  (void)exec;
  return result;
}

std::vector<int> SignedVector::plus() const {
  std::vector<int> out;
  for (int i : support)
    if (sign[i] > 0) out.push_back(i);
  return out;
}

std::vector<int> SignedVector::minus() const {
  std::vector<int> out;
  for (int i : support)
    if (sign[i] < 0) out.push_back(i);
  return out;
}

OrientedRegularMatroid::OrientedRegularMatroid(std::vector<IntVec> columns, bool trust_tu,
                                               Exec exec, int ambient_if_empty)
    : cols_(std::move(columns)) {
  ambient_ = cols_.empty() ? ambient_if_empty : int(cols_[0].size());
  if (ambient_ < 1) throw Error(Errc::internal, "matroid needs a positive ambient dimension");
  if (!trust_tu) {
    TuCheck check = is_totally_unimodular(cols_, exec);
    if (!check.ok) {
      std::string what = "matrix is not totally unimodular";
      if (check.violation && !check.violation->rows.empty())
        what += " (offending subdeterminant " + check.violation->det.get_str() + ")";
      throw Error(Errc::not_totally_unimodular, what);
    }
  }
  rank_ = rank_int_columns(cols_);
}

IntVec OrientedRegularMatroid::column_sum(const std::vector<int>& subset) const {
  IntVec s(ambient_, 0);
  for (int i : subset)
    for (int v = 0; v < ambient_; ++v) s[v] += cols_[i][v];
  return s;
}

int OrientedRegularMatroid::subset_rank(const std::vector<int>& subset) const {
  std::vector<IntVec> sub;
  for (int i : subset) sub.push_back(cols_[i]);
  return rank_int_columns(sub);
}

std::vector<SignedVector> OrientedRegularMatroid::signed_circuits() const {
  std::vector<SignedVector> circuits;
  int m = ground_size();
  RatMatrix mat(ambient_, m);
  for (int j = 0; j < m; ++j)
    for (int v = 0; v < ambient_; ++v) mat.at(v, j) = Rat(cols_[j][v]);
  for (int size = 1; size <= rank_ + 1; ++size) {
    for (const auto& support : combinations(m, size)) {
      auto kernel = kernel_vector_on_support(mat, support);
      if (!kernel) continue;
      SignedVector c;
      c.sign = std::move(*kernel);
      c.support = support;
      c.directed = true;
      for (int i : support)
        if (c.sign[i] < 0) c.directed = false;
      circuits.push_back(std::move(c));
    }
  }
  return circuits;
}

std::vector<SignedVector> OrientedRegularMatroid::signed_cocircuits() const {
  int m = ground_size();
  std::map<std::vector<int>, SignedVector> by_support;
  for (const auto& flat : combinations(m, rank_ - 1)) {
    if (subset_rank(flat) != rank_ - 1) continue;
    // Functionals h vanishing on the flat; their value vectors (h . a_j)_j
    // span a one-dimensional space because the flat has corank 1 in the span.
    RatMatrix flat_rows(int(flat.size()), ambient_);
    for (size_t i = 0; i < flat.size(); ++i)
      for (int v = 0; v < ambient_; ++v) flat_rows.at(int(i), v) = Rat(cols_[flat[i]][v]);
    IntVec value;
    for (const IntVec& h : integer_kernel_basis(flat_rows)) {
      IntVec v(m, 0);
      for (int j = 0; j < m; ++j)
        for (int w = 0; w < ambient_; ++w) v[j] += cols_[j][w] * h[w];
      if (!is_zero_vec(v)) {
        value = std::move(v);
        break;
      }
    }
    if (value.empty()) continue;
    make_primitive(value);
    canonical_sign(value);
    SignedVector c;
    c.sign = value;
    for (int j = 0; j < m; ++j)
      if (value[j] != 0) c.support.push_back(j);
    c.directed = true;
    for (int j : c.support) {
      if (abs(value[j]) > 1)
        throw Error(Errc::non_tu_relation, "cocircuit values outside {-1,0,+1}");
      if (value[j] < 0) c.directed = false;
    }
    by_support.emplace(c.support, std::move(c));
  }
  std::vector<SignedVector> out;
  for (auto& [sup, c] : by_support) out.push_back(std::move(c));
  return out;
}

bool OrientedRegularMatroid::is_co_eulerian() const {
  for (const SignedVector& c : signed_circuits())
    if (c.plus().size() != c.minus().size()) return false;
  return true;
}

OrientedRegularMatroid graphic_matroid(const DiGraph& g) {
  std::vector<IntVec> cols;
  for (int e = 0; e < g.m(); ++e) cols.push_back(g.edge_vector(e));
  return OrientedRegularMatroid(std::move(cols), /*trust_tu=*/true, Exec::parallel, g.n);
}

namespace {

// Circuits and cocircuits must swap between a matroid and its dual, as
// canonical signed vectors.
void verify_duality(const OrientedRegularMatroid& m, const OrientedRegularMatroid& dual) {
  auto key = [](const std::vector<SignedVector>& vs) {
    std::set<std::vector<std::string>> keys;
    for (const SignedVector& v : vs) {
      std::vector<std::string> k;
      for (const Int& x : v.sign) k.push_back(x.get_str());
      keys.insert(k);
    }
    return keys;
  };
  if (key(dual.signed_circuits()) != key(m.signed_cocircuits()) ||
      key(dual.signed_cocircuits()) != key(m.signed_circuits()))
    throw Error(Errc::internal, "dual circuits/cocircuits do not swap");
}

}  // namespace

OrientedRegularMatroid dual_matroid(const OrientedRegularMatroid& m) {
  int n = m.ground_size();
  int r = m.rank();
  if (n == 0) return OrientedRegularMatroid({}, true, Exec::parallel, 1);
  if (n == r) {
    // Dual of a free matroid: every element a loop, rank zero.
    std::vector<IntVec> loops(n, IntVec(1, 0));
    OrientedRegularMatroid dual(std::move(loops), true);
    verify_duality(m, dual);
    return dual;
  }
  RatMatrix mat(m.ambient(), n);
  for (int j = 0; j < n; ++j)
    for (int v = 0; v < m.ambient(); ++v) mat.at(v, j) = Rat(m.columns()[j][v]);
  // Gauss-Jordan with pivot bookkeeping.
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < n && row < mat.rows(); ++col) {
    int p = -1;
    for (int i = row; i < mat.rows(); ++i)
      if (mat.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < n; ++j) std::swap(mat.at(p, j), mat.at(row, j));
    Rat inv = mat.at(row, col);
    for (int j = 0; j < n; ++j) mat.at(row, j) /= inv;
    for (int i = 0; i < mat.rows(); ++i) {
      if (i == row || mat.at(i, col) == 0) continue;
      Rat f = mat.at(i, col);
      for (int j = 0; j < n; ++j) mat.at(i, j) -= f * mat.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (int(pivot_cols.size()) != r)
    throw Error(Errc::rank_deficient_pivot, "pivoting found fewer pivots than the rank");
  std::vector<int> nonpivot;
  {
    std::set<int> pset(pivot_cols.begin(), pivot_cols.end());
    for (int j = 0; j < n; ++j)
      if (!pset.count(j)) nonpivot.push_back(j);
  }
  // mat's top r rows now hold [I | D] up to column order; dual column for
  // pivot i is -(row i restricted to nonpivots), dual column for the j-th
  // nonpivot is e_j.
  std::vector<IntVec> dual_cols(n, IntVec(n - r, 0));
  for (int i = 0; i < r; ++i)
    for (size_t j = 0; j < nonpivot.size(); ++j) {
      Rat entry = mat.at(i, nonpivot[j]);
      if (entry.get_den() != 1)
        throw Error(Errc::non_tu_relation, "pivoted matrix is not integral");
      dual_cols[pivot_cols[i]][int(j)] = -entry.get_num();
    }
  for (size_t j = 0; j < nonpivot.size(); ++j) dual_cols[nonpivot[j]][int(j)] = 1;
  OrientedRegularMatroid dual(std::move(dual_cols), /*trust_tu=*/true);
  verify_duality(m, dual);
  return dual;
}

MatroidDijoinCertificate matroid_min_dijoins(const OrientedRegularMatroid& m) {
  std::vector<uint32_t> directed_masks;
  for (const SignedVector& c : m.signed_cocircuits())
    if (c.directed) {
      uint32_t mask = 0;
      for (int j : c.support) mask |= 1u << j;
      directed_masks.push_back(mask);
    }
  int n = m.ground_size();
  if (n > 30) throw Error(Errc::too_large, "matroid_min_dijoins");
  MatroidDijoinCertificate cert;
  for (int size = 0; size <= n; ++size) {
    std::set<IntVec> vectors;
    for (const auto& subset : combinations(n, size)) {
      uint32_t mask = 0;
      for (int j : subset) mask |= 1u << j;
      bool hits = true;
      for (uint32_t c : directed_masks)
        if (!(mask & c)) {
          hits = false;
          break;
        }
      if (!hits) continue;
      if (m.subset_rank(subset) != size) continue;  // circuit-free = independent
      cert.min_dijoins.push_back(subset);
      vectors.insert(m.column_sum(subset));
    }
    if (!cert.min_dijoins.empty()) {
      cert.nu = size;
      cert.vectors.assign(vectors.begin(), vectors.end());
      return cert;
    }
  }
  throw Error(Errc::internal, "full ground set is always a dijoin");
}

Polytope matroid_polytope(const OrientedRegularMatroid& m) {
  return Polytope::extended(m.ambient(), m.columns());
}

Polynomial matroid_interior_polynomial(const OrientedRegularMatroid& m, Exec exec) {
  Polytope p = matroid_polytope(m);
  if (p.dim() != m.rank()) throw Error(Errc::internal, "matroid polytope dimension != rank");
  Polynomial h = p.hstar(exec);
  MatroidDijoinCertificate cert = matroid_min_dijoins(m);
  if (h.degree() != m.rank() - cert.nu)
    throw Error(Errc::internal, "interior polynomial degree != rank - nu");
  if (h.leading() != Int(cert.vectors.size()))
    throw Error(Errc::internal, "leading coefficient != number of dijoin column sums");
  return h;
}

MatroidFacetCheck matroid_facet_check(const OrientedRegularMatroid& m) {
  MatroidFacetCheck result;
  result.co_eulerian = m.is_co_eulerian();
  Polytope p = matroid_polytope(m);
  if (p.dim() == 0) {
    result.note = "zero-dimensional polytope";
    return result;
  }
  std::set<std::vector<int>> directed_supports;
  for (const SignedVector& c : m.signed_cocircuits())
    if (c.directed) directed_supports.insert(c.support);
  std::set<std::vector<int>> matched;
  for (const Facet& f : p.facets()) {
    if (f.tag == Facet::Tag::cut) {
      std::vector<int> support;
      for (int j = 0; j < m.ground_size(); ++j)
        if (!f.tight_contains(p.provenance()[j])) support.push_back(j);
      if (!directed_supports.count(support)) {
        result.pass = false;
        result.note = "origin facet does not match a directed cocircuit";
        return result;
      }
      matched.insert(support);
      // The cocircuit functional is 0/1-valued on the columns.
      std::set<Int> values;
      for (int j = 0; j < m.ground_size(); ++j) {
        Int v = 0;
        for (int w = 0; w < m.ambient(); ++w) v += f.normal[w] * m.columns()[j][w];
        if (v != 0) values.insert(v);
      }
      if (values.size() > 1) {
        result.pass = false;
        result.note = "cocircuit functional takes two distinct nonzero values";
        return result;
      }
    } else {
      // Admissible vector: scaled normal has values <= 1 with the tight set
      // of full rank.
      if (f.offset <= 0) {
        result.pass = false;
        result.note = "non-origin facet with nonpositive offset";
        return result;
      }
      std::vector<int> tight_cols;
      for (int j = 0; j < m.ground_size(); ++j) {
        Int v = 0;
        for (int w = 0; w < m.ambient(); ++w) v += f.normal[w] * m.columns()[j][w];
        if (v > f.offset) {
          result.pass = false;
          result.note = "admissible vector exceeds 1 on a column";
          return result;
        }
        if (v == f.offset) tight_cols.push_back(j);
      }
      if (m.subset_rank(tight_cols) != m.rank()) {
        result.pass = false;
        result.note = "tight columns of a non-origin facet are not full rank";
        return result;
      }
    }
  }
  if (matched.size() != directed_supports.size()) {
    result.pass = false;
    result.note = "some directed cocircuit has no facet";
  }
  return result;
}

}  // namespace rp
