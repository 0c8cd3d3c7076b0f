#include "rootpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <type_traits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rootpoly/error.hpp"
#include "rootpoly/linalg.hpp"

namespace rp {

bool Facet::tight_contains(int gen_index) const {
  return std::binary_search(tight.begin(), tight.end(), gen_index);
}

Polytope::Polytope(const std::vector<IntVec>& generators) {
  if (generators.empty()) throw Error(Errc::internal, "polytope needs generators");
  ambient_ = int(generators[0].size());
  std::map<IntVec, int> index;
  for (const IntVec& g : generators) {
    auto [it, fresh] = index.emplace(g, int(gens_.size()));
    if (fresh) gens_.push_back(g);
    provenance_.push_back(it->second);
    if (is_zero_vec(g) && origin_index_ < 0) origin_index_ = it->second;
  }
  build();
}

Polytope Polytope::extended(int ambient_dim, const std::vector<IntVec>& vectors) {
  std::vector<IntVec> gens;
  gens.reserve(vectors.size() + 1);
  gens.emplace_back(ambient_dim, 0);
  gens.insert(gens.end(), vectors.begin(), vectors.end());
  Polytope p(gens);
  p.provenance_.erase(p.provenance_.begin());  // drop the synthetic origin entry
  return p;
}

Polytope Polytope::from_digraph(const DiGraph& g) {
  std::vector<IntVec> vecs;
  vecs.reserve(g.m());
  for (int e = 0; e < g.m(); ++e) vecs.push_back(g.edge_vector(e));
  return extended(g.n, vecs);
}

Polytope Polytope::from_digraph_plain(const DiGraph& g) {
  if (g.m() == 0) throw Error(Errc::internal, "plain root polytope needs an edge");
  std::vector<IntVec> vecs;
  for (int e = 0; e < g.m(); ++e) vecs.push_back(g.edge_vector(e));
  return Polytope(vecs);
}

namespace {

Rat dot_int_rat(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot_int(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void Polytope::build() {
  const IntVec& base = gens_[0];
  // Span basis: greedily independent generator differences.
  std::vector<IntVec> diffs;
  for (size_t i = 1; i < gens_.size(); ++i) {
    IntVec d(ambient_);
    for (int v = 0; v < ambient_; ++v) d[v] = gens_[i][v] - base[v];
    diffs.push_back(std::move(d));
  }
  int rank_so_far = 0;
  for (const IntVec& d : diffs) {
    std::vector<IntVec> trial = span_basis_;
    trial.push_back(d);
    if (rank_int_columns(trial) > rank_so_far) {
      span_basis_.push_back(d);
      ++rank_so_far;
    }
  }
  dim_ = rank_so_far;

  // Affine-hull equations: integer kernel of the difference rows.
  if (!diffs.empty()) {
    RatMatrix diff_rows = RatMatrix::from_int_rows(diffs);
    for (IntVec& q : integer_kernel_basis(diff_rows)) {
      Int c = dot_int(q, base);
      hull_eqs_.emplace_back(std::move(q), std::move(c));
    }
  } else {
    for (int v = 0; v < ambient_; ++v) {
      IntVec q(ambient_, 0);
      q[v] = 1;
      hull_eqs_.emplace_back(std::move(q), base[v]);
    }
  }

  // Local coordinates of each generator in the span basis.
  RatMatrix basis_cols(ambient_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int v = 0; v < ambient_; ++v) basis_cols.at(v, j) = Rat(span_basis_[j][v]);
  local_coords_.resize(gens_.size());
  local_coords_[0] = RatVec(dim_, Rat(0));
  for (size_t i = 1; i < gens_.size(); ++i) {
    RatVec rhs(ambient_);
    for (int v = 0; v < ambient_; ++v) rhs[v] = Rat(diffs[i - 1][v]);
    auto sol = solve_rational(basis_cols, rhs);
    if (!sol) throw Error(Errc::internal, "generator outside its own span");
    local_coords_[i] = std::move(*sol);
  }

  if (dim_ == 0) return;

  // Exhaustive hyperplane search over d-subsets of generators.
  int t = int(gens_.size());
  int d = dim_;
  std::set<std::vector<int>> seen_tight;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  if (t < d) throw Error(Errc::internal, "fewer generators than dimension");
  RatMatrix gram(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      gram.at(i, j) = Rat(dot_int(span_basis_[i], span_basis_[j]));
  while (true) {
    // Affine hull of the picked points must be a hyperplane of the span.
    RatMatrix rows(d - 1, d);
    for (int i = 1; i < d; ++i)
      for (int j = 0; j < d; ++j)
        rows.at(i - 1, j) = local_coords_[pick[i]][j] - local_coords_[pick[0]][j];
    std::vector<IntVec> kernel = integer_kernel_basis(rows);
    if (kernel.size() == 1) {
      IntVec alpha = kernel[0];
      Rat beta = dot_int_rat(alpha, local_coords_[pick[0]]);
      int side = 0;
      bool facet = true;
      std::vector<int> tight;
      for (int i = 0; i < t && facet; ++i) {
        Rat v = dot_int_rat(alpha, local_coords_[i]) - beta;
        int s = sgn(v);
        if (s == 0) tight.push_back(i);
        else if (side == 0) side = s;
        else if (side != s) facet = false;
      }
      if (facet && side != 0 && seen_tight.insert(tight).second) {
        if (side > 0) {  // orient a.x <= b
          for (Int& x : alpha) x = -x;
          beta = -beta;
        }
        // Lift the local normal to the ambient space, inside the span.
        RatVec alpha_rat(dim_);
        for (int j = 0; j < dim_; ++j) alpha_rat[j] = Rat(alpha[j]);
        auto z = solve_rational(gram, alpha_rat);
        if (!z) throw Error(Errc::internal, "gram solve failed");
        RatVec normal(ambient_, Rat(0));
        for (int j = 0; j < dim_; ++j)
          for (int v = 0; v < ambient_; ++v) normal[v] += (*z)[j] * Rat(span_basis_[j][v]);
        Rat offset = dot_int_rat(base, normal) + beta;
        RatVec combined = normal;
        combined.push_back(offset);
        IntVec prim = primitive_integer(combined);
        Facet f;
        f.offset = prim.back();
        prim.pop_back();
        f.normal = std::move(prim);
        f.tight = std::move(tight);
        if (origin_index_ >= 0)
          f.tag = f.tight_contains(origin_index_) ? Facet::Tag::cut : Facet::Tag::layering;
        facets_.push_back(std::move(f));
      }
    }
    int i = d - 1;
    while (i >= 0 && pick[i] == t - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(facets_.begin(), facets_.end(),
            [](const Facet& a, const Facet& b) { return a.tight < b.tight; });

  for (const Facet& f : facets_) {
    if (int(f.tight.size()) < dim_) throw Error(Errc::internal, "facet with too few generators");
    for (size_t i = 0; i < gens_.size(); ++i)
      if (dot_int(f.normal, gens_[i]) > f.offset)
        throw Error(Errc::internal, "generator violates facet inequality");
  }
}

const std::vector<Facet>& Polytope::facets() const {
  if (dim_ == 0) throw Error(Errc::degenerate_dimension, "0-dimensional polytope has no facets");
  return facets_;
}

namespace {

// One row of the counting system: coeffs . x (<=|==) rhs.
template <typename T>
struct Row {
  std::vector<T> a;
  T rhs;
  bool eq;
  int last;  // largest index with a nonzero coefficient, -1 if none
};

template <typename T>
struct CountProblem {
  int n;
  std::vector<Row<T>> rows;
  std::vector<T> lo, hi;
  // suffix extrema: contribution of coordinates >= i
  std::vector<std::vector<T>> sufmin, sufmax;

  void finish() {
    int m = int(rows.size());
    sufmin.assign(m, std::vector<T>(n + 1, T(0)));
    sufmax.assign(m, std::vector<T>(n + 1, T(0)));
    for (int c = 0; c < m; ++c) {
      rows[c].last = -1;
      for (int j = n - 1; j >= 0; --j) {
        T lo_term = rows[c].a[j] * lo[j];
        T hi_term = rows[c].a[j] * hi[j];
        sufmin[c][j] = sufmin[c][j + 1] + std::min(lo_term, hi_term);
        sufmax[c][j] = sufmax[c][j + 1] + std::max(lo_term, hi_term);
        if (rows[c].a[j] != T(0) && rows[c].last < 0) rows[c].last = j;
      }
    }
  }
};

template <typename T>
T floor_div(const T& a, const T& b);
template <typename T>
T ceil_div(const T& a, const T& b);

template <>
long long floor_div<long long>(const long long& a, const long long& b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
template <>
long long ceil_div<long long>(const long long& a, const long long& b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}
template <>
Int floor_div<Int>(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
template <>
Int ceil_div<Int>(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Bounds for coordinate `level` given fixed partial sums; false = infeasible.
template <typename T>
bool bounds_at(const CountProblem<T>& p, int level, const std::vector<T>& partial, T& lo, T& hi) {
  lo = p.lo[level];
  hi = p.hi[level];
  for (size_t c = 0; c < p.rows.size(); ++c) {
    const Row<T>& row = p.rows[c];
    const T& coef = row.a[level];
    T slack_min = partial[c] + p.sufmin[c][level + 1];
    T slack_max = partial[c] + p.sufmax[c][level + 1];
    if (coef == T(0)) {
      // feasibility pruning only
      T total_min = partial[c] + p.sufmin[c][level];
      if (total_min > row.rhs) return false;
      if (row.eq) {
        T total_max = partial[c] + p.sufmax[c][level];
        if (total_max < row.rhs) return false;
      }
      continue;
    }
    // coef * x <= rhs - slack_min, and for equalities also >= rhs - slack_max
    T ub_num = row.rhs - slack_min;
    if (coef > T(0)) hi = std::min(hi, floor_div(ub_num, coef));
    else lo = std::max(lo, ceil_div(ub_num, coef));
    if (row.eq) {
      T lb_num = row.rhs - slack_max;
      if (coef > T(0)) lo = std::max(lo, ceil_div(lb_num, coef));
      else hi = std::min(hi, floor_div(lb_num, coef));
    }
    if (lo > hi) return false;
  }
  return true;
}

template <typename T>
void count_rec(const CountProblem<T>& p, int level, std::vector<T>& partial, Int& count,
               std::vector<T>* point, std::vector<std::vector<T>>* sink) {
  if (level == p.n) {
    for (size_t c = 0; c < p.rows.size(); ++c) {
      if (p.rows[c].eq ? partial[c] != p.rows[c].rhs : partial[c] > p.rows[c].rhs) return;
    }
    count += 1;
    if (sink) sink->push_back(*point);
    return;
  }
  T lo, hi;
  if (!bounds_at(p, level, partial, lo, hi)) return;
  size_t m = p.rows.size();
  std::vector<T> saved = partial;
  for (size_t c = 0; c < m; ++c) partial[c] = saved[c] + p.rows[c].a[level] * lo;
  for (T x = lo; x <= hi; x += T(1)) {
    if (point) (*point)[level] = x;
    count_rec(p, level + 1, partial, count, point, sink);
    if (x < hi)
      for (size_t c = 0; c < m; ++c) partial[c] += p.rows[c].a[level];
  }
  partial = saved;
}

template <typename T>
Int count_all(const CountProblem<T>& p, Exec exec) {
  std::vector<T> partial(p.rows.size(), T(0));
  if (p.n == 0) {
    Int count = 0;
    count_rec(p, 0, partial, count, (std::vector<T>*)nullptr, (std::vector<std::vector<T>>*)nullptr);
    return count;
  }
  T lo, hi;
  if (!bounds_at(p, 0, partial, lo, hi)) return 0;
#ifdef _OPENMP
  // OpenMP fan-out over the first coordinate; only the narrow path splits,
  // the big-integer fallback stays serial.
  if constexpr (std::is_same_v<T, long long>) {
    if (exec == Exec::parallel) {
      long long span = hi - lo + 1;
      Int total = 0;
#pragma omp parallel
      {
        Int local = 0;
        std::vector<T> my_partial(p.rows.size());
#pragma omp for schedule(dynamic) nowait
        for (long long off = 0; off < span; ++off) {
          T x = lo + off;
          for (size_t c = 0; c < p.rows.size(); ++c) my_partial[c] = p.rows[c].a[0] * x;
          count_rec(p, 1, my_partial, local, (std::vector<T>*)nullptr,
                    (std::vector<std::vector<T>>*)nullptr);
        }
#pragma omp critical
        total += local;
      }
      return total;
    }
  }
#else
  (void)exec;
#endif
  Int count = 0;
  count_rec(p, 0, partial, count, (std::vector<T>*)nullptr, (std::vector<std::vector<T>>*)nullptr);
  return count;
}

}  // namespace

// Builds the constraint system for the k-th dilate over Int; `fits64` reports
// whether every quantity provably fits long long.
namespace {

struct IntProblemParts {
  CountProblem<Int> prob;
  bool fits64;
};

IntProblemParts make_problem(int k, CountMode mode, const std::vector<Facet>& facets,
                             const std::vector<std::pair<IntVec, Int>>& eqs,
                             const std::vector<IntVec>& gens, int n) {
  CountProblem<Int> prob;
  prob.n = n;
  prob.lo.assign(n, Int(0));
  prob.hi.assign(n, Int(0));
  for (int v = 0; v < n; ++v) {
    Int lo = gens[0][v], hi = gens[0][v];
    for (const IntVec& g : gens) {
      lo = std::min(lo, g[v]);
      hi = std::max(hi, g[v]);
    }
    prob.lo[v] = lo * k;
    prob.hi[v] = hi * k;
  }
  for (const Facet& f : facets) {
    Row<Int> row;
    row.a = f.normal;
    row.rhs = f.offset * k;
    if (mode == CountMode::interior) row.rhs -= 1;
    row.eq = false;
    prob.rows.push_back(std::move(row));
  }
  for (const auto& [q, c] : eqs) {
    Row<Int> row;
    row.a = q;
    row.rhs = c * k;
    row.eq = true;
    prob.rows.push_back(std::move(row));
  }
  prob.finish();
  // Exact overflow audit for the long long fast path.
  Int limit = Int(1) << 60;
  bool fits = true;
  for (const auto& r : prob.rows) {
    Int mag = abs(r.rhs);
    for (int j = 0; j < n; ++j)
      mag += abs(r.a[j]) * std::max(abs(prob.lo[j]), abs(prob.hi[j]));
    if (mag > limit) fits = false;
  }
  for (int j = 0; j < n; ++j)
    if (abs(prob.lo[j]) > limit || abs(prob.hi[j]) > limit) fits = false;
  return {std::move(prob), fits};
}

CountProblem<long long> narrow(const CountProblem<Int>& p) {
  CountProblem<long long> q;
  q.n = p.n;
  for (const auto& r : p.rows) {
    Row<long long> row;
    for (const Int& x : r.a) row.a.push_back(x.get_si());
    row.rhs = r.rhs.get_si();
    row.eq = r.eq;
    q.rows.push_back(std::move(row));
  }
  for (const Int& x : p.lo) q.lo.push_back(x.get_si());
  for (const Int& x : p.hi) q.hi.push_back(x.get_si());
  q.finish();
  return q;
}

}  // namespace

Int Polytope::lattice_count(int k, CountMode mode, Exec exec) const {
  if (k < 0) throw Error(Errc::internal, "negative dilate");
  auto parts = make_problem(k, mode, facets_, hull_eqs_, gens_, ambient_);
  if (parts.fits64) return count_all(narrow(parts.prob), exec);
  return count_all(parts.prob, exec);
}

std::vector<IntVec> Polytope::lattice_points(int k, CountMode mode) const {
  auto parts = make_problem(k, mode, facets_, hull_eqs_, gens_, ambient_);
  Int count = 0;
  std::vector<Int> point(ambient_, 0);
  std::vector<std::vector<Int>> sink;
  std::vector<Int> partial(parts.prob.rows.size(), Int(0));
  count_rec(parts.prob, 0, partial, count, &point, &sink);
  return sink;
}

int Polytope::first_interior_dilate(Exec exec) const {
  if (dim_ == 0) return 1;  // a point is its own relative interior
  for (int k = 1; k <= dim_ + 1; ++k)
    if (lattice_count(k, CountMode::interior, exec) > 0) return k;
  throw Error(Errc::internal, "no interior point up to dilate d+1");
}

Polynomial Polytope::hstar(Exec exec) const {
  int d = dim_;
  std::vector<Int> counts(d + 1);
  for (int k = 0; k <= d; ++k) counts[k] = lattice_count(k, CountMode::closed, exec);
  // L(k) = sum_i h_i * C(k + d - i, d), solved exactly.
  RatMatrix system(d + 1, d + 1);
  RatVec rhs(d + 1);
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i <= d; ++i) system.at(k, i) = Rat(binomial(Int(k + d - i), d));
    rhs[k] = Rat(counts[k]);
  }
  auto sol = solve_rational(system, rhs);
  if (!sol) throw Error(Errc::nonintegral_hstar, "binomial system inconsistent");
  IntVec coeffs(d + 1);
  for (int i = 0; i <= d; ++i) {
    if ((*sol)[i].get_den() != 1 || (*sol)[i] < 0)
      throw Error(Errc::nonintegral_hstar, "h* coefficient not a nonnegative integer");
    coeffs[i] = (*sol)[i].get_num();
  }
  Polynomial h(coeffs);
  if (h.coeff(0) != 1) throw Error(Errc::nonintegral_hstar, "h*_0 != 1");
  int kstar = first_interior_dilate(exec);
  int deg = h.is_zero() ? Polynomial::kMinusInfinity : h.degree();
  if (deg != d + 1 - kstar)
    throw Error(Errc::internal, "h* degree disagrees with the first interior dilate");
  if (dim_ >= 1 && h.leading() != lattice_count(kstar, CountMode::interior, exec))
    throw Error(Errc::internal, "h* leading coefficient disagrees with the interior count");
  return h;
}

Polynomial interior_polynomial(const DiGraph& g, Exec exec) {
  if (!is_weakly_connected(g)) throw Error(Errc::disconnected_input, "interior polynomial");
  Polytope p = Polytope::from_digraph(g);
  if (p.dim() != g.n - 1) throw Error(Errc::internal, "extended root polytope dimension");
  return p.hstar(exec);
}

FacetClassification classify_facets(const Polytope& p, const DiGraph& source) {
  FacetClassification result;
  result.cuts = enumerate_directed_cuts(source);
  std::vector<int> elementary;
  for (size_t i = 0; i < result.cuts.size(); ++i)
    if (result.cuts[i].elementary) elementary.push_back(int(i));

  if (p.dim() == 0) {
    if (!elementary.empty())
      throw Error(Errc::classification_mismatch, "cuts exist but the polytope is a point");
    return result;
  }

  std::set<int> matched_cuts;
  for (size_t fi = 0; fi < p.facets().size(); ++fi) {
    const Facet& f = p.facets()[fi];
    if (f.tag == Facet::Tag::cut) {
      // Cut edges are exactly those whose generator misses the facet.
      std::vector<int> cut_edges;
      for (int e = 0; e < source.m(); ++e)
        if (!f.tight_contains(p.provenance()[e])) cut_edges.push_back(e);
      int found = -1;
      for (int ci : elementary)
        if (result.cuts[ci].edges == cut_edges) found = ci;
      if (found < 0)
        throw Error(Errc::classification_mismatch,
                    "origin facet does not match an elementary directed cut");
      if (!matched_cuts.insert(found).second)
        throw Error(Errc::classification_mismatch, "two facets map to one directed cut");
      result.cut_matches.emplace_back(int(fi), found);
    } else if (f.tag == Facet::Tag::layering) {
      if (f.offset <= 0)
        throw Error(Errc::classification_mismatch, "non-origin facet with offset <= 0");
      // ell = normal/offset shifted so that ell(0) = 0; must be integral.
      std::vector<long> ell(source.n);
      Rat base = Rat(f.normal[0]) / Rat(f.offset);
      for (int v = 0; v < source.n; ++v) {
        Rat val = Rat(f.normal[v]) / Rat(f.offset) - base;
        if (val.get_den() != 1)
          throw Error(Errc::classification_mismatch, "facet normal is not an integer layering");
        ell[v] = long(val.get_num().get_si());
      }
      uint32_t tight_edges = 0;
      for (int e = 0; e < source.m(); ++e) {
        long rise = ell[source.edges[e].head] - ell[source.edges[e].tail];
        if (rise > 1)
          throw Error(Errc::classification_mismatch, "layering rises by more than one");
        bool tight = rise == 1;
        bool on_facet = f.tight_contains(p.provenance()[e]);
        if (tight != on_facet)
          throw Error(Errc::classification_mismatch, "tight edges disagree with the facet");
        if (tight) tight_edges |= 1u << e;
      }
      if (weak_component_count(source.subgraph(tight_edges)) != 1)
        throw Error(Errc::classification_mismatch, "tight edges not connected and spanning");
      result.layering_matches.emplace_back(int(fi), std::move(ell));
    } else {
      throw Error(Errc::classification_mismatch, "untagged facet");
    }
  }
  if (matched_cuts.size() != elementary.size())
    throw Error(Errc::classification_mismatch, "some elementary directed cut has no facet");
  return result;
}

}  // namespace rp
