#pragma once

// Row operations preserving total unimodularity and the oriented matroid:
// row swaps, row negations, Gauss-Jordan pivots.

#include <random>

#include "rootpoly/linalg.hpp"
#include "rootpoly/numbers.hpp"

namespace rp::tu_ops {

inline std::vector<IntVec> scramble_rows(const std::vector<IntVec>& cols, std::mt19937& rng,
                                         int steps = 6) {
  int n = int(cols[0].size());
  int m = int(cols.size());
  RatMatrix mat(n, m);
  for (int j = 0; j < m; ++j)
    for (int v = 0; v < n; ++v) mat.at(v, j) = Rat(cols[j][v]);
  for (int step = 0; step < steps; ++step) {
    int kind = int(rng() % 3);
    if (kind == 0) {
      int a = int(rng() % n), b = int(rng() % n);
      for (int j = 0; j < m; ++j) std::swap(mat.at(a, j), mat.at(b, j));
    } else if (kind == 1) {
      int a = int(rng() % n);
      for (int j = 0; j < m; ++j) mat.at(a, j) = -mat.at(a, j);
    } else {
      std::vector<std::pair<int, int>> nonzero;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
          if (mat.at(i, j) != 0) nonzero.emplace_back(i, j);
      if (nonzero.empty()) continue;
      auto [pi, pj] = nonzero[rng() % nonzero.size()];
      Rat inv = mat.at(pi, pj);
      for (int j = 0; j < m; ++j) mat.at(pi, j) /= inv;
      for (int i = 0; i < n; ++i) {
        if (i == pi || mat.at(i, pj) == 0) continue;
        Rat f = mat.at(i, pj);
        for (int j = 0; j < m; ++j) mat.at(i, j) -= f * mat.at(pi, j);
      }
    }
  }
  std::vector<IntVec> out(m, IntVec(n));
  for (int j = 0; j < m; ++j)
    for (int v = 0; v < n; ++v) {
      if (mat.at(v, j).get_den() != 1) throw std::runtime_error("scramble left a fraction");
      out[j][v] = mat.at(v, j).get_num();
    }
  return out;
}

}  // namespace rp::tu_ops
