// Compares the serial reference kernels against the OpenMP paths on
// medium-size inputs and reports timings plus result equality.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rootpoly/digraph.hpp"
#include "rootpoly/matroid.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/scan.hpp"

using namespace rp;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

DiGraph bipartite_double_square() {
  // 8 vertices, 10 edges, the largest instance the acceptance suite counts.
  return DiGraph(8, {{1, 0}, {3, 0}, {1, 2}, {3, 2}, {4, 0}, {4, 7}, {4, 5}, {6, 5}, {6, 7},
                     {6, 2}});
}

template <typename F>
void run_pair(const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  auto serial = body(Exec::serial);
  double serial_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto parallel = body(Exec::parallel);
  double parallel_ms = ms_since(t0);
  std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms << " ms, "
            << (serial == parallel ? "results equal" : "RESULTS DIFFER") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif

  DiGraph g = bipartite_double_square();
  Polytope p = Polytope::from_digraph(g);

  run_pair("lattice_count k=6 closed",
           [&](Exec e) { return p.lattice_count(6, CountMode::closed, e); });
  run_pair("lattice_count k=6 interior",
           [&](Exec e) { return p.lattice_count(6, CountMode::interior, e); });
  run_pair("hstar 8-vertex 10-edge", [&](Exec e) { return p.hstar(e).coeffs(); });

  UndirectedGraph u = underlying(DiGraph(6, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1},
                                             {0, 5}, {5, 1}}));
  run_pair("orient-scan 8 edges", [&](Exec e) {
    OrientScanOptions opts;
    opts.exec = e;
    return orient_scan(u, opts).classes.size();
  });

  std::vector<IntVec> cols;
  for (int e = 0; e < g.m(); ++e) cols.push_back(g.edge_vector(e));
  run_pair("tu-check 8x10 incidence",
           [&](Exec e) { return is_totally_unimodular(cols, e).ok; });

  return 0;
}
