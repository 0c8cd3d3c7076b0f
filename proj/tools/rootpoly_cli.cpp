#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "rootpoly/dijoin.hpp"
#include "rootpoly/error.hpp"
#include "rootpoly/greedoid.hpp"
#include "rootpoly/instance_io.hpp"
#include "rootpoly/matroid.hpp"
#include "rootpoly/parking.hpp"
#include "rootpoly/polytope.hpp"
#include "rootpoly/report.hpp"
#include "rootpoly/scan.hpp"
#include "rootpoly/verify.hpp"

namespace {

using namespace rp;

struct GlobalOpts {
  std::string format = "human";
  std::string path;
  int root = 0;
  int minfas_root = -1;  // -1 = unrooted variant
  bool trust_tu = false;
  int max_edges = 20;
  bool non_extended = false;
  std::vector<int> order;
};

Instance load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

const DiGraph& want_digraph(const Instance& inst) {
  if (inst.kind != InstanceKind::digraph)
    throw Error(Errc::parse_error, "this command needs a digraph instance");
  return inst.digraph;
}

const UndirectedGraph& want_ugraph(const Instance& inst) {
  if (inst.kind != InstanceKind::ugraph)
    throw Error(Errc::parse_error, "this command needs a ugraph instance");
  return inst.ugraph;
}

OrientedRegularMatroid want_matroid(const Instance& inst, bool trust_tu) {
  if (inst.kind != InstanceKind::matrix)
    throw Error(Errc::parse_error, "this command needs a matrix instance");
  return OrientedRegularMatroid(inst.matrix_columns, trust_tu);
}

int emit(Report& report, const GlobalOpts& g, double wall_ms, std::string& out) {
  report.set_wall_ms(wall_ms);
  out = g.format == "json" ? report.machine_text() : report.human_text();
  if (report.has_checks() && !report.checks_passed()) return 1;
  return 0;
}

std::string facet_to_string(const Facet& f) {
  std::ostringstream os;
  os << vec_to_string(f.normal) << " . x <= " << f.offset.get_str();
  switch (f.tag) {
    case Facet::Tag::cut: os << "  [cut]"; break;
    case Facet::Tag::layering: os << "  [layering]"; break;
    case Facet::Tag::none: break;
  }
  return os.str();
}

int run_single(const std::string& command, const GlobalOpts& g, const std::string& path,
               std::string& out) {
  Instance inst = load(path);
  Report report(command, inst);
  auto started = std::chrono::steady_clock::now();
  DijoinOptions dopts;
  dopts.max_edges = g.max_edges;

  if (command == "interior") {
    const DiGraph& graph = want_digraph(inst);
    if (g.non_extended) {
      Polytope p = Polytope::from_digraph_plain(graph);
      report.add_polynomial("hstar_non_extended", p.hstar());
    } else {
      report.add_polynomial("interior_polynomial", interior_polynomial(graph));
    }
  } else if (command == "dijoin") {
    const DiGraph& graph = want_digraph(inst);
    DijoinCertificate cert = min_dijoins(graph, dopts);
    report.add_int("nu", cert.nu);
    report.add_int("min_dijoin_count", (long long)cert.min_dijoins.size());
    report.add_edge_sets("min_dijoins", cert.min_dijoins);
    report.add_vectors("net_degree_vectors", cert.net_degree_vectors);
    DisjointCutFamily family = max_disjoint_directed_cuts(graph, dopts);
    report.add_int("max_disjoint_directed_cuts", family.count);
    report.add_edge_sets("disjoint_cut_family", family.cuts);
  } else if (command == "minfas") {
    const DiGraph& graph = want_digraph(inst);
    if (g.minfas_root >= 0) {
      FeedbackArcSet fas = minfas_rooted(graph, g.minfas_root, dopts);
      report.add_int("minfas_rooted", fas.size);
      report.add_edge_sets("witness", {fas.edges});
    } else {
      FeedbackArcSet fas = minfas(graph, dopts);
      report.add_int("minfas", fas.size);
      report.add_edge_sets("witness", {fas.edges});
    }
  } else if (command == "parking") {
    const DiGraph& graph = want_digraph(inst);
    report.add_polynomial("parking_enumerator", parking_enumerator(graph, g.root));
  } else if (command == "greedoid") {
    const DiGraph& graph = want_digraph(inst);
    Greedoid x = branching_greedoid(graph, g.root);
    Polynomial lambda = x.greedoid_polynomial();
    if (!g.order.empty()) {
      if (int(g.order.size()) != graph.m())
        throw Error(Errc::range_error, "--order must list every edge exactly once");
      ElementOrder order(graph.m());
      for (int pos = 0; pos < graph.m(); ++pos) {
        int e = g.order[pos];
        if (e < 0 || e >= graph.m()) throw Error(Errc::range_error, "--order index out of range");
        order[e] = pos;
      }
      IntVec coeffs(graph.m() + 1, 0);
      for (uint32_t b : x.bases()) coeffs[x.external_activity(b, order).count] += 1;
      Polynomial under_order(coeffs);
      if (under_order != lambda)
        throw Error(Errc::internal, "greedoid polynomial changed under --order");
    }
    report.add_polynomial("greedoid_polynomial", lambda);
    report.add_int("basis_count", (long long)x.bases().size());
  } else if (command == "matroid-interior") {
    OrientedRegularMatroid m = want_matroid(inst, g.trust_tu);
    report.add_polynomial("matroid_interior_polynomial", matroid_interior_polynomial(m));
    MatroidDijoinCertificate cert = matroid_min_dijoins(m);
    report.add_int("nu", cert.nu);
    report.add_int("vector_count", (long long)cert.vectors.size());
  } else if (command == "dual") {
    OrientedRegularMatroid m = want_matroid(inst, g.trust_tu);
    OrientedRegularMatroid dual = dual_matroid(m);
    Instance out;
    out.kind = InstanceKind::matrix;
    out.matrix_rows = dual.ambient();
    out.matrix_columns = dual.columns();
    report.add_string("dual_matrix", render_instance(out));
  } else if (command == "facets") {
    if (inst.kind == InstanceKind::digraph) {
      const DiGraph& graph = want_digraph(inst);
      Polytope p = Polytope::from_digraph(graph);
      std::vector<std::string> rows;
      for (const Facet& f : p.facets()) rows.push_back(facet_to_string(f));
      report.add_int("facet_count", (long long)rows.size());
      for (size_t i = 0; i < rows.size(); ++i)
        report.add_string("facet_" + std::to_string(i), rows[i]);
      FacetClassification cls = classify_facets(p, graph);
      report.add_int("cut_facets", (long long)cls.cut_matches.size());
      report.add_int("layering_facets", (long long)cls.layering_matches.size());
    } else {
      OrientedRegularMatroid m = want_matroid(inst, g.trust_tu);
      Polytope p = matroid_polytope(m);
      std::vector<std::string> rows;
      for (const Facet& f : p.facets()) rows.push_back(facet_to_string(f));
      report.add_int("facet_count", (long long)rows.size());
      for (size_t i = 0; i < rows.size(); ++i)
        report.add_string("facet_" + std::to_string(i), rows[i]);
      MatroidFacetCheck check = matroid_facet_check(m);
      report.add_checks({{"matroid-facet-description", check.pass,
                          check.note.empty() ? "facets match the cocircuit description"
                                             : check.note}});
    }
  } else if (command == "orient-scan") {
    const UndirectedGraph& u = want_ugraph(inst);
    OrientScanOptions sopts;
    OrientScanReport scan = orient_scan(u, sopts);
    report.add_int("orientations", 1ll << u.m());
    report.add_int("distinct_polynomials", (long long)scan.classes.size());
    report.add_int("min_degree", scan.min_degree);
    report.add_int("max_degree", scan.max_degree);
    report.add_int("min_degree_attainers", scan.min_degree_attainers);
    report.add_int("max_degree_attainers", scan.max_degree_attainers);
    report.add_bool("has_coefficientwise_minimum", scan.has_coefficientwise_minimum);
    report.add_bool("has_coefficientwise_maximum", scan.has_coefficientwise_maximum);
    for (size_t i = 0; i < scan.classes.size(); ++i) {
      std::ostringstream os;
      os << scan.classes[i].poly.to_string() << "  x" << scan.classes[i].masks.size();
      report.add_string("class_" + std::to_string(i), os.str());
    }
    std::vector<CheckResult> checks;
    if (scan.standard_orientation_minimizes)
      checks.push_back({"bipartite-standard-orientation-minimizes-degree",
                        *scan.standard_orientation_minimizes, ""});
    if (scan.block_rule_maximizers)
      checks.push_back({"strong-block-orientations-maximize-degree",
                        *scan.block_rule_maximizers, ""});
    if (!checks.empty()) report.add_checks(checks);
  } else if (command == "verify") {
    const DiGraph& graph = want_digraph(inst);
    VerifyOptions vopts;
    vopts.dijoin = dopts;
    report.add_checks(run_verify(graph, vopts));
  } else {
    throw Error(Errc::internal, "unknown command");
  }

  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                  .count();
  return emit(report, g, ms, out);
}

// Batch mode: a directory argument runs the command once per instance file,
// reports in filename order, no cross-instance state.
int run(const std::string& command, const GlobalOpts& g) {
  if (!std::filesystem::is_directory(g.path)) {
    std::string out;
    int code = run_single(command, g, g.path, out);
    std::cout << out;
    return code;
  }
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(g.path)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    if (ext == ".digraph" || ext == ".ugraph" || ext == ".matrix") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::string> outputs(files.size());
  std::vector<int> codes(files.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < (long long)files.size(); ++i) {
    try {
      codes[i] = run_single(command, g, files[i], outputs[i]);
    } catch (const Error& e) {
      outputs[i] = std::string("error: ") + e.what() + "\n";
      codes[i] = 2;
    } catch (const std::exception& e) {
      outputs[i] = std::string("error: ") + e.what() + "\n";
      codes[i] = 1;
    }
  }
  int worst = 0;
  for (size_t i = 0; i < files.size(); ++i) {
    std::cout << "== " << files[i] << " ==\n" << outputs[i];
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interior polynomials, dijoins, parking functions and greedoid polynomials"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format: human | json")
      ->check(CLI::IsMember({"human", "json"}));

  auto add_common = [&](CLI::App* sub, bool with_root, int default_root) {
    sub->add_option("instance", g.path, "instance file")->required();
    if (with_root) {
      g.root = default_root;
      sub->add_option("--root", g.root, "root vertex");
    }
    sub->add_option("--max-edges", g.max_edges, "exhaustive-search budget guard");
    return sub;
  };

  auto* interior = add_common(app.add_subcommand("interior", "interior polynomial"), false, 0);
  interior->add_flag("--non-extended", g.non_extended,
                     "h* of the hull of the edge vectors alone");
  add_common(app.add_subcommand("dijoin", "minimum dijoins and directed cut packing"), false, 0);
  auto* minfas_cmd = app.add_subcommand("minfas", "minimum feedback arc set");
  minfas_cmd->add_option("instance", g.path)->required();
  minfas_cmd->add_option("--root", g.minfas_root, "rooted variant preserving reachability");
  minfas_cmd->add_option("--max-edges", g.max_edges);
  add_common(app.add_subcommand("parking", "parking function enumerator"), true, 0);
  auto* greedoid_cmd =
      add_common(app.add_subcommand("greedoid", "branching greedoid polynomial"), true, 0);
  greedoid_cmd->add_option("--order", g.order, "edge order (permutation of indices)");
  auto* mi = app.add_subcommand("matroid-interior", "matroid interior polynomial");
  mi->add_option("instance", g.path)->required();
  mi->add_flag("--trust-tu", g.trust_tu, "skip the total unimodularity check");
  auto* dual = app.add_subcommand("dual", "oriented dual matroid");
  dual->add_option("instance", g.path)->required();
  dual->add_flag("--trust-tu", g.trust_tu);
  auto* facets = app.add_subcommand("facets", "facet description");
  facets->add_option("instance", g.path)->required();
  facets->add_flag("--trust-tu", g.trust_tu);
  add_common(app.add_subcommand("orient-scan", "interior polynomials of all orientations"),
             false, 0);
  add_common(app.add_subcommand("verify", "per-instance theorem checks"), false, 0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), g);
  } catch (const rp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case rp::Errc::parse_error:
      case rp::Errc::range_error:
      case rp::Errc::disconnected_input:
      case rp::Errc::not_root_connected:
      case rp::Errc::not_eulerian:
      case rp::Errc::not_totally_unimodular:
      case rp::Errc::too_large:
      case rp::Errc::budget_exceeded:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
