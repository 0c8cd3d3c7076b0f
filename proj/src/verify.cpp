#include "rootpoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "rootpoly/error.hpp"
#include "rootpoly/greedoid.hpp"
#include "rootpoly/matroid.hpp"
#include "rootpoly/parking.hpp"

namespace rp {

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

CheckResult guarded(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult r;
  r.name = name;
  try {
    auto [pass, detail] = body();
    r.pass = pass;
    r.detail = detail;
  } catch (const Error& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

std::string poly_str(const Polynomial& p) { return p.to_string(); }

}  // namespace

std::vector<CheckResult> run_verify(const DiGraph& g, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  if (!is_weakly_connected(g)) {
    out.push_back({"weak-connectivity", false, "input is not weakly connected"});
    return out;
  }

  Polytope polytope = Polytope::from_digraph(g);
  Polynomial interior = polytope.hstar(opts.exec);
  DijoinCertificate cert = min_dijoins(g, opts.dijoin);

  out.push_back(guarded("degree-formula", [&] {
    int expected = g.n - 1 - cert.nu;
    std::ostringstream os;
    os << "deg " << poly_str(interior) << " vs |V|-1-nu = " << expected;
    return std::make_pair(interior.degree() == expected, os.str());
  }));

  out.push_back(guarded("leading-coefficient", [&] {
    std::ostringstream os;
    os << "leading " << interior.leading().get_str() << " vs " << cert.net_degree_vectors.size()
       << " net degree vectors";
    return std::make_pair(interior.leading() == Int(cert.net_degree_vectors.size()), os.str());
  }));

  out.push_back(guarded("interior-points-are-net-degree-vectors", [&] {
    auto points = polytope.lattice_points(cert.nu + 1, CountMode::interior);
    std::set<IntVec> ps(points.begin(), points.end());
    std::set<IntVec> vs(cert.net_degree_vectors.begin(), cert.net_degree_vectors.end());
    std::ostringstream os;
    os << points.size() << " interior points in dilate " << cert.nu + 1;
    return std::make_pair(ps == vs, os.str());
  }));

  out.push_back(guarded("degree-vs-first-interior-dilate", [&] {
    int kstar = polytope.first_interior_dilate(opts.exec);
    std::ostringstream os;
    os << "first interior dilate " << kstar << ", dim " << polytope.dim();
    return std::make_pair(interior.degree() == polytope.dim() + 1 - kstar, os.str());
  }));

  out.push_back(guarded("min-dijoin-equals-max-disjoint-cuts", [&] {
    DisjointCutFamily family = max_disjoint_directed_cuts(g, opts.dijoin);
    std::ostringstream os;
    os << "nu = " << cert.nu << ", max disjoint directed cuts = " << family.count;
    return std::make_pair(cert.nu == family.count, os.str());
  }));

  out.push_back(guarded("facet-classification", [&] {
    if (polytope.dim() == 0) return std::make_pair(true, std::string("point polytope, no facets"));
    FacetClassification cls = classify_facets(polytope, g);
    auto layerings = enumerate_admissible_layerings(g);
    std::set<std::vector<long>> expected(layerings.begin(), layerings.end());
    std::set<std::vector<long>> found;
    for (const auto& [fi, ell] : cls.layering_matches) found.insert(ell);
    std::ostringstream os;
    os << cls.cut_matches.size() << " cut facets, " << cls.layering_matches.size()
       << " layering facets";
    return std::make_pair(expected == found, os.str());
  }));

  out.push_back(guarded("matroid-facet-description", [&] {
    MatroidFacetCheck check = matroid_facet_check(graphic_matroid(g));
    return std::make_pair(check.pass, check.note.empty() ? "graphic matroid facets match"
                                                         : check.note);
  }));

  ConnectivityFlags flags = connectivity_flags(g, 0);
  if (flags.strongly_connected) {
    out.push_back(guarded("palindromic-strongly-connected", [&] {
      bool ok = interior.is_palindromic() && interior.degree() == g.n - 1 &&
                interior.leading() == 1;
      return std::make_pair(ok, poly_str(interior));
    }));
  }

  for (int s = 0; s < g.n; ++s) {
    if (!is_root_connected(g, s)) continue;
    std::string at = "@root" + std::to_string(s);
    Polynomial lambda;
    bool have_lambda = false;
    out.push_back(guarded("parking-reversal" + at, [&] {
      lambda = chan_transform(g, s, opts.exec);  // asserts against the greedoid path
      have_lambda = true;
      return std::make_pair(true, "lambda = " + poly_str(lambda));
    }));
    if (!have_lambda) continue;
    out.push_back(guarded("order-independence" + at, [&] {
      Greedoid x = branching_greedoid(g, s);
      Polynomial rechecked = x.greedoid_polynomial(opts.exec, /*extra_orders=*/3);
      return std::make_pair(rechecked == lambda, "3 seeded orders agree");
    }));
    out.push_back(guarded("rooted-minfas-degree" + at, [&] {
      FeedbackArcSet fas = minfas_rooted(g, s, opts.dijoin);
      std::ostringstream os;
      os << "lowest lambda exponent " << lambda.lowest_exponent() << ", rooted minfas "
         << fas.size;
      return std::make_pair(lambda.lowest_exponent() == fas.size, os.str());
    }));
  }

  if (opts.include_eulerian_checks && flags.eulerian) {
    out.push_back(guarded("eulerian-parking-duality", [&] {
      EulerianDualityReport report = eulerian_duality_check(g, opts.exec);
      std::ostringstream os;
      os << "dual interior " << poly_str(report.dual_interior);
      return std::make_pair(report.parking_matches_dual && report.root_independent, os.str());
    }));
    out.push_back(guarded("eulerian-minfas-degree", [&] {
      FeedbackArcSet fas = minfas(g, opts.dijoin);
      Polynomial park = parking_enumerator(g, 0, opts.exec);
      int expected = g.m() - g.n + 1 - fas.size;
      std::ostringstream os;
      os << "deg park = " << park.degree() << ", |E|-|V|+1-minfas = " << expected;
      return std::make_pair(park.degree() == expected, os.str());
    }));
  }

  return out;
}

}  // namespace rp
