#include "rootpoly/report.hpp"

#include <sstream>

#include <json.hpp>

#include "rootpoly/error.hpp"

namespace rp {

using nlohmann::json;

struct Report::Impl {
  std::string command;
  json doc;
  std::vector<std::pair<std::string, std::string>> human_rows;
  std::vector<CheckResult> checks;
  bool has_checks = false;
  double wall_ms = 0;
};

namespace {

const char* kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::digraph: return "digraph";
    case InstanceKind::ugraph: return "ugraph";
    case InstanceKind::matrix: return "matrix";
  }
  return "?";
}

long long to_wire_int(const Int& x) {
  if (!x.fits_slong_p()) throw Error(Errc::too_large, "coefficient exceeds the wire range");
  return x.get_si();
}

json poly_json(const Polynomial& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs()) arr.push_back(to_wire_int(c));
  return arr;
}

}  // namespace

Report::Report(std::string command, const Instance& instance) : impl_(new Impl) {
  impl_->command = command;
  impl_->doc["command"] = command;
  json inst;
  inst["kind"] = kind_name(instance.kind);
  inst["digest"] = instance_digest(instance);
  switch (instance.kind) {
    case InstanceKind::digraph:
      inst["n"] = instance.digraph.n;
      inst["m"] = instance.digraph.m();
      break;
    case InstanceKind::ugraph:
      inst["n"] = instance.ugraph.n;
      inst["m"] = instance.ugraph.m();
      break;
    case InstanceKind::matrix:
      inst["rows"] = instance.matrix_rows;
      inst["cols"] = int(instance.matrix_columns.size());
      break;
  }
  impl_->doc["instance"] = inst;
}

Report::~Report() = default;

void Report::add_polynomial(const std::string& key, const Polynomial& p) {
  impl_->doc["results"][key] = poly_json(p);
  std::ostringstream os;
  os << p.to_string() << "  coeffs ";
  os << poly_json(p).dump();
  impl_->human_rows.emplace_back(key, os.str());
}

void Report::add_int(const std::string& key, long long v) {
  impl_->doc["results"][key] = v;
  impl_->human_rows.emplace_back(key, std::to_string(v));
}

void Report::add_string(const std::string& key, const std::string& v) {
  impl_->doc["results"][key] = v;
  impl_->human_rows.emplace_back(key, v);
}

void Report::add_bool(const std::string& key, bool v) {
  impl_->doc["results"][key] = v;
  impl_->human_rows.emplace_back(key, v ? "true" : "false");
}

void Report::add_edge_sets(const std::string& key, const std::vector<std::vector<int>>& sets) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(s);
  impl_->doc["results"][key] = arr;
  impl_->human_rows.emplace_back(key, arr.dump());
}

void Report::add_vectors(const std::string& key, const std::vector<IntVec>& vectors) {
  json arr = json::array();
  for (const IntVec& v : vectors) {
    json one = json::array();
    for (const Int& x : v) one.push_back(to_wire_int(x));
    arr.push_back(one);
  }
  impl_->doc["results"][key] = arr;
  impl_->human_rows.emplace_back(key, arr.dump());
}

void Report::add_checks(const std::vector<CheckResult>& checks) {
  impl_->has_checks = true;
  impl_->checks.insert(impl_->checks.end(), checks.begin(), checks.end());
  json arr = json::array();
  for (const CheckResult& c : impl_->checks) {
    json one;
    one["name"] = c.name;
    one["pass"] = c.pass;
    one["detail"] = c.detail;
    arr.push_back(one);
  }
  impl_->doc["checks"] = arr;
}

void Report::set_wall_ms(double ms) { impl_->wall_ms = ms; }

bool Report::checks_passed() const {
  for (const CheckResult& c : impl_->checks)
    if (!c.pass) return false;
  return true;
}

bool Report::has_checks() const { return impl_->has_checks; }

std::string Report::machine_text() const { return impl_->doc.dump(2) + "\n"; }

std::string Report::human_text() const {
  std::ostringstream os;
  os << "command: " << impl_->command << "\n";
  os << "instance: " << impl_->doc["instance"]["kind"].get<std::string>() << " digest "
     << impl_->doc["instance"]["digest"].get<std::string>() << "\n";
  for (const auto& [key, value] : impl_->human_rows) os << key << ": " << value << "\n";
  for (const CheckResult& c : impl_->checks)
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")")
       << "\n";
  if (impl_->wall_ms > 0) os << "wall time: " << impl_->wall_ms << " ms\n";
  return os.str();
}

}  // namespace rp
