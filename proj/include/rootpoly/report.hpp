#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rootpoly/instance_io.hpp"
#include "rootpoly/polynomial.hpp"
#include "rootpoly/verify.hpp"

namespace rp {

/// Command result rendered as human text or as a stable machine-readable
/// JSON document (key-sorted, LF line endings, no timing fields).
class Report {
 public:
  Report(std::string command, const Instance& instance);
  ~Report();

  void add_polynomial(const std::string& key, const Polynomial& p);
  void add_int(const std::string& key, long long v);
  void add_string(const std::string& key, const std::string& v);
  void add_bool(const std::string& key, bool v);
  void add_edge_sets(const std::string& key, const std::vector<std::vector<int>>& sets);
  void add_vectors(const std::string& key, const std::vector<IntVec>& vectors);
  void add_checks(const std::vector<CheckResult>& checks);

  void set_wall_ms(double ms);

  bool checks_passed() const;
  bool has_checks() const;

  std::string machine_text() const;  // deterministic JSON
  std::string human_text() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace rp
