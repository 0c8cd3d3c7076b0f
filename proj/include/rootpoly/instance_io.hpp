#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rootpoly/digraph.hpp"
#include "rootpoly/numbers.hpp"

namespace rp {

enum class InstanceKind { digraph, ugraph, matrix };

struct Instance {
  InstanceKind kind;
  DiGraph digraph;           // digraph records
  UndirectedGraph ugraph;    // ugraph records
  std::vector<IntVec> matrix_columns;  // matrix records (column vectors)
  int matrix_rows = 0;
};

/// One record per file: `digraph n m` | `ugraph n m` | `matrix r c`, then m
/// lines `tail head` (or r rows of c integers). `#` comments and blank lines
/// are ignored. Throws parse_error / range_error with line positions.
Instance parse_instance(const std::string& text);

/// Canonical text form; parse-render is idempotent on canonical files.
std::string render_instance(const Instance& inst);

/// Stable content digest of the canonical form (FNV-1a, hex).
std::string instance_digest(const Instance& inst);

}  // namespace rp
