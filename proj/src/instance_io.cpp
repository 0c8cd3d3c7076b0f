#include "rootpoly/instance_io.hpp"

#include <sstream>

#include "rootpoly/error.hpp"

namespace rp {

namespace {

constexpr int kMaxVertices = 24;
constexpr int kMaxEdges = 30;

struct Tokenized {
  std::vector<std::vector<std::string>> lines;  // non-empty payload lines
  std::vector<int> line_numbers;
};

Tokenized tokenize(const std::string& text) {
  Tokenized out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    out.lines.push_back(std::move(tokens));
    out.line_numbers.push_back(number);
  }
  return out;
}

int parse_int(const std::string& tok, int line) {
  try {
    size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ": expected an integer, got '" +
                                       tok + "'");
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  Tokenized t = tokenize(text);
  if (t.lines.empty()) throw Error(Errc::parse_error, "empty instance");
  const auto& header = t.lines[0];
  int header_line = t.line_numbers[0];
  if (header.size() != 3)
    throw Error(Errc::parse_error,
                "line " + std::to_string(header_line) + ": header must be 'kind a b'");
  const std::string& kind = header[0];
  int a = parse_int(header[1], header_line);
  int b = parse_int(header[2], header_line);

  Instance inst{};
  if (kind == "digraph" || kind == "ugraph") {
    int n = a, m = b;
    if (n < 1 || n > kMaxVertices)
      throw Error(Errc::range_error, "vertex count " + std::to_string(n) + " outside 1.." +
                                         std::to_string(kMaxVertices));
    if (m < 0 || m > kMaxEdges)
      throw Error(Errc::range_error,
                  "edge count " + std::to_string(m) + " outside 0.." + std::to_string(kMaxEdges));
    if (int(t.lines.size()) != 1 + m)
      throw Error(Errc::parse_error, "expected " + std::to_string(m) + " edge lines, found " +
                                         std::to_string(t.lines.size() - 1));
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
      const auto& toks = t.lines[1 + i];
      int line = t.line_numbers[1 + i];
      if (toks.size() != 2)
        throw Error(Errc::parse_error, "line " + std::to_string(line) + ": expected 'tail head'");
      int tail = parse_int(toks[0], line);
      int head = parse_int(toks[1], line);
      if (tail < 0 || tail >= n || head < 0 || head >= n)
        throw Error(Errc::range_error, "line " + std::to_string(line) + ": vertex index outside 0.." +
                                           std::to_string(n - 1));
      edges.push_back({tail, head});
    }
    if (kind == "digraph") {
      inst.kind = InstanceKind::digraph;
      inst.digraph = DiGraph(n, std::move(edges));
    } else {
      inst.kind = InstanceKind::ugraph;
      inst.ugraph.n = n;
      inst.ugraph.edges = std::move(edges);
    }
    return inst;
  }
  if (kind == "matrix") {
    int rows = a, cols = b;
    if (rows < 1 || rows > kMaxVertices || cols < 1 || cols > kMaxEdges)
      throw Error(Errc::range_error, "matrix dimensions outside the supported range");
    if (int(t.lines.size()) != 1 + rows)
      throw Error(Errc::parse_error, "expected " + std::to_string(rows) + " matrix rows, found " +
                                         std::to_string(t.lines.size() - 1));
    inst.kind = InstanceKind::matrix;
    inst.matrix_rows = rows;
    inst.matrix_columns.assign(cols, IntVec(rows));
    for (int i = 0; i < rows; ++i) {
      const auto& toks = t.lines[1 + i];
      int line = t.line_numbers[1 + i];
      if (int(toks.size()) != cols)
        throw Error(Errc::parse_error, "line " + std::to_string(line) + ": expected " +
                                           std::to_string(cols) + " entries");
      for (int j = 0; j < cols; ++j)
        inst.matrix_columns[j][i] = Int(parse_int(toks[j], line));
    }
    return inst;
  }
  throw Error(Errc::parse_error, "line " + std::to_string(header_line) + ": unknown kind '" +
                                     kind + "' (digraph | ugraph | matrix)");
}

std::string render_instance(const Instance& inst) {
  std::ostringstream os;
  switch (inst.kind) {
    case InstanceKind::digraph:
      os << "digraph " << inst.digraph.n << " " << inst.digraph.m() << "\n";
      for (const Edge& e : inst.digraph.edges) os << e.tail << " " << e.head << "\n";
      break;
    case InstanceKind::ugraph:
      os << "ugraph " << inst.ugraph.n << " " << inst.ugraph.m() << "\n";
      for (const Edge& e : inst.ugraph.edges) os << e.tail << " " << e.head << "\n";
      break;
    case InstanceKind::matrix: {
      int cols = int(inst.matrix_columns.size());
      os << "matrix " << inst.matrix_rows << " " << cols << "\n";
      for (int i = 0; i < inst.matrix_rows; ++i) {
        for (int j = 0; j < cols; ++j) {
          if (j) os << " ";
          os << inst.matrix_columns[j][i].get_str();
        }
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

std::string instance_digest(const Instance& inst) {
  std::string canon = render_instance(inst);
  uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : canon) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << hash;
  return os.str();
}

}  // namespace rp
