#include "hyperspec/hypergraph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace hyperspec {

namespace {

// Next line with content, comments stripped. Returns false at EOF.
bool next_record(std::istream& in, std::istringstream& record, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    record.clear();
    record.str(line);
    return true;
  }
  return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw FormatError("line " + std::to_string(line_no) + ": " + what);
}

void expect_end(std::istringstream& record, int line_no) {
  std::string extra;
  if (record >> extra) fail(line_no, "unexpected trailing token '" + extra + "'");
}

}  // namespace

UniformHypergraph read_hypergraph(std::istream& in) {
  int line_no = 0;
  std::istringstream record;
  if (!next_record(in, record, line_no)) throw FormatError("empty hypergraph file");
  long r = 0, n = 0, m = 0;
  if (!(record >> r >> n >> m)) fail(line_no, "header must be 'r n m'");
  expect_end(record, line_no);
  if (r < 2 || n < r || m < 0) fail(line_no, "header needs r >= 2, n >= r, m >= 0");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::map<Edge, int> seen;
  for (long k = 0; k < m; ++k) {
    if (!next_record(in, record, line_no))
      throw FormatError("expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    Edge e;
    for (long s = 0; s < r; ++s) {
      long v = 0;
      if (!(record >> v)) fail(line_no, "edge needs " + std::to_string(r) + " vertex ids");
      if (v < 1 || v > n) fail(line_no, "vertex id " + std::to_string(v) + " out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    expect_end(record, line_no);
    Edge key = e;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) fail(line_no, "edge with a repeated vertex");
    if (auto [it, fresh] = seen.emplace(std::move(key), line_no); !fresh)
      fail(line_no, "duplicate of the edge on line " + std::to_string(it->second));
    edges.push_back(std::move(e));
  }
  if (next_record(in, record, line_no)) fail(line_no, "content after the last edge");
  try {
    return UniformHypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

void write_hypergraph(std::ostream& out, const UniformHypergraph& g) {
  out << g.rank() << ' ' << g.order() << ' ' << g.edge_count() << '\n';
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto e = g.edge(k);
    for (std::size_t s = 0; s < e.size(); ++s) out << (s ? " " : "") << e[s];
    out << '\n';
  }
}

UniformHypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_hypergraph(in);
}

void save_hypergraph(const std::filesystem::path& path, const UniformHypergraph& g) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  write_hypergraph(out, g);
}

}  // namespace hyperspec
