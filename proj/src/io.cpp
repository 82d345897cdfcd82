#include "trigraph/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trigraph {

namespace {

bool parse_two_u64(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream ss(line);
  if (!(ss >> a >> b)) return false;
  std::string rest;
  if (ss >> rest) return false;
  return true;
}

}  // namespace

Graph read_edgelist(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t n = 0, m = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!parse_two_u64(line, n, m)) throw ParseError(lineno, "expected header \"n m\"");
    break;
  }
  if (lineno == 0) throw ParseError(1, "empty input");
  if (n > 0xffffffffULL) throw ParseError(lineno, "vertex count too large");
  Graph g(static_cast<std::uint32_t>(n));
  std::uint64_t read = 0;
  while (read < m && std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::uint64_t u, v;
    if (!parse_two_u64(line, u, v)) throw ParseError(lineno, "expected edge \"u v\"");
    if (u >= v) throw ParseError(lineno, "edges must satisfy u < v");
    if (v >= n) throw ParseError(lineno, "vertex label out of range");
    if (!g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)))
      throw ParseError(lineno, "duplicate edge");
    ++read;
  }
  if (read < m) throw ParseError(lineno + 1, "fewer edges than header declares");
  return g;
}

Graph read_edgelist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edgelist(in);
}

void write_edgelist(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edgelist_file(const std::string& path, const Graph& g) {
  std::ostringstream ss;
  write_edgelist(ss, g);
  atomic_write_file(path, ss.str());
}

std::string stats_json(const Graph& g) {
  const TriangleStats stats = triangle_stats(g);
  std::ostringstream ss;
  ss << "{\"n\":" << g.vertex_count() << ",\"edges\":" << g.edge_count()
     << ",\"triangles\":" << stats.total << ",\"vt\":" << stats.vt << "}";
  return ss.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed for " + path);
}

}  // namespace trigraph
