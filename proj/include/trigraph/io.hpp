#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "trigraph/graph.hpp"

namespace trigraph {

// Raised on malformed edge-list input; carries the 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  std::size_t line;
};

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. The writer emits edges sorted lexicographically.
Graph read_edgelist(std::istream& in);
Graph read_edgelist_file(const std::string& path);
void write_edgelist(std::ostream& out, const Graph& g);
void write_edgelist_file(const std::string& path, const Graph& g);

// {"n":..., "edges":..., "triangles":..., "vt":...}
std::string stats_json(const Graph& g);

// Writes via a temp file in the same directory, then renames into place.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace trigraph
