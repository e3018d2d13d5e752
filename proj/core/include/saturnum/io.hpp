#pragma once
// File formats: planar_code (binary, bit-exact), the text rotation format,
// and JSON-lines solver records.
//
// planar_code: optional ASCII header ">>planar_code<<"; per graph one
// unsigned byte n, then for each vertex its neighbors in rotation order as
// 1-indexed bytes, each list terminated by a 0 byte. n <= 255.
//
// Text format: one line per vertex "v: a b c" with rotation order
// significant; '#' starts a comment.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "saturnum/fullerene.hpp"
#include "saturnum/solver.hpp"

namespace saturnum {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_planar_code_header(std::ostream& os);
void write_planar_code(std::ostream& os, const RotationSystem& rot);
// Reads one graph; consumes the header if present. nullopt at EOF.
std::optional<RotationSystem> read_planar_code(std::istream& is);

void write_rotation_text(std::ostream& os, const RotationSystem& rot);
RotationSystem read_rotation_text(std::istream& is);

// Any input file: planar_code (by header or first byte) or text.
std::vector<RotationSystem> read_graph_file(const std::string& path);

struct SolveRecord {
  std::string id;
  int n = 0;
  int s = -1;
  bool optimal = false;
  std::vector<Edge> witness_edges;
  std::uint64_t nodes_explored = 0;
};

std::string to_json_line(const SolveRecord& rec);

}  // namespace saturnum
