#include "saturnum/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace saturnum {

static const char kHeader[] = ">>planar_code<<";

void write_planar_code_header(std::ostream& os) { os << kHeader; }

void write_planar_code(std::ostream& os, const RotationSystem& rot) {
  const int n = static_cast<int>(rot.size());
  if (n > 255) throw ParseError("planar_code can hold at most 255 vertices");
  os.put(static_cast<char>(static_cast<unsigned char>(n)));
  for (int v = 0; v < n; ++v) {
    for (int w : rot[static_cast<std::size_t>(v)])
      os.put(static_cast<char>(static_cast<unsigned char>(w + 1)));
    os.put(0);
  }
}

std::optional<RotationSystem> read_planar_code(std::istream& is) {
  int c = is.peek();
  if (c == std::char_traits<char>::eof()) return std::nullopt;
  if (c == '>') {
    char buf[sizeof kHeader] = {};
    is.read(buf, sizeof kHeader - 1);
    if (std::string(buf) != kHeader) throw ParseError("bad planar_code header");
    if (is.peek() == std::char_traits<char>::eof()) return std::nullopt;
  }
  int n = is.get();
  if (n == std::char_traits<char>::eof()) return std::nullopt;
  if (n == 0) throw ParseError("planar_code with n=0 or unsupported wide format");
  RotationSystem rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int count = 0;
    while (true) {
      int b = is.get();
      if (b == std::char_traits<char>::eof())
        throw ParseError("truncated planar_code record");
      if (b == 0) break;
      if (count >= 3) throw ParseError("planar_code vertex of degree > 3");
      rot[static_cast<std::size_t>(v)][static_cast<std::size_t>(count++)] = b - 1;
    }
    if (count != 3) throw ParseError("planar_code vertex of degree != 3");
  }
  return rot;
}

void write_rotation_text(std::ostream& os, const RotationSystem& rot) {
  for (std::size_t v = 0; v < rot.size(); ++v)
    os << v << ": " << rot[v][0] << ' ' << rot[v][1] << ' ' << rot[v][2] << '\n';
}

RotationSystem read_rotation_text(std::istream& is) {
  std::vector<std::array<int, 3>> rows;
  std::vector<int> ids;
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head.back() != ':') throw ParseError("expected 'v:' in rotation line: " + line);
    head.pop_back();
    int v = std::stoi(head);
    std::array<int, 3> nb{};
    if (!(ls >> nb[0] >> nb[1] >> nb[2]))
      throw ParseError("expected three neighbors in line: " + line);
    int extra;
    if (ls >> extra) throw ParseError("too many neighbors in line: " + line);
    ids.push_back(v);
    rows.push_back(nb);
  }
  RotationSystem rot(rows.size());
  std::vector<char> seen(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int v = ids[i];
    if (v < 0 || v >= static_cast<int>(rows.size()) || seen[static_cast<std::size_t>(v)])
      throw ParseError("vertex ids must be dense 0..n-1 without repeats");
    seen[static_cast<std::size_t>(v)] = 1;
    rot[static_cast<std::size_t>(v)] = rows[i];
  }
  return rot;
}

std::vector<RotationSystem> read_graph_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  int first = f.peek();
  std::vector<RotationSystem> out;
  bool binary = first == '>' || (first != std::char_traits<char>::eof() &&
                                 first > 0 && first < '0' && first != '#' &&
                                 first != ' ' && first != '\n');
  if (binary) {
    while (auto rot = read_planar_code(f)) out.push_back(std::move(*rot));
  } else {
    out.push_back(read_rotation_text(f));
  }
  return out;
}

std::string to_json_line(const SolveRecord& rec) {
  nlohmann::json j;
  j["id"] = rec.id;
  j["n"] = rec.n;
  j["s"] = rec.s;
  j["optimal"] = rec.optimal;
  auto arr = nlohmann::json::array();
  for (const auto& [u, v] : rec.witness_edges) arr.push_back({u, v});
  j["witness_edges"] = arr;
  j["nodes_explored"] = rec.nodes_explored;
  return j.dump();
}

}  // namespace saturnum
