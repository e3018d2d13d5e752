#pragma once
// Plain undirected graph with dense 0-indexed vertices, plus the matching
// primitives shared by the exact solver and the nanotube construction.

#include <cstdint>
#include <utility>
#include <vector>

namespace saturnum {

using Edge = std::pair<int, int>;  // normalized u < v

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_) {}

  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const;
  std::vector<Edge> edges() const;  // lexicographically sorted
  bool connected() const;
};

struct Matching {
  std::vector<Edge> edges;  // normalized pairs

  std::size_t size() const { return edges.size(); }
  bool contains_vertex(int v) const;
  std::vector<char> cover_mask(int n) const;
  bool valid_on(const Graph& g) const;  // edges exist and are pairwise disjoint
};

// True iff every edge of g shares an endpoint with some matching edge,
// i.e. the uncovered vertices form an independent set.
bool is_maximal(const Graph& g, const Matching& m);

// Maximal matching grown by scanning g.edges() in the order given by `order`
// (indices into the sorted edge list; identity when empty).
Matching greedy_maximal(const Graph& g, const std::vector<int>& order = {});
Matching greedy_maximal_seeded(const Graph& g, std::uint64_t seed);

// Fisher-Yates with a fixed in-house generator. std::shuffle is
// implementation-defined across standard libraries; results here must be
// reproducible byte-for-byte everywhere.
void deterministic_shuffle(std::vector<int>& v, std::uint64_t seed);
std::uint64_t splitmix64(std::uint64_t& state);

std::vector<int> bfs_depths(const Graph& g, int src);

}  // namespace saturnum
