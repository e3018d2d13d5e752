#include "saturnum/graph.hpp"

#include <algorithm>
#include <queue>

namespace saturnum {

bool Graph::has_edge(int u, int v) const {
  for (int w : adj[u])
    if (w == v) return true;
  return false;
}

int Graph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& a : adj) deg += a.size();
  return static_cast<int>(deg / 2);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::connected() const {
  if (n == 0) return true;
  auto depth = bfs_depths(*this, 0);
  for (int v = 0; v < n; ++v)
    if (depth[v] < 0) return false;
  return true;
}

bool Matching::contains_vertex(int v) const {
  for (const auto& [a, b] : edges)
    if (a == v || b == v) return true;
  return false;
}

std::vector<char> Matching::cover_mask(int n) const {
  std::vector<char> mask(n, 0);
  for (const auto& [a, b] : edges) {
    mask[a] = 1;
    mask[b] = 1;
  }
  return mask;
}

bool Matching::valid_on(const Graph& g) const {
  std::vector<char> seen(g.n, 0);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b) return false;
    if (!g.has_edge(a, b)) return false;
    if (seen[a] || seen[b]) return false;
    seen[a] = 1;
    seen[b] = 1;
  }
  return true;
}

bool is_maximal(const Graph& g, const Matching& m) {
  auto covered = m.cover_mask(g.n);
  for (int u = 0; u < g.n; ++u) {
    if (covered[u]) continue;
    for (int v : g.adj[u])
      if (!covered[v]) return false;
  }
  return true;
}

Matching greedy_maximal(const Graph& g, const std::vector<int>& order) {
  auto es = g.edges();
  std::vector<char> used(g.n, 0);
  Matching m;
  auto take = [&](const Edge& e) {
    if (used[e.first] || used[e.second]) return;
    used[e.first] = 1;
    used[e.second] = 1;
    m.edges.push_back(e);
  };
  if (order.empty()) {
    for (const auto& e : es) take(e);
  } else {
    for (int idx : order) take(es[static_cast<std::size_t>(idx)]);
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Matching greedy_maximal_seeded(const Graph& g, std::uint64_t seed) {
  std::vector<int> order(g.edge_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  deterministic_shuffle(order, seed);
  return greedy_maximal(g, order);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void deterministic_shuffle(std::vector<int>& v, std::uint64_t seed) {
  std::uint64_t state = seed;
  for (std::size_t i = v.size(); i > 1; --i) {
    std::uint64_t j = splitmix64(state) % i;
    std::swap(v[i - 1], v[j]);
  }
}

std::vector<int> bfs_depths(const Graph& g, int src) {
  std::vector<int> depth(g.n, -1);
  std::queue<int> q;
  depth[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u])
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        q.push(v);
      }
  }
  return depth;
}

}  // namespace saturnum
