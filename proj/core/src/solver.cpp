#include "saturnum/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace saturnum {

int lower_bound_fullerene(int n) { return (n - 6 + 2) / 3; }

namespace {

constexpr int kMaxEdges = 192;
constexpr int kWords = kMaxEdges / 64;

struct EdgeSet {
  std::uint64_t w[kWords] = {0, 0, 0};

  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void operator|=(const EdgeSet& o) {
    for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
  }
  bool operator==(const EdgeSet& o) const {
    return std::memcmp(w, o.w, sizeof w) == 0;
  }
  bool empty() const { return !(w[0] | w[1] | w[2]); }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]);
  }
  // lowest set bit of (*this & ~mask), -1 if none
  int first_not_in(const EdgeSet& mask) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t x = w[i] & ~mask.w[i];
      if (x) return i * 64 + std::countr_zero(x);
    }
    return -1;
  }
  static EdgeSet minus(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r;
    for (int i = 0; i < kWords; ++i) r.w[i] = a.w[i] & ~b.w[i];
    return r;
  }
};

struct Solver {
  const Graph& g;
  std::vector<Edge> elist;
  int m;
  EdgeSet universe;
  std::vector<EdgeSet> edges_at;  // per vertex
  std::vector<EdgeSet> close_nbr;  // N[e]: e plus edges sharing an endpoint
  std::vector<EdgeSet> far_nbr;    // edges whose N[] intersects N[e]
  std::uint64_t budget = 0, nodes = 0;
  bool budget_hit = false;
  int best = 0;
  std::vector<int> cur, best_edges;

  explicit Solver(const Graph& gr) : g(gr), elist(gr.edges()) {
    m = static_cast<int>(elist.size());
    if (m > kMaxEdges)
      throw std::invalid_argument("solver supports at most 192 edges");
    for (int i = 0; i < m; ++i) universe.set(i);
    edges_at.assign(static_cast<std::size_t>(g.n), {});
    for (int i = 0; i < m; ++i) {
      edges_at[static_cast<std::size_t>(elist[static_cast<std::size_t>(i)].first)].set(i);
      edges_at[static_cast<std::size_t>(elist[static_cast<std::size_t>(i)].second)].set(i);
    }
    close_nbr.assign(static_cast<std::size_t>(m), {});
    far_nbr.assign(static_cast<std::size_t>(m), {});
    for (int i = 0; i < m; ++i) {
      auto [u, v] = elist[static_cast<std::size_t>(i)];
      close_nbr[static_cast<std::size_t>(i)] = edges_at[static_cast<std::size_t>(u)];
      close_nbr[static_cast<std::size_t>(i)] |= edges_at[static_cast<std::size_t>(v)];
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (close_nbr[static_cast<std::size_t>(i)].test(j))
          far_nbr[static_cast<std::size_t>(i)] |= close_nbr[static_cast<std::size_t>(j)];
  }

  // Disjoint-neighborhood packing of undominated edges: each packed edge
  // needs its own future matching edge.
  int pack_lb(const EdgeSet& dominated) const {
    EdgeSet avail = EdgeSet::minus(universe, dominated);
    int cnt = 0;
    while (true) {
      int e = avail.first_not_in(EdgeSet{});
      if (e < 0) break;
      ++cnt;
      avail = EdgeSet::minus(avail, far_nbr[static_cast<std::size_t>(e)]);
    }
    return cnt;
  }

  void rec(const EdgeSet& dominated, EdgeSet forbidden) {
    if (dominated == universe) {
      if (static_cast<int>(cur.size()) < best) {
        best = static_cast<int>(cur.size());
        best_edges = cur;
      }
      return;
    }
    if (budget && nodes >= budget) {
      budget_hit = true;
      return;
    }
    ++nodes;
    if (static_cast<int>(cur.size()) + pack_lb(dominated) >= best) return;

    int e = universe.first_not_in(dominated);
    EdgeSet cand = EdgeSet::minus(close_nbr[static_cast<std::size_t>(e)], dominated);
    cand = EdgeSet::minus(cand, forbidden);
    while (true) {
      int f = cand.first_not_in(EdgeSet{});
      if (f < 0) break;
      cand.w[f >> 6] &= ~(1ull << (f & 63));
      EdgeSet dom2 = dominated;
      auto [u, v] = elist[static_cast<std::size_t>(f)];
      dom2 |= edges_at[static_cast<std::size_t>(u)];
      dom2 |= edges_at[static_cast<std::size_t>(v)];
      cur.push_back(f);
      rec(dom2, forbidden);
      cur.pop_back();
      if (budget_hit) return;
      forbidden.set(f);
    }
  }
};

}  // namespace

SaturationResult saturation_exact(const Graph& g, const SolveOptions& opts) {
  SaturationResult res;
  if (g.edge_count() == 0) {
    res.s = 0;
    res.optimal = true;
    return res;
  }
  Solver sol(g);
  sol.budget = opts.node_budget;

  Matching incumbent;
  bool have_incumbent = false;
  for (int seed = 0; seed < std::max(1, opts.greedy_probes); ++seed) {
    Matching m = greedy_maximal_seeded(g, static_cast<std::uint64_t>(seed));
    if (!have_incumbent || m.size() < incumbent.size()) {
      incumbent = std::move(m);
      have_incumbent = true;
    }
  }
  sol.best = static_cast<int>(incumbent.size());

  int root_lb = sol.pack_lb(EdgeSet{});
  if (opts.fullerene_root_bound)
    root_lb = std::max(root_lb, lower_bound_fullerene(g.n));
  res.lower_bound_used = root_lb;

  if (root_lb < sol.best) sol.rec(EdgeSet{}, EdgeSet{});

  res.nodes_explored = sol.nodes;
  res.optimal = !sol.budget_hit;
  if (sol.best_edges.empty() && sol.best == static_cast<int>(incumbent.size())) {
    res.witness = incumbent;
  } else {
    for (int id : sol.best_edges)
      res.witness.edges.push_back(sol.elist[static_cast<std::size_t>(id)]);
    std::sort(res.witness.edges.begin(), res.witness.edges.end());
  }
  res.s = static_cast<int>(res.witness.size());
  return res;
}

namespace {

struct MisSolver {
  const Graph& g;
  int best = 0;
  std::vector<char> in_p;
  std::vector<int> deg;

  explicit MisSolver(const Graph& gr)
      : g(gr), in_p(static_cast<std::size_t>(gr.n), 1), deg(static_cast<std::size_t>(gr.n), 0) {
    for (int v = 0; v < g.n; ++v)
      deg[static_cast<std::size_t>(v)] = g.degree(v);
  }

  int live_edges() const {
    int q = 0;
    for (int v = 0; v < g.n; ++v)
      if (in_p[static_cast<std::size_t>(v)]) q += deg[static_cast<std::size_t>(v)];
    return q / 2;
  }

  void remove(int v, std::vector<int>& undo) {
    in_p[static_cast<std::size_t>(v)] = 0;
    undo.push_back(v);
    for (int w : g.adj[v])
      if (in_p[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  void restore(std::vector<int>& undo, std::size_t mark) {
    while (undo.size() > mark) {
      int v = undo.back();
      undo.pop_back();
      in_p[static_cast<std::size_t>(v)] = 1;
      for (int w : g.adj[v])
        if (in_p[static_cast<std::size_t>(w)]) ++deg[static_cast<std::size_t>(w)];
    }
  }

  void rec(int count, std::vector<int>& undo) {
    // degree <= 1 vertices always belong to some maximum independent set
    std::size_t mark = undo.size();
    bool reduced = true;
    int live = 0;
    while (reduced) {
      reduced = false;
      live = 0;
      for (int v = 0; v < g.n; ++v) {
        if (!in_p[static_cast<std::size_t>(v)]) continue;
        ++live;
        if (deg[static_cast<std::size_t>(v)] <= 1) {
          ++count;
          for (int w : g.adj[v])
            if (in_p[static_cast<std::size_t>(w)]) remove(w, undo);
          remove(v, undo);
          reduced = true;
          break;
        }
      }
    }
    if (live == 0) {
      best = std::max(best, count);
      restore(undo, mark);
      return;
    }
    int q = live_edges();
    // alpha(P) <= |P| - q/3 on subcubic graphs
    if (count + live - (q + 2) / 3 <= best) {
      restore(undo, mark);
      return;
    }
    int pick = -1;
    for (int v = 0; v < g.n; ++v)
      if (in_p[static_cast<std::size_t>(v)] &&
          (pick < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(pick)]))
        pick = v;
    // include pick
    {
      std::size_t mark2 = undo.size();
      for (int w : g.adj[pick])
        if (in_p[static_cast<std::size_t>(w)]) remove(w, undo);
      remove(pick, undo);
      rec(count + 1, undo);
      restore(undo, mark2);
    }
    // exclude pick
    {
      std::size_t mark2 = undo.size();
      remove(pick, undo);
      rec(count, undo);
      restore(undo, mark2);
    }
    restore(undo, mark);
  }
};

}  // namespace

int max_independent_set_size(const Graph& g) {
  if (g.n == 0) return 0;
  MisSolver ms(g);
  std::vector<int> undo;
  ms.rec(0, undo);
  return ms.best;
}

int independence_lb(const Graph& g, int size_cap) {
  if (g.n > size_cap)
    throw SizeCapExceeded("independence_lb: graph exceeds the exact-alpha cap");
  int alpha = max_independent_set_size(g);
  return (g.n - alpha + 1) / 2;
}

}  // namespace saturnum
