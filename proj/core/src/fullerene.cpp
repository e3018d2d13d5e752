#include "saturnum/fullerene.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace saturnum {

std::vector<Face> trace_faces(const RotationSystem& rot) {
  const int n = static_cast<int>(rot.size());
  std::vector<std::array<char, 3>> seen(n, {0, 0, 0});
  std::vector<Face> faces;
  auto index_of = [&](int v, int w) {
    const auto& r = rot[static_cast<std::size_t>(v)];
    for (int i = 0; i < 3; ++i)
      if (r[static_cast<std::size_t>(i)] == w) return i;
    throw std::logic_error("rotation system is not symmetric");
  };
  for (int v0 = 0; v0 < n; ++v0) {
    for (int i0 = 0; i0 < 3; ++i0) {
      if (seen[v0][i0]) continue;
      Face f;
      f.id = static_cast<int>(faces.size());
      int u = v0, i = i0;
      do {
        seen[u][i] = 1;
        int v = rot[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
        f.boundary.push_back(u);
        int j = index_of(v, u);
        u = v;
        i = (j + 1) % 3;
      } while (!(u == v0 && i == i0));
      faces.push_back(std::move(f));
    }
  }
  return faces;
}

FullereneGraph FullereneGraph::from_rotation(RotationSystem rot,
                                             const ValidateOptions& opts) {
  const int n = static_cast<int>(rot.size());
  if (n < 20 || n % 2 != 0)
    throw ValidationError(GraphError::BadVertexCount,
                          "fullerene needs even n with n = 20 or n >= 24, got n=" +
                              std::to_string(n));
  for (int v = 0; v < n; ++v) {
    const auto& r = rot[static_cast<std::size_t>(v)];
    for (int w : r)
      if (w < 0 || w >= n || w == v)
        throw ValidationError(GraphError::NotCubic,
                              "vertex " + std::to_string(v) + " has a bad neighbor");
    if (r[0] == r[1] || r[0] == r[2] || r[1] == r[2])
      throw ValidationError(GraphError::NotCubic,
                            "vertex " + std::to_string(v) + " has repeated neighbors");
  }
  for (int v = 0; v < n; ++v)
    for (int w : rot[static_cast<std::size_t>(v)]) {
      const auto& rw = rot[static_cast<std::size_t>(w)];
      if (std::find(rw.begin(), rw.end(), v) == rw.end())
        throw ValidationError(GraphError::NotCubic, "adjacency is not symmetric");
    }

  {
    Graph g(n);
    for (int v = 0; v < n; ++v)
      for (int w : rot[static_cast<std::size_t>(v)])
        if (v < w) g.add_edge(v, w);
    if (!g.connected())
      throw ValidationError(GraphError::NotConnected, "graph is not connected");
  }

  auto faces = trace_faces(rot);
  const int expected_faces = n / 2 + 2;
  if (static_cast<int>(faces.size()) != expected_faces)
    throw ValidationError(GraphError::EulerViolation,
                          "face tracing gives " + std::to_string(faces.size()) +
                              " faces, Euler requires " + std::to_string(expected_faces));

  int pent = 0, hex = 0;
  std::ostringstream bad;
  bool bad_any = false;
  for (const auto& f : faces) {
    if (f.size() == 5)
      ++pent;
    else if (f.size() == 6)
      ++hex;
    else {
      bad_any = true;
      bad << ' ' << f.size();
    }
  }
  if (bad_any)
    throw ValidationError(GraphError::WrongFaceSizes,
                          "faces of size" + bad.str() + " are not allowed");
  if (pent != 12)
    throw ValidationError(GraphError::WrongFaceSizes,
                          "expected 12 pentagons, found " + std::to_string(pent));
  if (n != 20 && n < 24)
    throw ValidationError(GraphError::BadVertexCount,
                          "no fullerene exists on " + std::to_string(n) + " vertices");

  FullereneGraph fg;
  fg.rot_ = std::move(rot);
  fg.faces_ = std::move(faces);
  fg.dart_face_.assign(static_cast<std::size_t>(n), {-1, -1, -1});
  for (const auto& f : fg.faces_) {
    const auto& b = f.boundary;
    const std::size_t k = b.size();
    for (std::size_t i = 0; i < k; ++i) {
      int u = b[i], v = b[(i + 1) % k];
      fg.dart_face_[static_cast<std::size_t>(u)]
                   [static_cast<std::size_t>(fg.neighbor_index(u, v))] = f.id;
    }
  }

  if (opts.check_three_connected && !is_three_connected(fg.as_graph()))
    throw ValidationError(GraphError::NotConnected, "graph is not 3-connected");
  return fg;
}

int FullereneGraph::neighbor_index(int u, int v) const {
  const auto& r = rot_[static_cast<std::size_t>(u)];
  for (int i = 0; i < 3; ++i)
    if (r[static_cast<std::size_t>(i)] == v) return i;
  throw std::out_of_range("no edge " + std::to_string(u) + "-" + std::to_string(v));
}

int FullereneGraph::face_left_of(int u, int v) const {
  return dart_face_[static_cast<std::size_t>(u)]
                   [static_cast<std::size_t>(neighbor_index(u, v))];
}

std::vector<int> FullereneGraph::pentagons() const {
  std::vector<int> out;
  for (const auto& f : faces_)
    if (f.size() == 5) out.push_back(f.id);
  return out;
}

int FullereneGraph::count_faces_of_size(int s) const {
  int c = 0;
  for (const auto& f : faces_)
    if (f.size() == s) ++c;
  return c;
}

bool FullereneGraph::has_adjacent_pentagons() const {
  for (const auto& f : faces_) {
    if (f.size() != 5) continue;
    const auto& b = f.boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      int u = b[i], v = b[(i + 1) % b.size()];
      int other = face_left_of(v, u);
      if (faces_[static_cast<std::size_t>(other)].size() == 5) return true;
    }
  }
  return false;
}

Graph FullereneGraph::as_graph() const {
  Graph g(n());
  for (int v = 0; v < n(); ++v)
    for (int w : rot_[static_cast<std::size_t>(v)])
      if (v < w) g.add_edge(v, w);
  return g;
}

int FullereneGraph::diameter() const {
  Graph g = as_graph();
  int d = 0;
  for (int v = 0; v < g.n; ++v) {
    auto depth = bfs_depths(g, v);
    d = std::max(d, *std::max_element(depth.begin(), depth.end()));
  }
  return d;
}

bool is_three_connected(const Graph& g) {
  if (g.n < 4) return false;
  auto connected_without = [&](int a, int b) {
    std::vector<int> depth(g.n, -1);
    int src = 0;
    while (src == a || src == b) ++src;
    std::queue<int> q;
    depth[src] = 0;
    q.push(src);
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[u]) {
        if (v == a || v == b || depth[v] >= 0) continue;
        depth[v] = depth[u] + 1;
        ++reached;
        q.push(v);
      }
    }
    return reached == g.n - 2 + (a == b ? 1 : 0);
  };
  for (int a = 0; a < g.n; ++a)
    for (int b = a; b < g.n; ++b)
      if (!connected_without(a, b)) return false;
  return true;
}

DualGraph DualGraph::of(const FullereneGraph& f) {
  DualGraph d;
  d.g = Graph(f.face_count());
  d.face_size.resize(static_cast<std::size_t>(f.face_count()));
  for (const auto& face : f.faces())
    d.face_size[static_cast<std::size_t>(face.id)] = face.size();
  for (const auto& face : f.faces()) {
    const auto& b = face.boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      int u = b[i], v = b[(i + 1) % b.size()];
      int other = f.face_left_of(v, u);
      if (face.id < other) d.g.add_edge(face.id, other);
    }
  }
  return d;
}

int dual_distance(const DualGraph& d, int f1, int f2) {
  auto depth = bfs_depths(d.g, f1);
  return depth[static_cast<std::size_t>(f2)];
}

Theorem1Bounds theorem1_bounds(const FullereneGraph& g) {
  const int n = g.n();
  const int d = g.diameter();
  Theorem1Bounds b{};
  b.lower = (3 * n + 9) / 10;
  // floor(n/2 - (d-2)/4) = floor((2n - d + 2) / 4)
  b.upper = (2 * n - d + 2) / 4;
  return b;
}

int Patch::n2() const {
  int c = 0;
  for (int d : boundary_degree)
    if (d == 2) ++c;
  return c;
}

int Patch::n3() const {
  int c = 0;
  for (int d : boundary_degree)
    if (d == 3) ++c;
  return c;
}

void Patch::check_patch_identity() const {
  if (n2() - n3() != 6 - pentagons)
    throw std::logic_error("patch identity violated: n2=" + std::to_string(n2()) +
                           " n3=" + std::to_string(n3()) +
                           " p=" + std::to_string(pentagons));
}

}  // namespace saturnum
