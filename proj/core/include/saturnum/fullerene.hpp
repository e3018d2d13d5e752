#pragma once
// Fullerene graphs as cubic plane graphs given by a rotation system.
// The rotation system is the single source of truth: faces, the dual and
// every downstream structure are traced from it. Rotations are read as the
// counterclockwise neighbor order; inputs with the opposite handedness are
// accepted as the mirror embedding.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "saturnum/graph.hpp"

namespace saturnum {

enum class GraphError {
  NotCubic,
  NotConnected,
  EulerViolation,
  WrongFaceSizes,
  BadVertexCount,
};

struct ValidationError : std::runtime_error {
  GraphError kind;
  ValidationError(GraphError k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
};

struct Face {
  int id = -1;
  std::vector<int> boundary;  // cyclic vertex sequence in trace order
  int size() const { return static_cast<int>(boundary.size()); }
};

using RotationSystem = std::vector<std::array<int, 3>>;

// Face tracing: arriving at v along u->v, the walk continues to the rotation
// successor of u in rot[v]. Every directed edge lies on exactly one face.
std::vector<Face> trace_faces(const RotationSystem& rot);

struct ValidateOptions {
  bool check_three_connected = false;
};

class FullereneGraph {
 public:
  static FullereneGraph from_rotation(RotationSystem rot,
                                      const ValidateOptions& opts = {});

  int n() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return 3 * n() / 2; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[static_cast<std::size_t>(id)]; }
  const std::array<int, 3>& rotation(int v) const {
    return rot_[static_cast<std::size_t>(v)];
  }
  const RotationSystem& rotation_system() const { return rot_; }

  // Face on the left of the directed edge u->v in trace orientation.
  int face_left_of(int u, int v) const;
  int neighbor_index(int u, int v) const;  // position of v in rotation(u)

  std::vector<int> pentagons() const;
  int count_faces_of_size(int s) const;
  bool has_adjacent_pentagons() const;

  Graph as_graph() const;
  int diameter() const;

 private:
  RotationSystem rot_;
  std::vector<Face> faces_;
  std::vector<std::array<int, 3>> dart_face_;  // face id of dart (v, rot_[v][i])
};

bool is_three_connected(const Graph& g);

struct DualGraph {
  Graph g;                     // one node per face
  std::vector<int> face_size;  // node degree equals the primal face size

  static DualGraph of(const FullereneGraph& f);
};

int dual_distance(const DualGraph& d, int f1, int f2);

struct Theorem1Bounds {
  int lower;  // ceil(3n/10)
  int upper;  // floor(n/2 - (d-2)/4)
};
Theorem1Bounds theorem1_bounds(const FullereneGraph& g);

// A fullerene patch: pentagonal/hexagonal faces plus one outer face,
// interior vertices of degree 3, boundary vertices of degree 2 or 3.
struct Patch {
  std::vector<int> face_sizes;
  std::vector<int> boundary;         // outer cycle
  std::vector<int> boundary_degree;  // patch degree per boundary vertex
  int pentagons = 0;

  int n2() const;  // boundary vertices of degree 2
  int n3() const;
  // n2 - n3 = 6 - p for every patch with p pentagons; throws on violation.
  void check_patch_identity() const;
};

}  // namespace saturnum
