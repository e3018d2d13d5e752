#pragma once
// Face spirals: unwinding a size sequence into a fullerene (or an open cap
// patch), extracting spirals back out of an embedded graph, and the
// isomer generator built on top.
//
// Spiral generation is complete well past desk scale (the first fullerene
// with no face spiral from any start has hundreds of vertices), but the
// generator refuses n > 100 so the ceiling is explicit.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "saturnum/fullerene.hpp"

namespace saturnum {

struct SpiralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exactly twelve 5s, everything else 6.
bool spiral_sizes_well_formed(const std::vector<int>& sizes);

// Grows a plane patch face by face. Every face after the first glues onto
// the boundary over the maximal saturated run at the winding position:
// deg-3 vertices flanked by two deg-2 endpoints. In closed mode the last
// face must fit the remaining boundary exactly.
class PatchWindup {
 public:
  bool try_close(const std::vector<int>& sizes);
  bool try_patch(const std::vector<int>& sizes);
  void record_faces(bool on) { record_faces_ = on; }

  RotationSystem rotation() const;  // closed mode, after success
  int vertex_count() const { return nverts_; }
  std::vector<std::vector<int>> patch_rotation() const;
  std::vector<int> boundary_cycle() const;  // forward order, patch mode
  std::vector<int> boundary_degrees() const;
  const std::vector<std::vector<int>>& face_records() const { return face_rec_; }

 private:
  bool unwind(const std::vector<int>& sizes, bool close);
  void glue_first(int size);
  bool glue(int size, bool second);
  bool try_closure(int size);
  void ensure_capacity(int cap);

  int nverts_ = 0;
  int boundary_len_ = 0;
  int last_end_ = -1;
  bool record_faces_ = true;
  std::vector<std::array<int, 3>> nb_;
  std::vector<signed char> deg_;
  std::vector<int> next_, prev_;
  std::vector<int> run_;
  std::vector<std::vector<int>> face_rec_;
};

FullereneGraph spiral_to_graph(const std::vector<int>& sizes);

// Minimum spiral over every (face, start edge, orientation); the canonical
// representative used for isomorph rejection. Throws SpiralError if no
// start unwinds (cannot happen at the sizes this library accepts).
std::vector<int> canonical_spiral(const FullereneGraph& g);
// True iff `ref` equals the canonical spiral of g. Cheaper than computing
// the canonical spiral when `ref` is already a spiral of g.
bool spiral_is_canonical(const FullereneGraph& g, const std::vector<int>& ref);

int spiral_slot_count(int n);                       // n/2 + 2
std::uint64_t pentagon_combination_count(int n);    // C(n/2+2, 12)

using IsomerSink =
    std::function<void(const FullereneGraph&, const std::vector<int>& spiral)>;

// Streams one representative per isomorphism class in deterministic
// (lexicographic spiral) order. Throws on odd n, n < 20 or n > 100.
void enumerate_isomers(int n, const IsomerSink& sink);
// Same over a sub-range [lo, hi) of pentagon-position combination ranks;
// disjoint ranges partition the search for parallel runs.
void enumerate_isomers_range(int n, std::uint64_t lo, std::uint64_t hi,
                             const IsomerSink& sink);
std::vector<FullereneGraph> generate_isomers(int n);

}  // namespace saturnum
