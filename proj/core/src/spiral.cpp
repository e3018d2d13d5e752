#include "saturnum/spiral.hpp"

#include <algorithm>
#include <array>

namespace saturnum {

bool spiral_sizes_well_formed(const std::vector<int>& sizes) {
  int fives = 0;
  for (int s : sizes) {
    if (s == 5)
      ++fives;
    else if (s != 6)
      return false;
  }
  return fives == 12;
}

void PatchWindup::ensure_capacity(int cap) {
  if (static_cast<int>(nb_.size()) < cap) {
    nb_.resize(static_cast<std::size_t>(cap));
    deg_.resize(static_cast<std::size_t>(cap));
    next_.resize(static_cast<std::size_t>(cap));
    prev_.resize(static_cast<std::size_t>(cap));
  }
}

void PatchWindup::glue_first(int s) {
  for (int i = 0; i < s; ++i) {
    int fwd = (i + 1) % s, bwd = (i + s - 1) % s;
    nb_[static_cast<std::size_t>(i)] = {fwd, bwd, -1};
    deg_[static_cast<std::size_t>(i)] = 2;
    next_[static_cast<std::size_t>(i)] = fwd;
    prev_[static_cast<std::size_t>(i)] = bwd;
  }
  nverts_ = s;
  boundary_len_ = s;
  last_end_ = -1;
  if (record_faces_) {
    auto& rec = face_rec_.emplace_back();
    for (int i = 0; i < s; ++i) rec.push_back(i);
  }
}

bool PatchWindup::glue(int s, bool second) {
  int x, y;
  run_.clear();
  if (second) {
    x = 0;
    y = next_[0];
    run_.clear();
  } else {
    int guard = 0;
    x = prev_[static_cast<std::size_t>(last_end_)];
    while (deg_[static_cast<std::size_t>(x)] == 3) {
      x = prev_[static_cast<std::size_t>(x)];
      if (++guard > boundary_len_) return false;
    }
    guard = 0;
    y = next_[static_cast<std::size_t>(last_end_)];
    while (deg_[static_cast<std::size_t>(y)] == 3) {
      y = next_[static_cast<std::size_t>(y)];
      if (++guard > boundary_len_) return false;
    }
    if (x == y) return false;
    for (int m = next_[static_cast<std::size_t>(x)]; m != y;
         m = next_[static_cast<std::size_t>(m)])
      run_.push_back(m);
  }

  const int q = static_cast<int>(run_.size()) + 1;  // run edges
  const int newc = s - q - 1;
  if (newc < 0) return false;

  int first_new = -1, last_new = -1;
  if (newc == 0) {
    // the face closes x directly to y; reject a parallel edge
    auto& nx = nb_[static_cast<std::size_t>(x)];
    if (nx[0] == y || nx[1] == y) return false;
    next_[static_cast<std::size_t>(x)] = y;
    prev_[static_cast<std::size_t>(y)] = x;
  } else {
    first_new = nverts_;
    last_new = nverts_ + newc - 1;
    ensure_capacity(nverts_ + newc);
    int p = x;
    for (int v = first_new; v <= last_new; ++v) {
      next_[static_cast<std::size_t>(p)] = v;
      prev_[static_cast<std::size_t>(v)] = p;
      p = v;
    }
    next_[static_cast<std::size_t>(p)] = y;
    prev_[static_cast<std::size_t>(y)] = p;
    for (int v = first_new; v <= last_new; ++v) {
      nb_[static_cast<std::size_t>(v)] = {next_[static_cast<std::size_t>(v)],
                                          prev_[static_cast<std::size_t>(v)], -1};
      deg_[static_cast<std::size_t>(v)] = 2;
    }
    nverts_ += newc;
  }

  // x gains its new forward neighbor at the front of the rotation list,
  // y gains its new backward neighbor at the back.
  {
    auto& nx = nb_[static_cast<std::size_t>(x)];
    nx = {newc == 0 ? y : first_new, nx[0], nx[1]};
    deg_[static_cast<std::size_t>(x)] = 3;
    auto& ny = nb_[static_cast<std::size_t>(y)];
    ny[2] = newc == 0 ? x : last_new;
    deg_[static_cast<std::size_t>(y)] = 3;
  }

  boundary_len_ += newc - static_cast<int>(run_.size());
  last_end_ = y;

  if (record_faces_) {
    auto& rec = face_rec_.emplace_back();
    rec.push_back(x);
    for (int v = first_new; v >= 0 && v <= last_new; ++v) rec.push_back(v);
    rec.push_back(y);
    for (auto it = run_.rbegin(); it != run_.rend(); ++it) rec.push_back(*it);
  }
  return true;
}

bool PatchWindup::try_closure(int s) {
  if (boundary_len_ != s) return false;
  int v = last_end_;
  for (int i = 0; i < s; ++i) {
    if (deg_[static_cast<std::size_t>(v)] != 3) return false;
    v = next_[static_cast<std::size_t>(v)];
  }
  if (v != last_end_) return false;
  if (record_faces_) {
    auto& rec = face_rec_.emplace_back();
    int u = last_end_;
    for (int i = 0; i < s; ++i) {
      rec.push_back(u);
      u = prev_[static_cast<std::size_t>(u)];
    }
  }
  return true;
}

bool PatchWindup::unwind(const std::vector<int>& sizes, bool close) {
  const int nf = static_cast<int>(sizes.size());
  if (nf < 3) return false;
  int cap = 0;
  for (int s : sizes) {
    if (s < 3) return false;
    cap += s;
  }
  ensure_capacity(cap);
  face_rec_.clear();
  glue_first(sizes[0]);
  for (int k = 1; k < nf; ++k) {
    if (close && k == nf - 1) return try_closure(sizes[static_cast<std::size_t>(k)]);
    if (!glue(sizes[static_cast<std::size_t>(k)], k == 1)) return false;
  }
  return true;
}

bool PatchWindup::try_close(const std::vector<int>& sizes) {
  return unwind(sizes, true);
}

bool PatchWindup::try_patch(const std::vector<int>& sizes) {
  return unwind(sizes, false);
}

RotationSystem PatchWindup::rotation() const {
  RotationSystem rot(static_cast<std::size_t>(nverts_));
  for (int v = 0; v < nverts_; ++v) rot[static_cast<std::size_t>(v)] = nb_[static_cast<std::size_t>(v)];
  return rot;
}

std::vector<std::vector<int>> PatchWindup::patch_rotation() const {
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(nverts_));
  for (int v = 0; v < nverts_; ++v) {
    const auto& nb = nb_[static_cast<std::size_t>(v)];
    for (int i = 0; i < deg_[static_cast<std::size_t>(v)]; ++i)
      rot[static_cast<std::size_t>(v)].push_back(nb[static_cast<std::size_t>(i)]);
  }
  return rot;
}

std::vector<int> PatchWindup::boundary_cycle() const {
  std::vector<int> cyc;
  cyc.reserve(static_cast<std::size_t>(boundary_len_));
  int v = last_end_;
  do {
    cyc.push_back(v);
    v = next_[static_cast<std::size_t>(v)];
  } while (v != last_end_);
  return cyc;
}

std::vector<int> PatchWindup::boundary_degrees() const {
  std::vector<int> out;
  for (int v : boundary_cycle()) out.push_back(deg_[static_cast<std::size_t>(v)]);
  return out;
}

FullereneGraph spiral_to_graph(const std::vector<int>& sizes) {
  if (!spiral_sizes_well_formed(sizes))
    throw SpiralError("spiral must consist of 5s and 6s with exactly twelve 5s");
  PatchWindup w;
  w.record_faces(false);
  if (!w.try_close(sizes)) throw SpiralError("spiral does not close");
  return FullereneGraph::from_rotation(w.rotation());
}

namespace {

// Re-derives a spiral from an embedded graph by replaying the windup with
// forced choices, checking the real faces against every glue step.
class SpiralExtractor {
 public:
  explicit SpiralExtractor(const FullereneGraph& g)
      : g_(g),
        pdeg_(static_cast<std::size_t>(g.n()), 0),
        next_(static_cast<std::size_t>(g.n()), -1),
        prev_(static_cast<std::size_t>(g.n()), -1),
        done_(static_cast<std::size_t>(g.face_count()), 0) {}

  // Result: 2 = stuck, 1 = lex-worse than ref (aborted), 0 = completed equal,
  // -1 = completed strictly smaller (out gets the sequence). An empty ref
  // compares as larger than everything, so any completion reports -1.
  int run(int face_id, int pos, bool mirror, const std::vector<int>& ref,
          std::vector<int>* out) {
    reset();
    closed_ = false;
    const Face& f0 = g_.face(face_id);
    const int fsz = f0.size();
    cycle_.clear();
    for (int i = 0; i < fsz; ++i) {
      int idx = mirror ? ((pos - i) % fsz + fsz) % fsz : (pos + i) % fsz;
      cycle_.push_back(f0.boundary[static_cast<std::size_t>(idx)]);
    }
    for (int i = 0; i < fsz; ++i) {
      int v = cycle_[static_cast<std::size_t>(i)];
      touch(v);
      pdeg_[static_cast<std::size_t>(v)] = 2;
      next_[static_cast<std::size_t>(v)] = cycle_[static_cast<std::size_t>((i + 1) % fsz)];
      prev_[static_cast<std::size_t>(v)] = cycle_[static_cast<std::size_t>((i + fsz - 1) % fsz)];
    }
    boundary_len_ = fsz;
    done_[static_cast<std::size_t>(face_id)] = 1;
    touched_faces_.push_back(face_id);
    faces_done_ = 1;
    seq_.clear();
    cmp_ = ref.empty() ? -1 : 0;
    if (!emit(fsz, ref)) return 1;
    last_end_ = cycle_[1];
    // the second face glues over the start edge
    int r = glue_step(cycle_[0], cycle_[1], ref, true);
    if (r) return r;
    while (faces_done_ < g_.face_count()) {
      int rr = glue_step(-1, -1, ref, false);
      if (rr) return rr;
    }
    if (!closed_) return 2;
    if (cmp_ < 0 && out) *out = seq_;
    return cmp_ < 0 ? -1 : 0;
  }

 private:
  void reset() {
    for (int v : touched_) {
      pdeg_[static_cast<std::size_t>(v)] = 0;
      next_[static_cast<std::size_t>(v)] = -1;
      prev_[static_cast<std::size_t>(v)] = -1;
    }
    touched_.clear();
    for (int f : touched_faces_) done_[static_cast<std::size_t>(f)] = 0;
    touched_faces_.clear();
  }
  void touch(int v) { touched_.push_back(v); }

  bool emit(int s, const std::vector<int>& ref) {
    // lexicographic compare against ref; false means strictly worse
    std::size_t i = seq_.size();
    seq_.push_back(s);
    if (cmp_ == 0 && i < ref.size()) {
      if (s > ref[i]) return false;
      if (s < ref[i]) cmp_ = -1;
    }
    return true;
  }

  // One glue. Returns 0 ok, 1 lex-worse, 2 stuck.
  int glue_step(int forced_x, int forced_y, const std::vector<int>& ref,
                bool forced) {
    int x, y;
    run_.clear();
    if (forced) {
      x = forced_x;
      y = forced_y;
    } else {
      int guard = 0;
      x = prev_[static_cast<std::size_t>(last_end_)];
      while (pdeg_[static_cast<std::size_t>(x)] == 3) {
        x = prev_[static_cast<std::size_t>(x)];
        if (++guard > boundary_len_) return closure(ref);
      }
      guard = 0;
      y = next_[static_cast<std::size_t>(last_end_)];
      while (pdeg_[static_cast<std::size_t>(y)] == 3) {
        y = next_[static_cast<std::size_t>(y)];
        if (++guard > boundary_len_) return closure(ref);
      }
      if (x == y) return 2;
      for (int m = next_[static_cast<std::size_t>(x)]; m != y;
           m = next_[static_cast<std::size_t>(m)])
        run_.push_back(m);
    }

    // the face on the far side of the run's first boundary edge
    int w = run_.empty() ? y : run_[0];
    int fa = g_.face_left_of(x, w);
    int fb = g_.face_left_of(w, x);
    int fnext;
    if (done_[static_cast<std::size_t>(fa)] == done_[static_cast<std::size_t>(fb)]) return 2;
    fnext = done_[static_cast<std::size_t>(fa)] ? fb : fa;
    const Face& f = g_.face(fnext);
    const int s = f.size();

    // locate the run path inside the face cycle
    const auto& cyc = f.boundary;
    int px = -1;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (cyc[i] == x) {
        px = static_cast<int>(i);
        break;
      }
    if (px < 0) return 2;
    const int fs = static_cast<int>(cyc.size());
    auto at = [&](int i, int dir) {
      return cyc[static_cast<std::size_t>(((px + dir * i) % fs + fs) % fs)];
    };
    int dir = 0;
    for (int d : {1, -1}) {
      bool ok = true;
      for (std::size_t i = 0; i < run_.size(); ++i)
        if (at(static_cast<int>(i) + 1, d) != run_[i]) {
          ok = false;
          break;
        }
      if (ok && at(static_cast<int>(run_.size()) + 1, d) == y) {
        dir = d;
        break;
      }
    }
    if (dir == 0) return 2;

    const int q = static_cast<int>(run_.size()) + 1;
    const int newc = s - q - 1;
    if (newc < 0) return 2;

    // remaining face vertices walked onward from y are the new boundary,
    // nearest-to-y first
    news_.clear();
    for (int i = 0; i < newc; ++i) {
      int v = at(q + 1 + i, dir);
      if (pdeg_[static_cast<std::size_t>(v)] != 0) return 2;
      news_.push_back(v);
    }

    if (newc == 0) {
      if (next_[static_cast<std::size_t>(x)] == y) return 2;  // already boundary-adjacent: pinch
      next_[static_cast<std::size_t>(x)] = y;
      prev_[static_cast<std::size_t>(y)] = x;
    } else {
      int p = x;
      for (int i = newc - 1; i >= 0; --i) {  // boundary order x -> n1 .. nj -> y
        int v = news_[static_cast<std::size_t>(i)];
        touch(v);
        pdeg_[static_cast<std::size_t>(v)] = 2;
        next_[static_cast<std::size_t>(p)] = v;
        prev_[static_cast<std::size_t>(v)] = p;
        p = v;
      }
      next_[static_cast<std::size_t>(p)] = y;
      prev_[static_cast<std::size_t>(y)] = p;
    }
    pdeg_[static_cast<std::size_t>(x)] = 3;
    pdeg_[static_cast<std::size_t>(y)] = 3;
    boundary_len_ += newc - static_cast<int>(run_.size());
    last_end_ = y;
    done_[static_cast<std::size_t>(fnext)] = 1;
    touched_faces_.push_back(fnext);
    ++faces_done_;
    return emit(s, ref) ? 0 : 1;
  }

  // All boundary vertices saturated: the remaining face must be the boundary.
  int closure(const std::vector<int>& ref) {
    if (faces_done_ + 1 != g_.face_count()) return 2;
    int undone = -1;
    int v0 = last_end_;
    int w = next_[static_cast<std::size_t>(v0)];
    int fa = g_.face_left_of(v0, w);
    int fb = g_.face_left_of(w, v0);
    if (done_[static_cast<std::size_t>(fa)] == done_[static_cast<std::size_t>(fb)]) return 2;
    undone = done_[static_cast<std::size_t>(fa)] ? fb : fa;
    const Face& f = g_.face(undone);
    if (f.size() != boundary_len_) return 2;
    int v = v0;
    for (int i = 0; i < boundary_len_; ++i) {
      if (pdeg_[static_cast<std::size_t>(v)] != 3) return 2;
      v = next_[static_cast<std::size_t>(v)];
    }
    done_[static_cast<std::size_t>(undone)] = 1;
    touched_faces_.push_back(undone);
    ++faces_done_;
    closed_ = true;
    return emit(f.size(), ref) ? 0 : 1;
  }

  const FullereneGraph& g_;
  std::vector<int> pdeg_, next_, prev_;
  std::vector<char> done_;
  std::vector<int> touched_, touched_faces_;
  std::vector<int> cycle_, run_, news_, seq_;
  int boundary_len_ = 0, last_end_ = -1, faces_done_ = 0, cmp_ = 0;
  bool closed_ = false;
};

}  // namespace

bool spiral_is_canonical(const FullereneGraph& g, const std::vector<int>& ref) {
  SpiralExtractor ex(g);
  for (const Face& f : g.faces()) {
    if (f.size() > ref[0]) continue;  // first emit would already lose
    for (int pos = 0; pos < f.size(); ++pos)
      for (int mirror = 0; mirror < 2; ++mirror)
        if (ex.run(f.id, pos, mirror != 0, ref, nullptr) == -1) return false;
  }
  return true;
}

std::vector<int> canonical_spiral(const FullereneGraph& g) {
  SpiralExtractor ex(g);
  std::vector<int> best, cur;
  for (const Face& f : g.faces())
    for (int pos = 0; pos < f.size(); ++pos)
      for (int mirror = 0; mirror < 2; ++mirror)
        if (ex.run(f.id, pos, mirror != 0, best, &cur) == -1) best = cur;
  if (best.empty()) throw SpiralError("graph admits no face spiral");
  return best;
}

int spiral_slot_count(int n) { return n / 2 + 2; }

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void check_generator_n(int n) {
  if (n < 20 || n % 2 != 0)
    throw std::invalid_argument("isomer generation needs even n >= 20");
  if (n > 100)
    throw std::invalid_argument(
        "isomer generation is limited to n <= 100 (face-spiral completeness ceiling)");
}

// positions of the twelve pentagons among m slots, lexicographic
bool next_combination(std::vector<int>& c, int m) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::vector<int> unrank_combination(std::uint64_t rank, int m, int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  int pos = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      std::uint64_t block = binomial(m - pos - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++pos;
    }
    c[static_cast<std::size_t>(i)] = pos++;
  }
  return c;
}

}  // namespace

std::uint64_t pentagon_combination_count(int n) {
  check_generator_n(n);
  return binomial(spiral_slot_count(n), 12);
}

void enumerate_isomers_range(int n, std::uint64_t lo, std::uint64_t hi,
                             const IsomerSink& sink) {
  check_generator_n(n);
  const int m = spiral_slot_count(n);
  const std::uint64_t total = binomial(m, 12);
  hi = std::min(hi, total);
  if (lo >= hi) return;

  std::vector<int> comb = unrank_combination(lo, m, 12);
  std::vector<int> sizes(static_cast<std::size_t>(m), 6);
  PatchWindup windup;
  windup.record_faces(false);

  for (std::uint64_t rank = lo; rank < hi; ++rank) {
    for (int p : comb) sizes[static_cast<std::size_t>(p)] = 5;
    if (windup.try_close(sizes)) {
      FullereneGraph g = FullereneGraph::from_rotation(windup.rotation());
      if (spiral_is_canonical(g, sizes)) sink(g, sizes);
    }
    for (int p : comb) sizes[static_cast<std::size_t>(p)] = 6;
    if (!next_combination(comb, m)) break;
  }
}

void enumerate_isomers(int n, const IsomerSink& sink) {
  enumerate_isomers_range(n, 0, pentagon_combination_count(n), sink);
}

std::vector<FullereneGraph> generate_isomers(int n) {
  std::vector<FullereneGraph> out;
  enumerate_isomers(n, [&](const FullereneGraph& g, const std::vector<int>&) {
    out.push_back(g);
  });
  return out;
}

}  // namespace saturnum
