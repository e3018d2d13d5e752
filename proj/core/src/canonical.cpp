#include "saturnum/canonical.hpp"

#include <vector>

namespace saturnum {

namespace {

// BFS relabeling code for one start dart. Appends two bytes per emitted
// label. Returns -1/0/+1 comparing against `best` with early abort;
// on -1 or 0 `out` holds the full code.
int code_from(const RotationSystem& rot, int root, int first_idx, bool mirror,
              std::string& out, const std::string& best) {
  const int n = static_cast<int>(rot.size());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> ref(static_cast<std::size_t>(n), -1);

  auto idx_of = [&](int v, int w) {
    const auto& r = rot[static_cast<std::size_t>(v)];
    return r[0] == w ? 0 : (r[1] == w ? 1 : 2);
  };

  label[static_cast<std::size_t>(root)] = 0;
  order.push_back(root);
  ref[static_cast<std::size_t>(root)] =
      rot[static_cast<std::size_t>(root)][static_cast<std::size_t>(first_idx)];

  out.clear();
  int next_label = 1;
  bool equal_so_far = !best.empty();
  std::size_t pos = 0;

  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    int start = idx_of(v, ref[static_cast<std::size_t>(v)]);
    for (int k = 0; k < 3; ++k) {
      int j = mirror ? (start + 3 - k) % 3 : (start + k) % 3;
      int w = rot[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
      if (label[static_cast<std::size_t>(w)] < 0) {
        label[static_cast<std::size_t>(w)] = next_label++;
        order.push_back(w);
        ref[static_cast<std::size_t>(w)] = v;
      }
      int lw = label[static_cast<std::size_t>(w)];
      char hi = static_cast<char>((lw >> 8) & 0xff);
      char lo = static_cast<char>(lw & 0xff);
      for (char c : {hi, lo}) {
        out.push_back(c);
        if (equal_so_far) {
          if (static_cast<unsigned char>(c) >
              static_cast<unsigned char>(best[pos]))
            return 1;
          if (static_cast<unsigned char>(c) <
              static_cast<unsigned char>(best[pos]))
            equal_so_far = false;
        }
        ++pos;
      }
    }
  }
  return equal_so_far && !best.empty() ? 0 : -1;
}

}  // namespace

std::string canonical_code(const RotationSystem& rot) {
  const int n = static_cast<int>(rot.size());
  std::string best, cur;
  for (int mirror = 0; mirror < 2; ++mirror)
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 3; ++i) {
        int cmp = code_from(rot, v, i, mirror != 0, cur, best);
        if (best.empty() || cmp < 0) best.swap(cur);
      }
  return best;
}

std::string canonical_code(const FullereneGraph& g) {
  return canonical_code(g.rotation_system());
}

}  // namespace saturnum
