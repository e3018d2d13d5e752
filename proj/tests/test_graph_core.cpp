#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "saturnum/canonical.hpp"
#include "saturnum/fullerene.hpp"
#include "saturnum/graph.hpp"
#include "saturnum/io.hpp"

using namespace saturnum;

TEST_CASE("dodecahedron validates with 12 pentagons") {
  auto g = FullereneGraph::from_rotation(oracles::dodecahedron());
  CHECK(g.n() == 20);
  CHECK(g.face_count() == 12);
  CHECK(g.count_faces_of_size(5) == 12);
  CHECK(g.count_faces_of_size(6) == 0);
  CHECK(g.has_adjacent_pentagons());
}

TEST_CASE("c60 validates with 12 pentagons and 20 hexagons") {
  auto g = FullereneGraph::from_rotation(oracles::c60());
  CHECK(g.n() == 60);
  CHECK(g.face_count() == 32);  // Euler: 60/2 + 2
  CHECK(g.count_faces_of_size(5) == 12);
  CHECK(g.count_faces_of_size(6) == 20);
  CHECK_FALSE(g.has_adjacent_pentagons());
}

TEST_CASE("face sizes sum to 3n and every edge borders two faces") {
  for (auto rot : {oracles::dodecahedron(), oracles::c60()}) {
    auto g = FullereneGraph::from_rotation(rot);
    int total = 0;
    for (const auto& f : g.faces()) total += f.size();
    CHECK(total == 3 * g.n());
    for (int u = 0; u < g.n(); ++u)
      for (int v : g.rotation(u)) {
        int f1 = g.face_left_of(u, v), f2 = g.face_left_of(v, u);
        CHECK(f1 != f2);
      }
  }
}

TEST_CASE("validation failures carry the right error kinds") {
  auto rot = oracles::dodecahedron();
  SUBCASE("asymmetric adjacency is NotCubic") {
    rot[0][0] = rot[0][1];
    CHECK_THROWS_AS(FullereneGraph::from_rotation(rot), ValidationError);
    try {
      FullereneGraph::from_rotation(rot);
    } catch (const ValidationError& e) {
      CHECK(e.kind == GraphError::NotCubic);
    }
  }
  SUBCASE("odd or tiny n is BadVertexCount") {
    RotationSystem tiny(4, {1, 2, 3});
    try {
      FullereneGraph::from_rotation(tiny);
      CHECK(false);
    } catch (const ValidationError& e) {
      CHECK(e.kind == GraphError::BadVertexCount);
    }
  }
  SUBCASE("scrambled rotation breaks the embedding") {
    std::swap(rot[3][0], rot[3][1]);
    CHECK_THROWS_AS(FullereneGraph::from_rotation(rot), ValidationError);
  }
}

TEST_CASE("dodecahedron dual is the icosahedron") {
  auto g = FullereneGraph::from_rotation(oracles::dodecahedron());
  auto d = DualGraph::of(g);
  CHECK(d.g.n == 12);
  for (int f = 0; f < d.g.n; ++f) CHECK(d.g.degree(f) == 5);
  // antipodal pentagons at dual distance 3
  int maxd = 0;
  for (int f = 0; f < d.g.n; ++f)
    for (int h = 0; h < d.g.n; ++h) maxd = std::max(maxd, dual_distance(d, f, h));
  CHECK(maxd == 3);
  CHECK(dual_distance(d, 0, 0) == 0);
}

TEST_CASE("c60 dual degrees match face sizes") {
  auto g = FullereneGraph::from_rotation(oracles::c60());
  auto d = DualGraph::of(g);
  CHECK(d.g.n == 32);
  int deg5 = 0, deg6 = 0;
  for (int f = 0; f < d.g.n; ++f) {
    if (d.g.degree(f) == 5) ++deg5;
    if (d.g.degree(f) == 6) ++deg6;
    CHECK(d.g.degree(f) == d.face_size[static_cast<std::size_t>(f)]);
  }
  CHECK(deg5 == 12);
  CHECK(deg6 == 20);
}

TEST_CASE("dual distance is a metric on random triples") {
  auto g = FullereneGraph::from_rotation(oracles::c60());
  auto d = DualGraph::of(g);
  std::uint64_t st = 7;
  for (int trial = 0; trial < 50; ++trial) {
    int a = static_cast<int>(splitmix64(st) % 32);
    int b = static_cast<int>(splitmix64(st) % 32);
    int c = static_cast<int>(splitmix64(st) % 32);
    CHECK(dual_distance(d, a, b) == dual_distance(d, b, a));
    CHECK(dual_distance(d, a, c) <= dual_distance(d, a, b) + dual_distance(d, b, c));
    CHECK((dual_distance(d, a, b) == 0) == (a == b));
  }
}

TEST_CASE("theorem 1 bounds") {
  auto dode = FullereneGraph::from_rotation(oracles::dodecahedron());
  CHECK(dode.diameter() == 5);
  auto b = theorem1_bounds(dode);
  CHECK(b.lower == 6);
  CHECK(b.upper == 9);
  CHECK(b.lower <= b.upper);

  auto bucky = FullereneGraph::from_rotation(oracles::c60());
  auto b2 = theorem1_bounds(bucky);
  CHECK(b2.lower == 18);
  CHECK(b2.lower <= b2.upper);
}

TEST_CASE("canonical code is invariant under relabeling and reflection") {
  auto rot = oracles::dodecahedron();
  auto base = canonical_code(rot);

  // relabel by a few deterministic permutations
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    std::vector<int> perm(rot.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    deterministic_shuffle(perm, seed);
    RotationSystem relabeled(rot.size());
    for (std::size_t v = 0; v < rot.size(); ++v)
      for (int i = 0; i < 3; ++i)
        relabeled[static_cast<std::size_t>(perm[v])][static_cast<std::size_t>(i)] =
            perm[static_cast<std::size_t>(rot[v][static_cast<std::size_t>(i)])];
    CHECK(canonical_code(relabeled) == base);
  }

  RotationSystem mirrored(rot.size());
  for (std::size_t v = 0; v < rot.size(); ++v)
    mirrored[v] = {rot[v][2], rot[v][1], rot[v][0]};
  CHECK(canonical_code(mirrored) == base);

  CHECK(canonical_code(oracles::c60()) != base);
}

TEST_CASE("3-connectivity holds for the oracle fullerenes") {
  CHECK(is_three_connected(FullereneGraph::from_rotation(oracles::dodecahedron()).as_graph()));
  ValidateOptions opts;
  opts.check_three_connected = true;
  CHECK_NOTHROW(FullereneGraph::from_rotation(oracles::c60(), opts));
}

TEST_CASE("planar_code round trip is byte exact") {
  auto rot = oracles::c60();
  std::ostringstream os(std::ios::binary);
  write_planar_code_header(os);
  write_planar_code(os, rot);
  write_planar_code(os, oracles::dodecahedron());
  std::string blob = os.str();

  std::istringstream is(blob, std::ios::binary);
  auto r1 = read_planar_code(is);
  auto r2 = read_planar_code(is);
  auto r3 = read_planar_code(is);
  REQUIRE(r1.has_value());
  REQUIRE(r2.has_value());
  CHECK_FALSE(r3.has_value());
  CHECK(*r1 == rot);
  CHECK(*r2 == oracles::dodecahedron());

  std::ostringstream os2(std::ios::binary);
  write_planar_code_header(os2);
  write_planar_code(os2, *r1);
  write_planar_code(os2, *r2);
  CHECK(os2.str() == blob);
}

TEST_CASE("text rotation format round trip") {
  auto rot = oracles::dodecahedron();
  std::ostringstream os;
  os << "# dodecahedron\n";
  write_rotation_text(os, rot);
  std::istringstream is(os.str());
  CHECK(read_rotation_text(is) == rot);
}

TEST_CASE("matching primitives") {
  auto g = FullereneGraph::from_rotation(oracles::dodecahedron()).as_graph();
  Matching empty;
  CHECK(empty.valid_on(g));
  CHECK_FALSE(is_maximal(g, empty));

  auto m = greedy_maximal(g);
  CHECK(m.valid_on(g));
  CHECK(is_maximal(g, m));
  CHECK(m.size() >= 6);
  CHECK(m.size() <= 10);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto ms = greedy_maximal_seeded(g, seed);
    CHECK(ms.valid_on(g));
    CHECK(is_maximal(g, ms));
    auto again = greedy_maximal_seeded(g, seed);
    CHECK(ms.edges == again.edges);
  }
}
