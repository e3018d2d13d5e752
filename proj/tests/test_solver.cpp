#include <doctest.h>

#include "oracles.hpp"
#include "saturnum/solver.hpp"
#include "saturnum/spiral.hpp"

using namespace saturnum;

TEST_CASE("dodecahedron saturation is 6") {
  auto g = FullereneGraph::from_rotation(oracles::dodecahedron());
  SolveOptions opts;
  opts.fullerene_root_bound = true;
  auto res = saturation_exact(g.as_graph(), opts);
  CHECK(res.s == 6);
  CHECK(res.optimal);
  CHECK(res.witness.size() == 6);
  CHECK(is_maximal(g.as_graph(), res.witness));
}

TEST_CASE("buckminsterfullerene saturation is 18") {
  auto g = FullereneGraph::from_rotation(oracles::c60());
  SolveOptions opts;
  opts.fullerene_root_bound = true;
  auto res = saturation_exact(g.as_graph(), opts);
  CHECK(res.s == 18);
  CHECK(res.optimal);
  CHECK(is_maximal(g.as_graph(), res.witness));
  // 100 greedy probes never beat the optimum
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    CHECK(greedy_maximal_seeded(g.as_graph(), seed).size() >= 18);
}

TEST_CASE("closed-form fullerene lower bound") {
  CHECK(lower_bound_fullerene(60) == 18);
  CHECK(lower_bound_fullerene(20) == 5);
  CHECK(lower_bound_fullerene(108) == 34);
}

TEST_CASE("solver equals brute force on all fullerenes up to 26") {
  for (int n : {20, 24, 26}) {
    for (const auto& g : generate_isomers(n)) {
      auto graph = g.as_graph();
      auto res = saturation_exact(graph);
      CHECK(res.optimal);
      CHECK(res.s == oracles::brute_force_saturation(graph));
    }
  }
}

TEST_CASE("solver equals brute force on random cubic graphs") {
  int done = 0;
  for (std::uint64_t seed = 0; done < 60; ++seed) {
    int n = 8 + 2 * static_cast<int>(seed % 6);  // 8..18
    auto g = oracles::random_cubic_graph(n, seed);
    auto res = saturation_exact(g);
    CHECK(res.optimal);
    CHECK(res.s == oracles::brute_force_saturation(g));
    CHECK(is_maximal(g, res.witness));
    ++done;
  }
}

TEST_CASE("deterministic results and node counts") {
  auto g = FullereneGraph::from_rotation(oracles::c60()).as_graph();
  auto a = saturation_exact(g);
  auto b = saturation_exact(g);
  CHECK(a.s == b.s);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.witness.edges == b.witness.edges);
}

TEST_CASE("node budget returns best-known flagged non-optimal") {
  auto isomers = generate_isomers(36);
  REQUIRE(!isomers.empty());
  SolveOptions tight;
  tight.node_budget = 1;
  tight.greedy_probes = 1;
  auto res = saturation_exact(isomers[0].as_graph(), tight);
  CHECK_FALSE(res.optimal);
  CHECK(res.s >= 1);
  CHECK(is_maximal(isomers[0].as_graph(), res.witness));
}

TEST_CASE("independence lower bound") {
  auto dode = FullereneGraph::from_rotation(oracles::dodecahedron()).as_graph();
  CHECK(max_independent_set_size(dode) == 8);
  CHECK(independence_lb(dode) == 6);

  auto bucky = FullereneGraph::from_rotation(oracles::c60()).as_graph();
  CHECK(max_independent_set_size(bucky) == 24);
  CHECK(independence_lb(bucky) == 18);

  Graph big(80);
  CHECK_THROWS_AS(independence_lb(big, 70), SizeCapExceeded);

  // independence_lb never exceeds the exact saturation number
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = oracles::random_cubic_graph(14, seed);
    CHECK(independence_lb(g) <= saturation_exact(g).s);
  }
}

TEST_CASE("single-edge host graph") {
  Graph g(2);
  g.add_edge(0, 1);
  auto m = greedy_maximal(g);
  CHECK(m.size() == 1);
  CHECK(is_maximal(g, m));
  auto res = saturation_exact(g);
  CHECK(res.s == 1);
}
