#pragma once
// Test-only oracles, independent of the library's construction paths:
// polyhedra built from explicit 3D coordinates, a brute-force minimum
// maximal matching enumerator, and a pairing-model cubic graph generator.

#include <cstdint>
#include <vector>

#include "saturnum/fullerene.hpp"
#include "saturnum/graph.hpp"

namespace oracles {

// Dodecahedron rotation system derived from icosahedron coordinates
// (vertex per icosahedron face, rotations sorted by angle).
saturnum::RotationSystem dodecahedron();

// Buckminsterfullerene from the truncated icosahedron: one vertex per
// (icosahedron vertex, incident edge) pair at the 1/3 point of the edge.
saturnum::RotationSystem c60();

// Minimum over all maximal matchings, enumerated exhaustively.
int brute_force_saturation(const saturnum::Graph& g);

// Simple connected cubic graph from the pairing model; deterministic in
// (n, seed). n must be even and >= 4.
saturnum::Graph random_cubic_graph(int n, std::uint64_t seed);

}  // namespace oracles
