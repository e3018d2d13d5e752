#pragma once
// Canonical byte string for embedded cubic graphs. Codes are equal iff the
// graphs are isomorphic as embedded graphs, with both orientations of the
// sphere considered (mirror images get the same code).

#include <string>

#include "saturnum/fullerene.hpp"

namespace saturnum {

std::string canonical_code(const FullereneGraph& g);
std::string canonical_code(const RotationSystem& rot);

}  // namespace saturnum
