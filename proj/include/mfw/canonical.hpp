#pragma once

#include "mfw/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfw {

// Isomorphism-invariant key: sorted per-piece codes plus the trivial count.
std::string canonical_key(const LinkDiagram& d);

// Crossing map d1 -> d2 of an isomorphism, if one exists. Ports correspond
// one to one, so arcs map through their tail slots (see map_arc).
std::optional<std::vector<int>> find_isomorphism(const LinkDiagram& d1, const LinkDiagram& d2);
int map_arc(const LinkDiagram& from, const LinkDiagram& to, const std::vector<int>& crossing_map, int arc);

bool diagrams_isomorphic(const LinkDiagram& d1, const LinkDiagram& d2);

}  // namespace mfw
