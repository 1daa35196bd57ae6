#pragma once

#include "mfw/diagram.hpp"

#include <vector>

namespace mfw {

// Two coherent parallel strands, west on the left of east as both run north.
// An arc id of -1 consumes one trivial circle instead.
struct ShackleSite {
  int west = -1;
  int east = -1;
  friend bool operator==(const ShackleSite&, const ShackleSite&) = default;
};

// Three positive crossings forming a triangle: source feeds middle and sink,
// middle feeds sink.
struct ArtinSite {
  int source = -1;
  int middle = -1;
  int sink = -1;
  friend bool operator==(const ArtinSite&, const ArtinSite&) = default;
};

// Direction a turns the sigma2 sigma1 sigma2 pattern into sigma1 sigma2 sigma1
// (in the closed braid convention of parse_braid); direction b is the reverse.
enum class ArtinDirection { A, B };

// Two crossings of the same sign stacked along both strands. lower feeds upper.
struct DoubleRegion {
  int lower = -1;
  int upper = -1;
  friend bool operator==(const DoubleRegion&, const DoubleRegion&) = default;
};

// New crossings get indices Cr and Cr+1, the lower one first.
LinkDiagram apply_shackle(const LinkDiagram& d, ShackleSite site);
bool shackle_site_valid(const LinkDiagram& d, ShackleSite site);
std::vector<ShackleSite> shackle_sites(const LinkDiagram& d);

// The new crossing gets index Cr and sits above c.
LinkDiagram apply_double(const LinkDiagram& d, int c);

bool artin_site_matches(const LinkDiagram& d, ArtinSite site, ArtinDirection dir);
std::vector<ArtinSite> artin_sites(const LinkDiagram& d, ArtinDirection dir);
// Crossing indices are kept; in the result the same triple is a site for the
// opposite direction. Arc ids of arcs entering or leaving the triangle are kept.
LinkDiagram apply_artin(const LinkDiagram& d, ArtinSite site, ArtinDirection dir);
// External arcs entering the triangle, in west-to-east order of the pattern.
std::vector<int> artin_entering_arcs(const LinkDiagram& d, ArtinSite site, ArtinDirection dir);

std::vector<DoubleRegion> find_double_regions(const LinkDiagram& d);

}  // namespace mfw
