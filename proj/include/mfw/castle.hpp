#pragma once

#include "mfw/diagram.hpp"
#include "mfw/seifert.hpp"

#include <vector>

namespace mfw {

// A point on a diagram: the gap at the tail of an arc. arc == -1 addresses a
// point on a trivial circle.
struct Point {
  int arc = -1;
  friend bool operator==(const Point&, const Point&) = default;
};

// Crossing positions start .. start+length-1 (cyclically) along a circle.
// The floor runs from just before the first to just after the last.
struct Floor {
  int circle = -1;
  int start = 0;
  int length = 0;
  int level = 0;
  friend bool operator==(const Floor&, const Floor&) = default;
};

struct Ladder {
  int crossing = -1;
  int lower = -1;  // floor indices
  int upper = -1;
};

struct Castle {
  Point base;
  int base_circle = -1;
  std::vector<Floor> floors;
  std::vector<Ladder> ladders;

  bool floor_contains(const SeifertStructure& s, int floor, int crossing) const;
  // Offset of a crossing from the floor's start, or -1.
  int offset_in_floor(const SeifertStructure& s, int floor, int crossing) const;
};

struct Brace {
  int s1 = -1, s2 = -1;  // ladder crossings, s1 first along the lower floor
  int lower = -1, upper = -1;
  std::vector<int> lower_arcs;  // F1'
  std::vector<int> upper_arcs;  // F2'
  std::vector<int> inside_floors;
  bool is_trap = false;
};

// Throws PreconditionError if x is not on an innermost circle.
Castle build_castle(const LinkDiagram& d, const SeifertStructure& s, Point x);
std::vector<Brace> braces(const LinkDiagram& d, const SeifertStructure& s, const Castle& castle);
bool has_traps(const LinkDiagram& d, const SeifertStructure& s, const Castle& castle);

std::vector<Point> candidate_base_points(const LinkDiagram& d, const SeifertStructure& s);
// First trap-free candidate; LemmaViolation if none is.
Point find_appropriate_point(const LinkDiagram& d, const SeifertStructure& s);
Point find_appropriate_point(const LinkDiagram& d);
// All trap-free candidates, in candidate order.
std::vector<Point> appropriate_points(const LinkDiagram& d, const SeifertStructure& s);

struct Tower {
  std::vector<int> floors;
  bool coherent = true;
};
std::vector<Tower> towers(const SeifertStructure& s, const Castle& castle);

}  // namespace mfw
