#pragma once

#include "mfw/diagram.hpp"

#include <array>
#include <vector>

namespace mfw {

enum class Side { Left, Right };

struct SeifertCircle {
  // Arcs in orientation order, starting at the smallest arc id.
  std::vector<int> arcs;
  // crossings[j] is the crossing at the head of arcs[j].
  std::vector<int> crossings;
  int piece = -1;
};

// Seifert circles of the non-trivial part of a diagram. Circles are numbered by
// their smallest arc id. Trivial circles are only counted.
struct SeifertStructure {
  std::vector<SeifertCircle> circles;
  int trivial_circles = 0;
  std::vector<int> circle_of_arc;
  // [0] is the circle entering through port 0, [1] the other one.
  std::vector<std::array<int, 2>> circles_of_crossing;
  std::vector<std::array<int, 2>> position_of_crossing;
  // Other circles of the same piece on each side. Circles in other pieces are
  // on neither side; their relative placement is not part of the data.
  std::vector<std::vector<int>> left_set, right_set;
  // Simple Seifert graph and edge multiplicities.
  std::vector<std::vector<int>> neighbours;

  int circle_count() const { return static_cast<int>(circles.size()) + trivial_circles; }
  bool loose_left(int c) const { return left_set[c].empty(); }
  bool loose_right(int c) const { return right_set[c].empty(); }
  bool innermost(int c) const { return loose_left(c) || loose_right(c); }
  bool nested(int c) const { return !innermost(c); }
  // Side of `other` as seen from circle `of`.
  Side side_of(int of, int other) const;
  int multiplicity(int c1, int c2) const;
  // The circle of a crossing that is not c.
  int other_circle(int crossing, int c) const;
  // Position of a crossing along circle c.
  int position_on(int crossing, int c) const;
  std::vector<int> crossings_between(int c1, int c2) const;
  bool bipartite() const;

 private:
  friend SeifertStructure seifert_structure(const LinkDiagram& d);
  std::vector<std::vector<int>> edge_count_;
};

SeifertStructure seifert_structure(const LinkDiagram& d);

// Each circle sees the other on opposite sides.
bool circles_coherent(const SeifertStructure& s, int c1, int c2);

struct DiagramStats {
  int crossing_count = 0;
  int writhe = 0;
  int seifert_circle_count = 0;
  int component_count = 0;
  bool is_positive = true;
  std::vector<int> lone_crossings;
  bool has_nested = false;
  std::vector<int> isthmi;
};

DiagramStats diagram_stats(const LinkDiagram& d);
DiagramStats diagram_stats(const LinkDiagram& d, const SeifertStructure& s);

}  // namespace mfw
