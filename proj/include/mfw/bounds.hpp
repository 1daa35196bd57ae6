#pragma once

#include "mfw/diagram.hpp"
#include "mfw/laurent.hpp"
#include "mfw/resolution.hpp"

#include <optional>

namespace mfw {

// value <= bound for U, R and MFW; bound <= value for L; for LR the value is
// the braid index lower bound and the bound is s.
struct Inequality {
  int value = 0;
  int bound = 0;
  bool holds = false;
  bool sharp = false;
};

struct BoundsReport {
  int crossings = 0;
  int writhe = 0;
  int seifert_circles = 0;
  int components = 0;
  LaurentPoly2 polynomial;
  Degrees degrees;
  std::optional<int> conway_z_max;  // absent when the Conway polynomial vanishes

  Inequality upper, left, right, lr, mfw;
  int self_linking = 0;
  int braid_index_lower = 0;
  int canonical_genus_twice = 0;  // 2g of the canonical Seifert surface

  // deg_z Conway - #L + 1 <= 2g(canonical surface); both readings of the
  // positive-diagram equality are recorded, neither is asserted.
  std::optional<Inequality> conway;
  std::optional<bool> conway_equals_twice_genus;
  std::optional<bool> conway_equals_genus;

  bool all_hold() const;
};

BoundsReport bounds_report(const LinkDiagram& d, Engine engine = Engine::Coherent);
BoundsReport bounds_report(const LinkDiagram& d, const LaurentPoly2& p);

// deg_a^+ P == w + s - 1. Without a polynomial, uses the memoised oracle.
bool r_sharp(const LinkDiagram& d, const LaurentPoly2& p);
bool r_sharp(const LinkDiagram& d);

// For positive diagrams (U) and (L) are always equalities. Throws
// PreconditionError for non-positive input; returns whether both were sharp.
bool positive_equalities_check(const BoundsReport& r, const LinkDiagram& d);

}  // namespace mfw
