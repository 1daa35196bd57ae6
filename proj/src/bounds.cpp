#include "mfw/bounds.hpp"

#include "mfw/error.hpp"
#include "mfw/seifert.hpp"

namespace mfw {

namespace {

Inequality at_most(int value, int bound) { return Inequality{value, bound, value <= bound, value == bound}; }

}  // namespace

bool BoundsReport::all_hold() const {
  return upper.holds && left.holds && right.holds && lr.holds && mfw.holds && (!conway || conway->holds);
}

BoundsReport bounds_report(const LinkDiagram& d, Engine engine) { return bounds_report(d, homfly(d, engine)); }

BoundsReport bounds_report(const LinkDiagram& d, const LaurentPoly2& p) {
  BoundsReport r;
  r.crossings = d.crossing_count();
  r.writhe = d.writhe();
  r.seifert_circles = seifert_structure(d).circle_count();
  r.components = d.component_count();
  r.polynomial = p;
  r.degrees = p.degrees();
  const int cr = r.crossings, w = r.writhe, s = r.seifert_circles;
  const Degrees& g = r.degrees;

  r.upper = at_most(g.z_max, cr - s + 1);
  r.left = Inequality{g.a_min, w - s + 1, w - s + 1 <= g.a_min, w - s + 1 == g.a_min};
  r.right = at_most(g.a_max, w + s - 1);
  r.braid_index_lower = (g.a_max - g.a_min) / 2 + 1;
  r.lr = at_most(r.braid_index_lower, s);
  r.mfw = at_most(g.z_max + (g.a_max - g.a_min) / 2, cr);
  r.self_linking = w - s;
  r.canonical_genus_twice = 2 - r.components + cr - s;

  LaurentPoly1 conway = p.substitute_a_one();
  if (!conway.is_zero()) {
    r.conway_z_max = conway.deg_max();
    int lhs = *r.conway_z_max - r.components + 1;
    r.conway = at_most(lhs, r.canonical_genus_twice);
    r.conway_equals_twice_genus = lhs == r.canonical_genus_twice;
    r.conway_equals_genus = 2 * lhs == r.canonical_genus_twice;
  }
  return r;
}

bool r_sharp(const LinkDiagram& d, const LaurentPoly2& p) {
  return p.degrees().a_max == d.writhe() + seifert_structure(d).circle_count() - 1;
}

bool r_sharp(const LinkDiagram& d) { return r_sharp(d, homfly_oracle(d)); }

bool positive_equalities_check(const BoundsReport& r, const LinkDiagram& d) {
  if (!d.is_positive()) throw PreconditionError("diagram is not positive");
  return r.upper.sharp && r.left.sharp;
}

}  // namespace mfw
