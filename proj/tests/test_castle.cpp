#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfw/castle.hpp"
#include "mfw/error.hpp"
#include "mfw/moves.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace mfw;

namespace {

// A clasp between an outer pair of circles with a third circle hanging off the
// upper floor between its two ladders.
LinkDiagram trap_fixture() {
  return LinkDiagram({{1, {5, 2, 3, 4}}, {1, {2, 1, 0, 3}}, {1, {1, 6, 7, 0}},
                      {1, {9, 5, 4, 7}}, {1, {6, 10, 11, 8}}, {1, {10, 9, 8, 11}}},
                     1);
}

std::vector<int> random_positive_word(std::mt19937& rng, int strands, int length) {
  std::vector<int> w;
  for (int i = 0; i < length; ++i) w.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1)));
  return w;
}

// Floors and ladders as sets, for order-independence checks.
std::set<std::tuple<int, int, int, int>> floor_set(const Castle& c) {
  std::set<std::tuple<int, int, int, int>> out;
  for (const auto& f : c.floors) out.insert({f.circle, f.start, f.length, f.level});
  return out;
}

void check_castle_properties(const LinkDiagram& d, const SeifertStructure& s, const Castle& c) {
  for (const auto& l : c.ladders) {
    int diff = c.floors[l.upper].level - c.floors[l.lower].level;
    CHECK(diff % 2 != 0);
    CHECK(diff > 0);
    CHECK(c.floor_contains(s, l.lower, l.crossing));
    CHECK(c.floor_contains(s, l.upper, l.crossing));
  }
  for (const auto& b : braces(d, s, c)) CHECK(b.is_trap == !b.inside_floors.empty());
  if (has_traps(d, s, c)) return;
  for (const auto& t : towers(s, c)) {
    CHECK(t.coherent);
    for (std::size_t i = 0; i < t.floors.size(); ++i) CHECK(c.floors[t.floors[i]].level == static_cast<int>(i));
  }
  for (std::size_t f = 0; f < c.floors.size(); ++f) {
    if (c.floors[f].level == 0) continue;
    std::set<int> below;
    for (const auto& l : c.ladders)
      if (l.upper == static_cast<int>(f) && c.floors[l.lower].level == c.floors[f].level - 1) below.insert(l.lower);
    CHECK(below.size() == 1);
  }
}

}  // namespace

TEST_CASE("castles of small diagrams") {
  LinkDiagram u = LinkDiagram::unlink(1);
  SeifertStructure su = seifert_structure(u);
  Castle cu = build_castle(u, su, Point{-1});
  CHECK(cu.floors.size() == 1);
  CHECK(cu.ladders.empty());

  LinkDiagram h = parse_braid("2: 1 1");
  SeifertStructure sh = seifert_structure(h);
  for (int a = 0; a < h.arc_count(); ++a) {
    Castle c = build_castle(h, sh, Point{a});
    CHECK(c.floors.size() == 2);
    CHECK(c.ladders.size() == 2);
    auto bs = braces(h, sh, c);
    CHECK(bs.size() == 1);
    CHECK_FALSE(has_traps(h, sh, c));
    auto ts = towers(sh, c);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].floors.size() == 2);
  }
  CHECK(find_appropriate_point(h) == candidate_base_points(h, sh).front());
}

TEST_CASE("Torus35 castle from an end circle") {
  LinkDiagram t = parse_braid("3: 1 2 1 2 1 2 1 2 1 2");
  SeifertStructure s = seifert_structure(t);
  int end_circle = s.circle_of_arc[0];
  REQUIRE(s.innermost(end_circle));
  Castle c = build_castle(t, s, Point{0});
  REQUIRE(c.floors.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(c.floors[k].level == k);
  // The level-1 floor stops at the last crossing shared with the base circle,
  // so one crossing of the middle circle with the far circle is left out.
  CHECK(c.floors[1].length == 9);
  CHECK(c.ladders.size() == 9);
  auto bs = braces(t, s, c);
  CHECK(bs.size() == 7);
  for (const auto& b : bs) CHECK_FALSE(b.is_trap);
  auto ts = towers(s, c);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].floors.size() == 3);
  CHECK(ts[0].coherent);

  Point p = find_appropriate_point(t, s);
  CHECK(s.circles[s.circle_of_arc[p.arc]].crossings.size() == 5);
  CHECK_THROWS_AS(build_castle(t, s, Point{t.crossing(0).arcs[3] == 0 ? 1 : -1}), PreconditionError);
}

TEST_CASE("nested base points are rejected") {
  LinkDiagram t = parse_braid("3: 1 2 1 2");
  SeifertStructure s = seifert_structure(t);
  int nested_arc = -1;
  for (int a = 0; a < t.arc_count(); ++a)
    if (s.nested(s.circle_of_arc[a])) nested_arc = a;
  REQUIRE(nested_arc >= 0);
  CHECK_THROWS_AS(build_castle(t, s, Point{nested_arc}), PreconditionError);
}

TEST_CASE("a trap and the appropriate point that avoids it") {
  LinkDiagram d = trap_fixture();
  SeifertStructure s = seifert_structure(d);
  REQUIRE(s.circles.size() == 3);
  Castle c = build_castle(d, s, Point{0});
  REQUIRE(has_traps(d, s, c));
  int trapped_circle = -1;
  for (const auto& b : braces(d, s, c))
    if (b.is_trap) {
      REQUIRE(b.inside_floors.size() == 1);
      trapped_circle = c.floors[b.inside_floors[0]].circle;
    }
  CHECK(trapped_circle == 2);
  CHECK(trapped_circle != s.circle_of_arc[0]);

  Point p = find_appropriate_point(d, s);
  CHECK(p.arc != 0);
  CHECK_FALSE(has_traps(d, s, build_castle(d, s, p)));
  // A point on the circle caught inside the trap is appropriate as well.
  auto good = appropriate_points(d, s);
  CHECK(std::any_of(good.begin(), good.end(), [&](Point q) { return q.arc >= 0 && s.circle_of_arc[q.arc] == trapped_circle; }));
  check_castle_properties(d, s, build_castle(d, s, p));
}

TEST_CASE("castle properties on random positive closures") {
  std::mt19937 rng(41);
  int castles = 0;
  for (int i = 0; i < 150; ++i) {
    int n = 2 + static_cast<int>(rng() % 4);
    LinkDiagram d = braid_closure(n, random_positive_word(rng, n, 1 + static_cast<int>(rng() % 10)));
    if (d.crossing_count() == 0) continue;
    SeifertStructure s = seifert_structure(d);
    CHECK_NOTHROW(find_appropriate_point(d, s));
    for (Point p : candidate_base_points(d, s)) {
      Castle c = build_castle(d, s, p);
      check_castle_properties(d, s, c);
      ++castles;
    }
  }
  CHECK(castles > 300);
}

TEST_CASE("castle properties on diagrams grown by shackles") {
  std::mt19937 rng(5);
  int trapped = 0;
  for (int it = 0; it < 400; ++it) {
    LinkDiagram d = LinkDiagram::unlink(2 + static_cast<int>(rng() % 3));
    for (int m = 0, moves = 1 + static_cast<int>(rng() % 5); m < moves; ++m) {
      auto sites = shackle_sites(d);
      if (d.crossing_count() == 0) {
        if (d.trivial_components() >= 2) d = apply_shackle(d, {-1, -1});
      } else if (d.trivial_components() >= 1 && (sites.empty() || rng() % 3 == 0)) {
        int a = static_cast<int>(rng() % static_cast<unsigned>(d.arc_count()));
        ShackleSite site = rng() % 2 ? ShackleSite{a, -1} : ShackleSite{-1, a};
        if (shackle_site_valid(d, site)) d = apply_shackle(d, site);
      } else if (!sites.empty()) {
        d = apply_shackle(d, sites[rng() % sites.size()]);
      }
    }
    if (d.crossing_count() == 0) continue;
    SeifertStructure s = seifert_structure(d);
    CHECK_NOTHROW(find_appropriate_point(d, s));
    for (Point p : candidate_base_points(d, s)) {
      if (p.arc < 0) continue;
      Castle c = build_castle(d, s, p);
      if (has_traps(d, s, c)) ++trapped;
      check_castle_properties(d, s, c);
    }
  }
  CHECK(trapped > 0);
}

TEST_CASE("castle construction does not depend on circle numbering") {
  std::mt19937 rng(43);
  for (int i = 0; i < 40; ++i) {
    int n = 3 + static_cast<int>(rng() % 2);
    LinkDiagram d = braid_closure(n, random_positive_word(rng, n, 4 + static_cast<int>(rng() % 6)));
    // Relabel crossings and arcs at random; circle ids follow arc ids.
    std::vector<int> cperm(d.crossing_count()), aperm(d.arc_count());
    std::iota(cperm.begin(), cperm.end(), 0);
    std::iota(aperm.begin(), aperm.end(), 0);
    std::shuffle(cperm.begin(), cperm.end(), rng);
    std::shuffle(aperm.begin(), aperm.end(), rng);
    std::vector<Crossing> cs(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) {
      Crossing x = d.crossing(c);
      for (int& a : x.arcs) a = aperm[a];
      cs[cperm[c]] = x;
    }
    LinkDiagram e(cs, d.trivial_components());
    SeifertStructure sd = seifert_structure(d), se = seifert_structure(e);
    auto signature = [](const SeifertStructure& s, const Castle& c, const std::vector<int>& to) {
      std::set<std::pair<int, std::vector<int>>> out;
      for (const auto& f : c.floors) {
        const auto& cr = s.circles[f.circle].crossings;
        std::vector<int> covered;
        for (int t = 0; t < f.length; ++t) covered.push_back(to[cr[(f.start + t) % cr.size()]]);
        out.insert({f.level, covered});
      }
      return out;
    };
    std::vector<int> id(d.crossing_count());
    std::iota(id.begin(), id.end(), 0);
    for (Point p : candidate_base_points(d, sd)) {
      if (p.arc < 0) continue;
      Castle a = build_castle(d, sd, p);
      Castle b = build_castle(e, se, Point{aperm[p.arc]});
      CHECK(signature(sd, a, cperm) == signature(se, b, id));
      CHECK(a.ladders.size() == b.ladders.size());
      CHECK(has_traps(d, sd, a) == has_traps(e, se, b));
    }
  }
}
