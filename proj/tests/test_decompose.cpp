#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfw/bounds.hpp"
#include "mfw/canonical.hpp"
#include "mfw/corpus.hpp"
#include "mfw/decompose.hpp"
#include "mfw/error.hpp"
#include "mfw/seifert.hpp"

#include <random>

using namespace mfw;

namespace {

int count(const MoveScript& s, Move::Type t) {
  int n = 0;
  for (const Move& m : s.moves) n += m.type == t;
  return n;
}

}  // namespace

TEST_CASE("scripts replay") {
  MoveScript empty{2, {}};
  CHECK(replay(empty).component_count() == 2);
  CHECK(replay(empty).crossing_count() == 0);
  MoveScript h{2, {Move::make_shackle({-1, -1})}};
  CHECK(verify(h, parse_braid("2: 1 1")));
  MoveScript t = h;
  t.moves.push_back(Move::make_double(0));
  CHECK(verify(t, parse_braid("2: 1 1 1")));
  MoveScript broken = t;
  broken.moves.erase(broken.moves.begin());
  CHECK_FALSE(verify(broken, parse_braid("2: 1 1 1")));
  CHECK_THROWS_AS(replay(broken), PreconditionError);
  MoveScript short_one = t;
  short_one.moves.pop_back();
  CHECK_FALSE(verify(short_one, parse_braid("2: 1 1 1")));
}

TEST_CASE("small decompositions") {
  SharpnessCertificate h = decompose_positive(parse_braid("2: 1 1"));
  REQUIRE(h.decomposable);
  CHECK(h.script->moves.size() == 1);
  CHECK(h.script->moves[0].type == Move::Type::Shackle);
  CHECK(h.script->start_circles == 2);

  SharpnessCertificate k = decompose_positive(parse_braid("2: 1"));
  CHECK_FALSE(k.decomposable);
  CHECK(k.a_max == 0);
  CHECK(k.bound == 2);

  SharpnessCertificate u = decompose_positive(LinkDiagram::unlink(3));
  CHECK(u.decomposable);
  CHECK(u.script->start_circles == 3);

  CHECK_THROWS_AS(decompose_positive(parse_braid("2: -1 -1")), PreconditionError);
}

TEST_CASE("Torus35 decomposes") {
  LinkDiagram t = parse_braid("3: 1 2 1 2 1 2 1 2 1 2");
  SharpnessCertificate c = decompose_positive(t);
  REQUIRE(c.decomposable);
  CHECK(verify(*c.script, t));
  CHECK(2 * count(*c.script, Move::Type::Shackle) + count(*c.script, Move::Type::Double) == 10);
}

TEST_CASE("UnknotB is not sharp") {
  SharpnessCertificate c = decompose_positive(unknot_b());
  CHECK_FALSE(c.decomposable);
  CHECK_FALSE(c.script.has_value());
  CHECK(c.a_max == 0);
  CHECK(c.bound == 4);
  CHECK(c.polynomial == LaurentPoly2::constant(1));
  CHECK(find_double_regions(unknot_b()).empty());
}

TEST_CASE("Artin normalisation examples") {
  LinkDiagram h = hopf();
  Normalization nh = artin_normalize(h, find_appropriate_point(h));
  CHECK(nh.steps.empty());
  CHECK(nh.potentials.size() == 1);

  LinkDiagram d = parse_braid("3: 2 1 2");
  SeifertStructure s = seifert_structure(d);
  int right_end = -1;
  for (int a = 0; a < d.arc_count() && right_end < 0; ++a)
    if (s.loose_right(s.circle_of_arc[a]) && s.circles[s.circle_of_arc[a]].crossings.size() == 1) right_end = a;
  REQUIRE(right_end >= 0);
  Normalization n = artin_normalize(d, Point{right_end});
  REQUIRE(n.steps.size() == 1);
  CHECK(n.steps[0].direction == ArtinDirection::A);
  CHECK(diagrams_isomorphic(n.diagram, parse_braid("3: 1 2 1")));
  CHECK(n.potentials.front() - n.potentials.back() == 1);

  LinkDiagram t = torus35();
  CHECK(find_double_regions(t).empty());
  Normalization nt = artin_normalize(t, find_appropriate_point(t));
  CHECK_FALSE(nt.steps.empty());
  CHECK_FALSE(find_double_regions(nt.diagram).empty());
  CHECK(homfly_oracle(nt.diagram) == homfly_oracle(t));
}

TEST_CASE("potential drops by one per Artin move") {
  std::mt19937 rng(61);
  int moves = 0;
  for (int i = 0; i < 150; ++i) {
    int n = 3 + static_cast<int>(rng() % 4);
    LinkDiagram d = remove_trivial_components(braid_closure(n, random_braid_word(rng, n, 3 + static_cast<int>(rng() % 12), true)));
    if (d.crossing_count() == 0) continue;
    for (Point x : appropriate_points(d, seifert_structure(d))) {
      Normalization nm = artin_normalize(d, x);
      REQUIRE(nm.potentials.size() == nm.steps.size() + 1);
      for (std::size_t k = 0; k + 1 < nm.potentials.size(); ++k) CHECK(nm.potentials[k] - nm.potentials[k + 1] == 1);
      CHECK(static_cast<long>(nm.steps.size()) <= nm.potentials.front());
      CHECK(nm.potentials.back() >= 0);
      moves += static_cast<int>(nm.steps.size());
    }
  }
  CHECK(moves > 100);
}

TEST_CASE("the full twist built by shackle, doubling and Artin steps") {
  // Trivial 3-braid, two shackles, a third shackle in the middle, one Artin move.
  const std::vector<std::string> stages{"3: 1 1", "3: 1 2 2 1", "3: 1 2 1 1 2 1", "3: 2 1 2 1 2 1"};
  LinkDiagram d = LinkDiagram::unlink(3);
  MoveScript script{3, {}};
  for (const std::string& stage : stages) {
    LinkDiagram target = parse_braid(stage);
    std::vector<Move> options;
    if (stage == stages.back()) {
      for (ArtinDirection dir : {ArtinDirection::A, ArtinDirection::B})
        for (ArtinSite t : artin_sites(d, dir)) options.push_back(Move::make_artin(t, dir));
    } else {
      for (ShackleSite site : shackle_sites(d)) options.push_back(Move::make_shackle(site));
      for (int a = -1; a < d.arc_count(); ++a)
        for (ShackleSite site : {ShackleSite{a, -1}, ShackleSite{-1, a}})
          if (shackle_site_valid(d, site)) options.push_back(Move::make_shackle(site));
    }
    bool found = false;
    for (const Move& m : options) {
      LinkDiagram next = apply_move(d, m);
      if (diagrams_isomorphic(next, target)) {
        d = next;
        script.moves.push_back(m);
        found = true;
        break;
      }
    }
    REQUIRE_MESSAGE(found, "no move reaches " << stage);
  }
  CHECK(verify(script, parse_braid("3: 1 2 1 2 1 2")));
  CHECK(decompose_positive(d).decomposable);
}

TEST_CASE("doubling matches the skein relation") {
  std::mt19937 rng(67);
  for (int i = 0; i < 40; ++i) {
    LinkDiagram d = random_braid_closure(rng, 4, 9, true);
    for (DoubleRegion r : find_double_regions(d)) {
      LinkDiagram v = smooth_crossing(smooth_crossing(d, std::max(r.lower, r.upper)), std::min(r.lower, r.upper));
      LinkDiagram d0 = smooth_crossing(d, r.upper);
      LaurentPoly2 expected = homfly_oracle(v).scaled(2, 0) + homfly_oracle(d0).scaled(1, 1);
      CHECK(homfly_oracle(d) == expected);
      // Sharpness of either smaller diagram forces sharpness of d.
      if (r_sharp(v) || r_sharp(d0)) CHECK(r_sharp(d));
      break;
    }
  }
}

TEST_CASE("decomposition matches the right bound on positive 3-braids") {
  int decomposable = 0, total = 0;
  for (const auto& w : positive_words_up_to_rotation(3, 6)) {
    LinkDiagram d = braid_closure(3, w);
    SharpnessCertificate c = decompose_positive(d);
    CHECK(c.decomposable == r_sharp(d, homfly_oracle(d)));
    if (c.decomposable) {
      CHECK(verify(*c.script, d));
      ++decomposable;
    }
    ++total;
  }
  CHECK(decomposable > 0);
  CHECK(decomposable < total);
}

TEST_CASE("decomposition on random positive closures and move scripts") {
  std::mt19937 rng(71);
  for (int i = 0; i < 60; ++i) {
    LinkDiagram d = random_braid_closure(rng, 5, 10, true);
    SharpnessCertificate c = decompose_positive(d);
    CHECK(c.decomposable == r_sharp(d, homfly_oracle(d)));
    if (!c.decomposable) CHECK(c.a_max < c.bound);
  }
  for (int i = 0; i < 60; ++i) {
    MoveScript s = random_move_script(rng, 8);
    LinkDiagram d = replay(s);
    CHECK(d.is_positive());
    CHECK(2 * count(s, Move::Type::Shackle) + count(s, Move::Type::Double) == d.crossing_count());
    SharpnessCertificate c = decompose_positive(d);
    REQUIRE(c.decomposable);
    CHECK(verify(*c.script, d));
    CHECK(r_sharp(d, homfly_oracle(d)));
  }
}

TEST_CASE("no nested circles: shackles and doublings only") {
  MoveScript h = decompose_no_nested(hopf());
  REQUIRE(h.moves.size() == 1);
  CHECK(h.moves[0].type == Move::Type::Shackle);

  MoveScript star = decompose_no_nested(star_fixture());
  REQUIRE(star.moves.size() == 2);
  CHECK(count(star, Move::Type::Shackle) == 2);
  CHECK(verify(star, star_fixture()));

  MoveScript clasp = decompose_no_nested(parse_braid("2: 1 1 1"));
  REQUIRE(clasp.moves.size() == 2);
  CHECK(clasp.moves[0].type == Move::Type::Shackle);
  CHECK(clasp.moves[1].type == Move::Type::Double);

  CHECK_THROWS_AS(decompose_no_nested(torus35()), PreconditionError);
  CHECK_THROWS_AS(decompose_no_nested(parse_braid("2: 1")), PreconditionError);
  CHECK_THROWS_AS(decompose_no_nested(mirror(hopf())), PreconditionError);

  std::mt19937 rng(73);
  for (int i = 0; i < 80; ++i) {
    LinkDiagram d = replay(random_no_nested_script(rng, 7));
    MoveScript s = decompose_no_nested(d);
    CHECK(verify(s, d));
    CHECK(count(s, Move::Type::Artin) == 0);
  }
}

TEST_CASE("the 27-crossing shackle braid decomposes") {
  LinkDiagram d = shackle_braid_fixture();
  SharpnessCertificate c = decompose_positive(d);
  REQUIRE(c.decomposable);
  CHECK(verify(*c.script, d));
}
