#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfw/canonical.hpp"
#include "mfw/error.hpp"
#include "mfw/resolution.hpp"
#include "mfw/seifert.hpp"

#include <random>

using namespace mfw;

namespace {

LaurentPoly2 mono(int a, int z, int c = 1) { return LaurentPoly2::monomial(a, z, c); }

LaurentPoly2 torus35() {
  LaurentPoly2 p;
  for (auto [z, c] : std::vector<std::pair<int, int>>{{8, 1}, {6, 8}, {4, 21}, {2, 21}, {0, 7}}) p += mono(8, z, c);
  for (auto [z, c] : std::vector<std::pair<int, int>>{{6, 1}, {4, 7}, {2, 14}, {0, 8}}) p -= mono(10, z, c);
  p += mono(12, 2) + mono(12, 0, 2);
  return p;
}

std::vector<int> random_word(std::mt19937& rng, int strands, int length, bool positive) {
  std::vector<int> w;
  for (int i = 0; i < length; ++i) {
    int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
    w.push_back(positive || rng() % 2 ? g : -g);
  }
  return w;
}

}  // namespace

TEST_CASE("oracle on small diagrams") {
  CHECK(homfly_oracle(LinkDiagram::unlink(1)) == LaurentPoly2::constant(1));
  CHECK(homfly_oracle(parse_braid("2: 1")) == LaurentPoly2::constant(1));
  CHECK(homfly_oracle(parse_braid("2: 1 1")) == mono(1, 1) + mono(1, -1) - mono(3, -1));
  LaurentPoly2 trefoil = mono(2, 0, 2) + mono(2, 2) - mono(4, 0);
  CHECK(homfly_oracle(parse_braid("2: 1 1 1")) == trefoil);
  CHECK(homfly_oracle(mirror(parse_braid("2: 1 1 1"))) == mono(-2, 0, 2) + mono(-2, 2) - mono(-4, 0));
  CHECK(homfly_oracle(mirror(parse_braid("2: 1 1 1"))) == trefoil.substitute_mirror());
  CHECK(homfly_oracle(parse_braid("3: 1 2 1 2 1 2 1 2 1 2")) == torus35());
  CHECK_THROWS_AS(homfly_oracle(LinkDiagram()), PreconditionError);
}

TEST_CASE("skein relation on random triples") {
  std::mt19937 rng(17);
  PolyCache cache;
  for (int i = 0; i < 50; ++i) {
    int n = 2 + static_cast<int>(rng() % 3);
    LinkDiagram d = braid_closure(n, random_word(rng, n, 1 + static_cast<int>(rng() % 7), false));
    int c = static_cast<int>(rng() % static_cast<unsigned>(d.crossing_count()));
    LinkDiagram plus = d.crossing(c).sign > 0 ? d : flip_crossing(d, c);
    LinkDiagram minus = flip_crossing(plus, c);
    LinkDiagram zero = smooth_crossing(plus, c);
    LaurentPoly2 lhs = homfly_oracle(plus, &cache).scaled(-1, 0) - homfly_oracle(minus, &cache).scaled(1, 0);
    CHECK(lhs == homfly_oracle(zero, &cache).scaled(0, 1));
  }
}

TEST_CASE("Markov stabilisation and braid relations") {
  std::mt19937 rng(19);
  for (int i = 0; i < 30; ++i) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto w = random_word(rng, n, static_cast<int>(rng() % 6), false);
    LinkDiagram d = braid_closure(n, w);
    if (d.component_count() == 0) continue;
    auto w_plus = w;
    w_plus.push_back(n);
    auto w_minus = w;
    w_minus.push_back(-n);
    CHECK(homfly_oracle(braid_closure(n + 1, w_plus)) == homfly_oracle(d));
    CHECK(homfly_oracle(braid_closure(n + 1, w_minus)) == homfly_oracle(d));
  }
  CHECK(homfly_oracle(parse_braid("3: 1 2 1")) == homfly_oracle(parse_braid("3: 2 1 2")));
  CHECK(homfly_oracle(parse_braid("3: 1 -2 1 2")) == homfly_oracle(parse_braid("3: -2 1 2 1")));
}

TEST_CASE("coherent tree on fixtures") {
  CHECK(homfly_coherent(LinkDiagram::unlink(1)) == LaurentPoly2::constant(1));
  CHECK(homfly_coherent(LinkDiagram::unlink(3)) == unlink_value(3));
  CHECK(homfly_coherent(parse_braid("2: 1 1")) == mono(1, 1) + mono(1, -1) - mono(3, -1));
  CHECK(homfly_coherent(parse_braid("3: 1 2 1 2 1 2 1 2 1 2")) == torus35());

  ResolutionTree h = build_coherent_tree(parse_braid("2: 1 1"));
  auto leaves = h.leaves();
  REQUIRE(leaves.size() == 2);
  int unlink2 = 0, unknot = 0;
  for (const auto& l : leaves) {
    if (l.components == 2 && l.smoothed == 0) ++unlink2;
    if (l.components == 1 && l.smoothed == 1) ++unknot;
  }
  CHECK(unlink2 == 1);
  CHECK(unknot == 1);
  CHECK(homfly_from_tree(h) == homfly_oracle(parse_braid("2: 1 1")));
  CHECK(build_coherent_tree(LinkDiagram::unlink(1)).nodes.size() == 1);
}

TEST_CASE("maximal coherent paths") {
  LinkDiagram h = parse_braid("2: 1 1");
  SeifertStructure s = seifert_structure(h);
  Point x = find_appropriate_point(h, s);
  Rule r = rule_for(s, x.arc);
  CoherentPath p = maximal_coherent_path(h, x.arc, r);
  // The two components of H alternate over and under, so any rule fails.
  CHECK_FALSE(p.closed());

  LinkDiagram kink = parse_braid("2: 1");
  int closed = 0;
  for (int a = 0; a < kink.arc_count(); ++a)
    for (Rule rule : {Rule::Descending, Rule::Ascending})
      if (maximal_coherent_path(kink, a, rule).closed()) ++closed;
  CHECK(closed == 2);
}

TEST_CASE("coherent tree equals oracle on random braids") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    int n = 2 + static_cast<int>(rng() % 3);
    LinkDiagram d = braid_closure(n, random_word(rng, n, 1 + static_cast<int>(rng() % 8), i % 3 == 0));
    LaurentPoly2 oracle = homfly_oracle(d);
    CHECK(homfly_coherent(d) == oracle);
    CHECK(homfly_coherent(d, BasePolicy::LastAppropriate) == oracle);
    CHECK(homfly_oracle(mirror(d)) == oracle.substitute_mirror());
  }
}

TEST_CASE("leaf expansion displays and the highest a-degree criterion") {
  std::mt19937 rng(29);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + static_cast<int>(rng() % 3);
    LinkDiagram d = braid_closure(n, random_word(rng, n, 1 + static_cast<int>(rng() % 7), i % 2 == 0));
    ResolutionTree tree = build_coherent_tree(d);
    for (const auto& leaf : tree.leaves()) {
      LaurentPoly2 term = leaf_contribution(tree.root_writhe, leaf);
      LaurentPoly2 disp = leaf_contribution_displayed(tree.root_writhe, leaf);
      // The displayed form differs by (-1)^(#U-1).
      CHECK(((leaf.components % 2 == 1) ? disp == term : disp == -term));
      CHECK(leaf_highest_a_test(tree.root_writhe, tree.root_circles, leaf) == leaf.all_simple);
    }
    CHECK(homfly_from_tree(tree) == homfly_oracle(d));
  }
}

TEST_CASE("Torus35 top coefficient comes from simple leaves") {
  LinkDiagram t = parse_braid("3: 1 2 1 2 1 2 1 2 1 2");
  ResolutionTree tree = build_coherent_tree(t);
  LaurentPoly2 top;
  for (const auto& leaf : tree.leaves())
    if (leaf_highest_a_test(tree.root_writhe, tree.root_circles, leaf)) top += leaf_contribution(tree.root_writhe, leaf);
  // Only the a^12 part survives among the passing leaves' top terms.
  LaurentPoly2 a12;
  for (const auto& [k, c] : top.terms())
    if (k.first == 12) a12.add_term(k.first, k.second, c);
  CHECK(a12 == mono(12, 2) + mono(12, 0, 2));
}

TEST_CASE("memo cache respects its capacity") {
  PolyCache small(2);
  small.put("a", LaurentPoly2::constant(1));
  small.put("b", LaurentPoly2::constant(2));
  small.put("c", LaurentPoly2::constant(3));
  CHECK(small.size() == 2);
  CHECK_FALSE(small.get("c").has_value());
  CHECK(*small.get("b") == LaurentPoly2::constant(2));
}
