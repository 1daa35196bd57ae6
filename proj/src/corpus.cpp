#include "mfw/corpus.hpp"

#include "mfw/error.hpp"
#include "mfw/seifert.hpp"

#include <algorithm>
#include <string>

namespace mfw {

LinkDiagram torus35() { return parse_braid("3: 1 2 1 2 1 2 1 2 1 2"); }
LinkDiagram unknot_b() { return parse_braid("3: 1 2"); }
LinkDiagram hopf() { return parse_braid("2: 1 1"); }

LinkDiagram star_fixture() {
  LinkDiagram h = apply_shackle(LinkDiagram::unlink(3), ShackleSite{-1, -1});
  for (int a = 0; a < h.arc_count(); ++a)
    for (ShackleSite site : {ShackleSite{a, -1}, ShackleSite{-1, a}}) {
      if (!shackle_site_valid(h, site)) continue;
      LinkDiagram d = apply_shackle(h, site);
      if (!diagram_stats(d).has_nested) return d;
    }
  throw LemmaViolation("no star-shaped shackle found");
}

LinkDiagram trap_fixture() {
  return LinkDiagram({{1, {5, 2, 3, 4}}, {1, {2, 1, 0, 3}}, {1, {1, 6, 7, 0}},
                      {1, {9, 5, 4, 7}}, {1, {6, 10, 11, 8}}, {1, {10, 9, 8, 11}}},
                     1);
}

LinkDiagram shackle_braid_fixture() {
  return parse_braid("6: 4 3 5 4 1 4 1 3 5 1 4 4 3 5 2 4 1 3 2 2 1 3 2 2 1 3 2");
}

std::vector<NamedDiagram> fixtures() {
  std::vector<NamedDiagram> out{
      {"torus35", torus35()},
      {"torus35-mirror", mirror(torus35())},
      {"unknot-b", unknot_b()},
      {"hopf", hopf()},
      {"trefoil", parse_braid("2: 1 1 1")},
      {"figure-eight", parse_braid("3: 1 -2 1 -2")},
      {"full-twist", parse_braid("3: 1 2 1 2 1 2")},
      {"reducible-3-braid", parse_braid("3: 2 1 2 1 2")},
      {"torus24", parse_braid("2: 1 1 1 1")},
      {"positive-kink", parse_braid("2: 1")},
      {"negative-kink", parse_braid("2: -1")},
      {"split-clasp", parse_braid("2: 1 -1")},
      {"star", star_fixture()},
      {"trap", trap_fixture()},
      {"shackle-braid", shackle_braid_fixture()},
  };
  for (int n = 1; n <= 5; ++n) out.push_back({"unlink-" + std::to_string(n), LinkDiagram::unlink(n)});
  return out;
}

std::vector<std::vector<int>> positive_words_up_to_rotation(int strands, int max_length) {
  if (strands < 2) throw PreconditionError("need at least two strands");
  std::vector<std::vector<int>> out;
  for (int len = 0; len <= max_length; ++len) {
    std::vector<int> w(static_cast<std::size_t>(len), 1);
    for (;;) {
      bool smallest = true;
      for (int r = 1; r < len && smallest; ++r) {
        std::vector<int> rot(w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        smallest = !(rot < w);
      }
      if (smallest) out.push_back(w);
      int i = len - 1;
      while (i >= 0 && w[i] == strands - 1) w[i--] = 1;
      if (i < 0) break;
      ++w[i];
    }
  }
  return out;
}

std::vector<int> random_braid_word(std::mt19937& rng, int strands, int length, bool positive) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution flip(0.5);
  std::vector<int> w;
  for (int i = 0; i < length; ++i) {
    int g = gen(rng);
    w.push_back(positive || flip(rng) ? g : -g);
  }
  return w;
}

LinkDiagram random_braid_closure(std::mt19937& rng, int max_strands, int max_crossings, bool positive) {
  int n = std::uniform_int_distribution<int>(2, max_strands)(rng);
  int len = std::uniform_int_distribution<int>(1, max_crossings)(rng);
  return braid_closure(n, random_braid_word(rng, n, len, positive));
}

namespace {

std::vector<Move> shackle_options(const LinkDiagram& d) {
  std::vector<Move> out;
  for (ShackleSite site : shackle_sites(d)) out.push_back(Move::make_shackle(site));
  if (d.trivial_components() >= 1)
    for (int a = 0; a < d.arc_count(); ++a) {
      out.push_back(Move::make_shackle({a, -1}));
      out.push_back(Move::make_shackle({-1, a}));
    }
  if (d.trivial_components() >= 2) out.push_back(Move::make_shackle({-1, -1}));
  return out;
}

template <class Options, class Accept>
MoveScript grow(std::mt19937& rng, int max_moves, Options&& options, Accept&& accept) {
  MoveScript s{std::uniform_int_distribution<int>(2, 5)(rng), {}};
  LinkDiagram d = replay(s);
  const int target = std::uniform_int_distribution<int>(1, max_moves)(rng);
  for (int tries = 0; static_cast<int>(s.moves.size()) < target && tries < 20 * max_moves; ++tries) {
    std::vector<Move> opts = options(d);
    if (opts.empty()) continue;
    Move m = opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
    if (m.type == Move::Type::Shackle && !shackle_site_valid(d, m.shackle)) continue;
    LinkDiagram next = apply_move(d, m);
    if (!accept(next)) continue;
    d = std::move(next);
    s.moves.push_back(m);
  }
  return s;
}

}  // namespace

MoveScript random_move_script(std::mt19937& rng, int max_moves) {
  std::uniform_int_distribution<int> kind(0, 2);
  return grow(
      rng, max_moves,
      [&](const LinkDiagram& d) {
        std::vector<Move> out;
        switch (d.crossing_count() == 0 ? 0 : kind(rng)) {
          case 0:
            out = shackle_options(d);
            break;
          case 1:
            for (int c = 0; c < d.crossing_count(); ++c) out.push_back(Move::make_double(c));
            break;
          default:
            for (ArtinDirection dir : {ArtinDirection::A, ArtinDirection::B})
              for (ArtinSite t : artin_sites(d, dir)) out.push_back(Move::make_artin(t, dir));
        }
        return out;
      },
      [](const LinkDiagram&) { return true; });
}

MoveScript random_no_nested_script(std::mt19937& rng, int max_moves) {
  std::bernoulli_distribution shackle(0.6);
  return grow(
      rng, max_moves,
      [&](const LinkDiagram& d) {
        std::vector<Move> out;
        if (d.crossing_count() == 0 || shackle(rng)) return shackle_options(d);
        for (int c = 0; c < d.crossing_count(); ++c) out.push_back(Move::make_double(c));
        return out;
      },
      [](const LinkDiagram& d) { return !diagram_stats(d).has_nested; });
}

Corpus standard_corpus(unsigned seed, int random_braids, int random_scripts) {
  Corpus c;
  c.diagrams = fixtures();
  for (const auto& w : positive_words_up_to_rotation(3, 6)) {
    std::string name = "word";
    for (int g : w) name += "-" + std::to_string(g);
    c.diagrams.push_back({name, braid_closure(3, w)});
  }
  std::mt19937 rng(seed);
  for (int i = 0; i < random_braids; ++i)
    c.diagrams.push_back({"random-positive-" + std::to_string(i), random_braid_closure(rng, 5, 10, true)});
  for (int i = 0; i < random_braids / 2; ++i)
    c.diagrams.push_back({"random-mixed-" + std::to_string(i), random_braid_closure(rng, 4, 10, false)});
  for (int i = 0; i < random_scripts; ++i)
    c.diagrams.push_back({"random-script-" + std::to_string(i), replay(random_move_script(rng, 8))});
  return c;
}

}  // namespace mfw
