#pragma once

#include "mfw/decompose.hpp"
#include "mfw/diagram.hpp"

#include <random>
#include <string>
#include <vector>

namespace mfw {

struct NamedDiagram {
  std::string name;
  LinkDiagram diagram;
};

LinkDiagram torus35();
LinkDiagram unknot_b();
LinkDiagram hopf();
// Two clasps hanging off one circle on the same side.
LinkDiagram star_fixture();
// A castle whose base clasp traps a third circle.
LinkDiagram trap_fixture();
// 27-crossing positive braid built from a trivial one by shackles and doublings.
LinkDiagram shackle_braid_fixture();

std::vector<NamedDiagram> fixtures();

// Words over 1..strands-1 of length 0..max_length, one per rotation class.
std::vector<std::vector<int>> positive_words_up_to_rotation(int strands, int max_length);

std::vector<int> random_braid_word(std::mt19937& rng, int strands, int length, bool positive);
// Closure of a random word on 2..max_strands strands with 1..max_crossings letters.
LinkDiagram random_braid_closure(std::mt19937& rng, int max_strands, int max_crossings, bool positive);

// Shackles (including ones eating trivial circles), doublings and Artin moves
// picked uniformly among valid sites.
MoveScript random_move_script(std::mt19937& rng, int max_moves);

// Shackles onto loose circles and doublings only, so no circle gets nested and
// no crossing is left alone.
MoveScript random_no_nested_script(std::mt19937& rng, int max_moves);

struct Corpus {
  std::vector<NamedDiagram> diagrams;
};
// Fixtures, all positive 3-strand words up to length 6, and random braids and
// move-script diagrams. The same seed gives the same corpus.
Corpus standard_corpus(unsigned seed, int random_braids = 200, int random_scripts = 100);

}  // namespace mfw
