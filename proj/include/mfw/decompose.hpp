#pragma once

#include "mfw/castle.hpp"
#include "mfw/diagram.hpp"
#include "mfw/laurent.hpp"
#include "mfw/moves.hpp"

#include <optional>
#include <vector>

namespace mfw {

struct Move {
  enum class Type { Shackle, Double, Artin };
  Type type = Type::Shackle;
  ShackleSite shackle;
  int crossing = -1;
  ArtinSite artin;
  ArtinDirection direction = ArtinDirection::A;

  static Move make_shackle(ShackleSite site);
  static Move make_double(int crossing);
  static Move make_artin(ArtinSite site, ArtinDirection dir);
  friend bool operator==(const Move&, const Move&) = default;
};

// Sites refer to the diagram as it is when the move is applied.
struct MoveScript {
  int start_circles = 0;
  std::vector<Move> moves;
  friend bool operator==(const MoveScript&, const MoveScript&) = default;
};

LinkDiagram apply_move(const LinkDiagram& d, const Move& m);
// Throws PreconditionError when a site is invalid at its step.
LinkDiagram replay(const MoveScript& script);
bool verify(const MoveScript& script, const LinkDiagram& d);

struct ArtinStep {
  ArtinSite site;
  ArtinDirection direction = ArtinDirection::A;
};

struct Normalization {
  LinkDiagram diagram;
  Point base;
  // chain[i] is the diagram steps[i] applies to.
  std::vector<LinkDiagram> chain;
  std::vector<ArtinStep> steps;
  // potentials[i] is measured on chain[i]; the last one on the result.
  std::vector<long> potentials;
};

// Sum of min(alpha) * Cr over consecutive pairs of coherent sequences from the
// circle of x, alpha being the distance to that circle in the Seifert graph.
long artin_potential(const LinkDiagram& d, Point x);
// Moves of direction a if the circle of x is loose on the right, b otherwise.
// x is carried along. LemmaViolation if the potential fails to drop.
Normalization artin_normalize(const LinkDiagram& d, Point x);

struct SharpnessCertificate {
  bool decomposable = false;
  LaurentPoly2 polynomial;
  int a_max = 0;
  int bound = 0;  // w + s - 1
  std::optional<MoveScript> script;
  int artin_moves = 0;  // Artin moves made while searching, for the record
};

// PreconditionError unless d is positive. LemmaViolation if the construction
// gets stuck on a diagram whose polynomial says it should not.
SharpnessCertificate decompose_positive(const LinkDiagram& d);

// Shackles and doublings only. Needs a positive diagram with no nested
// Seifert circles and no lone crossings.
MoveScript decompose_no_nested(const LinkDiagram& d);

}  // namespace mfw
