#pragma once

#include <array>
#include <string>
#include <vector>

namespace mfw {

// Ports are numbered counterclockwise from the incoming under-strand:
//   port 0 under in, port 2 under out,
//   positive crossing: port 3 over in, port 1 over out,
//   negative crossing: port 1 over in, port 3 over out.
struct Crossing {
  int sign = 1;
  std::array<int, 4> arcs{};  // arc label at each port
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Slot {
  int crossing = -1;
  int port = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct ArcEnds {
  Slot tail;  // outgoing port the arc leaves from
  Slot head;  // incoming port the arc enters
};

inline bool is_incoming(int sign, int port) { return port == 0 || port == (sign > 0 ? 3 : 1); }
inline bool is_over_port(int port) { return port % 2 == 1; }
inline int straight_port(int port) { return (port + 2) % 4; }
// Outgoing port paired with an incoming port by the oriented smoothing.
inline int smoothing_port(int sign, int in_port) {
  if (sign > 0) return in_port == 0 ? 1 : 2;
  return in_port == 0 ? 3 : 2;
}

class LinkDiagram {
 public:
  LinkDiagram() = default;
  // Arc labels must be exactly 0..E-1, each used once as an incoming and once
  // as an outgoing port. Throws ParseError when the data is not a spherical
  // link diagram.
  LinkDiagram(std::vector<Crossing> crossings, int trivial_components);

  // Accepts arbitrary non-negative labels and compacts them in increasing order.
  // relabel, if given, receives old label -> new label (-1 for unused labels).
  static LinkDiagram from_labels(std::vector<Crossing> crossings, int trivial_components,
                                 std::vector<int>* relabel = nullptr);
  static LinkDiagram unlink(int circles);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int trivial_components() const { return trivial_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int c) const;
  const ArcEnds& arc(int a) const;
  int arc_at(Slot s) const { return crossings_[s.crossing].arcs[s.port]; }

  int writhe() const;
  bool is_positive() const;

  // Arc followed along the link strand / along the Seifert smoothing.
  int next_arc(int a) const;
  int seifert_next_arc(int a) const;

  // Components made of arcs; trivial circles are not included.
  const std::vector<int>& component_of_arc() const { return component_of_arc_; }
  int arc_component_count() const { return arc_components_; }
  int component_count() const { return arc_components_ + trivial_; }

  // Connected pieces of the projection (crossings joined by arcs).
  const std::vector<int>& piece_of_crossing() const { return piece_of_crossing_; }
  int piece_count() const { return pieces_; }
  int piece_of_arc(int a) const { return piece_of_crossing_[arcs_[a].tail.crossing]; }

  // Faces. face_of_slot(c, j) is the face containing the corner between ports
  // j and j+1 of crossing c.
  int face_count() const { return faces_; }
  int face_of_slot(int c, int j) const { return face_of_slot_[4 * c + j]; }
  int left_face(int a) const;
  int right_face(int a) const;
  // The two faces merged by a crossing's channel (the corners not used by the
  // oriented smoothing).
  std::array<int, 2> channel_faces(int c) const;
  // A crossing with the same face at two opposite corners.
  bool is_isthmus(int c) const;

 private:
  void build();

  std::vector<Crossing> crossings_;
  std::vector<ArcEnds> arcs_;
  int trivial_ = 0;
  std::vector<int> component_of_arc_;
  int arc_components_ = 0;
  std::vector<int> piece_of_crossing_;
  int pieces_ = 0;
  std::vector<int> face_of_slot_;
  int faces_ = 0;
};

// Closure of a braid word "n: i1 i2 ...". Strand positions run from 1
// (innermost) to n; Seifert circles are concentric and clockwise.
LinkDiagram parse_braid(const std::string& word);
std::vector<int> parse_braid_letters(const std::string& word, int* strands);
LinkDiagram braid_closure(int strands, const std::vector<int>& letters);

LinkDiagram mirror(const LinkDiagram& d);
// arc_map receives old arc -> new arc, or -1 for arcs absorbed into a new
// trivial circle. Crossings above c shift down by one.
LinkDiagram smooth_crossing(const LinkDiagram& d, int c, std::vector<int>* arc_map = nullptr);
// Arc ids are preserved.
LinkDiagram flip_crossing(const LinkDiagram& d, int c);
LinkDiagram remove_trivial_components(const LinkDiagram& d);
LinkDiagram with_trivial_components(const LinkDiagram& d, int count);

// Deletes the arc components flagged in drop. Crossings between two kept
// strands survive; kept components with no surviving crossing become trivial
// circles. to_original maps each new arc to the original arc it starts with.
struct Excision {
  LinkDiagram diagram;
  std::vector<int> to_original;
  std::vector<int> crossing_to_original;
};
Excision remove_components(const LinkDiagram& d, const std::vector<bool>& drop);

}  // namespace mfw
