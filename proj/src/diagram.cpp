#include "mfw/diagram.hpp"

#include "mfw/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mfw {

namespace {

std::string crossing_tag(int c) { return "crossing " + std::to_string(c); }

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int trivial_components)
    : crossings_(std::move(crossings)), trivial_(trivial_components) {
  if (trivial_ < 0) throw ParseError("trivial_components must be non-negative");
  build();
}

LinkDiagram LinkDiagram::from_labels(std::vector<Crossing> crossings, int trivial_components,
                                     std::vector<int>* relabel) {
  int max_label = -1;
  for (const auto& x : crossings)
    for (int l : x.arcs) {
      if (l < 0) throw ParseError("negative arc label");
      max_label = std::max(max_label, l);
    }
  std::vector<int> map(static_cast<std::size_t>(max_label + 1), -1);
  for (const auto& x : crossings)
    for (int l : x.arcs) map[l] = 0;
  int next = 0;
  for (int& m : map)
    if (m == 0) m = next++;
  for (auto& x : crossings)
    for (int& l : x.arcs) l = map[l];
  if (relabel) *relabel = std::move(map);
  return LinkDiagram(std::move(crossings), trivial_components);
}

LinkDiagram LinkDiagram::unlink(int circles) { return LinkDiagram({}, circles); }

const Crossing& LinkDiagram::crossing(int c) const {
  if (c < 0 || c >= crossing_count()) throw PreconditionError("unknown " + crossing_tag(c));
  return crossings_[c];
}

const ArcEnds& LinkDiagram::arc(int a) const {
  if (a < 0 || a >= arc_count()) throw PreconditionError("unknown arc " + std::to_string(a));
  return arcs_[a];
}

void LinkDiagram::build() {
  const int n = crossing_count();
  const int e = 2 * n;
  arcs_.assign(static_cast<std::size_t>(e), ArcEnds{});
  for (int c = 0; c < n; ++c) {
    const Crossing& x = crossings_[c];
    if (x.sign != 1 && x.sign != -1) throw ParseError(crossing_tag(c) + ": sign must be +1 or -1");
    for (int p = 0; p < 4; ++p) {
      int l = x.arcs[p];
      if (l < 0 || l >= e) throw ParseError(crossing_tag(c) + ": dangling arc label " + std::to_string(l));
      Slot& end = is_incoming(x.sign, p) ? arcs_[l].head : arcs_[l].tail;
      if (end.crossing != -1)
        throw ParseError("inconsistent orientations: arc " + std::to_string(l) + " has two " +
                         (is_incoming(x.sign, p) ? "heads" : "tails"));
      end = Slot{c, p};
    }
  }
  for (int l = 0; l < e; ++l)
    if (arcs_[l].head.crossing == -1 || arcs_[l].tail.crossing == -1)
      throw ParseError("dangling arc label " + std::to_string(l));

  component_of_arc_.assign(static_cast<std::size_t>(e), -1);
  arc_components_ = 0;
  for (int a = 0; a < e; ++a) {
    if (component_of_arc_[a] != -1) continue;
    for (int b = a; component_of_arc_[b] == -1; b = next_arc(b)) component_of_arc_[b] = arc_components_;
    ++arc_components_;
  }

  piece_of_crossing_.assign(static_cast<std::size_t>(n), -1);
  pieces_ = 0;
  for (int c = 0; c < n; ++c) {
    if (piece_of_crossing_[c] != -1) continue;
    std::vector<int> stack{c};
    piece_of_crossing_[c] = pieces_;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int l : crossings_[v].arcs)
        for (Slot s : {arcs_[l].head, arcs_[l].tail})
          if (piece_of_crossing_[s.crossing] == -1) {
            piece_of_crossing_[s.crossing] = pieces_;
            stack.push_back(s.crossing);
          }
    }
    ++pieces_;
  }

  // Faces are orbits of dart -> rotate_cw(opposite end of its arc).
  face_of_slot_.assign(static_cast<std::size_t>(4 * n), -1);
  faces_ = 0;
  std::vector<int> faces_in_piece(static_cast<std::size_t>(pieces_), 0);
  for (int d = 0; d < 4 * n; ++d) {
    if (face_of_slot_[d] != -1) continue;
    int cur = d;
    while (face_of_slot_[cur] == -1) {
      face_of_slot_[cur] = faces_;
      int c = cur / 4, p = cur % 4;
      const ArcEnds& ae = arcs_[crossings_[c].arcs[p]];
      Slot other = is_incoming(crossings_[c].sign, p) ? ae.tail : ae.head;
      cur = 4 * other.crossing + (other.port + 3) % 4;
    }
    ++faces_in_piece[piece_of_crossing_[d / 4]];
    ++faces_;
  }
  std::vector<int> v_in_piece(static_cast<std::size_t>(pieces_), 0);
  for (int c = 0; c < n; ++c) ++v_in_piece[piece_of_crossing_[c]];
  for (int p = 0; p < pieces_; ++p) {
    // E = 2V in a 4-valent graph.
    int chi = v_in_piece[p] - 2 * v_in_piece[p] + faces_in_piece[p];
    if (chi != 2) throw ParseError("non-spherical embedding (V - E + F = " + std::to_string(chi) + ")");
  }
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

bool LinkDiagram::is_positive() const {
  return std::all_of(crossings_.begin(), crossings_.end(), [](const Crossing& x) { return x.sign > 0; });
}

int LinkDiagram::next_arc(int a) const {
  Slot h = arcs_[a].head;
  return crossings_[h.crossing].arcs[straight_port(h.port)];
}

int LinkDiagram::seifert_next_arc(int a) const {
  Slot h = arcs_[a].head;
  const Crossing& x = crossings_[h.crossing];
  return x.arcs[smoothing_port(x.sign, h.port)];
}

int LinkDiagram::left_face(int a) const {
  Slot t = arc(a).tail;
  return face_of_slot(t.crossing, t.port);
}

int LinkDiagram::right_face(int a) const {
  Slot h = arc(a).head;
  return face_of_slot(h.crossing, h.port);
}

std::array<int, 2> LinkDiagram::channel_faces(int c) const {
  if (crossing(c).sign > 0) return {face_of_slot(c, 1), face_of_slot(c, 3)};
  return {face_of_slot(c, 0), face_of_slot(c, 2)};
}

bool LinkDiagram::is_isthmus(int c) const {
  crossing(c);
  return face_of_slot(c, 0) == face_of_slot(c, 2) || face_of_slot(c, 1) == face_of_slot(c, 3);
}

std::vector<int> parse_braid_letters(const std::string& word, int* strands) {
  auto colon = word.find(':');
  if (colon == std::string::npos) throw ParseError("braid word must look like \"n: i1 i2 ...\"");
  std::istringstream head(word.substr(0, colon));
  int n = 0;
  std::string extra;
  if (!(head >> n) || (head >> extra)) throw ParseError("malformed strand count in braid word");
  if (n < 1) throw ParseError("strand count must be at least 1");
  std::istringstream body(word.substr(colon + 1));
  std::vector<int> letters;
  std::string tok;
  while (body >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed braid letter '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("malformed braid letter '" + tok + "'");
    if (v == 0 || std::abs(v) > n - 1)
      throw ParseError("generator index " + std::to_string(v) + " out of range for " + std::to_string(n) +
                       " strands");
    letters.push_back(v);
  }
  if (strands) *strands = n;
  return letters;
}

LinkDiagram parse_braid(const std::string& word) {
  int n = 0;
  auto letters = parse_braid_letters(word, &n);
  return braid_closure(n, letters);
}

LinkDiagram braid_closure(int strands, const std::vector<int>& letters) {
  if (strands < 1) throw PreconditionError("strand count must be at least 1");
  int next_label = 0;
  std::vector<int> bottom(static_cast<std::size_t>(strands + 1)), cur(bottom.size());
  for (int pos = 1; pos <= strands; ++pos) bottom[pos] = cur[pos] = next_label++;
  std::vector<Crossing> crossings;
  for (int letter : letters) {
    int i = std::abs(letter);
    if (letter == 0 || i >= strands) throw PreconditionError("generator index out of range");
    Crossing x;
    int out_i = next_label++, out_i1 = next_label++;
    if (letter > 0) {
      x.sign = 1;
      x.arcs = {cur[i], out_i, out_i1, cur[i + 1]};
    } else {
      x.sign = -1;
      x.arcs = {cur[i + 1], cur[i], out_i, out_i1};
    }
    cur[i] = out_i;
    cur[i + 1] = out_i1;
    crossings.push_back(x);
  }
  // Close up: the last strand at each position is the first one.
  std::vector<int> rename(static_cast<std::size_t>(next_label));
  std::iota(rename.begin(), rename.end(), 0);
  int trivial = 0;
  for (int pos = 1; pos <= strands; ++pos) {
    if (cur[pos] == bottom[pos])
      ++trivial;
    else
      rename[cur[pos]] = bottom[pos];
  }
  for (auto& x : crossings)
    for (int& l : x.arcs) l = rename[l];
  return LinkDiagram::from_labels(std::move(crossings), trivial);
}

namespace {

Crossing flipped(const Crossing& x) {
  Crossing y;
  y.sign = -x.sign;
  for (int k = 0; k < 4; ++k) y.arcs[k] = x.arcs[(k + (x.sign > 0 ? 3 : 1)) % 4];
  return y;
}

}  // namespace

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> cs;
  cs.reserve(d.crossings().size());
  for (const auto& x : d.crossings()) cs.push_back(flipped(x));
  return LinkDiagram(std::move(cs), d.trivial_components());
}

LinkDiagram flip_crossing(const LinkDiagram& d, int c) {
  d.crossing(c);
  std::vector<Crossing> cs = d.crossings();
  cs[c] = flipped(cs[c]);
  return LinkDiagram(std::move(cs), d.trivial_components());
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int c, std::vector<int>* arc_map) {
  const Crossing& x = d.crossing(c);
  std::vector<Crossing> cs = d.crossings();
  std::vector<int> label_map(static_cast<std::size_t>(d.arc_count()));
  std::iota(label_map.begin(), label_map.end(), 0);
  int trivial = d.trivial_components();
  const int in_ports[2] = {0, x.sign > 0 ? 3 : 1};
  bool done[4] = {false, false, false, false};

  for (int p : in_ports) {
    int a_in = x.arcs[p];
    if (d.arc(a_in).tail.crossing == c) continue;  // starts at c; reached from another port
    int cur = p;
    while (true) {
      done[cur] = true;
      int a_out = x.arcs[smoothing_port(x.sign, cur)];
      Slot h = d.arc(a_out).head;
      label_map[a_out] = a_in;
      if (h.crossing == c) {
        cur = h.port;
        continue;
      }
      cs[h.crossing].arcs[h.port] = a_in;
      break;
    }
  }
  for (int p : in_ports) {
    if (done[p]) continue;
    ++trivial;
    int cur = p;
    while (!done[cur]) {
      done[cur] = true;
      label_map[x.arcs[cur]] = -1;
      cur = d.arc(x.arcs[smoothing_port(x.sign, cur)]).head.port;
    }
  }
  cs.erase(cs.begin() + c);
  std::vector<int> relabel;
  LinkDiagram out = LinkDiagram::from_labels(std::move(cs), trivial, &relabel);
  if (arc_map) {
    arc_map->assign(static_cast<std::size_t>(d.arc_count()), -1);
    for (int a = 0; a < d.arc_count(); ++a) {
      int l = label_map[a];
      (*arc_map)[a] = (l < 0 || l >= static_cast<int>(relabel.size())) ? -1 : relabel[l];
    }
  }
  return out;
}

LinkDiagram remove_trivial_components(const LinkDiagram& d) { return with_trivial_components(d, 0); }

LinkDiagram with_trivial_components(const LinkDiagram& d, int count) {
  return LinkDiagram(d.crossings(), count);
}

Excision remove_components(const LinkDiagram& d, const std::vector<bool>& drop) {
  if (static_cast<int>(drop.size()) != d.arc_component_count())
    throw PreconditionError("component mask has the wrong size");
  const auto& comp = d.component_of_arc();
  auto kept_arc = [&](int a) { return !drop[comp[a]]; };
  std::vector<int> new_index(static_cast<std::size_t>(d.crossing_count()), -1);
  std::vector<int> crossing_to_original;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossing(c);
    if (kept_arc(x.arcs[0]) && kept_arc(x.arcs[x.sign > 0 ? 3 : 1])) {
      new_index[c] = static_cast<int>(crossing_to_original.size());
      crossing_to_original.push_back(c);
    }
  }
  std::vector<Crossing> cs;
  for (int c : crossing_to_original) cs.push_back(d.crossing(c));
  std::vector<bool> comp_has_crossing(drop.size(), false);
  for (int c : crossing_to_original) {
    const auto& x = d.crossing(c);
    for (int p = 0; p < 4; ++p) {
      if (is_incoming(x.sign, p)) continue;
      int a = x.arcs[p];
      comp_has_crossing[comp[a]] = true;
      Slot h = d.arc(a).head;
      while (new_index[h.crossing] == -1) h = d.arc(d.arc_at(Slot{h.crossing, straight_port(h.port)})).head;
      cs[new_index[h.crossing]].arcs[h.port] = a;
    }
  }
  int trivial = d.trivial_components();
  std::vector<bool> seen(drop.size(), false);
  for (int a = 0; a < d.arc_count(); ++a) {
    int k = comp[a];
    if (drop[k] || comp_has_crossing[k] || seen[k]) continue;
    seen[k] = true;
    ++trivial;
  }
  std::vector<int> relabel;
  Excision out{LinkDiagram::from_labels(std::move(cs), trivial, &relabel), {}, std::move(crossing_to_original)};
  out.to_original.assign(static_cast<std::size_t>(out.diagram.arc_count()), -1);
  for (int a = 0; a < static_cast<int>(relabel.size()); ++a)
    if (relabel[a] >= 0) out.to_original[relabel[a]] = a;
  return out;
}

}  // namespace mfw
