#include "mfw/canonical.hpp"

#include "mfw/error.hpp"

#include <algorithm>
#include <map>

namespace mfw {

namespace {

// Ports are fixed by the convention, so within a piece a labelling is
// determined by the crossing it starts from.
struct Walk {
  std::vector<int> code;
  std::vector<int> order;  // crossings in label order
};

Walk walk_from(const LinkDiagram& d, int root) {
  Walk w;
  std::map<int, int> label{{root, 0}};
  w.order.push_back(root);
  for (std::size_t i = 0; i < w.order.size(); ++i) {
    const Crossing& x = d.crossing(w.order[i]);
    w.code.push_back(x.sign);
    for (int p = 0; p < 4; ++p) {
      const ArcEnds& ae = d.arc(x.arcs[p]);
      Slot other = is_incoming(x.sign, p) ? ae.tail : ae.head;
      auto [it, inserted] = label.try_emplace(other.crossing, static_cast<int>(w.order.size()));
      if (inserted) w.order.push_back(other.crossing);
      w.code.push_back(4 * it->second + other.port);
    }
  }
  return w;
}

struct PieceCanon {
  std::vector<int> code;
  std::vector<int> order;
};

std::vector<PieceCanon> piece_canons(const LinkDiagram& d) {
  std::vector<PieceCanon> out(static_cast<std::size_t>(d.piece_count()));
  std::vector<bool> have(out.size(), false);
  for (int c = 0; c < d.crossing_count(); ++c) {
    int p = d.piece_of_crossing()[c];
    Walk w = walk_from(d, c);
    if (!have[p] || w.code < out[p].code) {
      out[p] = PieceCanon{std::move(w.code), std::move(w.order)};
      have[p] = true;
    }
  }
  std::sort(out.begin(), out.end(), [](const PieceCanon& a, const PieceCanon& b) { return a.code < b.code; });
  return out;
}

}  // namespace

std::string canonical_key(const LinkDiagram& d) {
  std::string key = "t" + std::to_string(d.trivial_components());
  for (const auto& pc : piece_canons(d)) {
    key += "|";
    for (int v : pc.code) {
      key += std::to_string(v);
      key += ',';
    }
  }
  return key;
}

std::optional<std::vector<int>> find_isomorphism(const LinkDiagram& d1, const LinkDiagram& d2) {
  if (d1.crossing_count() != d2.crossing_count() || d1.trivial_components() != d2.trivial_components() ||
      d1.piece_count() != d2.piece_count())
    return std::nullopt;
  auto c1 = piece_canons(d1), c2 = piece_canons(d2);
  std::vector<int> map(static_cast<std::size_t>(d1.crossing_count()), -1);
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c1[i].code != c2[i].code) return std::nullopt;
    for (std::size_t k = 0; k < c1[i].order.size(); ++k) map[c1[i].order[k]] = c2[i].order[k];
  }
  return map;
}

int map_arc(const LinkDiagram& from, const LinkDiagram& to, const std::vector<int>& crossing_map, int arc) {
  if (arc < 0) return arc;
  Slot t = from.arc(arc).tail;
  return to.arc_at(Slot{crossing_map.at(t.crossing), t.port});
}

bool diagrams_isomorphic(const LinkDiagram& d1, const LinkDiagram& d2) {
  return find_isomorphism(d1, d2).has_value();
}

}  // namespace mfw
