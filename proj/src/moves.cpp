#include "mfw/moves.hpp"

#include "mfw/error.hpp"
#include "mfw/seifert.hpp"


namespace mfw {

namespace {

Slot head_of(const LinkDiagram& d, int c, int port) { return d.arc(d.crossing(c).arcs[port]).head; }

bool feeds(const LinkDiagram& d, int from, int port, int to, int to_port) {
  Slot h = head_of(d, from, port);
  return h.crossing == to && h.port == to_port;
}

}  // namespace

bool shackle_site_valid(const LinkDiagram& d, ShackleSite site) {
  int trivial_needed = (site.west < 0 ? 1 : 0) + (site.east < 0 ? 1 : 0);
  if (trivial_needed > d.trivial_components()) return false;
  if (site.west < -1 || site.east < -1 || site.west >= d.arc_count() || site.east >= d.arc_count()) return false;
  if (site.west < 0 || site.east < 0) return true;
  SeifertStructure s = seifert_structure(d);
  if (s.circle_of_arc[site.west] == s.circle_of_arc[site.east]) return false;
  if (d.piece_of_arc(site.west) != d.piece_of_arc(site.east)) return true;
  return d.right_face(site.west) == d.left_face(site.east);
}

LinkDiagram apply_shackle(const LinkDiagram& d, ShackleSite site) {
  if (!shackle_site_valid(d, site))
    throw PreconditionError("shackle site is not a pair of coherent co-facial arcs on distinct circles");
  std::vector<Crossing> cs = d.crossings();
  int next = d.arc_count();
  int trivial = d.trivial_components();
  Crossing c1{1, {}}, c2{1, {}};
  if (site.west >= 0) {
    int fresh = next++;
    Slot h = d.arc(site.west).head;
    c1.arcs[3] = site.west;
    cs[h.crossing].arcs[h.port] = fresh;
    c2.arcs[2] = fresh;
  } else {
    int loop = next++;
    c2.arcs[2] = loop;
    c1.arcs[3] = loop;
    --trivial;
  }
  if (site.east >= 0) {
    int fresh = next++;
    Slot h = d.arc(site.east).head;
    c1.arcs[0] = site.east;
    cs[h.crossing].arcs[h.port] = fresh;
    c2.arcs[1] = fresh;
  } else {
    int loop = next++;
    c2.arcs[1] = loop;
    c1.arcs[0] = loop;
    --trivial;
  }
  c1.arcs[1] = c2.arcs[0] = next++;
  c1.arcs[2] = c2.arcs[3] = next++;
  cs.push_back(c1);
  cs.push_back(c2);
  return LinkDiagram::from_labels(std::move(cs), trivial);
}

std::vector<ShackleSite> shackle_sites(const LinkDiagram& d) {
  std::vector<ShackleSite> out;
  SeifertStructure s = seifert_structure(d);
  for (int a = 0; a < d.arc_count(); ++a)
    for (int b = 0; b < d.arc_count(); ++b) {
      if (s.circle_of_arc[a] == s.circle_of_arc[b] || d.piece_of_arc(a) != d.piece_of_arc(b)) continue;
      if (d.right_face(a) == d.left_face(b)) out.push_back(ShackleSite{a, b});
    }
  return out;
}

LinkDiagram apply_double(const LinkDiagram& d, int c) {
  if (d.crossing(c).sign < 0) throw PreconditionError("crossing doubling needs a positive crossing");
  std::vector<Crossing> cs = d.crossings();
  int next = d.arc_count();
  Crossing c2{1, {}};
  c2.arcs[1] = cs[c].arcs[1];
  c2.arcs[2] = cs[c].arcs[2];
  cs[c].arcs[1] = c2.arcs[0] = next++;
  cs[c].arcs[2] = c2.arcs[3] = next++;
  cs.push_back(c2);
  return LinkDiagram(std::move(cs), d.trivial_components());
}

bool artin_site_matches(const LinkDiagram& d, ArtinSite t, ArtinDirection dir) {
  const int n = d.crossing_count();
  for (int c : {t.source, t.middle, t.sink})
    if (c < 0 || c >= n || d.crossing(c).sign < 0) return false;
  if (t.source == t.middle || t.middle == t.sink || t.source == t.sink) return false;
  if (dir == ArtinDirection::A)
    return feeds(d, t.source, 1, t.middle, 3) && feeds(d, t.source, 2, t.sink, 3) && feeds(d, t.middle, 2, t.sink, 0);
  return feeds(d, t.source, 2, t.middle, 0) && feeds(d, t.source, 1, t.sink, 0) && feeds(d, t.middle, 1, t.sink, 3);
}

std::vector<ArtinSite> artin_sites(const LinkDiagram& d, ArtinDirection dir) {
  std::vector<ArtinSite> out;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (d.crossing(x).sign < 0) continue;
    ArtinSite t;
    t.source = x;
    if (dir == ArtinDirection::A) {
      t.middle = head_of(d, x, 1).crossing;
      t.sink = head_of(d, x, 2).crossing;
    } else {
      t.middle = head_of(d, x, 2).crossing;
      t.sink = head_of(d, x, 1).crossing;
    }
    if (artin_site_matches(d, t, dir)) out.push_back(t);
  }
  return out;
}

std::vector<int> artin_entering_arcs(const LinkDiagram& d, ArtinSite t, ArtinDirection dir) {
  if (!artin_site_matches(d, t, dir)) throw PreconditionError("not an Artin site");
  const auto& x = d.crossing(t.source);
  const auto& y = d.crossing(t.middle);
  if (dir == ArtinDirection::A) return {x.arcs[3], x.arcs[0], y.arcs[0]};
  return {y.arcs[3], x.arcs[3], x.arcs[0]};
}

LinkDiagram apply_artin(const LinkDiagram& d, ArtinSite t, ArtinDirection dir) {
  if (!artin_site_matches(d, t, dir)) throw PreconditionError("Artin pattern mismatch");
  std::vector<Crossing> cs = d.crossings();
  Crossing& x = cs[t.source];
  Crossing& y = cs[t.middle];
  Crossing& z = cs[t.sink];
  if (dir == ArtinDirection::A) {
    int in1 = x.arcs[3], in2 = x.arcs[0], in3 = y.arcs[0];
    int out1 = z.arcs[2], out2 = z.arcs[1], out3 = y.arcs[1];
    int i1 = x.arcs[1], i2 = x.arcs[2], i3 = y.arcs[2];
    x.arcs = {in3, i2, i1, in2};
    y.arcs = {i1, i3, out1, in1};
    z.arcs = {i2, out3, out2, i3};
  } else {
    int in1 = y.arcs[3], in2 = x.arcs[3], in3 = x.arcs[0];
    int out1 = y.arcs[2], out2 = z.arcs[2], out3 = z.arcs[1];
    int j1 = x.arcs[2], j2 = x.arcs[1], j3 = y.arcs[1];
    x.arcs = {in2, j1, j2, in1};
    y.arcs = {in3, out3, j3, j1};
    z.arcs = {j3, out2, out1, j2};
  }
  return LinkDiagram(std::move(cs), d.trivial_components());
}

std::vector<DoubleRegion> find_double_regions(const LinkDiagram& d) {
  std::vector<DoubleRegion> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const bool pos = d.crossing(c).sign > 0;
    Slot h = head_of(d, c, pos ? 1 : 2);
    int u = h.crossing;
    if (u == c || d.crossing(u).sign != d.crossing(c).sign) continue;
    bool stacked = pos ? (h.port == 0 && feeds(d, c, 2, u, 3)) : (h.port == 1 && feeds(d, c, 3, u, 0));
    if (stacked) out.push_back(DoubleRegion{c, u});
  }
  return out;
}

}  // namespace mfw
