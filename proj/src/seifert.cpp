#include "mfw/seifert.hpp"

#include "mfw/error.hpp"

#include <algorithm>
#include <numeric>

namespace mfw {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Side SeifertStructure::side_of(int of, int other) const {
  const auto& l = left_set[of];
  if (std::binary_search(l.begin(), l.end(), other)) return Side::Left;
  const auto& r = right_set[of];
  if (std::binary_search(r.begin(), r.end(), other)) return Side::Right;
  throw PreconditionError("circles lie in different pieces");
}

int SeifertStructure::multiplicity(int c1, int c2) const { return edge_count_[c1][c2]; }

int SeifertStructure::other_circle(int crossing, int c) const {
  const auto& cc = circles_of_crossing[crossing];
  if (cc[0] == c) return cc[1];
  if (cc[1] == c) return cc[0];
  throw PreconditionError("crossing is not on the circle");
}

int SeifertStructure::position_on(int crossing, int c) const {
  const auto& cc = circles_of_crossing[crossing];
  if (cc[0] == c) return position_of_crossing[crossing][0];
  if (cc[1] == c) return position_of_crossing[crossing][1];
  throw PreconditionError("crossing is not on the circle");
}

std::vector<int> SeifertStructure::crossings_between(int c1, int c2) const {
  std::vector<int> out;
  for (int x : circles[c1].crossings)
    if (other_circle(x, c1) == c2) out.push_back(x);
  return out;
}

bool SeifertStructure::bipartite() const {
  std::vector<int> colour(circles.size(), -1);
  for (std::size_t s = 0; s < circles.size(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbours[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

SeifertStructure seifert_structure(const LinkDiagram& d) {
  SeifertStructure s;
  s.trivial_circles = d.trivial_components();
  const int e = d.arc_count();
  const int n = d.crossing_count();
  s.circle_of_arc.assign(static_cast<std::size_t>(e), -1);
  s.circles_of_crossing.assign(static_cast<std::size_t>(n), {-1, -1});
  s.position_of_crossing.assign(static_cast<std::size_t>(n), {-1, -1});
  for (int a = 0; a < e; ++a) {
    if (s.circle_of_arc[a] != -1) continue;
    int id = static_cast<int>(s.circles.size());
    SeifertCircle circle;
    circle.piece = d.piece_of_arc(a);
    for (int b = a; s.circle_of_arc[b] == -1; b = d.seifert_next_arc(b)) {
      s.circle_of_arc[b] = id;
      Slot h = d.arc(b).head;
      int k = h.port == 0 ? 0 : 1;
      s.circles_of_crossing[h.crossing][k] = id;
      s.position_of_crossing[h.crossing][k] = static_cast<int>(circle.arcs.size());
      circle.arcs.push_back(b);
      circle.crossings.push_back(h.crossing);
    }
    s.circles.push_back(std::move(circle));
  }
  const int m = static_cast<int>(s.circles.size());
  s.edge_count_.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  s.neighbours.assign(static_cast<std::size_t>(m), {});
  for (int c = 0; c < n; ++c) {
    auto [u, v] = s.circles_of_crossing[c];
    if (u == v) throw LemmaViolation("crossing joins a Seifert circle to itself");
    if (s.edge_count_[u][v]++ == 0) {
      s.neighbours[u].push_back(v);
      s.neighbours[v].push_back(u);
    }
    ++s.edge_count_[v][u];
  }
  for (auto& nb : s.neighbours) std::sort(nb.begin(), nb.end());

  // Removing a circle cuts its piece's sphere in two. Faces not separated by
  // the circle are joined across the other circles' arcs and across channels.
  s.left_set.assign(static_cast<std::size_t>(m), {});
  s.right_set.assign(static_cast<std::size_t>(m), {});
  for (int c = 0; c < m; ++c) {
    UnionFind uf(d.face_count());
    for (int a = 0; a < e; ++a)
      if (s.circle_of_arc[a] != c) uf.unite(d.left_face(a), d.right_face(a));
    for (int x = 0; x < n; ++x) {
      auto f = d.channel_faces(x);
      uf.unite(f[0], f[1]);
    }
    const int left = uf.find(d.left_face(s.circles[c].arcs[0]));
    for (int o = 0; o < m; ++o) {
      if (o == c || s.circles[o].piece != s.circles[c].piece) continue;
      if (uf.find(d.left_face(s.circles[o].arcs[0])) == left)
        s.left_set[c].push_back(o);
      else
        s.right_set[c].push_back(o);
    }
  }
  return s;
}

bool circles_coherent(const SeifertStructure& s, int c1, int c2) { return s.side_of(c1, c2) != s.side_of(c2, c1); }

DiagramStats diagram_stats(const LinkDiagram& d) { return diagram_stats(d, seifert_structure(d)); }

DiagramStats diagram_stats(const LinkDiagram& d, const SeifertStructure& s) {
  DiagramStats st;
  st.crossing_count = d.crossing_count();
  st.writhe = d.writhe();
  st.seifert_circle_count = s.circle_count();
  st.component_count = d.component_count();
  st.is_positive = d.is_positive();
  for (int c = 0; c < d.crossing_count(); ++c) {
    auto [u, v] = s.circles_of_crossing[c];
    if (s.multiplicity(u, v) == 1) st.lone_crossings.push_back(c);
    if (d.is_isthmus(c)) st.isthmi.push_back(c);
  }
  for (int c = 0; c < static_cast<int>(s.circles.size()); ++c)
    if (s.nested(c)) st.has_nested = true;
  return st;
}

}  // namespace mfw
