#include "mfw/castle.hpp"

#include "mfw/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mfw {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

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

int Castle::offset_in_floor(const SeifertStructure& s, int floor, int crossing) const {
  const Floor& f = floors[floor];
  if (f.circle < 0) return -1;
  const auto& cc = s.circles_of_crossing[crossing];
  if (cc[0] != f.circle && cc[1] != f.circle) return -1;
  int m = static_cast<int>(s.circles[f.circle].crossings.size());
  int off = mod(s.position_on(crossing, f.circle) - f.start, m);
  return off < f.length ? off : -1;
}

bool Castle::floor_contains(const SeifertStructure& s, int floor, int crossing) const {
  return offset_in_floor(s, floor, crossing) >= 0;
}

Castle build_castle(const LinkDiagram& d, const SeifertStructure& s, Point x) {
  Castle castle;
  castle.base = x;
  if (x.arc < 0) {
    if (s.trivial_circles == 0) throw PreconditionError("diagram has no trivial circle for the base point");
    castle.floors.push_back(Floor{-1, 0, 0, 0});
    return castle;
  }
  d.arc(x.arc);
  const int root = s.circle_of_arc[x.arc];
  if (!s.innermost(root)) throw PreconditionError("base point is not innermost");
  castle.base_circle = root;
  const auto& rc = s.circles[root];
  int start = static_cast<int>(std::find(rc.arcs.begin(), rc.arcs.end(), x.arc) - rc.arcs.begin());
  castle.floors.push_back(Floor{root, start, static_cast<int>(rc.crossings.size()), 0});

  std::size_t level_begin = 0, level_end = 1;
  // A floor of level k needs a circle without floors of level k-2, so levels
  // can't outrun twice the number of circles.
  const int max_level = 2 * static_cast<int>(s.circles.size()) + 2;
  for (int k = 1;; ++k) {
    if (k > max_level) throw LemmaViolation("castle construction does not terminate");
    std::set<int> blocked;
    for (const auto& f : castle.floors)
      if (f.level == k - 2) blocked.insert(f.circle);
    std::vector<Floor> fresh;
    for (std::size_t fi = level_begin; fi < level_end; ++fi) {
      const Floor f = castle.floors[fi];
      const auto& circle = s.circles[f.circle];
      const int m = static_cast<int>(circle.crossings.size());
      std::map<int, std::pair<int, int>> span;  // other circle -> first, last crossing
      for (int t = 0; t < f.length; ++t) {
        int c = circle.crossings[(f.start + t) % m];
        int other = s.other_circle(c, f.circle);
        auto [it, inserted] = span.try_emplace(other, c, c);
        if (!inserted) it->second.second = c;
      }
      for (const auto& [other, fl] : span) {
        if (blocked.count(other)) continue;
        int m2 = static_cast<int>(s.circles[other].crossings.size());
        int p = s.position_on(fl.first, other), q = s.position_on(fl.second, other);
        Floor g{other, p, mod(q - p, m2) + 1, k};
        if (std::find(fresh.begin(), fresh.end(), g) == fresh.end()) fresh.push_back(g);
      }
    }
    if (fresh.empty()) break;
    level_begin = castle.floors.size();
    castle.floors.insert(castle.floors.end(), fresh.begin(), fresh.end());
    level_end = castle.floors.size();
  }

  const int nf = static_cast<int>(castle.floors.size());
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int f1 = 0; f1 < nf; ++f1) {
      if (!castle.floor_contains(s, f1, c)) continue;
      for (int f2 = 0; f2 < nf; ++f2) {
        if (castle.floors[f2].circle == castle.floors[f1].circle) continue;
        if (castle.floors[f1].level >= castle.floors[f2].level) continue;
        if (castle.floor_contains(s, f2, c)) castle.ladders.push_back(Ladder{c, f1, f2});
      }
    }
  return castle;
}

std::vector<Brace> braces(const LinkDiagram& d, const SeifertStructure& s, const Castle& castle) {
  std::vector<Brace> out;
  if (castle.base_circle < 0) return out;
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (const auto& l : castle.ladders) by_pair[{l.lower, l.upper}].push_back(l.crossing);
  const int base_piece = s.circles[castle.base_circle].piece;

  for (auto& [pair, xs] : by_pair) {
    auto [lo, up] = pair;
    std::sort(xs.begin(), xs.end(), [&](int a, int b) {
      return castle.offset_in_floor(s, lo, a) < castle.offset_in_floor(s, lo, b);
    });
    const Floor& flo = castle.floors[lo];
    const Floor& fup = castle.floors[up];
    const auto& clo = s.circles[flo.circle];
    const auto& cup = s.circles[fup.circle];
    const int mlo = static_cast<int>(clo.arcs.size()), mup = static_cast<int>(cup.arcs.size());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      Brace b;
      b.s1 = xs[i];
      b.s2 = xs[i + 1];
      b.lower = lo;
      b.upper = up;
      std::set<int> on_curve{b.s1, b.s2};
      // Arc j of a circle ends at crossing j, so the arcs strictly between the
      // crossings at positions p < q (cyclically) are p+1 .. q.
      auto collect = [&](const SeifertCircle& c, int m, int p, int q, std::vector<int>& arcs) {
        for (int j = mod(p + 1, m); j != mod(q + 1, m); j = mod(j + 1, m)) {
          arcs.push_back(c.arcs[j]);
          if (j != q) on_curve.insert(c.crossings[j]);
        }
      };
      collect(clo, mlo, s.position_on(b.s1, flo.circle), s.position_on(b.s2, flo.circle), b.lower_arcs);
      int o1 = castle.offset_in_floor(s, up, b.s1), o2 = castle.offset_in_floor(s, up, b.s2);
      int u1 = s.position_on(b.s1, fup.circle), u2 = s.position_on(b.s2, fup.circle);
      if (o1 < o2)
        collect(cup, mup, u1, u2, b.upper_arcs);
      else
        collect(cup, mup, u2, u1, b.upper_arcs);

      std::set<int> boundary(b.lower_arcs.begin(), b.lower_arcs.end());
      boundary.insert(b.upper_arcs.begin(), b.upper_arcs.end());
      UnionFind uf(d.face_count());
      for (int a = 0; a < d.arc_count(); ++a)
        if (!boundary.count(a)) uf.unite(d.left_face(a), d.right_face(a));
      for (int c = 0; c < d.crossing_count(); ++c) {
        if (c == b.s1 || c == b.s2) continue;
        auto f = d.channel_faces(c);
        uf.unite(f[0], f[1]);
      }
      const int outside = uf.find(d.left_face(castle.base.arc));

      for (int g = 0; g < static_cast<int>(castle.floors.size()); ++g) {
        if (g == lo || g == up) continue;
        const Floor& fg = castle.floors[g];
        const auto& cg = s.circles[fg.circle];
        if (cg.piece != base_piece) continue;
        const int mg = static_cast<int>(cg.crossings.size());
        bool inside = false;
        for (int t = 0; t < fg.length && !inside; ++t) {
          int j = (fg.start + t) % mg;
          int c = cg.crossings[j];
          if (!on_curve.count(c) && uf.find(d.channel_faces(c)[0]) != outside) inside = true;
          if (t > 0 && !boundary.count(cg.arcs[j]) && uf.find(d.left_face(cg.arcs[j])) != outside) inside = true;
        }
        if (inside) b.inside_floors.push_back(g);
      }
      b.is_trap = !b.inside_floors.empty();
      out.push_back(std::move(b));
    }
  }
  return out;
}

bool has_traps(const LinkDiagram& d, const SeifertStructure& s, const Castle& castle) {
  for (const auto& b : braces(d, s, castle))
    if (b.is_trap) return true;
  return false;
}

std::vector<Point> candidate_base_points(const LinkDiagram& d, const SeifertStructure& s) {
  std::vector<Point> out;
  for (int c = 0; c < static_cast<int>(s.circles.size()); ++c)
    if (s.innermost(c))
      for (int a : s.circles[c].arcs) out.push_back(Point{a});
  if (d.trivial_components() > 0) out.push_back(Point{-1});
  if (out.empty()) throw PreconditionError("empty diagram has no base points");
  return out;
}

std::vector<Point> appropriate_points(const LinkDiagram& d, const SeifertStructure& s) {
  std::vector<Point> out;
  for (Point p : candidate_base_points(d, s))
    if (!has_traps(d, s, build_castle(d, s, p))) out.push_back(p);
  return out;
}

Point find_appropriate_point(const LinkDiagram& d, const SeifertStructure& s) {
  for (Point p : candidate_base_points(d, s))
    if (!has_traps(d, s, build_castle(d, s, p))) return p;
  throw LemmaViolation("no appropriate point found");
}

Point find_appropriate_point(const LinkDiagram& d) { return find_appropriate_point(d, seifert_structure(d)); }

std::vector<Tower> towers(const SeifertStructure& s, const Castle& castle) {
  const int nf = static_cast<int>(castle.floors.size());
  std::vector<std::set<int>> up(static_cast<std::size_t>(nf));
  for (const auto& l : castle.ladders)
    if (castle.floors[l.upper].level == castle.floors[l.lower].level + 1) up[l.lower].insert(l.upper);
  std::vector<Tower> out;
  std::vector<int> path{0};
  auto dfs = [&](auto&& self) -> void {
    int f = path.back();
    if (up[f].empty()) {
      Tower t{path, true};
      for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j) {
          int ci = castle.floors[path[i]].circle, cj = castle.floors[path[j]].circle;
          if (ci != cj && ci >= 0 && cj >= 0 && !circles_coherent(s, ci, cj)) t.coherent = false;
        }
      out.push_back(std::move(t));
      return;
    }
    for (int g : up[f]) {
      path.push_back(g);
      self(self);
      path.pop_back();
    }
  };
  if (nf > 0) dfs(dfs);
  return out;
}

}  // namespace mfw
