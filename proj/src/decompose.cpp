#include "mfw/decompose.hpp"

#include "mfw/bounds.hpp"
#include "mfw/canonical.hpp"
#include "mfw/error.hpp"
#include "mfw/resolution.hpp"
#include "mfw/seifert.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace mfw {

Move Move::make_shackle(ShackleSite site) {
  Move m;
  m.type = Type::Shackle;
  m.shackle = site;
  return m;
}

Move Move::make_double(int crossing) {
  Move m;
  m.type = Type::Double;
  m.crossing = crossing;
  return m;
}

Move Move::make_artin(ArtinSite site, ArtinDirection dir) {
  Move m;
  m.type = Type::Artin;
  m.artin = site;
  m.direction = dir;
  return m;
}

LinkDiagram apply_move(const LinkDiagram& d, const Move& m) {
  switch (m.type) {
    case Move::Type::Shackle:
      return apply_shackle(d, m.shackle);
    case Move::Type::Double:
      if (m.crossing < 0 || m.crossing >= d.crossing_count()) throw PreconditionError("double site out of range");
      return apply_double(d, m.crossing);
    case Move::Type::Artin:
      return apply_artin(d, m.artin, m.direction);
  }
  throw PreconditionError("unknown move");
}

LinkDiagram replay(const MoveScript& script) {
  if (script.start_circles < 0) throw PreconditionError("negative start circle count");
  LinkDiagram d = LinkDiagram::unlink(script.start_circles);
  for (const Move& m : script.moves) d = apply_move(d, m);
  return d;
}

bool verify(const MoveScript& script, const LinkDiagram& d) {
  try {
    return diagrams_isomorphic(replay(script), d);
  } catch (const PreconditionError&) {
    return false;
  }
}

namespace {

ArtinDirection opposite(ArtinDirection dir) { return dir == ArtinDirection::A ? ArtinDirection::B : ArtinDirection::A; }

struct SequenceData {
  std::vector<int> alpha;
  std::set<std::pair<int, int>> pairs;
  std::set<std::array<int, 3>> triples;  // alpha increasing along the triple
};

SequenceData coherent_sequences(const SeifertStructure& s, int root) {
  SequenceData out;
  const int m = static_cast<int>(s.circles.size());
  out.alpha.assign(static_cast<std::size_t>(m), -1);
  std::deque<int> queue{root};
  out.alpha[root] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : s.neighbours[v])
      if (out.alpha[w] < 0) {
        out.alpha[w] = out.alpha[v] + 1;
        queue.push_back(w);
      }
  }
  std::vector<int> seq{root};
  auto extend = [&](auto&& self) -> void {
    int last = seq.back();
    for (int next : s.neighbours[last]) {
      if (std::find(seq.begin(), seq.end(), next) != seq.end()) continue;
      bool ok = true;
      for (int c : seq) ok = ok && circles_coherent(s, c, next);
      if (!ok) continue;
      out.pairs.insert({std::min(last, next), std::max(last, next)});
      if (seq.size() >= 2) {
        int first = seq[seq.size() - 2];
        if (out.alpha[last] == out.alpha[first] + 1 && out.alpha[next] == out.alpha[last] + 1)
          out.triples.insert({first, last, next});
      }
      seq.push_back(next);
      self(self);
      seq.pop_back();
    }
  };
  extend(extend);
  return out;
}

long potential_of(const SeifertStructure& s, const SequenceData& q) {
  long total = 0;
  for (auto [c1, c2] : q.pairs) total += static_cast<long>(std::min(q.alpha[c1], q.alpha[c2])) * s.multiplicity(c1, c2);
  return total;
}

// An Artin site whose circles run (near, middle, far) from the root.
std::optional<ArtinSite> site_for_triple(const LinkDiagram& d, const SeifertStructure& s, std::array<int, 3> t,
                                         ArtinDirection dir) {
  for (const ArtinSite& site : artin_sites(d, dir)) {
    const auto& cx = s.circles_of_crossing[site.source];
    const auto& cy = s.circles_of_crossing[site.middle];
    std::array<int, 3> got = dir == ArtinDirection::A ? std::array<int, 3>{cy[0], cx[0], cx[1]}
                                                      : std::array<int, 3>{cy[1], cx[1], cx[0]};
    if (got == t) return site;
  }
  return std::nullopt;
}

}  // namespace

long artin_potential(const LinkDiagram& d, Point x) {
  SeifertStructure s = seifert_structure(d);
  if (x.arc < 0) throw PreconditionError("potential needs a base point on a non-trivial circle");
  return potential_of(s, coherent_sequences(s, s.circle_of_arc[x.arc]));
}

Normalization artin_normalize(const LinkDiagram& d, Point x) {
  if (!d.is_positive()) throw PreconditionError("diagram is not positive");
  if (x.arc < 0 || x.arc >= d.arc_count()) throw PreconditionError("base point must lie on a crossing arc");
  Normalization out{d, x, {}, {}, {}};
  SeifertStructure s0 = seifert_structure(d);
  int root = s0.circle_of_arc[x.arc];
  if (!s0.innermost(root)) throw PreconditionError("base point is not innermost");
  const ArtinDirection dir = s0.loose_right(root) ? ArtinDirection::A : ArtinDirection::B;

  for (;;) {
    SeifertStructure s = seifert_structure(out.diagram);
    root = s.circle_of_arc[out.base.arc];
    SequenceData q = coherent_sequences(s, root);
    long pot = potential_of(s, q);
    if (!out.potentials.empty() && pot >= out.potentials.back())
      throw LemmaViolation("Artin move did not lower the potential");
    out.potentials.push_back(pot);
    if (out.steps.size() > static_cast<std::size_t>(out.potentials.front()))
      throw LemmaViolation("Artin normalisation ran past its initial potential");

    std::optional<ArtinSite> site;
    for (const auto& t : q.triples)
      if ((site = site_for_triple(out.diagram, s, t, dir))) break;
    if (!site) break;

    std::vector<int> entering = artin_entering_arcs(out.diagram, *site, dir);
    LinkDiagram next = apply_artin(out.diagram, *site, dir);
    // Arcs inside the triangle are rewired; everything else keeps its id.
    auto in_triangle = [&](int c) { return c == site->source || c == site->middle || c == site->sink; };
    const ArcEnds& base_ends = out.diagram.arc(out.base.arc);
    if (in_triangle(base_ends.tail.crossing) && in_triangle(base_ends.head.crossing))
      for (int a : entering)
        if (s.circle_of_arc[a] == root) out.base.arc = a;
    out.chain.push_back(out.diagram);
    out.steps.push_back(ArtinStep{*site, dir});
    out.diagram = std::move(next);
  }
  return out;
}

namespace {

// Smooths the listed crossings, highest index first, and follows two arcs.
LinkDiagram smooth_all(const LinkDiagram& d, std::vector<int> crossings, std::array<int, 2>& tracked) {
  std::sort(crossings.rbegin(), crossings.rend());
  LinkDiagram cur = d;
  for (int c : crossings) {
    std::vector<int> map;
    cur = smooth_crossing(cur, c, &map);
    for (int& a : tracked) a = a < 0 ? -1 : map[a];
  }
  return cur;
}

std::vector<int> isomorphism_or_throw(const LinkDiagram& from, const LinkDiagram& to) {
  auto iso = find_isomorphism(from, to);
  if (!iso) throw LemmaViolation("replayed diagram is not isomorphic to the one it stands for");
  return *iso;
}

// Appends a shackle on the (west, east) arcs of d to a script for d.
void push_shackle(MoveScript& script, const LinkDiagram& d, int west, int east) {
  LinkDiagram r = replay(script);
  std::vector<int> iso = isomorphism_or_throw(d, r);
  script.moves.push_back(Move::make_shackle(ShackleSite{map_arc(d, r, iso, west), map_arc(d, r, iso, east)}));
}

template <class F>
std::optional<MoveScript> with_trivial_split(const LinkDiagram& d, F&& core) {
  if (d.crossing_count() == 0) return MoveScript{d.trivial_components(), {}};
  const int trivial = d.trivial_components();
  std::optional<MoveScript> sub = core(remove_trivial_components(d));
  if (sub) sub->start_circles += trivial;
  return sub;
}

struct Decomposer {
  PolyCache& cache = shared_poly_cache();
  int artin_moves = 0;

  bool sharp(const LinkDiagram& d) { return r_sharp(d, polynomial(d)); }

  LaurentPoly2 polynomial(const LinkDiagram& d) {
    std::string key = "coherent/" + canonical_key(d);
    if (auto hit = cache.get(key)) return *hit;
    LaurentPoly2 p = homfly_coherent(d);
    cache.put(key, p);
    return p;
  }

  std::optional<MoveScript> run(const LinkDiagram& d) {
    return with_trivial_split(d, [this](const LinkDiagram& core) { return run_core(core); });
  }

  std::optional<MoveScript> run_core(const LinkDiagram& d) {
    Normalization norm{d, Point{}, {}, {}, {}};
    std::vector<DoubleRegion> regions = find_double_regions(d);
    if (regions.empty()) {
      norm = artin_normalize(d, find_appropriate_point(d));
      artin_moves += static_cast<int>(norm.steps.size());
      regions = find_double_regions(norm.diagram);
      if (regions.empty()) return std::nullopt;
    }
    const LinkDiagram& work = norm.diagram;
    const DoubleRegion r = regions.front();
    std::optional<MoveScript> script;

    std::array<int, 2> site{work.crossing(r.lower).arcs[3], work.crossing(r.lower).arcs[0]};
    LinkDiagram v = smooth_all(work, {r.lower, r.upper}, site);
    if (sharp(v)) {
      script = run(v);
      if (!script) throw LemmaViolation("construction stuck on an R-sharp diagram");
      push_shackle(*script, v, site[0], site[1]);
    } else {
      std::array<int, 2> unused{-1, -1};
      LinkDiagram d0 = smooth_all(work, {r.upper}, unused);
      if (!sharp(d0)) return std::nullopt;
      script = run(d0);
      if (!script) throw LemmaViolation("construction stuck on an R-sharp diagram");
      LinkDiagram rep = replay(*script);
      std::vector<int> iso = isomorphism_or_throw(d0, rep);
      script->moves.push_back(Move::make_double(iso[r.lower - (r.lower > r.upper ? 1 : 0)]));
    }

    for (std::size_t i = norm.steps.size(); i-- > 0;) {
      const LinkDiagram& after = i + 1 < norm.chain.size() ? norm.chain[i + 1] : norm.diagram;
      LinkDiagram rep = replay(*script);
      std::vector<int> iso = isomorphism_or_throw(after, rep);
      const ArtinSite& t = norm.steps[i].site;
      script->moves.push_back(
          Move::make_artin(ArtinSite{iso[t.source], iso[t.middle], iso[t.sink]}, opposite(norm.steps[i].direction)));
    }
    return script;
  }
};

std::optional<MoveScript> no_nested(const LinkDiagram& d);

std::optional<MoveScript> no_nested_core(const LinkDiagram& d) {
  SeifertStructure s = seifert_structure(d);
  Castle castle = build_castle(d, s, find_appropriate_point(d, s));
  int f1 = -1;
  for (std::size_t f = 0; f < castle.floors.size() && f1 < 0; ++f)
    if (castle.floors[f].level == 1) f1 = static_cast<int>(f);
  if (f1 < 0) throw LemmaViolation("castle has no floor of level one");
  std::vector<int> ladders;
  for (const Ladder& l : castle.ladders)
    if (l.lower == 0 && l.upper == f1) ladders.push_back(l.crossing);
  std::sort(ladders.begin(), ladders.end(), [&](int a, int b) {
    return castle.offset_in_floor(s, f1, a) < castle.offset_in_floor(s, f1, b);
  });
  if (ladders.size() < 2) throw LemmaViolation("fewer than two ladders between the lowest floors");
  std::vector<DoubleRegion> regions = find_double_regions(d);
  for (std::size_t i = 0; i + 1 < ladders.size(); ++i)
    if (std::find(regions.begin(), regions.end(), DoubleRegion{ladders[i], ladders[i + 1]}) == regions.end())
      throw LemmaViolation("ladders between the lowest floors do not form a two-strand braid");

  const Crossing& lower = d.crossing(ladders.front());
  std::array<int, 2> site{lower.arcs[3], lower.arcs[0]};
  LinkDiagram smoothed = smooth_all(d, ladders, site);
  std::optional<MoveScript> script = no_nested(smoothed);
  if (!script) return std::nullopt;
  push_shackle(*script, smoothed, site[0], site[1]);
  const int bottom = smoothed.crossing_count();
  for (std::size_t i = 2; i < ladders.size(); ++i) script->moves.push_back(Move::make_double(bottom));
  return script;
}

std::optional<MoveScript> no_nested(const LinkDiagram& d) { return with_trivial_split(d, no_nested_core); }

}  // namespace

SharpnessCertificate decompose_positive(const LinkDiagram& d) {
  if (!d.is_positive()) throw PreconditionError("diagram is not positive");
  SharpnessCertificate cert;
  Decomposer dec;
  cert.polynomial = dec.polynomial(d);
  cert.a_max = cert.polynomial.degrees().a_max;
  cert.bound = d.writhe() + seifert_structure(d).circle_count() - 1;
  cert.script = dec.run(d);
  cert.artin_moves = dec.artin_moves;
  cert.decomposable = cert.script.has_value();
  if (cert.script && !verify(*cert.script, d)) throw LemmaViolation("decomposition does not replay to the input");
  if (cert.decomposable != (cert.a_max == cert.bound))
    throw LemmaViolation(cert.decomposable ? "decomposed a diagram that is not R-sharp"
                                           : "found no decomposition of an R-sharp diagram");
  return cert;
}

MoveScript decompose_no_nested(const LinkDiagram& d) {
  if (!d.is_positive()) throw PreconditionError("diagram is not positive");
  DiagramStats st = diagram_stats(d);
  if (st.has_nested) throw PreconditionError("diagram has nested Seifert circles");
  if (!st.lone_crossings.empty()) throw PreconditionError("diagram has a lone crossing");
  std::optional<MoveScript> script = no_nested(d);
  if (!script || !verify(*script, d)) throw LemmaViolation("no-nested construction does not replay to the input");
  return *script;
}

}  // namespace mfw
