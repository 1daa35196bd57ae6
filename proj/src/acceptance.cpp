#include "mfw/acceptance.hpp"

#include "mfw/bounds.hpp"
#include "mfw/castle.hpp"
#include "mfw/corpus.hpp"
#include "mfw/decompose.hpp"
#include "mfw/resolution.hpp"
#include "mfw/seifert.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace mfw {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

LaurentPoly2 mono(int a, int z, int c = 1) { return LaurentPoly2::monomial(a, z, c); }

LaurentPoly2 torus35_table() {
  LaurentPoly2 p;
  const int a8[] = {7, 0, 21, 0, 21, 0, 8, 0, 1};
  const int a10[] = {8, 0, 14, 0, 7, 0, 1};
  for (int z = 0; z <= 8; ++z) p += mono(8, z, a8[z]);
  for (int z = 0; z <= 6; ++z) p -= mono(10, z, a10[z]);
  p += mono(12, 2) + mono(12, 0, 2);
  return p;
}

struct Context {
  unsigned seed;
  Corpus corpus;
  // Coherent-tree polynomials of corpus diagrams, by corpus index.
  std::vector<LaurentPoly2> poly;
};

using Check = std::function<bool(Context&, std::ostringstream&)>;

bool c1_torus(Context&, std::ostringstream& out) {
  auto t0 = Clock::now();
  LinkDiagram t = torus35();
  LaurentPoly2 want = torus35_table();
  bool coherent = homfly_coherent(t) == want;
  PolyCache fresh;
  bool oracle = homfly_oracle(t, &fresh) == want;
  double secs = since(t0);
  out << "coherent " << (coherent ? "exact" : "MISMATCH") << ", oracle " << (oracle ? "exact" : "MISMATCH")
      << (secs < 5 ? ", under 5 s" : ", over 5 s");
  return coherent && oracle && secs < 5;
}

bool c2_unlink(Context&, std::ostringstream& out) {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    LaurentPoly2 want = mono(0, 1 - n);
    for (int k = 1; k < n; ++k) want = want * (mono(-1, 0) - mono(1, 0));
    LinkDiagram u = LinkDiagram::unlink(n);
    PolyCache fresh;
    bool hit = homfly_coherent(u) == want && homfly_oracle(u, &fresh) == want;
    if (!hit) out << "n=" << n << " differs; ";
    ok = ok && hit;
  }
  out << "n = 1..5 checked";
  return ok;
}

bool c3_engines(Context& ctx, std::ostringstream& out) {
  auto t0 = Clock::now();
  std::mt19937 rng(ctx.seed);
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    LinkDiagram d = random_braid_closure(rng, 4, 10, false);
    if (homfly_coherent(d) == homfly_oracle(d)) ++agree;
  }
  double secs = since(t0);
  out << agree << "/200 random closures agree" << (secs < 600 ? "" : ", over 10 min");
  return agree == 200 && secs < 600;
}

bool c4_bounds(Context& ctx, std::ostringstream& out) {
  int hold = 0, iff = 0;
  const int n = static_cast<int>(ctx.corpus.diagrams.size());
  for (int i = 0; i < n; ++i) {
    BoundsReport r = bounds_report(ctx.corpus.diagrams[i].diagram, ctx.poly[i]);
    bool all = r.upper.holds && r.left.holds && r.right.holds && r.lr.holds && r.mfw.holds;
    if (all) ++hold;
    else out << ctx.corpus.diagrams[i].name << " violates a bound; ";
    if (r.mfw.sharp == (r.upper.sharp && r.left.sharp && r.right.sharp)) ++iff;
  }
  BoundsReport t = bounds_report(torus35());
  bool torus = t.upper.value == 8 && t.left.value == 8 && t.right.value == 12 && t.lr.value == 3 && t.mfw.value == 10 &&
               t.upper.sharp && t.left.sharp && t.right.sharp && t.lr.sharp && t.mfw.sharp;
  out << hold << "/" << n << " hold all five, MFW-sharp iff U,L,R sharp on " << iff << "/" << n
      << ", Torus35 (8, 8, 12, 3, 10) " << (torus ? "all sharp" : "WRONG");
  return hold == n && iff == n && torus;
}

bool c5_positive(Context& ctx, std::ostringstream& out) {
  int positive = 0, sharp = 0;
  for (std::size_t i = 0; i < ctx.corpus.diagrams.size(); ++i) {
    const LinkDiagram& d = ctx.corpus.diagrams[i].diagram;
    if (!d.is_positive()) continue;
    ++positive;
    if (positive_equalities_check(bounds_report(d, ctx.poly[i]), d)) ++sharp;
    else out << ctx.corpus.diagrams[i].name << " not sharp; ";
  }
  out << sharp << "/" << positive << " positive diagrams have U and L sharp";
  return positive > 0 && sharp == positive;
}

bool c6_equivalence(Context& ctx, std::ostringstream& out) {
  auto t0 = Clock::now();
  std::vector<LinkDiagram> ds;
  for (const auto& w : positive_words_up_to_rotation(3, 6)) ds.push_back(braid_closure(3, w));
  const std::size_t words = ds.size();
  std::mt19937 rng(ctx.seed + 1);
  for (int i = 0; i < 200; ++i) ds.push_back(random_braid_closure(rng, 5, 10, true));
  int match = 0, replayed = 0, decomposable = 0;
  for (const LinkDiagram& d : ds) {
    SharpnessCertificate c = decompose_positive(d);
    PolyCache fresh;
    if (c.decomposable == r_sharp(d, homfly_oracle(d, &fresh))) ++match;
    if (c.decomposable) {
      ++decomposable;
      if (verify(*c.script, d)) ++replayed;
    }
  }
  double secs = since(t0);
  out << match << "/" << ds.size() << " verdicts match the right bound (" << words << " words, 200 random), "
      << replayed << "/" << decomposable << " scripts replay" << (secs < 1800 ? "" : ", over 30 min");
  return match == static_cast<int>(ds.size()) && replayed == decomposable && secs < 1800;
}

bool c7_forward(Context& ctx, std::ostringstream& out) {
  std::mt19937 rng(ctx.seed + 2);
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    LinkDiagram d = replay(random_move_script(rng, 8));
    SharpnessCertificate c = decompose_positive(d);
    PolyCache fresh;
    if (c.decomposable && verify(*c.script, d) && r_sharp(d, homfly_oracle(d, &fresh))) ++ok;
  }
  out << ok << "/100 generated diagrams decomposable and R-sharp";
  return ok == 100;
}

bool c8_castles(Context& ctx, std::ostringstream& out) {
  int with_point = 0, castles = 0, trap_free = 0, good = 0, trapped = 0;
  for (const NamedDiagram& nd : ctx.corpus.diagrams) {
    const LinkDiagram& d = nd.diagram;
    SeifertStructure s = seifert_structure(d);
    if (!appropriate_points(d, s).empty()) ++with_point;
    else out << nd.name << " has no appropriate point; ";
    for (Point p : candidate_base_points(d, s)) {
      Castle c = build_castle(d, s, p);
      ++castles;
      if (has_traps(d, s, c)) {
        ++trapped;
        continue;
      }
      ++trap_free;
      bool ok = true;
      for (const Tower& t : towers(s, c)) ok = ok && t.coherent;
      for (std::size_t f = 0; f < c.floors.size(); ++f) {
        if (c.floors[f].level == 0) continue;
        std::set<int> below;
        for (const Ladder& l : c.ladders)
          if (l.upper == static_cast<int>(f) && c.floors[l.lower].level + 1 == c.floors[f].level) below.insert(l.lower);
        ok = ok && below.size() == 1;
      }
      if (ok) ++good;
      else out << nd.name << " base " << p.arc << " fails; ";
    }
  }
  const int n = static_cast<int>(ctx.corpus.diagrams.size());
  out << with_point << "/" << n << " diagrams have an appropriate point; " << good << "/" << trap_free
      << " trap-free castles coherent with unique lower neighbours (" << trapped << " trapped of " << castles << ")";
  return with_point == n && good == trap_free;
}

bool c9_leaves(Context& ctx, std::ostringstream& out) {
  long leaves = 0, agree = 0, simple = 0;
  for (const NamedDiagram& nd : ctx.corpus.diagrams) {
    const LinkDiagram& d = nd.diagram;
    TreeVisitor v;
    v.on_leaf = [&](const Leaf& l) {
      ++leaves;
      if (l.all_simple) ++simple;
      if (leaf_highest_a_test(d.writhe(), seifert_structure(d).circle_count(), l) == l.all_simple) ++agree;
    };
    walk_coherent_tree(d, v);
  }
  out << agree << "/" << leaves << " leaves satisfy the degree test iff all curves are simple (" << simple
      << " simple)";
  return leaves > 0 && agree == leaves;
}

bool c10_mirror(Context& ctx, std::ostringstream& out) {
  int ok = 0, oracle_checked = 0;
  const int n = static_cast<int>(ctx.corpus.diagrams.size());
  for (int i = 0; i < n; ++i) {
    const LinkDiagram& d = ctx.corpus.diagrams[i].diagram;
    LinkDiagram m = mirror(d);
    bool hit = homfly_coherent(m) == ctx.poly[i].substitute_mirror();
    if (d.crossing_count() <= 12) {
      ++oracle_checked;
      hit = hit && homfly_oracle(m) == homfly_oracle(d).substitute_mirror();
    }
    if (hit) ++ok;
    else out << ctx.corpus.diagrams[i].name << " fails; ";
  }
  out << ok << "/" << n << " diagrams obey the mirror law (" << oracle_checked << " also by the oracle)";
  return ok == n;
}

bool c11_artin(Context& ctx, std::ostringstream& out) {
  std::vector<LinkDiagram> ds;
  for (const NamedDiagram& nd : ctx.corpus.diagrams)
    if (nd.diagram.is_positive()) ds.push_back(nd.diagram);
  std::mt19937 rng(ctx.seed + 3);
  for (int i = 0; i < 200; ++i) {
    int n = std::uniform_int_distribution<int>(3, 6)(rng);
    int len = std::uniform_int_distribution<int>(3, 16)(rng);
    ds.push_back(braid_closure(n, random_braid_word(rng, n, len, true)));
  }
  long runs = 0, moves = 0, good_runs = 0;
  for (const LinkDiagram& full : ds) {
    LinkDiagram d = remove_trivial_components(full);
    if (d.crossing_count() == 0) continue;
    for (Point x : appropriate_points(d, seifert_structure(d))) {
      ++runs;
      Normalization nm = artin_normalize(d, x);
      bool ok = nm.potentials.size() == nm.steps.size() + 1 &&
                static_cast<long>(nm.steps.size()) <= nm.potentials.front();
      for (std::size_t k = 0; k + 1 < nm.potentials.size(); ++k) ok = ok && nm.potentials[k] - nm.potentials[k + 1] == 1;
      moves += static_cast<long>(nm.steps.size());
      if (ok) ++good_runs;
    }
  }
  out << good_runs << "/" << runs << " runs drop the potential by exactly 1 per move and stop within it (" << moves
      << " moves)";
  return runs > 0 && moves > 0 && good_runs == runs;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned seed) {
  Context ctx{seed, standard_corpus(seed), {}};
  for (const NamedDiagram& nd : ctx.corpus.diagrams) ctx.poly.push_back(homfly_coherent(nd.diagram));

  const std::vector<std::pair<std::string, Check>> checks{
      {"Torus (3,5) ground truth", c1_torus},
      {"Unlink formula", c2_unlink},
      {"Engine equivalence", c3_engines},
      {"Bounds validity", c4_bounds},
      {"Positive equalities", c5_positive},
      {"Sharpness iff decomposable", c6_equivalence},
      {"Forward direction", c7_forward},
      {"Appropriate points and towers", c8_castles},
      {"Leaf degree criterion", c9_leaves},
      {"Mirror law", c10_mirror},
      {"Artin normalisation", c11_artin},
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i) + 1;
    r.title = checks[i].first;
    std::ostringstream detail;
    auto t0 = Clock::now();
    try {
      r.passed = checks[i].second(ctx, detail);
    } catch (const std::exception& e) {
      r.passed = false;
      detail << "threw: " << e.what();
    }
    r.seconds = since(t0);
    r.detail = detail.str();
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << " (" << std::fixed
      << std::setprecision(2) << r.seconds << " s)";
  return out.str();
}

}  // namespace mfw
