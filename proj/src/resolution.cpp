#include "mfw/resolution.hpp"

#include "mfw/canonical.hpp"
#include "mfw/error.hpp"
#include "mfw/seifert.hpp"

#include <cstdlib>

namespace mfw {

CoherentPath maximal_coherent_path(const LinkDiagram& d, const std::vector<bool>& visited, int x, Rule rule) {
  d.arc(x);
  std::vector<bool> met(static_cast<std::size_t>(d.crossing_count()), false);
  for (int a = 0; a < d.arc_count(); ++a)
    if (visited[a]) {
      met[d.arc(a).head.crossing] = true;
      met[d.arc(a).tail.crossing] = true;
    }
  CoherentPath path;
  int cur = x;
  do {
    path.arcs.push_back(cur);
    Slot h = d.arc(cur).head;
    if (!met[h.crossing]) {
      met[h.crossing] = true;
      bool over = is_over_port(h.port);
      if (over != (rule == Rule::Descending)) {
        path.violation = h.crossing;
        return path;
      }
    }
    cur = d.next_arc(cur);
  } while (cur != x);
  return path;
}

CoherentPath maximal_coherent_path(const LinkDiagram& d, int x, Rule rule) {
  return maximal_coherent_path(d, std::vector<bool>(static_cast<std::size_t>(d.arc_count()), false), x, rule);
}

Rule rule_for(const SeifertStructure& s, int x) {
  return s.loose_left(s.circle_of_arc.at(x)) ? Rule::Descending : Rule::Ascending;
}

namespace {

struct WalkState {
  LinkDiagram d;
  std::vector<bool> visited;
  int t = 0;
  int t_neg = 0;
  int node = 0;
};

class TreeWalker {
 public:
  TreeWalker(const TreeVisitor& v, BasePolicy policy) : visitor_(v), policy_(policy) {}

  void start(const LinkDiagram& d) {
    WalkState st{d, std::vector<bool>(static_cast<std::size_t>(d.arc_count()), false), 0, 0, 0};
    st.node = emit(TreeNode{-1, Branch::Root, -1, 0, d.crossing_count(), d.writhe(), std::nullopt});
    phase(std::move(st));
  }

 private:
  int emit(TreeNode node) {
    if (visitor_.on_node) visitor_.on_node(node);
    return next_id_++;
  }

  void leaf(const WalkState& st) {
    Leaf l;
    l.smoothed = st.t;
    l.negative_smoothed = st.t_neg;
    l.writhe = st.d.writhe();
    l.components = st.d.component_count();
    const auto& comp = st.d.component_of_arc();
    for (const auto& x : st.d.crossings())
      if (comp[x.arcs[0]] == comp[x.arcs[x.sign > 0 ? 3 : 1]]) l.all_simple = false;
    if (visitor_.on_leaf) visitor_.on_leaf(l);
  }

  void phase(WalkState st) {
    const LinkDiagram& d = st.d;
    std::vector<bool> drop(static_cast<std::size_t>(d.arc_component_count()), false);
    bool open = false;
    for (int a = 0; a < d.arc_count(); ++a) {
      if (st.visited[a])
        drop[d.component_of_arc()[a]] = true;
      else
        open = true;
    }
    if (!open) return leaf(st);
    Excision ex = remove_components(d, drop);
    if (ex.diagram.crossing_count() == 0) return leaf(st);
    SeifertStructure s = seifert_structure(ex.diagram);
    int chosen = -1;
    if (policy_ == BasePolicy::FirstAppropriate) {
      chosen = find_appropriate_point(ex.diagram, s).arc;
    } else {
      for (Point p : appropriate_points(ex.diagram, s))
        if (p.arc >= 0) chosen = p.arc;
    }
    if (chosen < 0) throw LemmaViolation("no appropriate point on a diagram with crossings");
    Rule rule = rule_for(s, chosen);
    run(std::move(st), ex.to_original[chosen], rule);
  }

  void run(WalkState st, int x, Rule rule) {
    CoherentPath path = maximal_coherent_path(st.d, st.visited, x, rule);
    if (path.closed()) {
      int k = st.d.component_of_arc()[x];
      for (int a = 0; a < st.d.arc_count(); ++a)
        if (st.d.component_of_arc()[a] == k) st.visited[a] = true;
      return phase(std::move(st));
    }
    const int c = *path.violation;
    const int sign = st.d.crossing(c).sign;

    std::vector<int> amap;
    WalkState smooth;
    smooth.d = smooth_crossing(st.d, c, &amap);
    smooth.visited.assign(static_cast<std::size_t>(smooth.d.arc_count()), false);
    for (int a = 0; a < st.d.arc_count(); ++a)
      if (st.visited[a]) smooth.visited[amap[a]] = true;
    smooth.t = st.t + 1;
    smooth.t_neg = st.t_neg + (sign < 0 ? 1 : 0);
    smooth.node = emit(TreeNode{st.node, Branch::Smooth, c, sign, smooth.d.crossing_count(), smooth.d.writhe(),
                                std::nullopt});
    const int x0 = amap[x];

    WalkState flip{flip_crossing(st.d, c), st.visited, st.t, st.t_neg, 0};
    flip.node = emit(TreeNode{st.node, Branch::Flip, c, sign, flip.d.crossing_count(), flip.d.writhe(), std::nullopt});

    if (x0 < 0)
      phase(std::move(smooth));
    else
      run(std::move(smooth), x0, rule);
    run(std::move(flip), x, rule);
  }

  const TreeVisitor& visitor_;
  BasePolicy policy_;
  int next_id_ = 0;
};

}  // namespace

void walk_coherent_tree(const LinkDiagram& d, const TreeVisitor& visitor, BasePolicy policy) {
  if (d.component_count() == 0) throw PreconditionError("empty diagram");
  TreeWalker(visitor, policy).start(d);
}

std::vector<Leaf> ResolutionTree::leaves() const {
  std::vector<Leaf> out;
  for (const auto& n : nodes)
    if (n.leaf) out.push_back(*n.leaf);
  return out;
}

ResolutionTree build_coherent_tree(const LinkDiagram& d, BasePolicy policy) {
  ResolutionTree tree;
  tree.root_writhe = d.writhe();
  tree.root_circles = seifert_structure(d).circle_count();
  TreeVisitor v;
  v.on_node = [&](const TreeNode& n) { tree.nodes.push_back(n); };
  // Both children are emitted before either is expanded, so leaves are
  // attached afterwards by a depth-first pass in the walker's order.
  std::vector<Leaf> leaves;
  v.on_leaf = [&](const Leaf& l) { leaves.push_back(l); };
  walk_coherent_tree(d, v, policy);
  std::vector<bool> has_child(tree.nodes.size(), false);
  for (const auto& n : tree.nodes)
    if (n.parent >= 0) has_child[n.parent] = true;
  std::vector<std::size_t> leaf_nodes;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (!has_child[i]) leaf_nodes.push_back(i);
  if (leaf_nodes.size() != leaves.size()) throw LemmaViolation("resolution tree leaf count mismatch");
  std::vector<std::vector<std::size_t>> children(tree.nodes.size());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (tree.nodes[i].parent >= 0) children[tree.nodes[i].parent].push_back(i);
  std::size_t next = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t v_id = stack.back();
    stack.pop_back();
    if (children[v_id].empty()) {
      tree.nodes[v_id].leaf = leaves[next++];
      continue;
    }
    for (auto it = children[v_id].rbegin(); it != children[v_id].rend(); ++it) stack.push_back(*it);
  }
  return tree;
}

LaurentPoly2 leaf_contribution(int root_writhe, const Leaf& leaf) {
  BigInt sign = leaf.negative_smoothed % 2 == 0 ? 1 : -1;
  return unlink_value(leaf.components).scaled(root_writhe - leaf.writhe, leaf.smoothed, sign);
}

LaurentPoly2 leaf_contribution_displayed(int root_writhe, const Leaf& leaf) {
  BigInt sign = leaf.negative_smoothed % 2 == 0 ? 1 : -1;
  LaurentPoly2 factor = LaurentPoly2::monomial(1, 0) - LaurentPoly2::monomial(-1, 0);
  int n = leaf.components;
  return factor.pow(static_cast<unsigned>(n - 1)).scaled(root_writhe - leaf.writhe, leaf.smoothed + 1 - n, sign);
}

LaurentPoly2 homfly_from_tree(const ResolutionTree& tree) {
  LaurentPoly2 p;
  for (const auto& n : tree.nodes)
    if (n.leaf) p += leaf_contribution(tree.root_writhe, *n.leaf);
  return p;
}

bool leaf_highest_a_test(int root_writhe, int root_circles, const Leaf& leaf) {
  return root_writhe - leaf.writhe + leaf.components - 1 == root_writhe + root_circles - 1;
}

PolyCache::PolyCache(std::size_t capacity) : capacity_(capacity) {}

std::size_t PolyCache::default_capacity() {
  if (const char* env = std::getenv("MFW_MEMO_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env) return static_cast<std::size_t>(v);
  }
  return 200000;
}

std::optional<LaurentPoly2> PolyCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void PolyCache::put(const std::string& key, const LaurentPoly2& value) {
  std::lock_guard lock(mutex_);
  if (table_.size() < capacity_) table_.emplace(key, value);
}

std::size_t PolyCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

PolyCache& shared_poly_cache() {
  static PolyCache cache;
  return cache;
}

namespace {

// First crossing met on the under-strand when components are travelled in
// order of their smallest arc, each from that arc.
std::optional<int> first_ascending(const LinkDiagram& d) {
  std::vector<bool> met(static_cast<std::size_t>(d.crossing_count()), false);
  std::vector<bool> done(static_cast<std::size_t>(d.arc_component_count()), false);
  for (int base = 0; base < d.arc_count(); ++base) {
    int k = d.component_of_arc()[base];
    if (done[k]) continue;
    done[k] = true;
    int cur = base;
    do {
      Slot h = d.arc(cur).head;
      if (!met[h.crossing]) {
        met[h.crossing] = true;
        if (!is_over_port(h.port)) return h.crossing;
      }
      cur = d.next_arc(cur);
    } while (cur != base);
  }
  return std::nullopt;
}

LaurentPoly2 oracle(const LinkDiagram& d, PolyCache& cache) {
  if (d.crossing_count() == 0) return unlink_value(d.component_count());
  std::string key = canonical_key(d);
  if (auto hit = cache.get(key)) return *hit;
  LaurentPoly2 p;
  if (auto c = first_ascending(d)) {
    LaurentPoly2 flipped = oracle(flip_crossing(d, *c), cache);
    LaurentPoly2 smoothed = oracle(smooth_crossing(d, *c), cache);
    if (d.crossing(*c).sign > 0)
      p = flipped.scaled(2, 0) + smoothed.scaled(1, 1);
    else
      p = flipped.scaled(-2, 0) - smoothed.scaled(-1, 1);
  } else {
    p = unlink_value(d.component_count());
  }
  cache.put(key, p);
  return p;
}

}  // namespace

LaurentPoly2 homfly_oracle(const LinkDiagram& d, PolyCache* cache) {
  if (d.component_count() == 0) throw PreconditionError("empty diagram");
  return oracle(d, cache ? *cache : shared_poly_cache());
}

LaurentPoly2 homfly_coherent(const LinkDiagram& d, BasePolicy policy) {
  LaurentPoly2 p;
  const int w = d.writhe();
  TreeVisitor v;
  v.on_leaf = [&](const Leaf& l) { p += leaf_contribution(w, l); };
  walk_coherent_tree(d, v, policy);
  return p;
}

LaurentPoly2 homfly(const LinkDiagram& d, Engine engine) {
  return engine == Engine::Coherent ? homfly_coherent(d) : homfly_oracle(d);
}

}  // namespace mfw
