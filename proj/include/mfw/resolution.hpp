#pragma once

#include "mfw/castle.hpp"
#include "mfw/diagram.hpp"
#include "mfw/laurent.hpp"

#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mfw {

enum class Rule { Descending, Ascending };

struct CoherentPath {
  std::vector<int> arcs;        // arcs travelled, starting with the base arc
  std::optional<int> violation;  // first crossing met on the wrong strand
  bool closed() const { return !violation.has_value(); }
};

// Travels the component of x from the tail of x. Crossings with a strand on a
// visited arc, and crossings already met, impose nothing.
CoherentPath maximal_coherent_path(const LinkDiagram& d, const std::vector<bool>& visited, int x, Rule rule);
CoherentPath maximal_coherent_path(const LinkDiagram& d, int x, Rule rule);
// Descending when the circle of x is loose on the left, ascending otherwise.
Rule rule_for(const SeifertStructure& s, int x);

struct Leaf {
  int smoothed = 0;           // t
  int negative_smoothed = 0;  // t'
  int writhe = 0;             // writhe of the unlink diagram
  int components = 0;
  bool all_simple = true;  // no component crosses itself
};

enum class Branch { Root, Smooth, Flip };

struct TreeNode {
  int parent = -1;
  Branch branch = Branch::Root;
  int crossing = -1;  // crossing of the parent resolved on the way here
  int crossing_sign = 0;
  int crossings = 0;
  int writhe = 0;
  std::optional<Leaf> leaf;
};

// Which trap-free candidate starts each phase.
enum class BasePolicy { FirstAppropriate, LastAppropriate };

struct TreeVisitor {
  std::function<void(const TreeNode&)> on_node;
  std::function<void(const Leaf&)> on_leaf;
};

// Streams the coherent resolution tree of d.
void walk_coherent_tree(const LinkDiagram& d, const TreeVisitor& visitor,
                        BasePolicy policy = BasePolicy::FirstAppropriate);

struct ResolutionTree {
  int root_writhe = 0;
  int root_circles = 0;
  std::vector<TreeNode> nodes;
  std::vector<Leaf> leaves() const;
};
ResolutionTree build_coherent_tree(const LinkDiagram& d, BasePolicy policy = BasePolicy::FirstAppropriate);

// (-1)^t' z^t a^(w(D)-w(U)) (a^-1 - a)^(#U-1) z^(1-#U)
LaurentPoly2 leaf_contribution(int root_writhe, const Leaf& leaf);
// The same term written with (a - a^-1)^(#U-1), as the leaf expansion is
// usually displayed.
LaurentPoly2 leaf_contribution_displayed(int root_writhe, const Leaf& leaf);
LaurentPoly2 homfly_from_tree(const ResolutionTree& tree);
// w(D) - w(U) + #U - 1 == w(D) + s(D) - 1
bool leaf_highest_a_test(int root_writhe, int root_circles, const Leaf& leaf);

// Thread-safe memo table keyed by canonical diagram form. Stops inserting
// once capacity entries are held (MFW_MEMO_CAP overrides the default).
class PolyCache {
 public:
  explicit PolyCache(std::size_t capacity = default_capacity());
  std::optional<LaurentPoly2> get(const std::string& key) const;
  void put(const std::string& key, const LaurentPoly2& value);
  std::size_t size() const;
  static std::size_t default_capacity();

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, LaurentPoly2> table_;
  std::size_t capacity_;
};

PolyCache& shared_poly_cache();

LaurentPoly2 homfly_oracle(const LinkDiagram& d, PolyCache* cache = nullptr);
LaurentPoly2 homfly_coherent(const LinkDiagram& d, BasePolicy policy = BasePolicy::FirstAppropriate);

enum class Engine { Coherent, Oracle };
LaurentPoly2 homfly(const LinkDiagram& d, Engine engine = Engine::Oracle);

}  // namespace mfw
