#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdd/foodweb.hpp"
#include "pdd/species_set.hpp"

namespace pdd {

// A rooted tree on 0..n-1 given by a parent map (parent[root] = -1).
// Construction verifies that the map is a single rooted tree.
class TreeExtension {
 public:
  explicit TreeExtension(std::vector<int> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& parent_map() const { return parent_; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  int depth(int v) const { return depth_[v]; }

  // u is a proper ancestor of v.
  bool is_ancestor(int u, int v) const {
    return u != v && tin_[u] <= tin_[v] && tout_[v] <= tout_[u];
  }

  const std::vector<int>& post_order() const { return post_; }

 private:
  std::vector<int> parent_;
  int root_ = -1;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_, tin_, tout_, post_;
};

// Violations of the raw parent map against the web: forest/cycle defects,
// size mismatch, and food-web arcs whose tail is not a proper ancestor of
// their head.
std::vector<std::string> extension_violations(const FoodWeb& web,
                                              const std::vector<int>& parent);

// Builds a TreeExtension, throwing std::invalid_argument listing violations.
TreeExtension make_extension(const FoodWeb& web, std::vector<int> parent);

// Re-checks a constructed extension against a web (spanning + arc condition).
std::vector<std::string> validate_extension(const FoodWeb& web, const TreeExtension& t);

// A_v: proper ancestors of v in t that have an arc into v's subtree.
std::vector<std::vector<int>> ancestor_lists(const FoodWeb& web, const TreeExtension& t);
std::vector<SpeciesSet> ancestor_sets(const FoodWeb& web, const TreeExtension& t);

struct WidthReport {
  std::vector<int> node_width;
  std::vector<int> edge_width;
  int max_node_width = 0;
  int max_edge_width = 0;
};

// node_width(v) = |A_v| + 1 if v has an out-neighbour (which always lies in
// v's subtree), else |A_v|; with count_self_always the +1 is unconditional.
// edge_width(v) = number of arcs whose tail is a proper ancestor of v and
// whose head is in v's subtree.
WidthReport width_report(const FoodWeb& web, const TreeExtension& t,
                         bool count_self_always = false);

// A path in smallest-index-first topological order; always valid.
TreeExtension topo_path_extension(const FoodWeb& web);

// Deterministic heuristic: recursive top-down construction over the weakly
// connected components of the remaining vertices, picking at each step the
// in-degree-0 vertex of the component with the smallest out-degree (ties by
// index). Valid by construction; no width guarantee.
TreeExtension greedy_extension(const FoodWeb& web);

// Minimum node width over all tree extensions, by memoized search over
// component subsets. Throws std::invalid_argument beyond node_limit.
std::pair<TreeExtension, int> exact_min_nsw(const FoodWeb& web, int node_limit = 10);

}  // namespace pdd
