#include "pdd/extension.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pdd {

TreeExtension::TreeExtension(std::vector<int> parent) : parent_(std::move(parent)) {
  const int n = static_cast<int>(parent_.size());
  if (n == 0) throw std::invalid_argument("empty extension");
  children_.resize(n);
  for (int v = 0; v < n; ++v) {
    if (parent_[v] == -1) {
      if (root_ != -1) throw std::invalid_argument("not a single rooted tree: two roots");
      root_ = v;
    } else if (parent_[v] < 0 || parent_[v] >= n || parent_[v] == v) {
      throw std::invalid_argument("invalid parent entry");
    } else {
      children_[parent_[v]].push_back(v);
    }
  }
  if (root_ == -1) throw std::invalid_argument("not a single rooted tree: no root");
  depth_.assign(n, -1);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  post_.clear();
  post_.reserve(n);
  // Iterative DFS; children are already in ascending index order.
  std::vector<std::pair<int, std::size_t>> stack;
  int clock = 0;
  depth_[root_] = 0;
  tin_[root_] = clock++;
  stack.emplace_back(root_, 0);
  while (!stack.empty()) {
    auto& [v, ci] = stack.back();
    if (ci < children_[v].size()) {
      int w = children_[v][ci++];
      depth_[w] = depth_[v] + 1;
      tin_[w] = clock++;
      stack.emplace_back(w, 0);
    } else {
      tout_[v] = clock++;
      post_.push_back(v);
      stack.pop_back();
    }
  }
  if (static_cast<int>(post_.size()) != n)
    throw std::invalid_argument("not a single rooted tree: cycle in parent map");
}

std::vector<std::string> extension_violations(const FoodWeb& web,
                                              const std::vector<int>& parent) {
  std::vector<std::string> out;
  const int n = web.size();
  if (static_cast<int>(parent.size()) != n) {
    out.push_back("extension does not span the species set");
    return out;
  }
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    if (parent[v] == -1) ++roots;
    else if (parent[v] < 0 || parent[v] >= n || parent[v] == v)
      out.push_back("invalid parent of " + web.name(v));
  }
  if (roots != 1) {
    out.push_back("not a single rooted tree (" + std::to_string(roots) + " roots)");
    return out;
  }
  if (!out.empty()) return out;
  std::optional<TreeExtension> built;
  try {
    built.emplace(parent);
  } catch (const std::invalid_argument& e) {
    out.push_back(e.what());
    return out;
  }
  const TreeExtension& t = *built;
  for (const Arc& arc : web.arcs())
    if (!t.is_ancestor(arc.prey, arc.predator))
      out.push_back("arc (" + web.name(arc.prey) + "," + web.name(arc.predator) +
                    "): tail is not a proper ancestor of head");
  return out;
}

TreeExtension make_extension(const FoodWeb& web, std::vector<int> parent) {
  std::vector<std::string> violations;
  try {
    violations = extension_violations(web, parent);
  } catch (const std::invalid_argument& e) {
    violations.push_back(e.what());
  }
  if (!violations.empty()) {
    std::string msg = "invalid extension:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }
  return TreeExtension(std::move(parent));
}

std::vector<std::string> validate_extension(const FoodWeb& web, const TreeExtension& t) {
  if (t.size() != web.size()) return {"extension does not span the species set"};
  std::vector<std::string> out;
  for (const Arc& arc : web.arcs())
    if (!t.is_ancestor(arc.prey, arc.predator))
      out.push_back("arc (" + web.name(arc.prey) + "," + web.name(arc.predator) +
                    "): tail is not a proper ancestor of head");
  return out;
}

namespace {

// Small-to-large merge of crossing-arc tail sets in post-order. After
// processing v, the set holds exactly A_v. visit(v, set) is called before the
// set is merged into the parent's.
template <class Visit>
void fold_ancestor_sets(const FoodWeb& web, const TreeExtension& t, Visit&& visit) {
  const int n = web.size();
  std::vector<std::unordered_set<int>> holder(n);
  for (int v : t.post_order()) {
    std::unordered_set<int>* acc = &holder[v];
    for (int w : t.children(v)) {
      if (holder[w].size() > acc->size()) std::swap(holder[w], *acc);
      for (int u : holder[w]) acc->insert(u);
      holder[w].clear();
    }
    for (int a : web.in_arcs(v)) acc->insert(web.arcs()[a].prey);
    acc->erase(v);
    visit(v, *acc);
  }
}

}  // namespace

std::vector<std::vector<int>> ancestor_lists(const FoodWeb& web, const TreeExtension& t) {
  std::vector<std::vector<int>> out(web.size());
  fold_ancestor_sets(web, t, [&](int v, const std::unordered_set<int>& s) {
    out[v].assign(s.begin(), s.end());
    std::sort(out[v].begin(), out[v].end());
  });
  return out;
}

std::vector<SpeciesSet> ancestor_sets(const FoodWeb& web, const TreeExtension& t) {
  std::vector<SpeciesSet> out(web.size(), SpeciesSet(web.size()));
  fold_ancestor_sets(web, t, [&](int v, const std::unordered_set<int>& s) {
    for (int u : s) out[v].insert(u);
  });
  return out;
}

WidthReport width_report(const FoodWeb& web, const TreeExtension& t,
                         bool count_self_always) {
  const int n = web.size();
  WidthReport rep;
  rep.node_width.assign(n, 0);
  rep.edge_width.assign(n, 0);
  fold_ancestor_sets(web, t, [&](int v, const std::unordered_set<int>& s) {
    int self = (count_self_always || web.out_degree(v) > 0) ? 1 : 0;
    rep.node_width[v] = static_cast<int>(s.size()) + self;
  });
  // edge_width(v) = sum over subtree of in-degrees minus arcs internal to the
  // subtree; every out-neighbour of a subtree member inside Z_v stays inside.
  for (int v : t.post_order()) {
    int ew = web.in_degree(v) - web.out_degree(v);
    for (int w : t.children(v)) ew += rep.edge_width[w];
    rep.edge_width[v] = ew;
  }
  for (int v = 0; v < n; ++v) {
    rep.max_node_width = std::max(rep.max_node_width, rep.node_width[v]);
    rep.max_edge_width = std::max(rep.max_edge_width, rep.edge_width[v]);
  }
  return rep;
}

TreeExtension topo_path_extension(const FoodWeb& web) {
  std::vector<int> order = web.topological_order();
  std::vector<int> parent(web.size(), -1);
  for (std::size_t i = 1; i < order.size(); ++i) parent[order[i]] = order[i - 1];
  return TreeExtension(std::move(parent));
}

namespace {

// Shared skeleton of greedy_extension and exact_min_nsw: a tree extension is
// built top-down; after removing the chosen top vertex of a component, the
// weakly connected components of the rest become independent subtrees.
struct ComponentSplitter {
  const FoodWeb& web;
  std::vector<int> comp_id;
  explicit ComponentSplitter(const FoodWeb& w) : web(w), comp_id(w.size(), -1) {}

  // Splits `members` (successors-closed) into weakly connected components,
  // each sorted ascending; components ordered by smallest member.
  std::vector<std::vector<int>> split(const std::vector<int>& members) {
    for (int v : members) comp_id[v] = -2;  // in scope, unassigned
    std::vector<std::vector<int>> comps;
    for (int v : members) {
      if (comp_id[v] != -2) continue;
      std::vector<int> comp{v};
      comp_id[v] = static_cast<int>(comps.size());
      for (std::size_t i = 0; i < comp.size(); ++i) {
        int x = comp[i];
        auto push = [&](int y) {
          if (comp_id[y] == -2) {
            comp_id[y] = comp_id[v];
            comp.push_back(y);
          }
        };
        for (int a : web.in_arcs(x)) push(web.arcs()[a].prey);
        for (int a : web.out_arcs(x)) push(web.arcs()[a].predator);
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    for (int v : members) comp_id[v] = -1;
    return comps;
  }
};

bool is_local_source(const FoodWeb& web, const std::vector<char>& in_scope, int v) {
  for (int a : web.in_arcs(v))
    if (in_scope[web.arcs()[a].prey]) return false;
  return true;
}

}  // namespace

TreeExtension greedy_extension(const FoodWeb& web) {
  const int n = web.size();
  std::vector<int> parent(n, -2);
  ComponentSplitter splitter(web);
  std::vector<char> in_scope(n, 0);

  // Returns the top vertex of the subtree built for `members`.
  auto build = [&](auto&& self, std::vector<int> members, int attach) -> int {
    for (int v : members) in_scope[v] = 1;
    int best = -1;
    for (int v : members) {
      if (!is_local_source(web, in_scope, v)) continue;
      if (best == -1 || web.out_degree(v) < web.out_degree(best) ||
          (web.out_degree(v) == web.out_degree(best) && v < best))
        best = v;
    }
    for (int v : members) in_scope[v] = 0;
    parent[best] = attach;
    members.erase(std::find(members.begin(), members.end(), best));
    for (auto& comp : splitter.split(members)) self(self, std::move(comp), best);
    return best;
  };

  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  int root = -1;
  for (auto& comp : splitter.split(all)) {
    int top = build(build, std::move(comp), root == -1 ? -1 : root);
    if (root == -1) root = top;
  }
  return TreeExtension(std::move(parent));
}

namespace {

using Mask = std::uint32_t;

struct NswSearch {
  const FoodWeb& web;
  int n;
  std::vector<Mask> in_mask, out_mask;  // neighbour masks per vertex
  std::unordered_map<Mask, int> memo;

  explicit NswSearch(const FoodWeb& w) : web(w), n(w.size()), in_mask(n, 0), out_mask(n, 0) {
    for (const Arc& a : web.arcs()) {
      in_mask[a.predator] |= Mask{1} << a.prey;
      out_mask[a.prey] |= Mask{1} << a.predator;
    }
  }

  int ext_in_count(Mask comp) const {
    Mask tails = 0;
    for (Mask m = comp; m != 0; m &= m - 1)
      tails |= in_mask[std::countr_zero(m)];
    return std::popcount(tails & ~comp);
  }

  std::vector<Mask> components(Mask set) const {
    std::vector<Mask> comps;
    Mask rest = set;
    while (rest != 0) {
      Mask comp = Mask{1} << std::countr_zero(rest);
      for (;;) {
        Mask grown = comp;
        for (Mask m = comp; m != 0; m &= m - 1) {
          int v = std::countr_zero(m);
          grown |= (in_mask[v] | out_mask[v]) & set;
        }
        if (grown == comp) break;
        comp = grown;
      }
      comps.push_back(comp);
      rest &= ~comp;
    }
    return comps;
  }

  // Minimum node width over tree extensions of the sub-DAG on the weakly
  // connected, successors-closed set `comp`, counting the fixed external
  // in-neighbour interface.
  int solve(Mask comp) {
    auto it = memo.find(comp);
    if (it != memo.end()) return it->second;
    int ext = ext_in_count(comp);
    int best = std::numeric_limits<int>::max();
    for (Mask m = comp; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((in_mask[v] & comp) != 0) continue;  // v has prey inside: not a valid top
      int width = ext + (out_mask[v] != 0 ? 1 : 0);
      for (Mask sub : components(comp & ~(Mask{1} << v)))
        width = std::max(width, solve(sub));
      best = std::min(best, width);
    }
    memo[comp] = best;
    return best;
  }

  // Rebuilds an optimal tree using the memo; smallest-index top among optima.
  int build(Mask comp, int attach, std::vector<int>& parent) {
    int ext = ext_in_count(comp);
    int best_v = -1, best_w = std::numeric_limits<int>::max();
    for (Mask m = comp; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((in_mask[v] & comp) != 0) continue;
      int width = ext + (out_mask[v] != 0 ? 1 : 0);
      for (Mask sub : components(comp & ~(Mask{1} << v)))
        width = std::max(width, solve(sub));
      if (width < best_w) {
        best_w = width;
        best_v = v;
      }
    }
    parent[best_v] = attach;
    for (Mask sub : components(comp & ~(Mask{1} << best_v)))
      build(sub, best_v, parent);
    return best_v;
  }
};

}  // namespace

std::pair<TreeExtension, int> exact_min_nsw(const FoodWeb& web, int node_limit) {
  const int n = web.size();
  if (node_limit > 25) node_limit = 25;
  if (n > node_limit)
    throw std::invalid_argument("too large for exact node-scanwidth search");
  NswSearch search(web);
  Mask all = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<int> parent(n, -2);
  int width = 0, root = -1;
  for (Mask comp : search.components(all)) {
    width = std::max(width, search.solve(comp));
    int top = search.build(comp, root == -1 ? -1 : root, parent);
    if (root == -1) root = top;
  }
  return {TreeExtension(std::move(parent)), width};
}

}  // namespace pdd
