#include "pdd/solver_dp.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <string>

namespace pdd {

DpSolver::DpSolver(const PddInstance& inst, const TreeExtension& ext)
    : inst_(inst), ext_(ext) {
  std::vector<std::string> violations = validate_extension(inst.web(), ext);
  if (!violations.empty()) {
    std::string msg = "invalid extension:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }
  const int n = inst.web().size();
  ancestors_ = ancestor_lists(inst.web(), ext);
  tables_.resize(n);
  ell_cap_ = static_cast<int>(std::min<std::int64_t>(inst.budget(), n));

  // Children ordered by the smallest vertex index in their subtree.
  std::vector<int> subtree_min(n);
  for (int v : ext.post_order()) {
    subtree_min[v] = v;
    for (int w : ext.children(v)) subtree_min[v] = std::min(subtree_min[v], subtree_min[w]);
  }
  for (int v = 0; v < n; ++v) {
    tables_[v].iface = ancestors_[v];
    tables_[v].ell_cap = ell_cap_;
    tables_[v].children = ext.children(v);
    std::sort(tables_[v].children.begin(), tables_[v].children.end(),
              [&](int a, int b) { return subtree_min[a] < subtree_min[b]; });
    stats_.max_interface =
        std::max(stats_.max_interface, static_cast<int>(tables_[v].iface.size()));
  }
}

std::uint32_t DpSolver::child_mask(int v, int child, std::uint32_t parent_mask,
                                   bool with_v) const {
  const std::vector<int>& pi = tables_[v].iface;
  const std::vector<int>& ci = tables_[child].iface;
  std::uint32_t mask = 0;
  for (std::size_t b = 0; b < ci.size(); ++b) {
    int u = ci[b];
    if (u == v) {
      if (with_v) mask |= std::uint32_t{1} << b;
      continue;
    }
    // A_child subseteq A_v cup {v}: u must be an interface member of v.
    auto it = std::lower_bound(pi.begin(), pi.end(), u);
    std::size_t pos = static_cast<std::size_t>(it - pi.begin());
    if ((parent_mask >> pos) & 1) mask |= std::uint32_t{1} << b;
  }
  return mask;
}

std::vector<std::int64_t> DpSolver::max_plus_convolve(const std::vector<std::int64_t>& f,
                                                      const std::vector<std::int64_t>& g) {
  if (f.empty() || g.empty()) return {};
  std::vector<std::int64_t> out(f.size() + g.size() - 1, kNegInf);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == kNegInf) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] == kNegInf) continue;
      out[i + j] = std::max(out[i + j], f[i] + g[j]);
    }
  }
  return out;
}

void DpSolver::fill_node(int v) {
  NodeTable& tab = tables_[v];
  const int num_masks = tab.num_masks();
  const int width = ell_cap_ + 1;
  tab.value.assign(static_cast<std::size_t>(num_masks) * width, kNegInf);
  tab.chose_v.assign(tab.value.size(), 0);
  tab.split.assign(static_cast<std::size_t>(tab.children.size()) * num_masks * width, 0);
  stats_.main_entries += tab.value.size();

  // Per-mask feasibility of selecting v: source, or prey weight >= 1 in A'.
  std::vector<char> viable(num_masks, 1);
  if (!inst_.web().is_source(v)) {
    std::vector<Rational> weight(tab.iface.size(), Rational(0));
    for (int a : inst_.web().in_arcs(v)) {
      int u = inst_.web().arcs()[a].prey;
      auto it = std::lower_bound(tab.iface.begin(), tab.iface.end(), u);
      weight[it - tab.iface.begin()] = inst_.gamma(a);
    }
    std::vector<Rational> sums(num_masks, Rational(0));
    for (int mask = 1; mask < num_masks; ++mask) {
      int low = std::countr_zero(static_cast<std::uint32_t>(mask));
      sums[mask] = sums[mask & (mask - 1)] + weight[low];
      viable[mask] = sums[mask] >= 1;
    }
    viable[0] = false;
  }

  const int t = static_cast<int>(tab.children.size());
  if (t == 0) {
    for (int mask = 0; mask < num_masks; ++mask) {
      std::int64_t* row = &tab.value[static_cast<std::size_t>(mask) * width];
      row[0] = 0;
      if (ell_cap_ >= 1 && viable[mask]) {
        row[1] = inst_.d(v);
        tab.chose_v[static_cast<std::size_t>(mask) * width + 1] = 1;
      }
    }
    return;
  }

  std::vector<std::vector<std::int64_t>> aux(t, std::vector<std::int64_t>(width));
  std::vector<std::vector<std::uint16_t>> choice(t, std::vector<std::uint16_t>(width));
  std::vector<std::uint32_t> cmask(t);

  for (int mask = 0; mask < num_masks; ++mask) {
    std::int64_t* row = &tab.value[static_cast<std::size_t>(mask) * width];
    for (int take_v = 0; take_v <= 1; ++take_v) {
      if (take_v && !viable[mask]) continue;
      for (int j = 0; j < t; ++j)
        cmask[j] = child_mask(v, tab.children[j], static_cast<std::uint32_t>(mask),
                              take_v != 0);
      // Left-to-right merge of children rows (max-plus).
      const NodeTable& first = tables_[tab.children[0]];
      for (int ell = 0; ell <= ell_cap_; ++ell) {
        aux[0][ell] = first.at(cmask[0], ell);
        choice[0][ell] = static_cast<std::uint16_t>(ell);
      }
      stats_.aux_entries += width;
      for (int j = 1; j < t; ++j) {
        const NodeTable& child = tables_[tab.children[j]];
        for (int ell = ell_cap_; ell >= 0; --ell) {
          std::int64_t best = kNegInf;
          std::uint16_t best_lj = 0;
          for (int lj = 0; lj <= ell; ++lj) {
            std::int64_t cand = add_values(aux[j - 1][ell - lj], child.at(cmask[j], lj));
            if (cand != kNegInf && cand > best) {
              best = cand;
              best_lj = static_cast<std::uint16_t>(lj);
            }
          }
          aux[j][ell] = best;
          choice[j][ell] = best_lj;
        }
        stats_.aux_entries += width;
      }
      for (int ell_children = 0; ell_children + take_v <= ell_cap_; ++ell_children) {
        if (aux[t - 1][ell_children] == kNegInf) continue;
        const int ell = ell_children + take_v;
        std::int64_t total = aux[t - 1][ell_children] + (take_v ? inst_.d(v) : 0);
        if (total <= row[ell]) continue;
        row[ell] = total;
        std::size_t at = static_cast<std::size_t>(mask) * width + ell;
        tab.chose_v[at] = static_cast<std::uint8_t>(take_v);
        // Recover the per-child split from the choice matrix.
        int rest = ell_children;
        for (int j = t - 1; j >= 0; --j) {
          std::uint16_t lj = choice[j][rest];
          tab.split[(static_cast<std::size_t>(j) * num_masks + mask) * width + ell] = lj;
          rest -= lj;
        }
      }
    }
  }
}

void DpSolver::collect_witness(int v, std::uint32_t mask, int ell, SpeciesSet& out) const {
  const NodeTable& tab = tables_[v];
  const int width = ell_cap_ + 1;
  std::size_t at = static_cast<std::size_t>(mask) * width + ell;
  if (tab.value[at] == kNegInf)
    throw std::logic_error("witness reconstruction hit an infeasible entry");
  bool took_v = tab.chose_v[at] != 0;
  if (took_v) out.insert(v);
  for (std::size_t j = 0; j < tab.children.size(); ++j) {
    int lj = tab.split[(j * tab.num_masks() + mask) * width + ell];
    collect_witness(tab.children[j], child_mask(v, tab.children[j], mask, took_v), lj, out);
  }
}

SolveResult DpSolver::solve() {
  auto start = std::chrono::steady_clock::now();
  for (int v : ext_.post_order()) fill_node(v);

  const int root = ext_.root();
  const NodeTable& rtab = tables_[root];
  // Compatible sets have exact size ell; the optimum over sets of size <= B
  // is the best entry over ell = 0..B'. (ell = 0 is always feasible.)
  SolveResult result;
  result.optimum = kNegInf;
  int best_ell = 0;
  for (int ell = 0; ell <= ell_cap_; ++ell) {
    std::int64_t val = rtab.at(0, ell);
    if (val != kNegInf && val > result.optimum) {
      result.optimum = val;
      best_ell = ell;
    }
  }
  result.witness = SpeciesSet(inst_.web().size());
  collect_witness(root, 0, best_ell, result.witness);
  result.yes = result.optimum >= inst_.target();
  stats_.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.stats = stats_;
  return result;
}

SolveResult solve_dp(const PddInstance& inst, const TreeExtension& ext) {
  return DpSolver(inst, ext).solve();
}

}  // namespace pdd
