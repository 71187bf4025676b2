#pragma once

#include <cstdint>
#include <vector>

#include "pdd/extension.hpp"
#include "pdd/foodweb.hpp"
#include "pdd/solve_result.hpp"

namespace pdd {

// Dynamic program over a tree extension. For every tree node v, every
// A' subseteq A_v (a bitmask over the sorted members of A_v) and every
// ell in 0..B', the table stores the maximum diversity of an ell-subset
// P of v's subtree in which every member is a source or has prey weight
// >= 1 within P cup A'. B' = min(B, n).
class DpSolver {
 public:
  DpSolver(const PddInstance& inst, const TreeExtension& ext);

  SolveResult solve();

  struct NodeTable {
    std::vector<int> iface;     // A_v, sorted ascending
    std::vector<int> children;  // smallest-subtree-index first
    int ell_cap = 0;            // B'
    // value[mask * (ell_cap+1) + ell]
    std::vector<std::int64_t> value;
    // witness breadcrumbs, same indexing as value
    std::vector<std::uint8_t> chose_v;
    // split[(child_idx * num_masks + mask) * (ell_cap+1) + ell] = ell_child
    std::vector<std::uint16_t> split;

    int num_masks() const { return 1 << static_cast<int>(iface.size()); }
    std::int64_t at(std::uint32_t mask, int ell) const {
      return value[mask * (ell_cap + 1) + ell];
    }
  };

  const NodeTable& table(int v) const { return tables_[v]; }
  const SolveStats& stats() const { return stats_; }

  // Mask over A_child induced by choosing A' = parent_mask over A_v and
  // optionally v itself.
  std::uint32_t child_mask(int v, int child, std::uint32_t parent_mask, bool with_v) const;

  // Max-plus convolution of two rows (kNegInf absorbs addition).
  static std::vector<std::int64_t> max_plus_convolve(const std::vector<std::int64_t>& f,
                                                     const std::vector<std::int64_t>& g);

 private:
  void fill_node(int v);
  void collect_witness(int v, std::uint32_t mask, int ell, SpeciesSet& out) const;

  const PddInstance& inst_;
  const TreeExtension& ext_;
  std::vector<std::vector<int>> ancestors_;  // A_v lists
  std::vector<NodeTable> tables_;
  int ell_cap_ = 0;
  SolveStats stats_;
};

SolveResult solve_dp(const PddInstance& inst, const TreeExtension& ext);

}  // namespace pdd
