#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdd/foodweb.hpp"

namespace pdd {

// A Capacitated Dominating Set instance: pick at most k vertices S and assign
// every other vertex to an adjacent member of S without exceeding capacities.
class CdsInstance {
 public:
  CdsInstance(std::vector<std::string> names, std::vector<std::pair<int, int>> edges,
              std::vector<std::int64_t> capacity, std::int64_t k);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  int index_of(const std::string& name) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // u < v, sorted
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::int64_t capacity(int v) const { return capacity_[v]; }
  std::int64_t k() const { return k_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::int64_t> capacity_;
  std::int64_t k_;
  std::vector<std::vector<int>> adj_;
};

struct CdsSolution {
  std::vector<int> dominating;     // sorted member indices
  std::vector<int> assignment;     // f: per vertex, dominator index or -1 for members
};

// Checks |S| <= k, f(v) adjacent to v and in S, and capacities.
std::vector<std::string> cds_violations(const CdsInstance& cds, const CdsSolution& sol);

// Lexicographically first feasible (S, f), if any. Assignment feasibility is
// decided by capacitated augmenting-path matching. Throws beyond size_limit.
std::optional<CdsSolution> solve_cds_bruteforce(const CdsInstance& cds, int size_limit = 12);

struct ReductionParams {
  std::int64_t n = 0, m = 0;
  std::int64_t C = 0, B = 0, D0 = 0, D1 = 0, D = 0;
};

// C = 3m+1, B = Ck + C*sum c(v) + 2n + 4m, D0 = 2n(C+B) + 2m(2C+5),
// D1 = (n+1)D0, D = 2nD1 + kD0; overflow-checked (throws std::overflow_error).
// Capacities are clamped to degree and k to n before evaluation.
ReductionParams derive_params(const CdsInstance& cds);

struct QuotaType {
  std::int64_t delta = 0, ell = 0, r = 0, M = 1;
};

struct WidgetSpec {
  enum class Kind { Selector, Quota };
  Kind kind = Kind::Selector;
  int root = -1;
  std::int64_t C = 1;  // selector parameter
  QuotaType q;         // quota parameters

  std::vector<int> selector_leaves;
  struct Chunk {
    int vertex;
    std::vector<int> prey;
  };
  std::vector<Chunk> big;
  std::vector<Chunk> medium;
  std::vector<int> small;

  // Species count of the widget (root included).
  std::int64_t vertex_count() const;
  // Arcs internal to the widget.
  std::int64_t arc_count() const;
};

struct ReductionMap {
  ReductionParams params;
  std::vector<std::int64_t> capacity;  // clamped c(v)
  std::int64_t k = 0;                  // clamped k
  std::vector<int> v0, v1, v2;         // widget roots per CDS vertex
  std::vector<WidgetSpec> selector;    // S_v
  std::vector<WidgetSpec> q1;          // Q_v^1
  std::vector<WidgetSpec> q2;          // Q_v^2
  std::map<std::pair<int, int>, WidgetSpec> edge_widget;  // Q_{u,v}, ordered pair

  int edge_root(int u, int v) const { return edge_widget.at({u, v}).root; }
};

// Standalone widget builders; namespace_prefix seeds the species names.
// Species are appended to names/arcs; the returned spec records roles.
WidgetSpec build_selector(std::int64_t C, const std::string& namespace_prefix,
                          std::vector<std::string>& names, std::vector<Arc>& arcs);
WidgetSpec build_quota(const QuotaType& q, std::int64_t B, const std::string& namespace_prefix,
                       std::vector<std::string>& names, std::vector<Arc>& arcs);

// The CDS -> 1/2-PDDs reduction. Diversities: d(v0) = D0, d(v1) = d(v2) = D1,
// everything else 1; gamma per the alpha = 1/2 convention.
std::pair<PddInstance, ReductionMap> reduce_cds(const CdsInstance& cds);

// Constructive direction: a viable set P with |P| <= B and d(P) >= D built
// from a valid CDS solution (padded to |S| = k first). Throws on invalid sol.
SpeciesSet forward_witness(const CdsInstance& cds, const CdsSolution& sol,
                           const PddInstance& reduced, const ReductionMap& map);

// Backward direction: recovers (S, f) from a viable set P with |P| <= B and
// d(P) >= D. Throws on precondition failure; extraction failure on a
// conforming input signals a reduction bug.
CdsSolution extract_cds_solution(const CdsInstance& cds, const PddInstance& reduced,
                                 const ReductionMap& map, const SpeciesSet& p);

}  // namespace pdd
