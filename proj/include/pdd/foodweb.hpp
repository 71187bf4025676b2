#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdd/rational.hpp"
#include "pdd/species_set.hpp"

namespace pdd {

// Arc from prey to predator.
struct Arc {
  int prey;
  int predator;
};

// A food web: a DAG on densely indexed species. Construction verifies
// acyclicity and rejects self-loops, parallel arcs, and duplicate or empty
// names (throws std::invalid_argument).
class FoodWeb {
 public:
  FoodWeb(std::vector<std::string> names, std::vector<Arc> arcs);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if unknown

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& in_arcs(int v) const { return in_arcs_[v]; }
  const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }
  int in_degree(int v) const { return static_cast<int>(in_arcs_[v].size()); }
  int out_degree(int v) const { return static_cast<int>(out_arcs_[v].size()); }
  bool is_source(int v) const { return in_arcs_[v].empty(); }

  // Deterministic: among ready vertices, smallest index first.
  std::vector<int> topological_order() const;

 private:
  std::vector<std::string> names_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> in_arcs_;   // arc ids, by head
  std::vector<std::vector<int>> out_arcs_;  // arc ids, by tail
  std::unordered_map<std::string, int> index_;
};

// A Weighted PDDs instance (web, gamma, d, B, D). Construction enforces
// 0 < gamma <= 1, d >= 1, B >= 0, D >= 0, and that the total diversity fits
// a signed 64-bit integer.
class PddInstance {
 public:
  PddInstance(FoodWeb web, std::vector<Rational> gamma, std::vector<std::int64_t> d,
              std::int64_t budget, std::int64_t target);

  const FoodWeb& web() const { return web_; }
  const Rational& gamma(int arc_id) const { return gamma_[arc_id]; }
  std::int64_t d(int v) const { return d_[v]; }
  std::int64_t budget() const { return budget_; }
  std::int64_t target() const { return target_; }
  std::int64_t total_diversity() const { return total_diversity_; }

 private:
  FoodWeb web_;
  std::vector<Rational> gamma_;
  std::vector<std::int64_t> d_;
  std::int64_t budget_;
  std::int64_t target_;
  std::int64_t total_diversity_;
};

// Sum of gamma over arcs (u,v) with u in s; 0 if none.
Rational gamma_sum(const PddInstance& inst, int v, const SpeciesSet& s);

// True iff every non-source member v of s has gamma_sum(inst, v, s) >= 1.
bool is_viable(const PddInstance& inst, const SpeciesSet& s);

std::int64_t diversity(const PddInstance& inst, const SpeciesSet& s);

// The alpha-PDDs specialization: gamma(u,v) = 1/(alpha * deg^-(v)), clamped
// to 1 when the formula exceeds 1 (a single prey then suffices).
PddInstance make_alpha_instance(const FoodWeb& web, const Rational& alpha,
                                std::vector<std::int64_t> d, std::int64_t budget,
                                std::int64_t target);

// Unvalidated instance description, as read from a file. validate_instance
// reports all contract violations instead of failing on the first one.
struct InstanceData {
  struct SpeciesLine {
    std::string name;
    std::int64_t d = 1;
  };
  struct ArcLine {
    std::string prey;
    std::string predator;
    Rational gamma;
  };
  std::vector<SpeciesLine> species;
  std::vector<ArcLine> arcs;
  std::int64_t budget = 0;
  std::int64_t target = 0;
};

std::vector<std::string> validate_instance(const InstanceData& data);
PddInstance build_instance(const InstanceData& data);  // throws listing violations
InstanceData to_data(const PddInstance& inst);

enum class GammaStyle { Alpha, UniformSmallDenominator };

// Seed-deterministic random instance: a random permutation is taken as
// topological order and forward arcs are added independently; d is uniform in
// [1,10], B in [0,n], D in [0, sum d]. Byte-for-byte reproducible.
PddInstance random_instance(std::uint64_t seed, int n, double arc_probability,
                            GammaStyle style, const Rational& alpha = Rational(1, 2));

}  // namespace pdd
