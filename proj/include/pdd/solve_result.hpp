#pragma once

#include <cstdint>
#include <limits>

#include "pdd/species_set.hpp"

namespace pdd {

// Absorbing "no compatible set" sentinel for table entries.
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

inline std::int64_t add_values(std::int64_t a, std::int64_t b) {
  return (a == kNegInf || b == kNegInf) ? kNegInf : a + b;
}

struct SolveStats {
  std::uint64_t main_entries = 0;  // main table states
  std::uint64_t aux_entries = 0;   // auxiliary (child-merge) states
  int max_interface = 0;           // max |A_v| over the extension
  double seconds = 0.0;
};

struct SolveResult {
  std::int64_t optimum = 0;  // >= 0: both solvers always admit the empty set
  SpeciesSet witness;
  bool yes = false;  // optimum >= target
  SolveStats stats;
};

}  // namespace pdd
