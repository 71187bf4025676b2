#pragma once

#include <cstdint>
#include <vector>

#include "pdd/foodweb.hpp"
#include "pdd/solve_result.hpp"

namespace pdd {

// Exhaustive maximum of diversity over all viable sets of size <= B, by
// subset enumeration in increasing cardinality. The witness is the
// lexicographically smallest optimum set. Throws beyond size_limit.
SolveResult solve_bruteforce(const PddInstance& inst, int size_limit = 22);

// All viable sets of size <= max_size, in lexicographic order.
std::vector<SpeciesSet> enumerate_viable(const PddInstance& inst, std::int64_t max_size,
                                         int size_limit = 16);

}  // namespace pdd
