#include "pdd/solver_bf.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace pdd {

namespace {

SpeciesSet from_mask(std::uint64_t mask, int n) {
  SpeciesSet s(n);
  while (mask != 0) {
    s.insert(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

}  // namespace

SolveResult solve_bruteforce(const PddInstance& inst, int size_limit) {
  const int n = inst.web().size();
  if (n > size_limit) throw std::invalid_argument("too large for brute force");
  auto start = std::chrono::steady_clock::now();
  const int cap = static_cast<int>(std::min<std::int64_t>(inst.budget(), n));

  SolveResult result;
  result.optimum = 0;
  result.witness = SpeciesSet(n);
  // Increasing cardinality; Gosper's hack within each size class.
  for (int size = 1; size <= cap; ++size) {
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      SpeciesSet s = from_mask(mask, n);
      if (is_viable(inst, s)) {
        std::int64_t d = diversity(inst, s);
        if (d > result.optimum ||
            (d == result.optimum && SpeciesSet::lex_less(s, result.witness)))
          result.optimum = d, result.witness = s;
      }
      std::uint64_t low = mask & (~mask + 1);
      std::uint64_t ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
  }
  result.yes = result.optimum >= inst.target();
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SpeciesSet> enumerate_viable(const PddInstance& inst, std::int64_t max_size,
                                         int size_limit) {
  const int n = inst.web().size();
  if (n > size_limit) throw std::invalid_argument("too large for viability enumeration");
  std::vector<SpeciesSet> out;
  SpeciesSet current(n);
  // DFS in index order emits sets in lexicographic order of member sequences.
  // Viability is not downward-closed, so non-viable prefixes still recurse.
  auto walk = [&](auto&& self, int next) -> void {
    if (is_viable(inst, current)) out.push_back(current);
    if (static_cast<std::int64_t>(current.size()) >= max_size) return;
    for (int v = next; v < n; ++v) {
      current.insert(v);
      self(self, v + 1);
      current.erase(v);
    }
  };
  walk(walk, 0);
  return out;
}

}  // namespace pdd
