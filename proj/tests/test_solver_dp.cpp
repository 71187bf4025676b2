#include <doctest.h>

#include "helpers.hpp"
#include "pdd/solver_bf.hpp"
#include "pdd/solver_dp.hpp"

using namespace pdd;
using pdd_test::make_w1;

TEST_CASE("max-plus convolution") {
  std::vector<std::int64_t> f{0, 5, kNegInf};
  std::vector<std::int64_t> g{0, kNegInf, 7};
  auto h = DpSolver::max_plus_convolve(f, g);
  CHECK(h == std::vector<std::int64_t>{0, 5, 7, 12, kNegInf});
}

TEST_CASE("leaf table rows on the running example") {
  PddInstance w1 = make_w1();
  TreeExtension path({-1, 0, 1});
  DpSolver solver(w1, path);
  solver.solve();
  const auto& c = solver.table(2);
  REQUIRE(c.iface == std::vector<int>{0, 1});
  // A' = {a,b}: gamma sums to 1, so one-member row holds d(c) = 4.
  CHECK(c.at(0b11, 1) == 4);
  // A' = {a}: 1/2 < 1.
  CHECK(c.at(0b01, 1) == kNegInf);
  for (std::uint32_t mask = 0; mask < 4; ++mask) CHECK(c.at(mask, 0) == 0);
}

TEST_CASE("root table on the running example") {
  PddInstance w1 = make_w1();
  TreeExtension path({-1, 0, 1});
  DpSolver solver(w1, path);
  SolveResult res = solver.solve();
  const auto& a = solver.table(0);
  CHECK(a.at(0, 2) == 8);
  CHECK(res.optimum == 8);
  CHECK(res.yes);
  CHECK(res.witness == SpeciesSet::of(3, {0, 1}));
  CHECK(res.stats.main_entries > 0);
  CHECK(res.stats.max_interface == 2);
}

TEST_CASE("solve_dp edge cases on the running example") {
  TreeExtension path({-1, 0, 1});
  SolveResult zero = solve_dp(make_w1(0, 0), path);
  CHECK(zero.optimum == 0);
  CHECK(zero.yes);
  CHECK(zero.witness.size() == 0);

  SolveResult no = solve_dp(make_w1(2, 9), path);
  CHECK(no.optimum == 8);
  CHECK_FALSE(no.yes);
}

TEST_CASE("table values are monotone in the ancestor mask") {
  PddInstance inst = random_instance(17, 7, 0.5, GammaStyle::Alpha);
  TreeExtension ext = greedy_extension(inst.web());
  DpSolver solver(inst, ext);
  solver.solve();
  for (int v = 0; v < inst.web().size(); ++v) {
    const auto& tab = solver.table(v);
    const int masks = tab.num_masks();
    for (int mask = 0; mask < masks; ++mask)
      for (int sup = mask; sup < masks; sup = (sup + 1) | mask)
        for (int ell = 0; ell <= tab.ell_cap; ++ell)
          CHECK(tab.at(mask, ell) <= tab.at(sup, ell));
  }
}

TEST_CASE("dp matches the oracle over a mixed random corpus") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 1 + static_cast<int>(seed % 9);
    double p = 0.2 + 0.2 * static_cast<double>(seed % 3);
    GammaStyle style = seed % 2 ? GammaStyle::Alpha : GammaStyle::UniformSmallDenominator;
    PddInstance inst = random_instance(seed, n, p, style);
    SolveResult oracle = solve_bruteforce(inst);
    for (const TreeExtension& ext :
         {topo_path_extension(inst.web()), greedy_extension(inst.web()),
          exact_min_nsw(inst.web()).first}) {
      SolveResult dp = solve_dp(inst, ext);
      CHECK(dp.optimum == oracle.optimum);
      CHECK(dp.yes == oracle.yes);
      CHECK(is_viable(inst, dp.witness));
      CHECK(static_cast<std::int64_t>(dp.witness.size()) <= inst.budget());
      CHECK(diversity(inst, dp.witness) == dp.optimum);
    }
  }
}

TEST_CASE("solver rejects a foreign extension") {
  PddInstance w1 = make_w1();
  TreeExtension reversed({1, 2, -1});
  CHECK_THROWS_AS(solve_dp(w1, reversed), std::invalid_argument);
}
