// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pdd/extension.hpp"
#include "pdd/foodweb.hpp"
#include "pdd/io.hpp"
#include "pdd/reduction.hpp"
#include "pdd/solver_bf.hpp"
#include "pdd/solver_dp.hpp"

using namespace pdd;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL");
  if (!ok && !detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

PddInstance corpus_instance(std::uint64_t seed) {
  const int n = 1 + static_cast<int>(seed % 10);
  const double p[] = {0.2, 0.4, 0.6};
  GammaStyle style = (seed / 3) % 2 ? GammaStyle::Alpha : GammaStyle::UniformSmallDenominator;
  return random_instance(seed, n, p[seed % 3], style);
}

std::vector<TreeExtension> corpus_extensions(const FoodWeb& web) {
  return {topo_path_extension(web), greedy_extension(web), exact_min_nsw(web).first};
}

CdsInstance random_cds(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  const int n = 1 + static_cast<int>(rng() % max_n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2) {
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
      }
  std::vector<std::int64_t> capacity(n);
  for (int v = 0; v < n; ++v) capacity[v] = static_cast<std::int64_t>(rng() % (degree[v] + 3));
  std::int64_t k = static_cast<std::int64_t>(rng() % (n + 1));
  return CdsInstance(std::move(names), std::move(edges), std::move(capacity), k);
}

// Criteria 1, 2, 3, 9 share the 500-instance corpus.
void run_solver_corpus() {
  bool equivalent = true, witnesses = true, state_bound = true, independent = true;
  std::string detail1, detail2, detail3, detail9;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    PddInstance inst = corpus_instance(seed);
    const int n = inst.web().size();
    SolveResult oracle = solve_bruteforce(inst);
    std::vector<std::int64_t> optima;
    for (const TreeExtension& ext : corpus_extensions(inst.web())) {
      SolveResult dp = solve_dp(inst, ext);
      optima.push_back(dp.optimum);
      if (dp.optimum != oracle.optimum || dp.yes != oracle.yes) {
        equivalent = false;
        if (detail1.empty())
          detail1 = "seed " + std::to_string(seed) + ": dp " + std::to_string(dp.optimum) +
                    " vs oracle " + std::to_string(oracle.optimum);
      }
      if (!is_viable(inst, dp.witness) ||
          static_cast<std::int64_t>(dp.witness.size()) > inst.budget() ||
          diversity(inst, dp.witness) != dp.optimum) {
        witnesses = false;
        if (detail2.empty()) detail2 = "seed " + std::to_string(seed);
      }
      int w = 0;
      for (const auto& a : ancestor_lists(inst.web(), ext))
        w = std::max(w, static_cast<int>(a.size()));
      const std::int64_t ell_cap = std::min<std::int64_t>(inst.budget(), n);
      const std::uint64_t bound = static_cast<std::uint64_t>(n) *
                                  static_cast<std::uint64_t>(ell_cap + 1) *
                                  (std::uint64_t{1} << w);
      if (dp.stats.main_entries > bound) {
        state_bound = false;
        if (detail3.empty())
          detail3 = "seed " + std::to_string(seed) + ": " +
                    std::to_string(dp.stats.main_entries) + " > " + std::to_string(bound);
      }
    }
    if (optima[0] != optima[1] || optima[0] != optima[2]) {
      independent = false;
      if (detail9.empty()) detail9 = "seed " + std::to_string(seed);
    }
  }
  report(1, "dp equals the exhaustive oracle on 500 seeded instances", equivalent, detail1);
  report(2, "every dp witness is viable, within budget, and optimum-tight", witnesses, detail2);
  report(3, "main-table states within n*(B'+1)*2^w", state_bound, detail3);
  report(9, "dp optima agree across all three extension strategies", independent, detail9);
}

void run_widget_sizes() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed = 0; seed < 100 && ok; ++seed) {
    CdsInstance cds = random_cds(seed, 8);
    auto [inst, map] = reduce_cds(cds);
    const FoodWeb& web = inst.web();
    auto check_quota = [&](const WidgetSpec& w) {
      const QuotaType& q = w.q;
      std::int64_t big = q.ell + std::max<std::int64_t>(0, q.r - q.delta);
      std::int64_t size = (2 * map.params.B - 1) * big + (2 * q.M - 1) * (q.r - q.ell) +
                          std::max<std::int64_t>(0, q.delta - q.r) + 1;
      if (w.vertex_count() != size || w.arc_count() != size - 1) {
        ok = false;
        detail = "seed " + std::to_string(seed) + ": quota size " +
                 std::to_string(w.vertex_count()) + " vs " + std::to_string(size);
      }
      if (web.in_degree(w.root) != 2 * std::max(q.delta, q.r)) {
        ok = false;
        detail = "seed " + std::to_string(seed) + ": quota root in-degree " +
                 std::to_string(web.in_degree(w.root));
      }
    };
    for (int v = 0; v < cds.size(); ++v) {
      const WidgetSpec& sel = map.selector[v];
      if (sel.vertex_count() != 2 * map.params.C - 1 ||
          sel.arc_count() != 2 * map.params.C - 2) {
        ok = false;
        detail = "seed " + std::to_string(seed) + ": selector size";
      }
      check_quota(map.q1[v]);
      check_quota(map.q2[v]);
    }
    for (const auto& [key, w] : map.edge_widget) check_quota(w);
  }
  report(4, "widget sizes and root in-degrees match the closed formulas", ok, detail);
}

void run_forward_soundness() {
  bool ok = true;
  std::string detail;
  int yes_count = 0;
  for (std::uint64_t seed = 0; seed < 60 && ok; ++seed) {
    CdsInstance cds = random_cds(seed + 1000, 6);
    auto sol = solve_cds_bruteforce(cds);
    if (!sol) continue;
    ++yes_count;
    auto [inst, map] = reduce_cds(cds);
    SpeciesSet p = forward_witness(cds, *sol, inst, map);
    if (!is_viable(inst, p) || static_cast<std::int64_t>(p.size()) > inst.budget() ||
        diversity(inst, p) < inst.target()) {
      ok = false;
      detail = "seed " + std::to_string(seed + 1000) + ": witness invalid (size " +
               std::to_string(p.size()) + "/" + std::to_string(inst.budget()) + ")";
      break;
    }
    CdsSolution back = extract_cds_solution(cds, inst, map, p);
    if (!cds_violations(cds, back).empty()) {
      ok = false;
      detail = "seed " + std::to_string(seed + 1000) + ": extraction invalid";
    }
  }
  if (yes_count == 0) {
    ok = false;
    detail = "corpus produced no yes-instances";
  }
  report(5, "forward witnesses are valid and extract back to CDS solutions", ok, detail);
}

void run_micro_roundtrip() {
  bool ok = true;
  std::string detail;
  {
    CdsInstance yes_cds({"x"}, {}, {0}, 1);
    auto [inst, map] = reduce_cds(yes_cds);
    SolveResult res = solve_bruteforce(inst);
    SpeciesSet expected(inst.web().size());
    expected.insert(map.v0[0]);
    expected.insert(map.v1[0]);
    expected.insert(map.v2[0]);
    bool match = inst.web().size() == 8 && inst.budget() == 3 && inst.target() == 40 &&
                 res.yes && res.witness == expected &&
                 solve_cds_bruteforce(yes_cds).has_value();
    if (!match) {
      ok = false;
      detail = "k=1 family mismatch";
    }
  }
  {
    CdsInstance no_cds({"x"}, {}, {0}, 0);
    auto [inst, map] = reduce_cds(no_cds);
    bool match = inst.budget() == 2 && inst.target() == 24 && !solve_bruteforce(inst).yes &&
                 !solve_cds_bruteforce(no_cds).has_value();
    if (!match) {
      ok = false;
      detail = "k=0 family mismatch";
    }
  }
  report(6, "micro reduction is yes iff the CDS instance is yes (oracle-checked)", ok, detail);
}

void run_width_sanity() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 200 && ok; ++iter) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 100 < 40) arcs.push_back({order[i], order[j]});
    FoodWeb web(std::move(names), std::move(arcs));
    std::vector<TreeExtension> exts{topo_path_extension(web), greedy_extension(web)};
    int heuristic_best = -1;
    for (const TreeExtension& t : exts) {
      WidthReport rep = width_report(web, t);
      auto anc = ancestor_lists(web, t);
      for (int v = 0; v < n; ++v)
        if (static_cast<int>(anc[v].size()) > rep.edge_width[v]) {
          ok = false;
          detail = "iter " + std::to_string(iter) + ": |A_v| > edge width at " + web.name(v);
        }
      int w = rep.max_node_width;
      heuristic_best = heuristic_best < 0 ? w : std::min(heuristic_best, w);
    }
    if (ok && n <= 10) {
      int exact = exact_min_nsw(web).second;
      if (exact > heuristic_best) {
        ok = false;
        detail = "iter " + std::to_string(iter) + ": exact " + std::to_string(exact) +
                 " above heuristics " + std::to_string(heuristic_best);
      }
    }
  }
  report(7, "ancestor counts within edge widths; exact minimum below heuristics", ok, detail);
}

void run_round_trips() {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& what) {
    if (ok) detail = what;
    ok = false;
  };
  {
    const std::string dir = FIXTURES_DIR;
    std::string w1_text = io::read_file(dir + "/w1.pdd");
    PddInstance w1 = io::parse_instance(w1_text);
    std::string canon = io::serialize_instance(w1);
    if (io::serialize_instance(io::parse_instance(canon)) != canon) fail("w1.pdd fixture");
    std::string ext_text = io::read_file(dir + "/w1_path.ext");
    if (io::serialize_extension(io::parse_extension(ext_text, w1.web()), w1.web()) != ext_text)
      fail("w1_path.ext fixture");
    std::string set_text = io::read_file(dir + "/ac.set");
    if (io::serialize_set(io::parse_set(set_text, w1.web()), w1.web()) != set_text)
      fail("ac.set fixture");
    std::string cds_text = io::read_file(dir + "/fig1.cds");
    if (io::serialize_cds(io::parse_cds(cds_text)) != cds_text) fail("fig1.cds fixture");
  }
  for (std::uint64_t seed = 0; seed < 200 && ok; ++seed) {
    PddInstance inst = random_instance(seed, 1 + static_cast<int>(seed % 12), 0.35,
                                       seed % 2 ? GammaStyle::Alpha
                                                : GammaStyle::UniformSmallDenominator);
    std::string text = io::serialize_instance(inst);
    if (io::serialize_instance(io::parse_instance(text)) != text)
      fail("instance seed " + std::to_string(seed));

    TreeExtension ext = seed % 2 ? greedy_extension(inst.web())
                                 : topo_path_extension(inst.web());
    std::string ext_text = io::serialize_extension(ext, inst.web());
    TreeExtension back = io::parse_extension(ext_text, inst.web());
    if (back.parent_map() != ext.parent_map() ||
        io::serialize_extension(back, inst.web()) != ext_text)
      fail("extension seed " + std::to_string(seed));

    std::mt19937_64 rng(seed + 77);
    SpeciesSet s(inst.web().size());
    for (int v = 0; v < inst.web().size(); ++v)
      if (rng() % 2) s.insert(v);
    std::string set_text = io::serialize_set(s, inst.web());
    if (!(io::parse_set(set_text, inst.web()) == s) ||
        io::serialize_set(io::parse_set(set_text, inst.web()), inst.web()) != set_text)
      fail("set seed " + std::to_string(seed));

    CdsInstance cds = random_cds(seed + 500, 10);
    std::string cds_text = io::serialize_cds(cds);
    if (io::serialize_cds(io::parse_cds(cds_text)) != cds_text)
      fail("cds seed " + std::to_string(seed));
  }
  report(8, "parse/serialize round-trips on 200 random values per format", ok, detail);
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  run_solver_corpus();
  run_widget_sizes();
  run_forward_soundness();
  run_micro_roundtrip();
  run_width_sanity();
  run_round_trips();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures == 0 ? "all criteria passed" : "criteria FAILED") << " ("
            << secs << "s)\n";
  return failures == 0 ? 0 : 1;
}
