#include <doctest.h>

#include "helpers.hpp"
#include "pdd/io.hpp"
#include "pdd/reduction.hpp"
#include "pdd/solver_bf.hpp"

using namespace pdd;

namespace {

CdsInstance make_fig1(std::int64_t k = 2) {
  // Square b-c-d plus pendant a: edges a-b, b-c, b-d, c-d.
  return CdsInstance({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {1, 3}, {2, 3}},
                     {1, 1, 2, 2}, k);
}

CdsInstance single_vertex(std::int64_t k) {
  return CdsInstance({"x"}, {}, {0}, k);
}

}  // namespace

TEST_CASE("cds solver on the square-with-pendant example") {
  auto sol = solve_cds_bruteforce(make_fig1());
  REQUIRE(sol.has_value());
  CHECK(sol->dominating == std::vector<int>{0, 2});
  CHECK(cds_violations(make_fig1(), *sol).empty());

  CHECK_FALSE(solve_cds_bruteforce(make_fig1(1)).has_value());
}

TEST_CASE("cds violations are reported") {
  CdsInstance cds = make_fig1();
  CdsSolution sol{{0, 2}, {-1, 0, -1, 2}};
  CHECK(cds_violations(cds, sol).empty());
  CdsSolution bad{{1}, {1, -1, 1, 1}};  // a,c,d all on b: capacity 1 exceeded
  CHECK_FALSE(cds_violations(cds, bad).empty());
  CdsSolution stranger{{0}, {-1, 0, 0, 0}};  // c,d not adjacent to a
  CHECK_FALSE(cds_violations(cds, stranger).empty());
}

TEST_CASE("reduction parameters on hand-checked instances") {
  ReductionParams fig1 = derive_params(make_fig1());
  CHECK(fig1.C == 13);
  CHECK(fig1.B == 128);
  CHECK(fig1.D0 == 1376);
  CHECK(fig1.D1 == 6880);
  CHECK(fig1.D == 57792);

  ReductionParams micro = derive_params(single_vertex(1));
  CHECK(micro.C == 1);
  CHECK(micro.B == 3);
  CHECK(micro.D0 == 8);
  CHECK(micro.D1 == 16);
  CHECK(micro.D == 40);

  ReductionParams empty = derive_params(single_vertex(0));
  CHECK(empty.B == 2);
  CHECK(empty.D == 24);
}

TEST_CASE("selector widget size") {
  std::vector<std::string> names;
  std::vector<Arc> arcs;
  WidgetSpec sel = build_selector(13, "v0@x", names, arcs);
  CHECK(sel.vertex_count() == 25);
  CHECK(sel.arc_count() == 24);
  CHECK(names.size() == 25);
  CHECK(arcs.size() == 24);
  CHECK(names[sel.root] == "v0@x");
}

TEST_CASE("quota widget size follows the closed formula") {
  auto closed = [](const QuotaType& q, std::int64_t B) {
    std::int64_t big = q.ell + std::max<std::int64_t>(0, q.r - q.delta);
    return (2 * B - 1) * big + (2 * q.M - 1) * (q.r - q.ell) +
           std::max<std::int64_t>(0, q.delta - q.r) + 1;
  };
  for (const QuotaType& q : {QuotaType{1, 1, 2, 4}, QuotaType{3, 0, 2, 5},
                             QuotaType{5, 1, 1, 1}, QuotaType{2, 2, 2, 7}}) {
    std::vector<std::string> names;
    std::vector<Arc> arcs;
    WidgetSpec w = build_quota(q, 20, "q@x", names, arcs);
    CHECK(w.vertex_count() == closed(q, 20));
    CHECK(w.arc_count() == w.vertex_count() - 1);
    CHECK(static_cast<std::int64_t>(names.size()) == w.vertex_count());
  }
  CHECK(closed({1, 1, 2, 4}, 20) == 86);
}

TEST_CASE("reduced instance shape on the square-with-pendant example") {
  auto [inst, map] = reduce_cds(make_fig1());
  CHECK(inst.budget() == 128);
  CHECK(inst.target() == 57792);
  const FoodWeb& web = inst.web();
  // Quota roots have in-degree 2*max(delta, r).
  for (int v = 0; v < 4; ++v) {
    CHECK(web.in_degree(map.v0[v]) == 2 * (map.params.C - 1));
    const QuotaType& q1 = map.q1[v].q;
    CHECK(web.in_degree(map.v1[v]) == 2 * std::max(q1.delta, q1.r));
    CHECK(web.in_degree(map.v2[v]) == 2 * std::max(map.q2[v].q.delta, map.q2[v].q.r));
  }
  for (const auto& [key, w] : map.edge_widget)
    CHECK(web.in_degree(w.root) == 4);
  CHECK(web.index_of("v0@a") == map.v0[0]);
  CHECK(web.index_of("e@a>b") == map.edge_root(0, 1));
  CHECK(web.index_of("e@b>a") == map.edge_root(1, 0));
}

TEST_CASE("forward witness and extraction round-trip") {
  CdsInstance cds = make_fig1();
  auto sol = solve_cds_bruteforce(cds);
  REQUIRE(sol.has_value());
  auto [inst, map] = reduce_cds(cds);
  SpeciesSet p = forward_witness(cds, *sol, inst, map);
  CHECK(is_viable(inst, p));
  CHECK(static_cast<std::int64_t>(p.size()) <= inst.budget());
  CHECK(diversity(inst, p) >= inst.target());
  CdsSolution back = extract_cds_solution(cds, inst, map, p);
  CHECK(cds_violations(cds, back).empty());
}

TEST_CASE("micro reduction equivalence by oracle") {
  {
    auto [inst, map] = reduce_cds(single_vertex(1));
    CHECK(inst.web().size() == 8);
    CHECK(inst.budget() == 3);
    CHECK(inst.target() == 40);
    SolveResult res = solve_bruteforce(inst);
    CHECK(res.yes);
    SpeciesSet expected(inst.web().size());
    expected.insert(map.v0[0]);
    expected.insert(map.v1[0]);
    expected.insert(map.v2[0]);
    CHECK(res.witness == expected);
  }
  {
    auto [inst, map] = reduce_cds(single_vertex(0));
    CHECK(inst.budget() == 2);
    CHECK(inst.target() == 24);
    CHECK_FALSE(solve_bruteforce(inst).yes);
  }
}
