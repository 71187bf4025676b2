// pdd: exact solver toolkit for weighted phylogenetic diversity with
// dependencies on food webs.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdd/extension.hpp"
#include "pdd/foodweb.hpp"
#include "pdd/io.hpp"
#include "pdd/reduction.hpp"
#include "pdd/solver_bf.hpp"
#include "pdd/solver_dp.hpp"

namespace {

using nlohmann::json;

int worker_count() {
  const char* env = std::getenv("PDD_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw std::runtime_error("PDD_THREADS must be a positive integer");
  return static_cast<int>(v);
}

pdd::TreeExtension pick_extension(const pdd::FoodWeb& web, const std::string& strategy,
                                  const std::string& extension_file) {
  if (!extension_file.empty())
    return pdd::io::parse_extension(pdd::io::read_file(extension_file), web);
  if (strategy == "topo") return pdd::topo_path_extension(web);
  if (strategy == "greedy") return pdd::greedy_extension(web);
  if (strategy == "exact") return pdd::exact_min_nsw(web, 25).first;
  throw std::runtime_error("unknown strategy '" + strategy + "'");
}

std::string set_names(const pdd::SpeciesSet& s, const pdd::FoodWeb& web) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ",";
    out += web.name(v);
    first = false;
  });
  return out + "}";
}

json set_json(const pdd::SpeciesSet& s, const pdd::FoodWeb& web) {
  json arr = json::array();
  s.for_each([&](int v) { arr.push_back(web.name(v)); });
  return arr;
}

json stats_json(const pdd::SolveStats& st) {
  return {{"main_entries", st.main_entries},
          {"aux_entries", st.aux_entries},
          {"max_interface", st.max_interface},
          {"seconds", st.seconds}};
}

void emit(const std::string& output_file, const std::string& content) {
  if (output_file.empty())
    std::cout << content;
  else
    pdd::io::write_file(output_file, content);
}

int run_solve(const std::string& instance_file, bool brute, bool witness,
              const std::string& extension_file, const std::string& strategy, bool as_json) {
  pdd::PddInstance inst = pdd::io::parse_instance(pdd::io::read_file(instance_file));
  (void)worker_count();  // validated; the solver itself is sequential
  pdd::SolveResult res;
  if (brute) {
    res = pdd::solve_bruteforce(inst);
  } else {
    pdd::TreeExtension ext = pick_extension(inst.web(), strategy, extension_file);
    res = pdd::solve_dp(inst, ext);
  }
  if (as_json) {
    json out = {{"answer", res.yes ? "yes" : "no"},
                {"optimum", res.optimum},
                {"stats", stats_json(res.stats)}};
    if (witness) out["witness"] = set_json(res.witness, inst.web());
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (res.yes ? "yes" : "no") << " " << res.optimum;
    if (witness) std::cout << " " << set_names(res.witness, inst.web());
    std::cout << "\n";
  }
  return res.yes ? 0 : 1;
}

int run_extend(const std::string& instance_file, const std::string& strategy,
               const std::string& output_file, bool as_json) {
  pdd::PddInstance inst = pdd::io::parse_instance(pdd::io::read_file(instance_file));
  pdd::TreeExtension ext = pick_extension(inst.web(), strategy, "");
  pdd::WidthReport rep = pdd::width_report(inst.web(), ext);
  std::string text = pdd::io::serialize_extension(ext, inst.web());
  if (!output_file.empty()) pdd::io::write_file(output_file, text);
  if (as_json) {
    json out = {{"strategy", strategy},
                {"max_node_width", rep.max_node_width},
                {"max_edge_width", rep.max_edge_width}};
    if (output_file.empty()) out["extension"] = text;
    std::cout << out.dump(2) << "\n";
  } else {
    if (output_file.empty()) std::cout << text;
    std::cout << "max node width " << rep.max_node_width << "\n";
    std::cout << "max edge width " << rep.max_edge_width << "\n";
  }
  return 0;
}

int run_width(const std::string& instance_file, const std::string& extension_file,
              const std::string& strategy, bool as_json) {
  pdd::PddInstance inst = pdd::io::parse_instance(pdd::io::read_file(instance_file));
  pdd::TreeExtension ext = pick_extension(inst.web(), strategy, extension_file);
  pdd::WidthReport rep = pdd::width_report(inst.web(), ext);
  const pdd::FoodWeb& web = inst.web();
  if (as_json) {
    json nodes = json::array();
    for (int v = 0; v < web.size(); ++v)
      nodes.push_back({{"species", web.name(v)},
                       {"node_width", rep.node_width[v]},
                       {"edge_width", rep.edge_width[v]}});
    json out = {{"nodes", nodes},
                {"max_node_width", rep.max_node_width},
                {"max_edge_width", rep.max_edge_width}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (int v = 0; v < web.size(); ++v)
      std::cout << web.name(v) << " node " << rep.node_width[v] << " edge "
                << rep.edge_width[v] << "\n";
    std::cout << "max node width " << rep.max_node_width << "\n";
    std::cout << "max edge width " << rep.max_edge_width << "\n";
  }
  return 0;
}

int run_reduce(const std::string& cds_file, const std::string& output_file, bool as_json) {
  pdd::CdsInstance cds = pdd::io::parse_cds(pdd::io::read_file(cds_file));
  auto [inst, map] = pdd::reduce_cds(cds);
  emit(output_file, pdd::io::serialize_instance(inst));
  const pdd::ReductionParams& p = map.params;
  json summary = {{"n", p.n},     {"m", p.m},   {"C", p.C},
                  {"B", p.B},     {"D0", p.D0}, {"D1", p.D1},
                  {"D", p.D},     {"species", inst.web().size()},
                  {"arcs", inst.web().arcs().size()}};
  if (as_json) {
    std::cout << summary.dump(2) << "\n";
  } else if (!output_file.empty()) {
    std::cout << "C " << p.C << "  B " << p.B << "  D " << p.D << "  species "
              << inst.web().size() << "  arcs " << inst.web().arcs().size() << "\n";
  }
  return 0;
}

int run_verify(const std::string& instance_file, const std::string& set_file, bool as_json) {
  pdd::PddInstance inst = pdd::io::parse_instance(pdd::io::read_file(instance_file));
  const pdd::FoodWeb& web = inst.web();
  pdd::SpeciesSet s = pdd::io::parse_set(pdd::io::read_file(set_file), web);
  std::string failure;
  for (int v = 0; v < web.size() && failure.empty(); ++v) {
    if (!s.test(v) || web.is_source(v)) continue;
    pdd::Rational g = pdd::gamma_sum(inst, v, s);
    if (g < 1)
      failure = "not viable: " + web.name(v) + " lacks prey (" +
                pdd::format_rational(g) + " < 1)";
  }
  const auto size = static_cast<std::int64_t>(s.size());
  const std::int64_t div = pdd::diversity(inst, s);
  if (failure.empty() && size > inst.budget())
    failure = "over budget: " + std::to_string(size) + " > " + std::to_string(inst.budget());
  if (failure.empty() && div < inst.target())
    failure = "below target: " + std::to_string(div) + " < " + std::to_string(inst.target());
  if (as_json) {
    json out = {{"ok", failure.empty()},
                {"size", size},
                {"budget", inst.budget()},
                {"diversity", div},
                {"target", inst.target()}};
    if (!failure.empty()) out["failure"] = failure;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (failure.empty() ? "ok " + std::to_string(div) : failure) << "\n";
  }
  return failure.empty() ? 0 : 1;
}

int run_gen_random(std::uint64_t seed, int n, double arc_probability, const std::string& style,
                   const std::string& alpha_text, const std::string& output_file) {
  pdd::GammaStyle gs;
  if (style == "alpha")
    gs = pdd::GammaStyle::Alpha;
  else if (style == "rational")
    gs = pdd::GammaStyle::UniformSmallDenominator;
  else
    throw std::runtime_error("unknown gamma style '" + style + "'");
  auto alpha = pdd::parse_rational(alpha_text);
  if (!alpha || *alpha <= 0 || *alpha > 1)
    throw std::runtime_error("alpha must be a rational in (0,1]");
  pdd::PddInstance inst = pdd::random_instance(seed, n, arc_probability, gs, *alpha);
  emit(output_file, pdd::io::serialize_instance(inst));
  return 0;
}

int run_cds_solve(const std::string& cds_file, bool as_json) {
  pdd::CdsInstance cds = pdd::io::parse_cds(pdd::io::read_file(cds_file));
  auto sol = pdd::solve_cds_bruteforce(cds);
  if (as_json) {
    json out = {{"answer", sol ? "yes" : "no"}};
    if (sol) {
      json dom = json::array();
      for (int v : sol->dominating) dom.push_back(cds.name(v));
      json assign = json::object();
      for (int v = 0; v < cds.size(); ++v)
        if (sol->assignment[v] >= 0) assign[cds.name(v)] = cds.name(sol->assignment[v]);
      out["dominating"] = dom;
      out["assignment"] = assign;
    }
    std::cout << out.dump(2) << "\n";
  } else if (sol) {
    std::string dom = "{";
    for (std::size_t i = 0; i < sol->dominating.size(); ++i)
      dom += (i ? "," : "") + cds.name(sol->dominating[i]);
    std::cout << "yes " << dom << "}";
    for (int v = 0; v < cds.size(); ++v)
      if (sol->assignment[v] >= 0)
        std::cout << " " << cds.name(v) << "->" << cds.name(sol->assignment[v]);
    std::cout << "\n";
  } else {
    std::cout << "no\n";
  }
  return sol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver toolkit for weighted phylogenetic diversity with dependencies"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string instance_file, extension_file, set_file, cds_file, output_file;
  std::string strategy = "topo";
  bool brute = false, witness = false;

  auto* solve = app.add_subcommand("solve", "decide an instance with the DP solver");
  solve->add_option("--instance", instance_file)->required();
  solve->add_flag("--brute-force", brute, "use the exhaustive oracle instead of the DP");
  solve->add_flag("--witness", witness, "print an optimum viable set");
  solve->add_option("--extension", extension_file, "tree extension file");
  solve->add_option("--strategy", strategy)->check(CLI::IsMember({"topo", "greedy", "exact"}));

  auto* extend = app.add_subcommand("extend", "emit a tree extension and its width report");
  extend->add_option("--instance", instance_file)->required();
  extend->add_option("--strategy", strategy)->check(CLI::IsMember({"topo", "greedy", "exact"}));
  extend->add_option("-o,--output", output_file);

  auto* width = app.add_subcommand("width", "per-node and maximum widths of an extension");
  width->add_option("--instance", instance_file)->required();
  width->add_option("--extension", extension_file);
  width->add_option("--strategy", strategy)->check(CLI::IsMember({"topo", "greedy", "exact"}));

  auto* reduce = app.add_subcommand("reduce", "capacitated dominating set to 1/2-PDDs");
  reduce->add_option("--cds", cds_file)->required();
  reduce->add_option("-o,--output", output_file);

  auto* verify = app.add_subcommand("verify", "check a species set against an instance");
  verify->add_option("--instance", instance_file)->required();
  verify->add_option("--set", set_file)->required();

  std::uint64_t seed = 0;
  int n = 8;
  double arc_probability = 0.3;
  std::string gamma_style = "alpha", alpha_text = "1/2";
  auto* gen = app.add_subcommand("gen-random", "seed-deterministic random instance");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--species", n)->check(CLI::PositiveNumber);
  gen->add_option("--arc-probability", arc_probability)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--gamma", gamma_style)->check(CLI::IsMember({"alpha", "rational"}));
  gen->add_option("--alpha", alpha_text);
  gen->add_option("-o,--output", output_file);

  auto* cds_solve = app.add_subcommand("cds-solve", "capacitated dominating set oracle");
  cds_solve->add_option("--cds", cds_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed())
      return run_solve(instance_file, brute, witness, extension_file, strategy, as_json);
    if (extend->parsed()) return run_extend(instance_file, strategy, output_file, as_json);
    if (width->parsed()) return run_width(instance_file, extension_file, strategy, as_json);
    if (reduce->parsed()) return run_reduce(cds_file, output_file, as_json);
    if (verify->parsed()) return run_verify(instance_file, set_file, as_json);
    if (gen->parsed())
      return run_gen_random(seed, n, arc_probability, gamma_style, alpha_text, output_file);
    if (cds_solve->parsed()) return run_cds_solve(cds_file, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
