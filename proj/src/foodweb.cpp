#include "pdd/foodweb.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace pdd {

FoodWeb::FoodWeb(std::vector<std::string> names, std::vector<Arc> arcs)
    : names_(std::move(names)), arcs_(std::move(arcs)) {
  const int n = static_cast<int>(names_.size());
  index_.reserve(names_.size());
  for (int v = 0; v < n; ++v) {
    if (names_[v].empty()) throw std::invalid_argument("empty species name");
    if (!index_.emplace(names_[v], v).second)
      throw std::invalid_argument("duplicate species name: " + names_[v]);
  }
  in_arcs_.resize(n);
  out_arcs_.resize(n);
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.prey < 0 || arc.prey >= n || arc.predator < 0 || arc.predator >= n)
      throw std::invalid_argument("arc endpoint out of range");
    if (arc.prey == arc.predator)
      throw std::invalid_argument("self-loop at " + names_[arc.prey]);
    in_arcs_[arc.predator].push_back(static_cast<int>(a));
    out_arcs_[arc.prey].push_back(static_cast<int>(a));
  }
  {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(arcs_.size());
    for (const Arc& arc : arcs_) pairs.emplace_back(arc.prey, arc.predator);
    std::sort(pairs.begin(), pairs.end());
    auto dup = std::adjacent_find(pairs.begin(), pairs.end());
    if (dup != pairs.end())
      throw std::invalid_argument("parallel arc " + names_[dup->first] + " -> " +
                                  names_[dup->second]);
  }
  if (topological_order().empty() && n > 0)
    throw std::invalid_argument("food web contains a cycle");
}

int FoodWeb::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FoodWeb::topological_order() const {
  const int n = size();
  std::vector<int> indeg(n);
  for (int v = 0; v < n; ++v) indeg[v] = in_degree(v);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int a : out_arcs_[v])
      if (--indeg[arcs_[a].predator] == 0) ready.push(arcs_[a].predator);
  }
  if (static_cast<int>(order.size()) != n) return {};  // cycle
  return order;
}

PddInstance::PddInstance(FoodWeb web, std::vector<Rational> gamma,
                         std::vector<std::int64_t> d, std::int64_t budget,
                         std::int64_t target)
    : web_(std::move(web)), gamma_(std::move(gamma)), d_(std::move(d)),
      budget_(budget), target_(target) {
  if (gamma_.size() != web_.arcs().size())
    throw std::invalid_argument("gamma size mismatch");
  if (d_.size() != static_cast<std::size_t>(web_.size()))
    throw std::invalid_argument("diversity size mismatch");
  for (const Rational& g : gamma_)
    if (g <= 0 || g > 1) throw std::invalid_argument("gamma out of (0,1]");
  if (budget_ < 0) throw std::invalid_argument("budget must be >= 0");
  if (target_ < 0) throw std::invalid_argument("target must be >= 0");
  total_diversity_ = 0;
  for (std::int64_t x : d_) {
    if (x < 1) throw std::invalid_argument("diversity must be >= 1");
    if (__builtin_add_overflow(total_diversity_, x, &total_diversity_))
      throw std::invalid_argument("total diversity overflows 64-bit integer");
  }
}

Rational gamma_sum(const PddInstance& inst, int v, const SpeciesSet& s) {
  Rational sum = 0;
  for (int a : inst.web().in_arcs(v))
    if (s.test(inst.web().arcs()[a].prey)) sum += inst.gamma(a);
  return sum;
}

bool is_viable(const PddInstance& inst, const SpeciesSet& s) {
  bool ok = true;
  s.for_each([&](int v) {
    if (!ok || inst.web().is_source(v)) return;
    if (gamma_sum(inst, v, s) < 1) ok = false;
  });
  return ok;
}

std::int64_t diversity(const PddInstance& inst, const SpeciesSet& s) {
  std::int64_t sum = 0;
  s.for_each([&](int v) { sum += inst.d(v); });
  return sum;
}

PddInstance make_alpha_instance(const FoodWeb& web, const Rational& alpha,
                                std::vector<std::int64_t> d, std::int64_t budget,
                                std::int64_t target) {
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("alpha out of (0,1]");
  std::vector<Rational> gamma;
  gamma.reserve(web.arcs().size());
  for (const Arc& arc : web.arcs()) {
    Rational g = Rational(1) / (alpha * web.in_degree(arc.predator));
    if (g > 1) g = 1;
    gamma.push_back(std::move(g));
  }
  return PddInstance(FoodWeb(web.names(), web.arcs()), std::move(gamma), std::move(d),
                     budget, target);
}

std::vector<std::string> validate_instance(const InstanceData& data) {
  std::vector<std::string> out;
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < data.species.size(); ++i) {
    const auto& sp = data.species[i];
    if (sp.name.empty()) out.push_back("species " + std::to_string(i) + ": empty name");
    if (!index.emplace(sp.name, static_cast<int>(i)).second)
      out.push_back("duplicate species name: " + sp.name);
    if (sp.d < 1) out.push_back("species " + sp.name + ": diversity must be >= 1");
  }
  const int n = static_cast<int>(data.species.size());
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (const auto& arc : data.arcs) {
    auto pi = index.find(arc.prey);
    auto qi = index.find(arc.predator);
    if (pi == index.end()) out.push_back("unknown species in arc: " + arc.prey);
    if (qi == index.end()) out.push_back("unknown species in arc: " + arc.predator);
    if (pi == index.end() || qi == index.end()) continue;
    if (pi->second == qi->second) out.push_back("self-loop at " + arc.prey);
    else if (!seen.emplace(pi->second, qi->second).second)
      out.push_back("duplicate arc " + arc.prey + " -> " + arc.predator);
    else {
      succ[pi->second].push_back(qi->second);
      ++indeg[qi->second];
    }
    if (arc.gamma <= 0 || arc.gamma > 1)
      out.push_back("gamma out of (0,1] on arc " + arc.prey + " -> " + arc.predator);
  }
  // Kahn check for cycles among the well-formed arcs.
  std::queue<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  int emitted = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++emitted;
    for (int w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (emitted != n) out.push_back("cycle in food web");
  if (data.budget < 0) out.push_back("budget must be >= 0");
  if (data.target < 0) out.push_back("target must be >= 0");
  std::int64_t total = 0;
  for (const auto& sp : data.species)
    if (sp.d >= 1 && __builtin_add_overflow(total, sp.d, &total)) {
      out.push_back("total diversity overflows 64-bit integer");
      break;
    }
  return out;
}

PddInstance build_instance(const InstanceData& data) {
  std::vector<std::string> violations = validate_instance(data);
  if (!violations.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }
  std::vector<std::string> names;
  std::vector<std::int64_t> d;
  names.reserve(data.species.size());
  for (const auto& sp : data.species) {
    names.push_back(sp.name);
    d.push_back(sp.d);
  }
  FoodWeb web(std::move(names), {});
  std::vector<Arc> arcs;
  std::vector<Rational> gamma;
  arcs.reserve(data.arcs.size());
  for (const auto& arc : data.arcs) {
    arcs.push_back({web.index_of(arc.prey), web.index_of(arc.predator)});
    gamma.push_back(arc.gamma);
  }
  std::vector<std::string> names2 = web.names();
  return PddInstance(FoodWeb(std::move(names2), std::move(arcs)), std::move(gamma),
                     std::move(d), data.budget, data.target);
}

InstanceData to_data(const PddInstance& inst) {
  InstanceData data;
  data.budget = inst.budget();
  data.target = inst.target();
  const FoodWeb& web = inst.web();
  for (int v = 0; v < web.size(); ++v)
    data.species.push_back({web.name(v), inst.d(v)});
  for (std::size_t a = 0; a < web.arcs().size(); ++a)
    data.arcs.push_back({web.name(web.arcs()[a].prey), web.name(web.arcs()[a].predator),
                         inst.gamma(static_cast<int>(a))});
  return data;
}

namespace {

// mt19937_64 output is pinned by the standard; the helpers below avoid
// distribution classes, whose results are implementation-defined.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PddInstance random_instance(std::uint64_t seed, int n, double arc_probability,
                            GammaStyle style, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  if (arc_probability < 0.0 || arc_probability > 1.0)
    throw std::invalid_argument("arc probability out of [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rand_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rand_unit(rng) < arc_probability) arcs.push_back({order[i], order[j]});
  std::vector<std::string> names;
  names.reserve(n);
  for (int v = 0; v < n; ++v) names.push_back("s" + std::to_string(v));
  FoodWeb web(std::move(names), std::move(arcs));
  std::vector<std::int64_t> d(n);
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v) {
    d[v] = 1 + static_cast<std::int64_t>(rand_below(rng, 10));
    total += d[v];
  }
  std::int64_t budget = static_cast<std::int64_t>(rand_below(rng, n + 1));
  std::int64_t target = static_cast<std::int64_t>(rand_below(rng, total + 1));
  if (style == GammaStyle::Alpha)
    return make_alpha_instance(web, alpha, std::move(d), budget, target);
  std::vector<Rational> gamma;
  gamma.reserve(web.arcs().size());
  for (std::size_t a = 0; a < web.arcs().size(); ++a) {
    std::uint64_t q = 1 + rand_below(rng, 8);
    std::uint64_t p = 1 + rand_below(rng, q);
    gamma.emplace_back(p, q);
  }
  return PddInstance(std::move(web), std::move(gamma), std::move(d), budget, target);
}

}  // namespace pdd
