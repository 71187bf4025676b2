#include "pdd/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdd {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("reduction parameter overflows 64-bit integer");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("reduction parameter overflows 64-bit integer");
  return out;
}

}  // namespace

CdsInstance::CdsInstance(std::vector<std::string> names,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<std::int64_t> capacity, std::int64_t k)
    : names_(std::move(names)), capacity_(std::move(capacity)), k_(k) {
  const int n = static_cast<int>(names_.size());
  if (capacity_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("capacity size mismatch");
  for (std::int64_t c : capacity_)
    if (c < 0) throw std::invalid_argument("negative capacity");
  if (k_ < 0) throw std::invalid_argument("negative budget k");
  for (int v = 0; v < n; ++v)
    if (names_[v].empty()) throw std::invalid_argument("empty vertex name");
  adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("parallel edge");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int CdsInstance::index_of(const std::string& name) const {
  for (int v = 0; v < size(); ++v)
    if (names_[v] == name) return v;
  return -1;
}

std::vector<std::string> cds_violations(const CdsInstance& cds, const CdsSolution& sol) {
  std::vector<std::string> out;
  const int n = cds.size();
  std::vector<char> in_s(n, 0);
  for (int v : sol.dominating) {
    if (v < 0 || v >= n) return {"dominating member out of range"};
    in_s[v] = 1;
  }
  if (static_cast<std::int64_t>(sol.dominating.size()) > cds.k())
    out.push_back("dominating set larger than k");
  if (sol.assignment.size() != static_cast<std::size_t>(n))
    return {"assignment size mismatch"};
  std::vector<std::int64_t> load(n, 0);
  for (int v = 0; v < n; ++v) {
    if (in_s[v]) continue;
    int u = sol.assignment[v];
    if (u < 0 || u >= n || !in_s[u]) {
      out.push_back("vertex " + cds.name(v) + " not assigned to a dominating vertex");
      continue;
    }
    const auto& nb = cds.neighbours(v);
    if (!std::binary_search(nb.begin(), nb.end(), u))
      out.push_back("vertex " + cds.name(v) + " assigned to non-neighbour " + cds.name(u));
    ++load[u];
  }
  for (int u = 0; u < n; ++u)
    if (load[u] > cds.capacity(u))
      out.push_back("capacity exceeded at " + cds.name(u));
  return out;
}

namespace {

// Assignment feasibility for a fixed S: Kuhn's matching after expanding each
// member u into c(u) slots.
bool assignable(const CdsInstance& cds, const std::vector<int>& s,
                std::vector<int>& assignment) {
  const int n = cds.size();
  std::vector<char> in_s(n, 0);
  for (int v : s) in_s[v] = 1;
  std::vector<int> slot_owner;  // slot -> member of S
  std::vector<int> slot_base(n, -1);
  for (int u : s) {
    slot_base[u] = static_cast<int>(slot_owner.size());
    for (std::int64_t i = 0; i < cds.capacity(u); ++i) slot_owner.push_back(u);
  }
  std::vector<int> match(slot_owner.size(), -1);  // slot -> dominated vertex
  std::vector<int> where(n, -1);                  // vertex -> slot
  std::vector<char> seen;
  auto kuhn = [&](auto&& self, int v) -> bool {
    for (int u : cds.neighbours(v)) {
      if (!in_s[u]) continue;
      for (std::int64_t i = 0; i < cds.capacity(u); ++i) {
        int slot = slot_base[u] + static_cast<int>(i);
        if (seen[slot]) continue;
        seen[slot] = 1;
        if (match[slot] == -1 || self(self, match[slot])) {
          match[slot] = v;
          where[v] = slot;
          return true;
        }
      }
    }
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (in_s[v]) continue;
    seen.assign(slot_owner.size(), 0);
    if (!kuhn(kuhn, v)) return false;
  }
  assignment.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (!in_s[v]) assignment[v] = slot_owner[where[v]];
  return true;
}

}  // namespace

std::optional<CdsSolution> solve_cds_bruteforce(const CdsInstance& cds, int size_limit) {
  const int n = cds.size();
  if (n > size_limit) throw std::invalid_argument("too large for CDS brute force");
  const std::int64_t cap = std::min<std::int64_t>(cds.k(), n);
  std::vector<int> s;
  std::optional<CdsSolution> found;
  auto walk = [&](auto&& self, int next) -> bool {
    std::vector<int> assignment;
    if (assignable(cds, s, assignment)) {
      found = CdsSolution{s, std::move(assignment)};
      return true;
    }
    if (static_cast<std::int64_t>(s.size()) >= cap) return false;
    for (int v = next; v < n; ++v) {
      s.push_back(v);
      if (self(self, v + 1)) return true;
      s.pop_back();
    }
    return false;
  };
  walk(walk, 0);
  return found;
}

ReductionParams derive_params(const CdsInstance& cds) {
  ReductionParams p;
  p.n = cds.size();
  p.m = static_cast<std::int64_t>(cds.edges().size());
  std::int64_t k = std::min<std::int64_t>(cds.k(), p.n);
  std::int64_t cap_sum = 0;
  for (int v = 0; v < cds.size(); ++v)
    cap_sum = checked_add(cap_sum, std::min<std::int64_t>(cds.capacity(v), cds.degree(v)));
  p.C = checked_add(checked_mul(3, p.m), 1);
  p.B = checked_add(checked_add(checked_mul(p.C, k), checked_mul(p.C, cap_sum)),
                    checked_add(checked_mul(2, p.n), checked_mul(4, p.m)));
  p.D0 = checked_add(checked_mul(checked_mul(2, p.n), checked_add(p.C, p.B)),
                     checked_mul(checked_mul(2, p.m), checked_add(checked_mul(2, p.C), 5)));
  p.D1 = checked_mul(checked_add(p.n, 1), p.D0);
  p.D = checked_add(checked_mul(checked_mul(2, p.n), p.D1), checked_mul(k, p.D0));
  return p;
}

std::int64_t WidgetSpec::vertex_count() const {
  std::int64_t count = 1 + static_cast<std::int64_t>(selector_leaves.size()) +
                       static_cast<std::int64_t>(small.size());
  for (const Chunk& c : big) count += 1 + static_cast<std::int64_t>(c.prey.size());
  for (const Chunk& c : medium) count += 1 + static_cast<std::int64_t>(c.prey.size());
  return count;
}

std::int64_t WidgetSpec::arc_count() const { return vertex_count() - 1; }

WidgetSpec build_selector(std::int64_t C, const std::string& namespace_prefix,
                          std::vector<std::string>& names, std::vector<Arc>& arcs) {
  if (C < 1) throw std::invalid_argument("selector parameter C must be >= 1");
  WidgetSpec spec;
  spec.kind = WidgetSpec::Kind::Selector;
  spec.C = C;
  spec.root = static_cast<int>(names.size());
  names.push_back(namespace_prefix);
  for (std::int64_t i = 1; i <= 2 * (C - 1); ++i) {
    int leaf = static_cast<int>(names.size());
    names.push_back(namespace_prefix + ".p" + std::to_string(i));
    arcs.push_back({leaf, spec.root});
    spec.selector_leaves.push_back(leaf);
  }
  return spec;
}

WidgetSpec build_quota(const QuotaType& q, std::int64_t B, const std::string& namespace_prefix,
                       std::vector<std::string>& names, std::vector<Arc>& arcs) {
  if (q.delta < 0 || q.ell < 0 || q.r < 0 || q.ell > q.r || q.M < 1 || B < 1)
    throw std::invalid_argument("invalid quota widget parameters");
  WidgetSpec spec;
  spec.kind = WidgetSpec::Kind::Quota;
  spec.q = q;
  spec.root = static_cast<int>(names.size());
  names.push_back(namespace_prefix);
  auto add_chunk = [&](const char* role, std::int64_t idx, std::int64_t prey_count) {
    WidgetSpec::Chunk chunk;
    chunk.vertex = static_cast<int>(names.size());
    std::string base = namespace_prefix + "." + role + std::to_string(idx);
    names.push_back(base);
    arcs.push_back({chunk.vertex, spec.root});
    for (std::int64_t j = 1; j <= prey_count; ++j) {
      int leaf = static_cast<int>(names.size());
      names.push_back(base + ".p" + std::to_string(j));
      arcs.push_back({leaf, chunk.vertex});
      chunk.prey.push_back(leaf);
    }
    return chunk;
  };
  const std::int64_t big_count = q.ell + std::max<std::int64_t>(0, q.r - q.delta);
  const std::int64_t medium_count = q.r - q.ell;
  const std::int64_t small_count = std::max<std::int64_t>(0, q.delta - q.r);
  for (std::int64_t i = 1; i <= big_count; ++i)
    spec.big.push_back(add_chunk("b", i, 2 * (B - 1)));
  for (std::int64_t i = 1; i <= medium_count; ++i)
    spec.medium.push_back(add_chunk("m", i, 2 * (q.M - 1)));
  for (std::int64_t i = 1; i <= small_count; ++i) {
    int leaf = static_cast<int>(names.size());
    names.push_back(namespace_prefix + ".s" + std::to_string(i));
    arcs.push_back({leaf, spec.root});
    spec.small.push_back(leaf);
  }
  return spec;
}

std::pair<PddInstance, ReductionMap> reduce_cds(const CdsInstance& cds) {
  const int n = cds.size();
  ReductionMap map;
  map.params = derive_params(cds);
  map.k = std::min<std::int64_t>(cds.k(), n);
  map.capacity.resize(n);
  for (int v = 0; v < n; ++v)
    map.capacity[v] = std::min<std::int64_t>(cds.capacity(v), cds.degree(v));

  std::vector<std::string> names;
  std::vector<Arc> arcs;
  const std::int64_t C = map.params.C;
  const std::int64_t B = map.params.B;
  map.v0.resize(n);
  map.v1.resize(n);
  map.v2.resize(n);
  for (int v = 0; v < n; ++v) {
    map.selector.push_back(build_selector(C, "v0@" + cds.name(v), names, arcs));
    map.v0[v] = map.selector.back().root;
    map.q1.push_back(build_quota({cds.degree(v), 0, map.capacity[v], C + 1}, B,
                                 "v1@" + cds.name(v), names, arcs));
    map.v1[v] = map.q1.back().root;
    map.q2.push_back(build_quota({cds.degree(v) + 1, 1, 1, 1}, B,
                                 "v2@" + cds.name(v), names, arcs));
    map.v2[v] = map.q2.back().root;
  }
  for (auto [u, v] : cds.edges()) {
    map.edge_widget.emplace(
        std::make_pair(u, v),
        build_quota({1, 1, 2, C}, B, "e@" + cds.name(u) + ">" + cds.name(v), names, arcs));
    map.edge_widget.emplace(
        std::make_pair(v, u),
        build_quota({1, 1, 2, C}, B, "e@" + cds.name(v) + ">" + cds.name(u), names, arcs));
  }
  for (int v = 0; v < n; ++v) arcs.push_back({map.v0[v], map.v2[v]});
  for (auto [u, v] : cds.edges()) {
    int euv = map.edge_root(u, v);
    int evu = map.edge_root(v, u);
    arcs.push_back({map.v0[u], euv});
    arcs.push_back({euv, map.v1[u]});
    arcs.push_back({euv, map.v2[v]});
    arcs.push_back({map.v0[v], evu});
    arcs.push_back({evu, map.v1[v]});
    arcs.push_back({evu, map.v2[u]});
  }

  std::vector<std::int64_t> d(names.size(), 1);
  for (int v = 0; v < n; ++v) {
    d[map.v0[v]] = map.params.D0;
    d[map.v1[v]] = map.params.D1;
    d[map.v2[v]] = map.params.D1;
  }
  FoodWeb web(std::move(names), std::move(arcs));
  PddInstance inst =
      make_alpha_instance(web, Rational(1, 2), std::move(d), B, map.params.D);
  return {std::move(inst), std::move(map)};
}

namespace {

// Canonical interior selection for a quota widget whose root has ell_prime
// of its external prey in the solution: the root, min(|small|, t - ell_prime)
// small vertices, max(0, r - ell_prime) medium vertices, and M - 1 prey of
// each chosen medium vertex.
void fill_quota(const WidgetSpec& spec, std::int64_t ell_prime, SpeciesSet& p) {
  const QuotaType& q = spec.q;
  const std::int64_t t = std::max(q.delta, q.r);
  if (ell_prime < q.ell || ell_prime > t)
    throw std::invalid_argument("external prey count outside quota widget range");
  p.insert(spec.root);
  const std::int64_t small_take =
      std::min<std::int64_t>(static_cast<std::int64_t>(spec.small.size()), t - ell_prime);
  for (std::int64_t i = 0; i < small_take; ++i) p.insert(spec.small[i]);
  const std::int64_t medium_take = std::max<std::int64_t>(0, q.r - ell_prime);
  for (std::int64_t i = 0; i < medium_take; ++i) {
    const WidgetSpec::Chunk& chunk = spec.medium[i];
    p.insert(chunk.vertex);
    for (std::int64_t j = 0; j < q.M - 1; ++j) p.insert(chunk.prey[j]);
  }
}

}  // namespace

SpeciesSet forward_witness(const CdsInstance& cds, const CdsSolution& sol,
                           const PddInstance& reduced, const ReductionMap& map) {
  std::vector<std::string> violations = cds_violations(cds, sol);
  if (!violations.empty()) {
    std::string msg = "invalid CDS solution:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }
  const int n = cds.size();
  std::vector<char> in_s(n, 0);
  for (int v : sol.dominating) in_s[v] = 1;
  // Pad S to exactly k members, smallest index first.
  std::int64_t members = static_cast<std::int64_t>(sol.dominating.size());
  for (int v = 0; v < n && members < map.k; ++v)
    if (!in_s[v]) {
      in_s[v] = 1;
      ++members;
    }
  std::vector<std::int64_t> dominated(n, 0);  // k_v
  for (int v = 0; v < n; ++v)
    if (!in_s[v]) ++dominated[sol.assignment[v]];

  SpeciesSet p(reduced.web().size());
  for (int v = 0; v < n; ++v) {
    if (in_s[v]) {
      const WidgetSpec& sel = map.selector[v];
      p.insert(sel.root);
      for (std::int64_t i = 0; i < map.params.C - 1; ++i)
        p.insert(sel.selector_leaves[i]);
    } else {
      fill_quota(map.edge_widget.at({sol.assignment[v], v}), 1, p);
    }
    fill_quota(map.q1[v], dominated[v], p);
    fill_quota(map.q2[v], 1, p);
  }
  return p;
}

CdsSolution extract_cds_solution(const CdsInstance& cds, const PddInstance& reduced,
                                 const ReductionMap& map, const SpeciesSet& p) {
  if (static_cast<std::int64_t>(p.size()) > reduced.budget())
    throw std::invalid_argument("set exceeds the reduced budget");
  if (diversity(reduced, p) < reduced.target())
    throw std::invalid_argument("set misses the reduced diversity target");
  if (!is_viable(reduced, p))
    throw std::invalid_argument("set is not viable in the reduced instance");

  const int n = cds.size();
  CdsSolution sol;
  sol.assignment.assign(n, -1);
  std::vector<char> in_s(n, 0);
  for (int v = 0; v < n; ++v)
    if (p.test(map.v0[v])) {
      sol.dominating.push_back(v);
      in_s[v] = 1;
    }
  if (static_cast<std::int64_t>(sol.dominating.size()) > map.k)
    throw std::logic_error("extraction failure: more than k selector roots chosen");
  for (int v = 0; v < n; ++v) {
    if (in_s[v]) continue;
    int chosen = -1;
    for (int u : cds.neighbours(v))
      if (in_s[u] && p.test(map.edge_root(u, v))) {
        chosen = u;
        break;
      }
    if (chosen == -1)
      throw std::logic_error("extraction failure: no dominating edge root for " +
                             cds.name(v));
    sol.assignment[v] = chosen;
  }
  std::vector<std::int64_t> load(n, 0);
  for (int v = 0; v < n; ++v)
    if (!in_s[v]) ++load[sol.assignment[v]];
  for (int u = 0; u < n; ++u)
    if (load[u] > map.capacity[u])
      throw std::logic_error("extraction failure: capacity exceeded at " + cds.name(u));
  return sol;
}

}  // namespace pdd
