#include "mcg/pload.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "mcg/instance_gen.hpp"

namespace mcg {

namespace {

using lp::Coefficient;
using lp::LinearProgram;
using lp::Relation;
using lp::Sense;
using lp::Status;

void check_family(const DecompositionFamily& family, int w, bool need_root) {
  if (w < 1) throw std::invalid_argument("w must be positive");
  if (family.t != 2 * static_cast<Length>(w)) throw std::invalid_argument("family must be enumerated with t = 2w");
  if (need_root && !family.root) throw std::invalid_argument("rooted LP needs a family enumerated with a root");
  if (family.radius_bound) throw std::invalid_argument("family must not be pre-filtered by radius");
}

// Rows: 0 is sum y = 1, 1..m are edge loads y - p <= 0, m+1 optional.
struct LoadLp {
  LinearProgram lp{Sense::minimize};
  std::vector<std::size_t> member_of_column;  // columns 0..n-1 are y
  std::size_t p_column = 0;
};

LoadLp build_load_lp(const DecompositionFamily& family, const std::vector<std::size_t>& support,
                     const std::vector<Rational>& y_objective, const Rational& p_objective,
                     std::optional<Rational> fixed_p, std::optional<std::pair<int, int>> radius_row) {
  LoadLp out;
  const std::size_t m = family.graph.edge_count();
  out.lp.add_constraint({}, Relation::equal, 1, "mass");
  for (std::size_t e = 0; e < m; ++e) {
    out.lp.add_constraint({}, Relation::less_equal, fixed_p ? *fixed_p : Rational(0), "load" + std::to_string(e));
  }
  if (radius_row) {
    out.lp.add_constraint({}, Relation::greater_equal, 1, "radius");
  }
  for (std::size_t c = 0; c < support.size(); ++c) {
    const std::size_t i = support[c];
    std::vector<Coefficient> col{{0, 1}};
    for (EdgeId e : family.members[i].ids()) col.push_back({static_cast<std::size_t>(e) + 1, 1});
    if (radius_row && family.radii[i] < radius_row->second) col.push_back({m + 1, 1});
    out.lp.add_column(y_objective[c], std::move(col));
    out.member_of_column.push_back(i);
  }
  if (!fixed_p) {
    std::vector<Coefficient> col;
    for (std::size_t e = 0; e < m; ++e) col.push_back({e + 1, -1});
    if (radius_row) col.push_back({m + 1, radius_row->first - radius_row->second});
    out.p_column = out.lp.add_column(p_objective, std::move(col), lp::VarKind::nonnegative, "p");
  }
  return out;
}

Distribution support_of(const DecompositionFamily& family, const LoadLp& built, const std::vector<Rational>& primal) {
  Distribution d;
  for (std::size_t c = 0; c < built.member_of_column.size(); ++c) {
    if (primal[c] == 0) continue;
    d.members.push_back(family.members[built.member_of_column[c]]);
    d.y.push_back(primal[c]);
  }
  return d;
}

PloadResult run_pload(const DecompositionFamily& family, int w, std::optional<int> k, bool rooted) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!rooted || family.radii[i] < w) support.push_back(i);
  std::optional<std::pair<int, int>> radius_row;
  if (k) radius_row = std::pair{w, *k};
  auto built = build_load_lp(family, support, std::vector<Rational>(support.size(), 0), 1, std::nullopt, radius_row);
  const auto out = lp::solve(built.lp);
  PloadResult res;
  res.status = out.status;
  res.w = w;
  res.k = k;
  res.root = rooted ? family.root : std::nullopt;
  res.family_size = family.size();
  res.columns = support.size();
  res.pivots = out.stats.pivots;
  if (out.status == Status::optimal) {
    res.p = out.objective;
    res.distribution = support_of(family, built, out.primal);
  } else if (out.status == Status::infeasible) {
    res.farkas = out.farkas;
  }
  return res;
}

DecompositionFamily rooted_family(const Graph& g, VertexId r, int w, std::size_t cap) {
  return enumerate(g, 2 * static_cast<Length>(w), {.root = r, .radius_bound = std::nullopt, .cap = cap});
}

}  // namespace

PloadResult min_pload(const DecompositionFamily& family, int w) {
  check_family(family, w, false);
  return run_pload(family, w, std::nullopt, false);
}

PloadResult min_pload_rooted(const DecompositionFamily& family, int w) {
  check_family(family, w, true);
  return run_pload(family, w, std::nullopt, true);
}

PloadResult min_pload_radius(const DecompositionFamily& family, int w, int k) {
  check_family(family, w, true);
  if (k < 1 || k > w) throw std::invalid_argument("radius bound k must satisfy 1 <= k <= w");
  return run_pload(family, w, k, true);
}

PloadResult min_pload(const Graph& g, int w, std::size_t cap) {
  return min_pload(enumerate(g, 2 * static_cast<Length>(w), {.root = std::nullopt, .radius_bound = std::nullopt, .cap = cap}), w);
}

PloadResult min_pload_rooted(const Graph& g, VertexId r, int w, std::size_t cap) {
  return min_pload_rooted(rooted_family(g, r, w, cap), w);
}

PloadResult min_pload_radius(const Graph& g, VertexId r, int w, int k, std::size_t cap) {
  return min_pload_radius(rooted_family(g, r, w, cap), w, k);
}

EscapeResult mass_outside_rooted(const DecompositionFamily& family, int w, const Rational& p) {
  check_family(family, w, true);
  if (p < 0) throw std::invalid_argument("p must be nonnegative");
  std::vector<std::size_t> support(family.size());
  std::vector<Rational> cost(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    support[i] = i;
    cost[i] = family.radii[i] >= w ? 1 : 0;
  }
  auto built = build_load_lp(family, support, cost, 0, p, std::nullopt);
  const auto out = lp::solve(built.lp);
  EscapeResult res;
  res.status = out.status;
  res.family_size = family.size();
  res.pivots = out.stats.pivots;
  if (out.status == Status::optimal) {
    res.z = out.objective;
    res.distribution = support_of(family, built, out.primal);
  } else if (out.status == Status::infeasible) {
    res.farkas = out.farkas;
  }
  return res;
}

EscapeResult mass_outside_rooted(const Graph& g, VertexId r, int w, const Rational& p, std::size_t cap) {
  return mass_outside_rooted(rooted_family(g, r, w, cap), w, p);
}

std::vector<AmplificationRow> amplification_experiment(const Graph& g, VertexId r, int w, const Rational& p, int max_m,
                                                       std::size_t cap) {
  g.check_vertex(r);
  if (max_m < 1) throw std::invalid_argument("max_m must be positive");
  if (static_cast<std::size_t>(max_m) * g.edge_count() > cap) {
    throw std::length_error("amplified graph exceeds the enumeration cap");
  }
  std::vector<AmplificationRow> rows;
  std::optional<Rational> z1;
  for (int m = 1; m <= max_m; ++m) {
    const Graph gm = amplify_one_sum(g, r, m);
    const auto res = mass_outside_rooted(gm, gm.require_mark("main"), w, p, cap);
    AmplificationRow row;
    row.m = m;
    row.edges = gm.edge_count();
    row.family_size = res.family_size;
    row.status = res.status;
    row.pivots = res.pivots;
    if (res.status == Status::optimal) {
      row.z = res.z;
      row.bound_holds = m * res.z <= 1;
      if (m == 1) z1 = res.z;
      row.counting_holds = z1 && m * *z1 <= res.z && res.z <= 1;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<Rational> edge_loads(std::size_t edge_count, const Distribution& dist) {
  std::vector<Rational> load(edge_count, 0);
  for (std::size_t i = 0; i < dist.members.size(); ++i)
    for (EdgeId e : dist.members[i].ids()) load.at(e) += dist.y[i];
  return load;
}

DistributionCheck verify_distribution(const Graph& g, int w, const Distribution& dist, const Rational& p,
                                      std::optional<VertexId> root, std::optional<int> k) {
  DistributionCheck chk;
  if (dist.members.size() != dist.y.size()) {
    chk.failures.push_back("member and weight counts differ");
    return chk;
  }
  const Length t = 2 * static_cast<Length>(w);
  Rational total = 0;
  chk.rooted_mass = 0;
  Rational radius_mass = 0;
  for (std::size_t i = 0; i < dist.members.size(); ++i) {
    const auto& f = dist.members[i];
    if (dist.y[i] < 0) chk.failures.push_back("negative weight on member " + std::to_string(i));
    if (f.universe() != g.edge_count()) {
      chk.failures.push_back("member " + std::to_string(i) + " is over another edge universe");
      continue;
    }
    total += dist.y[i];
    if (!is_t_diameter_decomposition(g, f, t)) {
      chk.failures.push_back("member " + f.to_hex() + " is not a 2w-diameter decomposition");
    }
    if (root) {
      const Length rad = radius_after(g, f, *root);
      if (rad < w) chk.rooted_mass += dist.y[i];
      else if (dist.y[i] > 0) chk.failures.push_back("member " + f.to_hex() + " has rad " + std::to_string(rad) + " >= w");
      if (k && rad < *k) radius_mass += dist.y[i];
    }
  }
  if (total != 1) chk.failures.push_back("total mass is " + to_string(total));
  const auto loads = edge_loads(g.edge_count(), dist);
  chk.max_load = 0;
  for (std::size_t e = 0; e < loads.size(); ++e) {
    chk.max_load = std::max(chk.max_load, loads[e]);
    if (loads[e] > p) chk.failures.push_back("edge " + std::to_string(e) + " load " + to_string(loads[e]) + " > p");
  }
  if (root && k) {
    const Rational need = 1 - p * (w - *k);
    if (radius_mass < need) {
      chk.failures.push_back("mass on rad < k is " + to_string(radius_mass) + " < " + to_string(need));
    }
  }
  return chk;
}

PathHitReport path_hit_check(const Graph& g, VertexId r, int w, const std::vector<EdgeId>& path, const Distribution& dist,
                             const Rational& p) {
  if (static_cast<int>(path.size()) != w) throw std::invalid_argument("path must have exactly w edges");
  VertexId at = r;
  for (EdgeId e : path) {
    const auto& ed = g.edge(e);
    if (ed.u != at && ed.v != at) throw std::invalid_argument("edges do not form a walk from r");
    at = ed.other(at);
  }
  if (shortest_dist(g, r, at) != w) throw std::invalid_argument("path is not a shortest path of length w");
  const EdgeSet on_path = EdgeSet::from_ids(g.edge_count(), path);
  PathHitReport rep;
  rep.double_hit_mass = 0;
  rep.bound = w * p - 1;
  for (std::size_t i = 0; i < dist.members.size(); ++i) {
    if (dist.y[i] == 0) continue;
    const std::size_t hits = (dist.members[i] & on_path).size();
    if (hits == 0) rep.every_member_meets_path = false;
    if (hits >= 2) rep.double_hit_mass += dist.y[i];
  }
  return rep;
}

Distribution project(const Graph& g, const Distribution& dist, const EdgeSubgraph& h, int w) {
  const std::size_t hm = h.graph.edge_count();
  std::map<EdgeSet, Rational> merged;
  for (std::size_t i = 0; i < dist.members.size(); ++i) {
    if (dist.members[i].universe() != g.edge_count()) throw std::invalid_argument("member is over another universe");
    EdgeSet image(hm);
    for (std::size_t j = 0; j < hm; ++j)
      if (dist.members[i].contains(h.edge_map[j])) image.insert(static_cast<EdgeId>(j));
    merged[image] += dist.y[i];
  }
  Distribution out;
  for (auto& [f, y] : merged) {
    if (!is_t_diameter_decomposition(h.graph, f, 2 * static_cast<Length>(w))) {
      throw std::domain_error("projected member " + f.to_hex() + " is not a 2w-diameter decomposition of H");
    }
    out.members.push_back(f);
    out.y.push_back(y);
  }
  return out;
}

std::string frontier_csv(const std::vector<FrontierRow>& rows) {
  std::ostringstream out;
  out << "w,k,m,min_p,w_times_p,family_size,lp_pivots\n";
  for (const auto& r : rows) {
    out << r.w << ',' << (r.k ? std::to_string(*r.k) : "") << ',' << r.m << ',' << to_string(r.p) << ','
        << to_string(Rational(r.w * r.p)) << ',' << r.family_size << ',' << r.pivots << '\n';
  }
  return out.str();
}

}  // namespace mcg
