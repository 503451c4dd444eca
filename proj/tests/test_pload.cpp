#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/instance_gen.hpp"
#include "mcg/pload.hpp"
#include "oracles.hpp"

using namespace mcg;

namespace {

Graph path_graph(int edges) {
  Graph g(edges + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Loads and diameters recomputed without the library predicates.
void oracle_check(const Graph& g, int w, const Distribution& dist, const Rational& p) {
  const auto d = oracle::floyd(g);
  Rational total = 0;
  std::vector<Rational> load(g.edge_count(), 0);
  for (std::size_t i = 0; i < dist.members.size(); ++i) {
    CHECK(dist.y[i] >= 0);
    total += dist.y[i];
    const auto mask = dist.members[i].to_mask();
    CHECK(oracle::diameter_without(g, mask, d) < 2 * w);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if ((mask >> e) & 1) load[e] += dist.y[i];
  }
  CHECK(total == 1);
  for (const auto& l : load) CHECK(l <= p);
}

Distribution random_distribution(const DecompositionFamily& fam, std::mt19937_64& rng, int support) {
  std::uniform_int_distribution<std::size_t> pick(0, fam.size() - 1);
  std::uniform_int_distribution<int> weight(1, 9);
  std::map<std::size_t, long> raw;
  long total = 0;
  for (int i = 0; i < support; ++i) {
    const long x = weight(rng);
    raw[pick(rng)] += x;
    total += x;
  }
  Distribution dist;
  for (auto [i, x] : raw) {
    dist.members.push_back(fam.members[i]);
    dist.y.push_back(frac(x, total));
  }
  return dist;
}

Rational max_load(const Graph& g, const Distribution& dist) {
  Rational best = 0;
  for (const auto& l : edge_loads(g.edge_count(), dist)) best = std::max(best, l);
  return best;
}

}  // namespace

TEST_CASE("closed-form minimum loads") {
  for (int w : {2, 3}) {
    CAPTURE(w);
    CHECK(min_pload(cycle_graph(2 * w), w).p == 0);
    // one cut anywhere leaves a path of 2w - 1 edges, and every member is
    // nonempty, so the optimum is 1/(2w)
    const auto path = min_pload(path_graph(2 * w), w);
    CHECK(path.p == frac(1, 2 * w));
    CHECK(path.p == oracle::pload_oracle(path_graph(2 * w), w));
    oracle_check(path_graph(2 * w), w, path.distribution, path.p);
  }
  CHECK(min_pload(path_graph(1), 1).p == 0);
  CHECK(min_pload_rooted(path_graph(1), 0, 1).p == 1);
  // C_4 rooted: both arcs to the antipode must be cut, each arc has 2 edges
  CHECK(min_pload_rooted(cycle_graph(4), 0, 2).p == frac(1, 2));
  Graph star(4);
  for (int i = 1; i <= 3; ++i) star.add_edge(0, i);
  CHECK(min_pload_rooted(star, 0, 2).p == 0);
  // from a leaf the other leaves sit at distance 2: cut {01} or {02, 03}
  CHECK(min_pload_rooted(star, 1, 2).p == frac(1, 2));
  CHECK(oracle::pload_oracle(star, 2, 1) == frac(1, 2));
  CHECK(min_pload_rooted(star, 1, 1).p == oracle::pload_oracle(star, 1, 1));
}

TEST_CASE("relaxation ordering and agreement with the oracle LP") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(4 + trial % 5, trial % 4, rng);
    const VertexId r = trial % g.vertex_count();
    for (int w : {1, 2}) {
      CAPTURE(trial);
      CAPTURE(w);
      const auto a = min_pload(g, w);
      const auto b = min_pload_rooted(g, r, w);
      REQUIRE(a.status == lp::Status::optimal);
      REQUIRE(b.status == lp::Status::optimal);
      CHECK(a.p == oracle::pload_oracle(g, w));
      CHECK(b.p == oracle::pload_oracle(g, w, r));
      CHECK(a.p <= b.p);
      CHECK(verify_distribution(g, w, a.distribution, a.p).ok());
      CHECK(verify_distribution(g, w, b.distribution, b.p, r).ok());
      oracle_check(g, w, a.distribution, a.p);
      oracle_check(g, w, b.distribution, b.p);
      for (int k = 1; k <= w; ++k) {
        const auto c = min_pload_radius(g, r, w, k);
        REQUIRE(c.status == lp::Status::optimal);
        CHECK(c.p == oracle::pload_oracle(g, w, r, k));
        CHECK(b.p <= c.p);
        if (k == w) CHECK(c.p == b.p);
        CHECK(verify_distribution(g, w, c.distribution, c.p, r, k).ok());
      }
    }
  }
}

TEST_CASE("gadget frontier") {
  const auto g2 = gen_cycle_gadget(2);
  const VertexId r2 = g2.graph.require_mark("r");
  const auto fam2 = enumerate(g2.graph, 4, {.root = r2});
  CHECK(fam2.size() == 57);
  CHECK(min_pload(fam2, 2).p == frac(1, 4));
  CHECK(min_pload_rooted(fam2, 2).p == frac(1, 2));
  const auto rad2 = min_pload_radius(fam2, 2, 1);
  CHECK(rad2.p == frac(5, 9));
  CHECK(rad2.p == oracle::pload_oracle(g2.graph, 2, r2, 1));
  CHECK(2 * rad2.p >= frac(10, 9));
  CHECK(verify_distribution(g2.graph, 2, rad2.distribution, rad2.p, r2, 1).ok());

  const auto g4 = gen_cycle_gadget(4);
  const VertexId r4 = g4.graph.require_mark("r");
  const auto fam4 = enumerate(g4.graph, 8, {.root = r4});
  CHECK(fam4.size() == 4065);
  const auto rad4 = min_pload_radius(fam4, 4, 2);
  CHECK(rad4.p == frac(5, 18));
  CHECK(4 * rad4.p >= frac(10, 9));
  CHECK(rad4.p == oracle::pload_oracle(g4.graph, 4, r4, 2));
  CHECK(verify_distribution(g4.graph, 4, rad4.distribution, rad4.p, r4, 2).ok());
  oracle_check(g4.graph, 4, rad4.distribution, rad4.p);

  const auto csv = frontier_csv({{2, 1, 1, rad2.p, fam2.size(), rad2.pivots}});
  CHECK(csv.rfind("w,k,m,min_p,w_times_p,family_size,lp_pivots\n2,1,1,5/9,10/9,57,", 0) == 0);
}

TEST_CASE("family preconditions") {
  const Graph c = cycle_graph(4);
  CHECK_THROWS(min_pload(enumerate(c, 3), 2));
  CHECK_THROWS(min_pload_rooted(enumerate(c, 4), 2));
  CHECK_THROWS(min_pload_radius(enumerate(c, 4, {.root = 0, .radius_bound = 2}), 2, 1));
  CHECK_THROWS(min_pload_radius(c, 0, 2, 3));
  CHECK_THROWS(min_pload_radius(c, 0, 2, 0));
}

TEST_CASE("shortest root path is hit once") {
  const auto gad = gen_cycle_gadget(2);
  const auto& g = gad.graph;
  const VertexId r = g.require_mark("r");
  std::vector<EdgeId> pa = gad.paths.at("P_u");
  pa.insert(pa.end(), gad.paths.at("P_a").begin(), gad.paths.at("P_a").end());
  for (const auto& res : {min_pload_rooted(g, r, 2), min_pload_radius(g, r, 2, 1)}) {
    const auto rep = path_hit_check(g, r, 2, pa, res.distribution, res.p);
    CHECK(rep.every_member_meets_path);
    CHECK(rep.ok());
    CHECK(rep.bound == 2 * res.p - 1);
  }
  // rooted at r: P_u then P_c reaches u' at distance 2
  std::vector<EdgeId> pc = gad.paths.at("P_u");
  pc.insert(pc.end(), gad.paths.at("P_c").begin(), gad.paths.at("P_c").end());
  CHECK(path_hit_check(g, r, 2, pc, min_pload_rooted(g, r, 2).distribution, frac(1, 2)).ok());

  const auto any = min_pload_rooted(g, r, 2);
  CHECK_THROWS_AS(path_hit_check(g, r, 2, gad.paths.at("P_u"), any.distribution, any.p), std::invalid_argument);
  CHECK_THROWS_AS(path_hit_check(g, r, 2, {gad.paths.at("P_a")[0], gad.paths.at("P_u")[0]}, any.distribution, any.p),
                  std::invalid_argument);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph t = oracle::random_tree(6 + trial, rng);
    const int w = 2 + trial % 3;
    const auto dist_r = distances_from(t, 0);
    // walk down to a vertex at depth w, if any
    std::vector<EdgeId> walk;
    VertexId far = -1;
    for (VertexId v = 0; v < static_cast<VertexId>(t.vertex_count()); ++v)
      if (dist_r[v] == w) far = v;
    if (far < 0) continue;
    for (VertexId at = far; at != 0;) {
      for (const auto& inc : t.neighbors(at)) {
        if (dist_r[inc.to] == dist_r[at] - 1) {
          walk.push_back(inc.edge);
          at = inc.to;
          break;
        }
      }
    }
    std::reverse(walk.begin(), walk.end());
    Distribution uniform;
    for (const auto& f : tree_family(t, 0, w)) {
      uniform.members.push_back(f);
      uniform.y.push_back(frac(1, w));
    }
    const auto rep = path_hit_check(t, 0, w, walk, uniform, frac(1, w));
    CHECK(rep.ok());
    CHECK(rep.double_hit_mass == 0);
    CHECK(rep.bound == 0);
  }
}

TEST_CASE("escaping mass") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph t = oracle::random_tree(5 + trial, rng);
    for (int w : {1, 2, 3}) {
      const auto z = mass_outside_rooted(t, 0, w, frac(1, w));
      REQUIRE(z.status == lp::Status::optimal);
      CHECK(z.z == 0);
    }
  }
  const auto gad = gen_cycle_gadget(2);
  const VertexId r = gad.graph.require_mark("r");
  CHECK(mass_outside_rooted(gad.graph, r, 2, 1).z == 0);
  CHECK(mass_outside_rooted(gad.graph, r, 2, frac(1, 4)).z == 1);
  CHECK(mass_outside_rooted(gad.graph, r, 2, frac(1, 3)).z == frac(2, 3));
  const auto none = mass_outside_rooted(gad.graph, r, 2, frac(1, 5));
  CHECK(none.status == lp::Status::infeasible);
  CHECK(!none.farkas.empty());
  const auto ok = mass_outside_rooted(gad.graph, r, 2, frac(1, 3));
  CHECK(verify_distribution(gad.graph, 2, ok.distribution, frac(1, 3)).ok());
  CHECK(verify_distribution(gad.graph, 2, ok.distribution, frac(1, 3)).rooted_mass == 0);
}

TEST_CASE("amplification table") {
  const auto gad = gen_cycle_gadget(2);
  const VertexId r = gad.graph.require_mark("r");
  const auto rows = amplification_experiment(gad.graph, r, 2, frac(5, 12), 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].edges == 6);
  CHECK(rows[1].edges == 12);
  CHECK(rows[0].z == frac(1, 3));
  CHECK(rows[1].z == frac(2, 3));
  for (const auto& row : rows) CHECK(row.counting_holds);
  CHECK(rows[0].bound_holds);
  CHECK(!rows[1].bound_holds);

  const auto loose = amplification_experiment(gad.graph, r, 2, frac(23, 48), 2);
  CHECK(loose[0].z == frac(1, 12));
  CHECK(loose[1].z == frac(1, 6));
  for (const auto& row : loose) CHECK(row.bound_holds);

  const auto tight = amplification_experiment(gad.graph, r, 2, frac(1, 3), 2);
  CHECK(tight[1].status == lp::Status::infeasible);
  CHECK(!tight[1].bound_holds);
  CHECK_THROWS_AS(amplification_experiment(gad.graph, r, 2, frac(1, 2), 4), std::length_error);
}

TEST_CASE("projection onto 1-sum factors") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph a = oracle::random_connected(5, 1 + trial % 2, rng);
    const Graph b = oracle::random_connected(5, 1 + (trial / 2) % 2, rng);
    const std::vector<std::pair<Graph, VertexId>> parts{{a, 0}, {b, static_cast<VertexId>(trial % 5)}};
    const auto sum = one_sum(parts);
    const int w = 1 + trial % 2;
    const auto fam = enumerate(sum.graph, 2 * w);
    const auto dist = random_distribution(fam, rng, 6);
    const Rational p = max_load(sum.graph, dist);
    for (std::size_t i = 0; i < 2; ++i) {
      const auto h = edge_induced_subgraph(sum.graph, EdgeSet::from_ids(sum.graph.edge_count(), sum.edge_maps[i]));
      const auto proj = project(sum.graph, dist, h, w);
      CHECK(verify_distribution(h.graph, w, proj, p).ok());
      oracle_check(h.graph, w, proj, p);
      // loads carry over edge by edge
      const auto big = edge_loads(sum.graph.edge_count(), dist);
      const auto small = edge_loads(h.graph.edge_count(), proj);
      for (std::size_t j = 0; j < small.size(); ++j) CHECK(small[j] == big[h.edge_map[j]]);
    }
  }

  const Graph c = cycle_graph(4);
  const auto whole = edge_induced_subgraph(c, EdgeSet::full(4));
  const auto best = min_pload_rooted(c, 0, 2);
  const auto same = project(c, best.distribution, whole, 2);
  CHECK(same.members == best.distribution.members);
  CHECK(same.y == best.distribution.y);

  Distribution single{{EdgeSet::from_mask(4, 0b0101)}, {1}};
  const auto half = edge_induced_subgraph(c, EdgeSet::from_mask(4, 0b0011));
  const auto img = project(c, single, half, 2);
  REQUIRE(img.members.size() == 1);
  CHECK(img.members[0].size() == 1);
  CHECK(img.y[0] == 1);

  // the empty set is not a 2-diameter decomposition of a 2-edge path
  Distribution bad{{EdgeSet(4)}, {1}};
  CHECK_THROWS_AS(project(c, bad, half, 1), std::domain_error);
}
