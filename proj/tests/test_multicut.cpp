#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/multicut.hpp"
#include "oracles.hpp"

using namespace mcg;

namespace {

MulticutInstance make(Graph g, std::vector<VertexPair> pairs, std::vector<Rational> costs = {}) {
  if (costs.empty()) costs.assign(g.edge_count(), 1);
  MulticutInstance inst{std::move(g), std::move(costs), std::move(pairs), std::nullopt};
  validate(inst);
  return inst;
}

MulticutInstance single_edge(Rational cost) {
  Graph g(2);
  g.add_edge(0, 1);
  return make(g, {{0, 1}}, {cost});
}

MulticutInstance star(int leaves) {
  Graph g(leaves + 1);
  std::vector<VertexPair> pairs;
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  for (int a = 1; a <= leaves; ++a)
    for (int b = a + 1; b <= leaves; ++b) pairs.push_back({a, b});
  return make(g, pairs);
}

void check_fractional(const MulticutInstance& inst, const FractionalSolution& f) {
  CHECK_FALSE(separate(inst, f.x));
  Rational cx = 0;
  for (std::size_t e = 0; e < f.x.size(); ++e) {
    CHECK(f.x[e] >= 0);
    cx += inst.costs[e] * f.x[e];
  }
  CHECK(cx == f.value);
  const auto flow = extract_multiflow(inst, f);
  std::string why;
  CHECK_MESSAGE(verify_multiflow(inst, flow, &why), why);
  CHECK(flow.value == f.value);
}

}  // namespace

TEST_CASE("validation") {
  Graph g(3);
  g.add_edge(0, 1);
  MulticutInstance same{g, {1}, {{1, 1}}, std::nullopt};
  CHECK_THROWS_AS(validate(same), std::invalid_argument);
  MulticutInstance apart{g, {1}, {{0, 2}}, std::nullopt};
  CHECK_THROWS_AS(validate(apart), std::invalid_argument);
  MulticutInstance negative{g, {-1}, {{0, 1}}, std::nullopt};
  CHECK_THROWS_AS(validate(negative), std::invalid_argument);
  MulticutInstance twice{g, {1}, {{1, 0}, {0, 1}}, std::nullopt};
  CHECK_THROWS_AS(validate(twice), std::invalid_argument);
  MulticutInstance flipped{g, {1}, {{1, 0}}, std::nullopt};
  validate(flipped);
  CHECK(flipped.pairs == std::vector<VertexPair>{{0, 1}});
}

TEST_CASE("separation") {
  const auto e = single_edge(1);
  const auto p = separate(e, {Rational(0)});
  REQUIRE(p);
  CHECK(p->vertices == std::vector<VertexId>{0, 1});
  CHECK_FALSE(separate(e, {Rational(1)}));

  const auto s = star(3);
  const auto q = separate(s, {frac(1, 2), frac(1, 2), frac(1, 3)});
  REQUIRE(q);
  CHECK(q->pair == VertexPair{1, 3});
  CHECK_FALSE(separate(s, std::vector<Rational>(3, frac(1, 2))));
}

TEST_CASE("fractional optimum on small instances") {
  const auto e = single_edge(5);
  const auto fe = solve_fractional(e);
  CHECK(fe.value == 5);
  CHECK(fe.x[0] == 1);
  check_fractional(e, fe);

  const auto s = star(3);
  const auto fs = solve_fractional(s);
  CHECK(fs.value == frac(3, 2));
  for (const auto& x : fs.x) CHECK(x == frac(1, 2));
  check_fractional(s, fs);
  CHECK(extract_multiflow(s, fs).value == frac(3, 2));
}

TEST_CASE("integral optimum on small instances") {
  const auto e = single_edge(5);
  const auto ie = solve_integral(e);
  CHECK(ie.optimal);
  CHECK(ie.cost == 5);
  CHECK(ie.cut.ids() == std::vector<EdgeId>{0});

  const auto s3 = star(3);
  CHECK(solve_integral(s3).cost == 2);
  const auto s6 = star(6);
  CHECK(solve_integral(s6).cost == 5);
  CHECK(solve_fractional(s6).value == 3);
  CHECK(oracle::exhaustive_min_multicut(s6.graph, s6.pairs, s6.costs) == 5);
}

TEST_CASE("feasibility of multicuts") {
  const auto s = star(3);
  CHECK(is_feasible_multicut(s, EdgeSet::full(3)));
  CHECK_FALSE(is_feasible_multicut(s, EdgeSet(3)));
  CHECK(is_feasible_multicut(s, EdgeSet::from_mask(3, 0b011)));
}

TEST_CASE("weighted multicut avoids a heavy edge") {
  const auto s = star(3);
  const auto sol = min_weight_multicut(s, {1, 1, 1000});
  CHECK(sol.optimal);
  CHECK(sol.cost == 2);
  CHECK(sol.cut.ids() == std::vector<EdgeId>{0, 1});

  const auto zero = min_weight_multicut(s, std::vector<Rational>(3, 0));
  CHECK(zero.cost == 0);
  CHECK(is_feasible_multicut(s, zero.cut));

  BranchOptions opts;
  opts.forbidden = EdgeSet::from_mask(3, 0b011);
  CHECK_FALSE(min_weight_multicut(s, s.costs, opts).feasible);
  opts.forbidden = EdgeSet::from_mask(3, 0b001);
  const auto restricted = min_weight_multicut(s, s.costs, opts);
  CHECK(restricted.feasible);
  CHECK(restricted.cut.ids() == std::vector<EdgeId>{1, 2});
}

TEST_CASE("gap reports") {
  auto g1 = gap(single_edge(3));
  CHECK(g1.gap == Rational(1));
  auto g3 = gap(star(3));
  CHECK(g3.opt_lp == frac(3, 2));
  CHECK(g3.opt_ip == 2);
  CHECK(g3.gap == frac(4, 3));

  Graph g(2);
  g.add_edge(0, 1);
  auto zero = gap(make(g, {{0, 1}}, {0}));
  CHECK(zero.degenerate);
  CHECK_FALSE(zero.gap);
  auto none = gap(make(g, {}, {1}));
  CHECK_FALSE(none.degenerate);
  CHECK_FALSE(none.gap);
}

TEST_CASE("node budget exhaustion is reported") {
  const auto s = star(6);
  const auto sol = solve_integral(s, 0);
  CHECK_FALSE(sol.optimal);
  CHECK(sol.lower_bound <= 5);
  CHECK(is_feasible_multicut(s, sol.cut));
}

TEST_CASE("implicit pairs by distance threshold") {
  Graph g(5);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 1);
  MulticutInstance inst{g, std::vector<Rational>(4, 1), {}, Length{3}};
  validate(inst);
  CHECK(materialize_pairs(inst) == std::vector<VertexPair>{{0, 3}, {0, 4}, {1, 4}});
  CHECK(solve_fractional(inst).value == 1);
  CHECK(solve_integral(inst).cost == 1);
  CHECK(is_feasible_multicut(inst, EdgeSet::from_mask(4, 0b0100)));
  CHECK_FALSE(is_feasible_multicut(inst, EdgeSet::from_mask(4, 0b0001)));
}

TEST_CASE("solvers agree with exhaustive and full-path oracles") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + trial % 6;
    Graph g = oracle::random_connected(n, 1 + trial % 6, rng);
    REQUIRE(g.edge_count() <= 16);
    std::uniform_int_distribution<int> vpick(0, n - 1);
    std::uniform_int_distribution<int> cpick(0, 4);
    std::vector<VertexPair> pairs;
    const int k = 1 + trial % 4;
    while (static_cast<int>(pairs.size()) < k) {
      int a = vpick(rng), b = vpick(rng);
      if (a == b) continue;
      VertexPair p{std::min(a, b), std::max(a, b)};
      if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(p);
    }
    std::vector<Rational> costs;
    for (std::size_t e = 0; e < g.edge_count(); ++e) costs.push_back(frac(cpick(rng), 1 + trial % 2));
    const auto inst = make(g, pairs, costs);

    const auto ip = solve_integral(inst);
    REQUIRE(ip.optimal);
    CHECK(ip.cost == oracle::exhaustive_min_multicut(inst.graph, inst.pairs, inst.costs));
    CHECK(is_feasible_multicut(inst, ip.cut));
    CHECK(cut_cost(inst.costs, ip.cut) == ip.cost);

    const auto lp = solve_fractional(inst);
    CHECK(lp.value == oracle::full_path_lp(inst.graph, inst.pairs, inst.costs));
    check_fractional(inst, lp);
    CHECK(lp.value <= ip.cost);
    if (lp.value > 0) {
      CHECK(ip.cost / lp.value >= 1);
      if (inst.pairs.size() <= 2) CHECK(ip.cost == lp.value);
    }
  }
}
