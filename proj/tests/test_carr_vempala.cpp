#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/carr_vempala.hpp"
#include "mcg/instance_gen.hpp"
#include "oracles.hpp"

using namespace mcg;

namespace {

oracle::Pairs pairs_of(const MulticutInstance& inst) { return materialize_pairs(inst); }

// 1 / max{sum y : sum_{F ni e} y_F <= x(e)} over every multicut.
Rational brute_min_alpha(const MulticutInstance& inst, const std::vector<Rational>& x) {
  const auto cuts = oracle::all_multicuts(inst.graph, pairs_of(inst));
  lp::LinearProgram prog(lp::Sense::maximize);
  for (std::size_t j = 0; j < cuts.size(); ++j) prog.add_variable(1);
  for (std::size_t e = 0; e < inst.graph.edge_count(); ++e) {
    std::vector<lp::Coefficient> row;
    for (std::size_t j = 0; j < cuts.size(); ++j)
      if ((cuts[j] >> e) & 1) row.push_back({j, 1});
    prog.add_constraint(row, lp::Relation::less_equal, x[e]);
  }
  const auto out = lp::solve(prog);
  REQUIRE(out.status == lp::Status::optimal);
  return 1 / out.objective;
}

// The witness inequality against every multicut, by enumeration.
bool brute_witness_ok(const MulticutInstance& inst, const std::vector<Rational>& x, const Rational& alpha,
                      const FarkasWitness& w) {
  Rational cx = 0;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (w.c[e] < 0) return false;
    cx += w.c[e] * x[e];
  }
  if (!(alpha * cx < w.u)) return false;
  for (auto mask : oracle::all_multicuts(inst.graph, pairs_of(inst))) {
    Rational s = 0;
    for (std::size_t e = 0; e < x.size(); ++e)
      if ((mask >> e) & 1) s += w.c[e];
    if (s < w.u) return false;
  }
  return true;
}

MulticutInstance random_tree_instance(std::mt19937_64& rng, int n, int k) {
  MulticutInstance inst;
  inst.graph = oracle::random_tree(n, rng);
  std::uniform_int_distribution<int> cost(1, 4);
  for (std::size_t e = 0; e < inst.graph.edge_count(); ++e) inst.costs.push_back(cost(rng));
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(inst.pairs.size()) < k) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    bool dup = false;
    for (const auto& p : inst.pairs) dup |= (p == VertexPair{a, b});
    if (!dup) inst.pairs.push_back({a, b});
  }
  validate(inst);
  return inst;
}

}  // namespace

TEST_CASE("single edge") {
  MulticutInstance inst;
  inst.graph = Graph(2);
  inst.graph.add_edge(0, 1);
  inst.costs = {1};
  inst.pairs = {{0, 1}};
  validate(inst);
  const auto res = decompose(inst, {1}, 1);
  REQUIRE(res.status == DecompositionStatus::decomposed);
  REQUIRE(res.terms.size() == 1);
  CHECK(res.terms[0].cut.ids() == std::vector<EdgeId>{0});
  CHECK(res.terms[0].weight == 1);
  CHECK(min_alpha(inst, {1}).alpha == 1);
  CHECK_THROWS_AS(decompose(inst, {frac(1, 2)}, 1), std::invalid_argument);
}

TEST_CASE("star with three leaves") {
  const auto star = gen_star_gap(3);
  const std::vector<Rational> x(3, frac(1, 2));
  CHECK(brute_min_alpha(star, x) == frac(4, 3));

  const auto best = min_alpha(star, x);
  REQUIRE(best.status == DecompositionStatus::decomposed);
  CHECK(best.alpha == frac(4, 3));
  CHECK(verify_decomposition(star, x, best.alpha, best.terms).empty());

  const auto at = decompose(star, x, frac(4, 3));
  REQUIRE(at.status == DecompositionStatus::decomposed);
  CHECK(at.terms.size() == 3);
  for (const auto& t : at.terms) {
    CHECK(t.cut.size() == 2);
    CHECK(t.weight == frac(1, 3));
  }
  CHECK(decomposition_csv(at.terms).rfind("term_id,weight,edges\n0,1/3,", 0) == 0);

  const auto below = decompose(star, x, frac(5, 4));
  REQUIRE(below.status == DecompositionStatus::witness);
  REQUIRE(below.witness);
  CHECK(verify_witness(star, x, frac(5, 4), *below.witness).empty());
  CHECK(brute_witness_ok(star, x, frac(5, 4), *below.witness));
  CHECK(below.master_value < 1);
}

TEST_CASE("zero entries of x are never cut") {
  // path 0-1-2 with pair (0,2): x = (1, 0) must cut the first edge only
  MulticutInstance inst;
  inst.graph = Graph(3);
  inst.graph.add_edge(0, 1);
  inst.graph.add_edge(1, 2);
  inst.costs = {1, 1};
  inst.pairs = {{0, 2}};
  validate(inst);
  const std::vector<Rational> x{1, 0};
  const auto res = min_alpha(inst, x);
  CHECK(res.alpha == 1);
  for (const auto& t : res.terms) CHECK(!t.cut.contains(1));
  const auto w = decompose(inst, x, frac(1, 2));
  REQUIRE(w.witness);
  CHECK(brute_witness_ok(inst, x, frac(1, 2), *w.witness));
}

TEST_CASE("no pairs") {
  MulticutInstance inst;
  inst.graph = Graph(2);
  inst.graph.add_edge(0, 1);
  inst.costs = {1};
  validate(inst);
  const auto res = min_alpha(inst, {0});
  CHECK(res.alpha == 0);
  REQUIRE(res.terms.size() == 1);
  CHECK(res.terms[0].cut.empty());
}

TEST_CASE("random trees at the LP optimum") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    CAPTURE(trial);
    const auto inst = random_tree_instance(rng, 4 + trial % 9, 1 + trial % 4);
    const auto frac_sol = solve_fractional(inst);
    const auto& x = frac_sol.x;
    const auto res = min_alpha(inst, x);
    REQUIRE(res.status == DecompositionStatus::decomposed);
    CHECK(res.alpha == brute_min_alpha(inst, x));
    CHECK(res.alpha <= 2);
    CHECK(verify_decomposition(inst, x, res.alpha, res.terms).empty());
    const auto ip = solve_integral(inst);
    REQUIRE(ip.optimal);
    if (frac_sol.value > 0) CHECK(res.alpha >= ip.cost / frac_sol.value);

    const Rational lower = res.alpha - frac(1, 97);
    if (lower >= 0) {
      const auto w = decompose(inst, x, lower);
      REQUIRE(w.status == DecompositionStatus::witness);
      CHECK(verify_witness(inst, x, lower, *w.witness).empty());
      CHECK(brute_witness_ok(inst, x, lower, *w.witness));
    }
    CHECK(decompose(inst, x, res.alpha).status == DecompositionStatus::decomposed);
  }
}

TEST_CASE("random graphs with arbitrary feasible x") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    MulticutInstance inst;
    inst.graph = oracle::random_connected(5 + trial % 3, 1 + trial % 3, rng);
    inst.costs.assign(inst.graph.edge_count(), 1);
    inst.pairs = {{0, static_cast<VertexId>(inst.graph.vertex_count() - 1)}, {1, 2}};
    validate(inst);
    // x = 1 everywhere satisfies every path
    std::vector<Rational> x(inst.graph.edge_count(), 1);
    const auto res = min_alpha(inst, x);
    CHECK(res.alpha == brute_min_alpha(inst, x));
    CHECK(verify_decomposition(inst, x, res.alpha, res.terms).empty());
  }
}
