#include "mcg/carr_vempala.hpp"

#include <sstream>
#include <stdexcept>

namespace mcg {

namespace {

using lp::Coefficient;
using lp::Relation;
using lp::Status;

struct Master {
  std::vector<EdgeId> row_edge;  // row -> edge (only edges with x > 0)
  std::vector<int> edge_row;     // edge -> row or -1
  std::vector<EdgeSet> columns;
};

std::vector<Coefficient> column_of(const Master& m, const EdgeSet& cut) {
  std::vector<Coefficient> col;
  for (EdgeId e : cut.ids()) col.push_back({static_cast<std::size_t>(m.edge_row[e]), 1});
  return col;
}

// Column generation for max sum y s.t. sum_{F ni e} y_F <= alpha x(e).
DecompositionResult run_master(const MulticutInstance& inst, const std::vector<Rational>& x, const Rational& alpha,
                               const DecomposeOptions& options) {
  const std::size_t m = inst.graph.edge_count();
  DecompositionResult res;
  res.alpha = alpha;

  Master master;
  master.edge_row.assign(m, -1);
  EdgeSet zero(m);
  lp::LinearProgram prog(lp::Sense::maximize);
  for (EdgeId e = 0; e < static_cast<EdgeId>(m); ++e) {
    if (x[e] > 0) {
      master.edge_row[e] = static_cast<int>(master.row_edge.size());
      master.row_edge.push_back(e);
      prog.add_constraint({}, Relation::less_equal, alpha * x[e]);
    } else {
      zero.insert(e);
    }
  }
  lp::Solver solver(std::move(prog));

  auto start = greedy_multicut(inst, x, zero);
  if (!start) throw std::invalid_argument("no multicut avoids the edges with x = 0");
  master.columns.push_back(*start);
  solver.add_column(1, column_of(master, *start));

  BranchOptions branch;
  branch.node_budget = options.node_budget;
  branch.forbidden = zero;
  lp::LpOutcome out;
  for (;;) {
    ++res.rounds;
    out = solver.solve();
    if (out.status != Status::optimal) throw std::logic_error("multicut master is not optimal");
    std::vector<Rational> price(m, 0);
    for (std::size_t i = 0; i < master.row_edge.size(); ++i) price[master.row_edge[i]] = out.duals[i];
    const auto cand = min_weight_multicut(inst, price, branch);
    res.pricing_nodes += cand.nodes;
    if (!cand.feasible) throw std::logic_error("pricing lost feasibility");
    if (cand.cost < 1) {
      master.columns.push_back(cand.cut);
      solver.add_column(1, column_of(master, cand.cut));
      continue;
    }
    res.master_value = out.objective;
    if (!cand.optimal && cand.lower_bound < 1) {
      res.status = DecompositionStatus::inconclusive;
      break;
    }
    // support of y / value, whatever the value
    for (std::size_t j = 0; j < master.columns.size() && out.objective > 0; ++j) {
      if (out.primal[j] == 0) continue;
      res.terms.push_back({master.columns[j], out.primal[j] / out.objective});
    }
    if (out.objective >= 1) {
      res.status = DecompositionStatus::decomposed;
    } else {
      res.status = DecompositionStatus::witness;
      FarkasWitness wit;
      wit.c = price;
      for (EdgeId e : zero.ids()) wit.c[e] = 1;
      wit.u = 1;
      res.witness = std::move(wit);
    }
    break;
  }
  res.pivots = solver.total_pivots();
  return res;
}

void check_x(const MulticutInstance& inst, const std::vector<Rational>& x) {
  if (x.size() != inst.graph.edge_count()) throw std::invalid_argument("x has the wrong length");
  for (const auto& v : x)
    if (v < 0) throw std::invalid_argument("x must be nonnegative");
  if (separate(inst, x)) throw std::invalid_argument("x violates a path constraint");
}

}  // namespace

std::string to_string(DecompositionStatus s) {
  switch (s) {
    case DecompositionStatus::decomposed:
      return "decomposed";
    case DecompositionStatus::witness:
      return "witness";
    case DecompositionStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

DecompositionResult decompose(const MulticutInstance& instance, const std::vector<Rational>& x, const Rational& alpha,
                              const DecomposeOptions& options) {
  check_x(instance, x);
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  if (materialize_pairs(instance).empty()) {
    DecompositionResult res;
    res.alpha = alpha;
    res.status = DecompositionStatus::decomposed;
    res.terms.push_back({EdgeSet(instance.graph.edge_count()), 1});
    res.master_value = 1;
    return res;
  }
  auto res = run_master(instance, x, alpha, options);
  if (res.status != DecompositionStatus::decomposed) res.terms.clear();
  return res;
}

DecompositionResult min_alpha(const MulticutInstance& instance, const std::vector<Rational>& x,
                              const DecomposeOptions& options) {
  check_x(instance, x);
  if (materialize_pairs(instance).empty()) {
    DecompositionResult res;
    res.alpha = 0;
    res.status = DecompositionStatus::decomposed;
    res.terms.push_back({EdgeSet(instance.graph.edge_count()), 1});
    res.master_value = 1;
    return res;
  }
  auto res = run_master(instance, x, 1, options);
  if (res.status == DecompositionStatus::inconclusive) return res;
  // scaling alpha scales the master optimum, so alpha* = 1 / value
  res.alpha = 1 / res.master_value;
  res.status = DecompositionStatus::decomposed;
  res.witness.reset();
  if (res.terms.empty()) throw std::logic_error("min_alpha lost its columns");
  return res;
}

std::vector<std::string> verify_decomposition(const MulticutInstance& instance, const std::vector<Rational>& x,
                                              const Rational& alpha, const std::vector<ConvexTerm>& terms) {
  std::vector<std::string> fail;
  const std::size_t m = instance.graph.edge_count();
  Rational total = 0;
  std::vector<Rational> load(m, 0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.weight < 0) fail.push_back("term " + std::to_string(i) + " has negative weight");
    if (t.cut.universe() != m) {
      fail.push_back("term " + std::to_string(i) + " is over another edge set");
      continue;
    }
    if (!is_feasible_multicut(instance, t.cut)) fail.push_back("term " + std::to_string(i) + " is not a multicut");
    total += t.weight;
    for (EdgeId e : t.cut.ids()) load[e] += t.weight;
  }
  if (total != 1) fail.push_back("weights sum to " + to_string(total));
  for (std::size_t e = 0; e < m; ++e)
    if (load[e] > alpha * x[e]) fail.push_back("edge " + std::to_string(e) + " has load " + to_string(load[e]));
  return fail;
}

std::vector<std::string> verify_witness(const MulticutInstance& instance, const std::vector<Rational>& x,
                                        const Rational& alpha, const FarkasWitness& witness) {
  std::vector<std::string> fail;
  const std::size_t m = instance.graph.edge_count();
  if (witness.c.size() != m) return {"witness has the wrong length"};
  Rational cx = 0;
  for (std::size_t e = 0; e < m; ++e) {
    if (witness.c[e] < 0) fail.push_back("c is negative on edge " + std::to_string(e));
    cx += witness.c[e] * x[e];
  }
  if (!(alpha * cx < witness.u)) fail.push_back("alpha c.x = " + to_string(Rational(alpha * cx)) + " is not below u");
  if (!fail.empty()) return fail;
  const auto best = min_weight_multicut(instance, witness.c);
  if (!best.optimal) {
    fail.push_back("minimum multicut under c was not proven");
  } else if (best.cost < witness.u) {
    fail.push_back("multicut " + best.cut.to_hex() + " has weight " + to_string(best.cost) + " below u");
  }
  return fail;
}

std::string decomposition_csv(const std::vector<ConvexTerm>& terms) {
  std::ostringstream out;
  out << "term_id,weight,edges\n";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << i << ',' << to_string(terms[i].weight) << ',';
    const auto ids = terms[i].cut.ids();
    for (std::size_t j = 0; j < ids.size(); ++j) out << (j ? ";" : "") << ids[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace mcg
