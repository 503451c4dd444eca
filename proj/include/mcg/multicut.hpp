#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcg/exact_lp.hpp"
#include "mcg/graph.hpp"
#include "mcg/rational.hpp"

namespace mcg {

using VertexPair = std::pair<VertexId, VertexId>;

/// Graph, nonnegative edge costs and source-sink pairs. Pairs are either an
/// explicit sorted list (s < t) or every pair at G-distance >= threshold.
struct MulticutInstance {
  Graph graph;
  std::vector<Rational> costs;
  std::vector<VertexPair> pairs;
  std::optional<Length> pair_threshold;

  bool implicit_pairs() const { return pair_threshold.has_value(); }
  friend bool operator==(const MulticutInstance&, const MulticutInstance&) = default;
};

/// Sorts and canonicalizes explicit pairs, then checks costs and pairs.
/// Throws std::invalid_argument on s = t, a disconnected pair, a negative or
/// missing cost, or a duplicate pair.
void validate(MulticutInstance& instance);

/// Explicit pair list; for implicit instances all pairs at distance >= t.
std::vector<VertexPair> materialize_pairs(const MulticutInstance& instance);

bool is_feasible_multicut(const MulticutInstance& instance, const EdgeSet& cut);
Rational cut_cost(const std::vector<Rational>& weights, const EdgeSet& cut);

struct Path {
  VertexPair pair;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

/// Shortest path under x for the lexicographically smallest pair whose
/// x-distance is < 1, or nothing when x satisfies every path constraint.
std::optional<Path> separate(const MulticutInstance& instance, const std::vector<Rational>& x);

struct FractionalSolution {
  std::vector<Rational> x;
  Rational value;
  /// Path columns of the final master and their flow values.
  std::vector<Path> paths;
  std::vector<Rational> flows;
  std::size_t rounds = 0;
  std::size_t pivots = 0;
};

/// Exact OPT_LP. The master is the path-flow LP (max total flow under edge
/// capacities = costs); x is read off its capacity duals and every round
/// adds the path returned by `separate`.
FractionalSolution solve_fractional(const MulticutInstance& instance);

struct FlowPath {
  VertexPair pair;
  std::vector<VertexId> vertices;
  Rational flow;
};

struct MultiflowSolution {
  std::vector<FlowPath> paths;
  Rational value;
};

MultiflowSolution extract_multiflow(const MulticutInstance& instance, const FractionalSolution& fractional);
/// Capacity feasibility and path validity, checked exactly.
bool verify_multiflow(const MulticutInstance& instance, const MultiflowSolution& flow, std::string* why = nullptr);

struct MulticutSolution {
  EdgeSet cut;
  Rational cost;
  bool optimal = false;
  bool feasible = true;  // false: no multicut avoids the forbidden edges
  Rational lower_bound;
  std::size_t nodes = 0;
};

struct BranchOptions {
  std::size_t node_budget = 1'000'000;
  /// Edges that may not be cut.
  std::optional<EdgeSet> forbidden;
};

/// Exact minimum-weight multicut by branch and bound over the path LP.
MulticutSolution min_weight_multicut(const MulticutInstance& instance, const std::vector<Rational>& weights,
                                     const BranchOptions& options = {});
MulticutSolution solve_integral(const MulticutInstance& instance, std::size_t node_budget = 1'000'000);

/// Greedy multicut: cut the cheapest allowed edge of a shortest connecting
/// path until every pair is split, then drop redundant edges.
std::optional<EdgeSet> greedy_multicut(const MulticutInstance& instance, const std::vector<Rational>& weights,
                                       const std::optional<EdgeSet>& forbidden = std::nullopt);

struct GapResult {
  Rational opt_lp;
  Rational opt_ip;
  bool ip_optimal = false;
  /// Unset when there are no pairs or OPT_LP = 0.
  std::optional<Rational> gap;
  bool degenerate = false;
  std::size_t lp_rounds = 0;
  std::size_t lp_pivots = 0;
  std::size_t ip_nodes = 0;
};

GapResult gap(const MulticutInstance& instance, std::size_t node_budget = 1'000'000);

}  // namespace mcg
