#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mcg/graph.hpp"
#include "mcg/multicut.hpp"

namespace mcg {

/// Explicit pair lists are produced up to this k; beyond it pairs are the
/// implicit set at distance >= 4.
inline constexpr int kExplicitPairsUpTo = 10;

struct TwoLevelCactus {
  int k = 0;
  MulticutInstance instance;
  EdgeSet e1;  // distance 0 from v0, cost k
  EdgeSet e2;  // distance 1, cost 2
  EdgeSet e3;  // distance 2, cost 1
};

/// H: 4-cycle v1 v2 v4 v3 with pendants v2-v5 and v3-v6. H' is the k-fold
/// 1-sum of H at v1, H'' adds the edge v1-v0, and G is the k-fold 1-sum of H''
/// at v0. Pairs: every pair at distance >= 4. Marks: "v0", "v1.i" and
/// "v<a>.j.i" for the a-th vertex of inner copy j in outer copy i.
TwoLevelCactus gen_two_level_cactus(int k);

/// x = 1/4 on every edge.
Rational quarter_cost(const TwoLevelCactus& s);

struct CycleGadget {
  int w = 0;
  Graph graph;
  /// Edge ids of P_u, P_a, P_b, P_v (cycle quarters) and P_c, P_d (pendants),
  /// each listed from its first named endpoint.
  std::map<std::string, std::vector<EdgeId>> paths;
};

/// Cycle of length 2w through r, u, r', v at spacing w/2, with pendant paths
/// of length w/2 from u to u' and from v to v'. Throws on odd or nonpositive w.
CycleGadget gen_cycle_gadget(int w);

/// Star K_{1,leaves} with unit costs and all leaf pairs.
MulticutInstance gen_star_gap(int leaves);

/// Pendant path of `len` unit edges at v; the far end is marked `end_mark`
/// (v itself when len = 0).
Graph attach_path(const Graph& g, VertexId v, int len, const std::string& end_mark = "end");

/// m copies of g glued at r. Copy i keeps the marks of g as "<name>.i".
Graph amplify_one_sum(const Graph& g, VertexId r, int m);

Graph random_tree(int n, std::mt19937_64& rng);
/// Random tree plus up to `extra` chords.
Graph random_connected_graph(int n, int extra, std::mt19937_64& rng);

}  // namespace mcg
