#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcg/decompositions.hpp"
#include "mcg/exact_lp.hpp"
#include "mcg/graph.hpp"
#include "mcg/rational.hpp"

namespace mcg {

/// Probability vector over edge sets of one graph.
struct Distribution {
  std::vector<EdgeSet> members;
  std::vector<Rational> y;
};

struct PloadResult {
  lp::Status status = lp::Status::infeasible;
  Rational p;
  int w = 0;
  std::optional<int> k;
  std::optional<VertexId> root;
  /// Support of the optimal y only.
  Distribution distribution;
  std::vector<Rational> farkas;
  std::size_t family_size = 0;
  std::size_t columns = 0;
  std::size_t pivots = 0;
};

/// All LPs below take a family enumerated with t = 2w. The rooted variants
/// need per-member radii (a family enumerated with a root).
PloadResult min_pload(const DecompositionFamily& family, int w);
PloadResult min_pload_rooted(const DecompositionFamily& family, int w);
/// min p s.t. support in F^w, loads <= p, sum_{F^k} y + (w-k) p >= 1.
PloadResult min_pload_radius(const DecompositionFamily& family, int w, int k);

PloadResult min_pload(const Graph& g, int w, std::size_t cap = kDefaultEnumerationCap);
PloadResult min_pload_rooted(const Graph& g, VertexId r, int w, std::size_t cap = kDefaultEnumerationCap);
PloadResult min_pload_radius(const Graph& g, VertexId r, int w, int k, std::size_t cap = kDefaultEnumerationCap);

struct EscapeResult {
  lp::Status status = lp::Status::infeasible;
  /// min mass on members with rad_F(r) >= w among p-load distributions.
  Rational z;
  Distribution distribution;
  std::vector<Rational> farkas;
  std::size_t family_size = 0;
  std::size_t pivots = 0;
};

EscapeResult mass_outside_rooted(const DecompositionFamily& family, int w, const Rational& p);
EscapeResult mass_outside_rooted(const Graph& g, VertexId r, int w, const Rational& p,
                                 std::size_t cap = kDefaultEnumerationCap);

struct AmplificationRow {
  int m = 0;
  std::size_t edges = 0;
  std::size_t family_size = 0;
  lp::Status status = lp::Status::infeasible;
  Rational z;
  /// m * z_m <= 1.
  bool bound_holds = false;
  /// m * z_1 <= z_m <= 1: the copies escape on disjoint events, each with
  /// mass >= z_1.
  bool counting_holds = false;
  std::size_t pivots = 0;
};

/// z_m = mass_outside_rooted on the m-fold 1-sum of g at r, for m = 1..max_m.
std::vector<AmplificationRow> amplification_experiment(const Graph& g, VertexId r, int w, const Rational& p, int max_m,
                                                       std::size_t cap = kDefaultEnumerationCap);

struct DistributionCheck {
  Rational max_load;
  Rational rooted_mass;  // mass on rad < w (when a root is given)
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exact re-evaluation independent of any LP: y >= 0, sum y = 1, every member
/// is a 2w-diameter decomposition, every load <= p; with a root, support has
/// rad < w; with k, the mass on rad < k is >= 1 - p (w - k).
DistributionCheck verify_distribution(const Graph& g, int w, const Distribution& dist, const Rational& p,
                                      std::optional<VertexId> root = std::nullopt, std::optional<int> k = std::nullopt);

std::vector<Rational> edge_loads(std::size_t edge_count, const Distribution& dist);

struct PathHitReport {
  bool every_member_meets_path = true;
  Rational double_hit_mass;  // mass on members with |F n E(P)| >= 2
  Rational bound;            // w p - 1
  bool ok() const { return every_member_meets_path && double_hit_mass <= bound; }
};

/// P is an edge list forming a walk of length w starting at r that must be a
/// shortest path; std::invalid_argument otherwise.
PathHitReport path_hit_check(const Graph& g, VertexId r, int w, const std::vector<EdgeId>& path, const Distribution& dist,
                             const Rational& p);

/// y_F = sum of x over members F' with F' n E(H) = F, expressed in the edge
/// ids of the subgraph. Throws std::domain_error when an image is not a
/// 2w-diameter decomposition of H.
Distribution project(const Graph& g, const Distribution& dist, const EdgeSubgraph& h, int w);

/// CSV rows: w,k,m,min_p,w_times_p,family_size,lp_pivots.
struct FrontierRow {
  int w = 0;
  std::optional<int> k;
  int m = 1;
  Rational p;
  std::size_t family_size = 0;
  std::size_t pivots = 0;
};
std::string frontier_csv(const std::vector<FrontierRow>& rows);

}  // namespace mcg
