#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcg/graph.hpp"
#include "mcg/multicut.hpp"
#include "mcg/rational.hpp"

namespace mcg {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// All t-diameter decompositions of a graph, optionally restricted to those
/// with rad_F(root) < radius_bound. Members are in ascending bitmask order.
struct DecompositionFamily {
  Graph graph;
  Length t = 0;
  std::optional<VertexId> root;
  std::optional<Length> radius_bound;
  std::vector<EdgeSet> members;
  /// rad_F(root) per member; empty without a root.
  std::vector<Length> radii;

  std::size_t size() const { return members.size(); }
};

struct EnumerateOptions {
  std::optional<VertexId> root;
  /// Keep only members with rad_F(root) < radius_bound (requires root).
  std::optional<Length> radius_bound;
  std::size_t cap = kDefaultEnumerationCap;
};

/// Throws std::length_error above the edge cap and std::invalid_argument for
/// non-unit lengths.
DecompositionFamily enumerate(const Graph& g, Length t, const EnumerateOptions& options = {});

/// Members whose radius from the family root is < k.
std::vector<std::size_t> members_with_radius_below(const DecompositionFamily& family, Length k);

/// F_i = edges e with l(r, e) = i mod w, for i = 0..w-1.
std::vector<EdgeSet> tree_family(const Graph& tree, VertexId r, int w);

struct DiameterReduction {
  MulticutInstance instance;
  std::vector<Rational> x;
};

/// Pairs at distance >= t, unit costs, x = 1/t.
DiameterReduction diameter_reduce(const Graph& g, Length t);

struct TreeReport {
  int w = 0;
  std::vector<EdgeSet> family;
  std::vector<Rational> loads;  // per edge under y = 1/w
  std::vector<Length> radii;    // rad_{F_i}(r)
  /// Per k = 1..w: sum of y over F_0..F_{k-1}, and over members with
  /// rad < k.
  std::vector<Rational> index_mass;
  std::vector<Rational> radius_mass;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks that the F_i partition E(T), that each is a 2w-diameter
/// decomposition, that every load is exactly 1/w, that rad_{F_i}(r) <= i, that
/// sum_{i<k} y = k/w = 1 - (2/2w)(w-k), and that the mass of members with
/// rad < k is at least that bound.
TreeReport verify_tree_properties(const Graph& tree, VertexId r, int w);

/// CSV with header member_id,mask_hex,diameter,radius_from_root.
std::string family_csv(const DecompositionFamily& family);

}  // namespace mcg
