#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mcg {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Length = std::int64_t;

/// Distance reported between vertices in different connected components.
inline constexpr Length kUnreachable = std::numeric_limits<Length>::max();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Length length = 1;

  VertexId other(VertexId x) const { return x == u ? v : u; }
};

struct Incidence {
  VertexId to;
  EdgeId edge;
};

/// Subset of the edge ids of some ambient graph, stored as a bitset.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe);

  static EdgeSet full(std::size_t universe);
  static EdgeSet from_mask(std::size_t universe, std::uint64_t mask);
  static EdgeSet from_ids(std::size_t universe, std::span<const EdgeId> ids);

  std::size_t universe() const { return universe_; }
  bool contains(EdgeId e) const;
  void insert(EdgeId e);
  void erase(EdgeId e);
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<EdgeId> ids() const;
  bool is_subset_of(const EdgeSet& other) const;
  bool intersects(const EdgeSet& other) const;

  /// Only valid for universes of at most 64 edges.
  std::uint64_t to_mask() const;
  /// Lowercase hex of the bitmask, most significant word first.
  std::string to_hex() const;

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) {
    return std::tie(a.universe_, a.words_) <=> std::tie(b.universe_, b.words_);
  }

 private:
  void check(EdgeId e) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph with positive integer edge lengths and optional
/// named vertex marks. Edge ids are dense in insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  VertexId add_vertex();
  /// Throws std::invalid_argument on self-loops, parallel edges, lengths < 1
  /// and std::out_of_range on unknown vertices.
  EdgeId add_edge(VertexId u, VertexId v, Length length = 1);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> neighbors(VertexId v) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool has_unit_lengths() const;
  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;

  void set_mark(const std::string& name, VertexId v);
  std::optional<VertexId> mark(const std::string& name) const;
  /// Throws std::invalid_argument when the mark is missing.
  VertexId require_mark(const std::string& name) const;
  const std::map<std::string, VertexId>& marks() const { return marks_; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::map<std::string, VertexId> marks_;
};

// ---------------------------------------------------------------------------
// Distances. All distances are taken in the full graph.

Length shortest_dist(const Graph& g, VertexId u, VertexId v);
std::vector<Length> distances_from(const Graph& g, VertexId source);
std::vector<std::vector<Length>> all_pairs_distances(const Graph& g);
/// min over the two endpoints of e.
Length dist_vertex_edge(const Graph& g, VertexId v, EdgeId e);

// ---------------------------------------------------------------------------
// Components of G - F and the decomposition predicates built on them.

/// Component label per vertex in G - F; labels are dense and ordered by the
/// smallest vertex of each component.
std::vector<int> component_labels(const Graph& g, const EdgeSet& removed);
/// Sorted vertex set of the component of G - F containing v.
std::vector<VertexId> component_of(const Graph& g, const EdgeSet& removed, VertexId v);
/// max over u in C_F(v) of the G-distance from v.
Length radius_after(const Graph& g, const EdgeSet& removed, VertexId v);
/// max over components of G - F of their G-distance diameter.
Length decomposition_diameter(const Graph& g, const EdgeSet& removed);
/// diam(F) < t (strict).
bool is_t_diameter_decomposition(const Graph& g, const EdgeSet& removed, Length t);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Every edge lies on at most one cycle.
bool is_cactus(const Graph& g);

// ---------------------------------------------------------------------------
// Graph operations.

struct SubdivisionResult {
  Graph graph;
  /// For each edge of the input, the ids of the edges replacing it.
  std::vector<std::vector<EdgeId>> edge_map;
};

/// Replaces e by a path of `parts` unit edges through fresh vertices. Original
/// vertex ids are kept; fresh vertices are appended.
SubdivisionResult subdivide(const Graph& g, EdgeId e, int parts);
/// Subdivides every edge into `parts` unit edges.
SubdivisionResult subdivide_all(const Graph& g, int parts);

struct OneSumResult {
  Graph graph;
  std::vector<std::vector<VertexId>> vertex_maps;
  std::vector<std::vector<EdgeId>> edge_maps;
  VertexId main_vertex = 0;
};

/// Disjoint union with the given roots identified into the main vertex. The
/// first graph keeps its vertex ids; marks of input i (1-based) are carried
/// over as "<name>.<i>".
OneSumResult one_sum(std::span<const std::pair<Graph, VertexId>> parts);

/// Subgraph formed by the given edges (vertices are those incident to them).
struct EdgeSubgraph {
  Graph graph;
  std::vector<VertexId> vertex_map;  // subgraph vertex -> ambient vertex
  std::vector<EdgeId> edge_map;      // subgraph edge -> ambient edge
};
EdgeSubgraph edge_induced_subgraph(const Graph& g, const EdgeSet& edges);

}  // namespace mcg
