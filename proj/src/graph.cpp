#include "mcg/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace mcg {

// ---------------------------------------------------------------------------
// EdgeSet

EdgeSet::EdgeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

EdgeSet EdgeSet::full(std::size_t universe) {
  EdgeSet s(universe);
  for (std::size_t e = 0; e < universe; ++e) s.insert(static_cast<EdgeId>(e));
  return s;
}

EdgeSet EdgeSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("EdgeSet::from_mask needs universe <= 64");
  if (universe < 64 && (mask >> universe) != 0) throw std::invalid_argument("mask exceeds universe");
  EdgeSet s(universe);
  if (universe > 0) s.words_[0] = mask;
  return s;
}

EdgeSet EdgeSet::from_ids(std::size_t universe, std::span<const EdgeId> ids) {
  EdgeSet s(universe);
  for (EdgeId e : ids) s.insert(e);
  return s;
}

void EdgeSet::check(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= universe_) {
    throw std::out_of_range("edge id " + std::to_string(e) + " outside edge set universe");
  }
}

bool EdgeSet::contains(EdgeId e) const {
  check(e);
  return (words_[e / 64] >> (e % 64)) & 1u;
}

void EdgeSet::insert(EdgeId e) {
  check(e);
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void EdgeSet::erase(EdgeId e) {
  check(e);
  words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

std::size_t EdgeSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<EdgeId>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("edge sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("edge sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::uint64_t EdgeSet::to_mask() const {
  if (universe_ > 64) throw std::logic_error("EdgeSet::to_mask needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::string EdgeSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const std::size_t digits = std::max<std::size_t>(1, (universe_ + 3) / 4);
  for (std::size_t d = digits; d-- > 0;) {
    const std::size_t bit = d * 4;
    const auto nibble = (words_.empty() ? 0 : (words_[bit / 64] >> (bit % 64))) & 0xF;
    out.push_back(kDigits[nibble]);
  }
  return "0x" + out;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  if (universe_ != other.universe_) throw std::invalid_argument("edge sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  if (universe_ != other.universe_) throw std::invalid_argument("edge sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

VertexId Graph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<VertexId>(adjacency_.size() - 1);
}

EdgeId Graph::add_edge(VertexId u, VertexId v, Length length) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (length < 1) throw std::invalid_argument("edge length must be a positive integer");
  if (find_edge(u, v)) {
    throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, length});
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  return id;
}

const Edge& Graph::edge(EdgeId e) const {
  check_edge(e);
  return edges_[e];
}

std::span<const Incidence> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const VertexId target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  for (const auto& inc : list) {
    if (inc.to == target) return inc.edge;
  }
  return std::nullopt;
}

bool Graph::has_unit_lengths() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.length == 1; });
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size()) {
    throw std::out_of_range("invalid vertex id " + std::to_string(v));
  }
}

void Graph::check_edge(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= edges_.size()) {
    throw std::out_of_range("invalid edge id " + std::to_string(e));
  }
}

void Graph::set_mark(const std::string& name, VertexId v) {
  check_vertex(v);
  marks_[name] = v;
}

std::optional<VertexId> Graph::mark(const std::string& name) const {
  const auto it = marks_.find(name);
  if (it == marks_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::require_mark(const std::string& name) const {
  if (auto v = mark(name)) return *v;
  throw std::invalid_argument("graph has no vertex marked '" + name + "'");
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.length != y.length) return false;
    if (!((x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u))) return false;
  }
  return a.marks_ == b.marks_;
}

// ---------------------------------------------------------------------------
// Distances

std::vector<Length> distances_from(const Graph& g, VertexId source) {
  g.check_vertex(source);
  std::vector<Length> dist(g.vertex_count(), kUnreachable);
  dist[source] = 0;
  if (g.has_unit_lengths()) {
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.neighbors(x)) {
        if (dist[inc.to] == kUnreachable) {
          dist[inc.to] = dist[x] + 1;
          queue.push_back(inc.to);
        }
      }
    }
    return dist;
  }
  using Item = std::pair<Length, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0, source});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (const auto& inc : g.neighbors(x)) {
      const Length nd = d + g.edge(inc.edge).length;
      if (nd < dist[inc.to]) {
        dist[inc.to] = nd;
        heap.push({nd, inc.to});
      }
    }
  }
  return dist;
}

Length shortest_dist(const Graph& g, VertexId u, VertexId v) {
  g.check_vertex(v);
  return distances_from(g, u)[v];
}

std::vector<std::vector<Length>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<Length>> table;
  table.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    table.push_back(distances_from(g, static_cast<VertexId>(v)));
  }
  return table;
}

Length dist_vertex_edge(const Graph& g, VertexId v, EdgeId e) {
  const auto& ed = g.edge(e);
  const auto dist = distances_from(g, v);
  return std::min(dist[ed.u], dist[ed.v]);
}

// ---------------------------------------------------------------------------
// Components

std::vector<int> component_labels(const Graph& g, const EdgeSet& removed) {
  if (removed.universe() != g.edge_count()) throw std::invalid_argument("edge set does not match graph");
  std::vector<int> label(g.vertex_count(), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(static_cast<VertexId>(s));
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.neighbors(x)) {
        if (label[inc.to] == -1 && !removed.contains(inc.edge)) {
          label[inc.to] = next;
          stack.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<VertexId> component_of(const Graph& g, const EdgeSet& removed, VertexId v) {
  g.check_vertex(v);
  const auto label = component_labels(g, removed);
  std::vector<VertexId> out;
  for (std::size_t u = 0; u < label.size(); ++u) {
    if (label[u] == label[v]) out.push_back(static_cast<VertexId>(u));
  }
  return out;
}

Length radius_after(const Graph& g, const EdgeSet& removed, VertexId v) {
  const auto component = component_of(g, removed, v);
  const auto dist = distances_from(g, v);
  Length radius = 0;
  for (VertexId u : component) radius = std::max(radius, dist[u]);
  return radius;
}

Length decomposition_diameter(const Graph& g, const EdgeSet& removed) {
  const auto label = component_labels(g, removed);
  Length diameter = 0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    const auto dist = distances_from(g, static_cast<VertexId>(u));
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      if (label[u] == label[v]) diameter = std::max(diameter, dist[v]);
    }
  }
  return diameter;
}

bool is_t_diameter_decomposition(const Graph& g, const EdgeSet& removed, Length t) {
  return decomposition_diameter(g, removed) < t;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto label = component_labels(g, EdgeSet(g.edge_count()));
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool is_cactus(const Graph& g) {
  // In a DFS forest every non-tree edge is a back edge closing exactly one
  // cycle with tree edges; the graph is a cactus iff no tree edge is covered
  // by two back edges.
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<int> cover(n, 0);  // coverage count of the edge to the parent
  for (std::size_t root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    std::vector<std::pair<VertexId, std::size_t>> stack{{static_cast<VertexId>(root), 0}};
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto nbrs = g.neighbors(x);
      if (next == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const auto inc = nbrs[next++];
      if (inc.edge == parent_edge[x]) continue;
      if (depth[inc.to] == -1) {
        parent[inc.to] = x;
        parent_edge[inc.to] = inc.edge;
        depth[inc.to] = depth[x] + 1;
        stack.push_back({inc.to, 0});
      } else if (depth[inc.to] < depth[x]) {
        for (VertexId y = x; y != inc.to; y = parent[y]) {
          if (++cover[y] > 1) return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Operations

SubdivisionResult subdivide(const Graph& g, EdgeId target, int parts) {
  g.check_edge(target);
  if (parts < 1) throw std::invalid_argument("subdivision needs parts >= 1");
  SubdivisionResult result;
  result.graph = Graph(g.vertex_count());
  result.edge_map.resize(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(static_cast<EdgeId>(i));
    if (static_cast<EdgeId>(i) != target) {
      result.edge_map[i].push_back(result.graph.add_edge(e.u, e.v, e.length));
      continue;
    }
    VertexId prev = e.u;
    for (int p = 1; p < parts; ++p) {
      const VertexId fresh = result.graph.add_vertex();
      result.edge_map[i].push_back(result.graph.add_edge(prev, fresh, 1));
      prev = fresh;
    }
    result.edge_map[i].push_back(result.graph.add_edge(prev, e.v, 1));
  }
  for (const auto& [name, v] : g.marks()) result.graph.set_mark(name, v);
  return result;
}

SubdivisionResult subdivide_all(const Graph& g, int parts) {
  if (parts < 1) throw std::invalid_argument("subdivision needs parts >= 1");
  SubdivisionResult result;
  result.graph = Graph(g.vertex_count());
  result.edge_map.resize(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(static_cast<EdgeId>(i));
    VertexId prev = e.u;
    for (int p = 1; p < parts; ++p) {
      const VertexId fresh = result.graph.add_vertex();
      result.edge_map[i].push_back(result.graph.add_edge(prev, fresh, 1));
      prev = fresh;
    }
    result.edge_map[i].push_back(result.graph.add_edge(prev, e.v, 1));
  }
  for (const auto& [name, v] : g.marks()) result.graph.set_mark(name, v);
  return result;
}

OneSumResult one_sum(std::span<const std::pair<Graph, VertexId>> parts) {
  if (parts.empty()) throw std::invalid_argument("1-sum of an empty list of graphs");
  OneSumResult result;
  const auto& [first, first_root] = parts.front();
  first.check_vertex(first_root);
  result.graph = Graph(first.vertex_count());
  result.main_vertex = first_root;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& [g, root] = parts[i];
    g.check_vertex(root);
    std::vector<VertexId> vmap(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (i == 0) {
        vmap[v] = static_cast<VertexId>(v);
      } else if (static_cast<VertexId>(v) == root) {
        vmap[v] = result.main_vertex;
      } else {
        vmap[v] = result.graph.add_vertex();
      }
    }
    std::vector<EdgeId> emap;
    emap.reserve(g.edge_count());
    for (const auto& e : g.edges()) emap.push_back(result.graph.add_edge(vmap[e.u], vmap[e.v], e.length));
    for (const auto& [name, v] : g.marks()) result.graph.set_mark(name + "." + std::to_string(i + 1), vmap[v]);
    result.vertex_maps.push_back(std::move(vmap));
    result.edge_maps.push_back(std::move(emap));
  }
  return result;
}

EdgeSubgraph edge_induced_subgraph(const Graph& g, const EdgeSet& edges) {
  if (edges.universe() != g.edge_count()) throw std::invalid_argument("edge set does not match graph");
  EdgeSubgraph sub;
  std::vector<VertexId> local(g.vertex_count(), -1);
  const auto ids = edges.ids();
  for (EdgeId e : ids) {
    local[g.edge(e).u] = 0;
    local[g.edge(e).v] = 0;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (local[v] == -1) continue;
    local[v] = sub.graph.add_vertex();
    sub.vertex_map.push_back(static_cast<VertexId>(v));
  }
  for (EdgeId e : ids) {
    const auto& ed = g.edge(e);
    sub.graph.add_edge(local[ed.u], local[ed.v], ed.length);
    sub.edge_map.push_back(e);
  }
  for (const auto& [name, v] : g.marks()) {
    if (local[v] != -1) sub.graph.set_mark(name, local[v]);
  }
  return sub;
}

}  // namespace mcg
