#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/graph.hpp"
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

Graph complete_graph(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("graph construction rejects non-simple input") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 7), std::out_of_range);
  CHECK_THROWS(shortest_dist(g, 0, 9));
}

TEST_CASE("shortest distances") {
  Graph one(2);
  one.add_edge(0, 1);
  CHECK(shortest_dist(one, 0, 1) == 1);
  CHECK(shortest_dist(one, 1, 1) == 0);

  Graph split(3);
  split.add_edge(0, 1);
  CHECK(shortest_dist(split, 0, 2) == kUnreachable);

  Graph weighted(3);
  weighted.add_edge(0, 1, 5);
  weighted.add_edge(1, 2, 1);
  weighted.add_edge(0, 2, 2);
  CHECK(shortest_dist(weighted, 0, 1) == 3);
}

TEST_CASE("distance from a vertex to an edge") {
  const Graph g = path_graph(2);
  CHECK(dist_vertex_edge(g, 0, 1) == 1);
  CHECK(dist_vertex_edge(g, 1, 1) == 0);
}

TEST_CASE("components after removing edges") {
  const Graph tri = cycle_graph(3);
  CHECK(component_of(tri, EdgeSet::full(3), 1) == std::vector<VertexId>{1});
  CHECK(component_of(tri, EdgeSet(3), 1) == std::vector<VertexId>{0, 1, 2});
  CHECK(component_of(tri, EdgeSet::from_mask(3, 1), 2) == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("radius uses distances in the whole graph") {
  const Graph p = path_graph(3);
  CHECK(radius_after(p, EdgeSet::full(3), 0) == 0);
  CHECK(radius_after(p, EdgeSet(3), 0) == 3);
  const Graph c4 = cycle_graph(4);
  for (VertexId v = 0; v < 4; ++v) CHECK(radius_after(c4, EdgeSet::from_mask(4, 1), v) == 2);
}

TEST_CASE("decomposition diameter and the strict threshold") {
  const Graph c4 = cycle_graph(4);
  CHECK(decomposition_diameter(c4, EdgeSet::full(4)) == 0);
  for (int w = 2; w <= 5; ++w) {
    const Graph c = cycle_graph(2 * w);
    CHECK(decomposition_diameter(c, EdgeSet(2 * w)) == w);
    CHECK(is_t_diameter_decomposition(c, EdgeSet(2 * w), 2 * w));
    CHECK_FALSE(is_t_diameter_decomposition(c, EdgeSet(2 * w), w));
  }
  CHECK(is_t_diameter_decomposition(c4, EdgeSet::full(4), 1));
}

TEST_CASE("subdivision") {
  Graph e(2);
  e.add_edge(0, 1);
  const auto three = subdivide(e, 0, 3);
  CHECK(three.graph.vertex_count() == 4);
  CHECK(three.graph.edge_count() == 3);
  CHECK(three.edge_map[0].size() == 3);
  CHECK(is_tree(three.graph));
  CHECK(subdivide(e, 0, 1).graph == e);
  CHECK_THROWS_AS(subdivide(e, 0, 0), std::invalid_argument);

  const auto c6 = subdivide_all(cycle_graph(3), 2).graph;
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.edge_count() == 6);
  CHECK(decomposition_diameter(c6, EdgeSet(6)) == 3);
}

TEST_CASE("subdividing rescaled edges keeps original distances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph base = oracle::random_connected(7, 4, rng);
    Graph weighted(base.vertex_count());
    std::uniform_int_distribution<int> len(1, 4);
    for (const auto& e : base.edges()) weighted.add_edge(e.u, e.v, len(rng));
    Graph expanded(weighted.vertex_count());
    for (const auto& e : weighted.edges()) {
      VertexId prev = e.u;
      for (Length i = 1; i < e.length; ++i) {
        const VertexId fresh = expanded.add_vertex();
        expanded.add_edge(prev, fresh);
        prev = fresh;
      }
      expanded.add_edge(prev, e.v);
    }
    Graph via_op = weighted;
    // Highest id first: subdivide keeps ids of earlier edges.
    for (EdgeId e = static_cast<EdgeId>(weighted.edge_count()) - 1; e >= 0; --e) {
      via_op = subdivide(via_op, e, static_cast<int>(via_op.edge(e).length)).graph;
    }
    CHECK(via_op.has_unit_lengths());
    for (VertexId a = 0; a < static_cast<VertexId>(weighted.vertex_count()); ++a)
      for (VertexId b = 0; b < static_cast<VertexId>(weighted.vertex_count()); ++b) {
        CHECK(shortest_dist(via_op, a, b) == shortest_dist(weighted, a, b));
        CHECK(shortest_dist(expanded, a, b) == shortest_dist(weighted, a, b));
      }
  }
}

TEST_CASE("1-sum") {
  Graph e(2);
  e.add_edge(0, 1);
  std::vector<std::pair<Graph, VertexId>> one{{e, 0}};
  CHECK(one_sum(one).graph == e);

  std::vector<std::pair<Graph, VertexId>> two{{e, 1}, {e, 0}};
  const auto p2 = one_sum(two);
  CHECK(p2.graph.vertex_count() == 3);
  CHECK(p2.main_vertex == 1);
  CHECK(is_tree(p2.graph));
  CHECK(shortest_dist(p2.graph, 0, 2) == 2);

  std::vector<std::pair<Graph, VertexId>> stars(5, {e, 0});
  const auto star = one_sum(stars);
  CHECK(star.graph.vertex_count() == 6);
  CHECK(star.graph.neighbors(star.main_vertex).size() == 5);

  CHECK_THROWS_AS(one_sum(std::span<const std::pair<Graph, VertexId>>{}), std::invalid_argument);
}

TEST_CASE("1-sum carries marks per input") {
  Graph e(2);
  e.add_edge(0, 1);
  e.set_mark("leaf", 1);
  std::vector<std::pair<Graph, VertexId>> parts{{e, 0}, {e, 0}};
  const auto s = one_sum(parts);
  CHECK(s.graph.require_mark("leaf.1") == 1);
  CHECK(s.graph.require_mark("leaf.2") == 2);
  CHECK_THROWS_AS(s.graph.require_mark("leaf"), std::invalid_argument);
}

TEST_CASE("cactus recognition agrees with brute-force cycle counting") {
  CHECK(is_cactus(path_graph(5)));
  CHECK_FALSE(is_cactus(complete_graph(4)));
  CHECK_FALSE(oracle::brute_is_cactus(complete_graph(4)));
  CHECK(is_cactus(cycle_graph(5)));
  std::mt19937_64 rng(3);
  int cacti = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_connected(3 + trial % 7, trial % 4, rng);
    const bool expected = oracle::brute_is_cactus(g);
    CHECK(is_cactus(g) == expected);
    cacti += expected;
  }
  CHECK(cacti > 20);
  CHECK(cacti < 290);
}

TEST_CASE("edge-induced subgraph keeps ambient order") {
  const Graph p = path_graph(4);
  const auto sub = edge_induced_subgraph(p, EdgeSet::from_ids(4, std::vector<EdgeId>{3, 1}));
  CHECK(sub.vertex_map == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(sub.edge_map == std::vector<EdgeId>{1, 3});
}

TEST_CASE("EdgeSet basics") {
  auto s = EdgeSet::from_mask(70 - 6, 0b1011);
  CHECK(s.size() == 3);
  CHECK(s.to_hex() == "0x000000000000000b");
  s.insert(63);
  CHECK(s.to_mask() == ((std::uint64_t{1} << 63) | 0b1011));
  CHECK(s.ids() == std::vector<EdgeId>{0, 1, 3, 63});
  CHECK(EdgeSet::from_mask(64, 0b11).is_subset_of(s));
  CHECK_THROWS(s.insert(64));
}

TEST_CASE("removing more edges never increases radius or diameter") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_connected(8, 5, rng);
    const auto m = g.edge_count();
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << m) - 1);
    const std::uint64_t a = pick(rng);
    const std::uint64_t b = a | pick(rng);
    const auto fa = EdgeSet::from_mask(m, a);
    const auto fb = EdgeSet::from_mask(m, b);
    CHECK(decomposition_diameter(g, fb) <= decomposition_diameter(g, fa));
    for (VertexId v = 0; v < 8; ++v) CHECK(radius_after(g, fb, v) <= radius_after(g, fa, v));
    for (Length t = 1; t <= 5; ++t)
      if (is_t_diameter_decomposition(g, fa, t)) CHECK(is_t_diameter_decomposition(g, fb, t));
  }
}

TEST_CASE("diameter below t iff every far pair is split") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(6 + trial % 3, 3, rng);
    const auto d = oracle::floyd(g);
    const auto m = g.edge_count();
    REQUIRE(m <= 12);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      const auto f = EdgeSet::from_mask(m, mask);
      const auto labels = component_labels(g, f);
      CHECK(decomposition_diameter(g, f) == oracle::diameter_without(g, mask, d));
      for (Length t = 1; t <= 4; ++t) {
        bool split = true;
        for (std::size_t u = 0; u < g.vertex_count(); ++u)
          for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
            if (d[u][v] >= t && labels[u] == labels[v]) split = false;
        CHECK(is_t_diameter_decomposition(g, f, t) == split);
      }
    }
  }
}
