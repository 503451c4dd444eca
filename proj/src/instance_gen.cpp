#include "mcg/instance_gen.hpp"

#include <stdexcept>

namespace mcg {

namespace {

Graph base_h() {
  Graph h(6);  // vertex a-1 is v<a>
  h.add_edge(0, 1);
  h.add_edge(1, 3);
  h.add_edge(3, 2);
  h.add_edge(2, 0);
  h.add_edge(1, 4);
  h.add_edge(2, 5);
  for (int a = 1; a <= 6; ++a) h.set_mark("v" + std::to_string(a), a - 1);
  return h;
}

}  // namespace

TwoLevelCactus gen_two_level_cactus(int k) {
  if (k < 1) throw std::invalid_argument("two-level construction needs k >= 1");
  const Graph h = base_h();
  std::vector<std::pair<Graph, VertexId>> inner(k, {h, h.require_mark("v1")});
  Graph hpp = one_sum(inner).graph;
  const VertexId v1 = h.require_mark("v1");
  const VertexId v0 = hpp.add_vertex();
  hpp.add_edge(v1, v0);
  hpp.set_mark("v1", v1);
  std::vector<std::pair<Graph, VertexId>> outer(k, {hpp, v0});
  auto sum = one_sum(outer);

  Graph g;
  {
    // Drop the per-copy "v0.i" aliases of the main vertex.
    Graph tmp(sum.graph.vertex_count());
    for (const auto& e : sum.graph.edges()) tmp.add_edge(e.u, e.v, e.length);
    for (const auto& [name, v] : sum.graph.marks()) {
      if (name.rfind("v0.", 0) != 0) tmp.set_mark(name, v);
    }
    tmp.set_mark("v0", sum.main_vertex);
    g = std::move(tmp);
  }

  TwoLevelCactus out;
  out.k = k;
  const std::size_t m = g.edge_count();
  out.e1 = EdgeSet(m);
  out.e2 = EdgeSet(m);
  out.e3 = EdgeSet(m);
  const auto dist = distances_from(g, g.require_mark("v0"));
  std::vector<Rational> costs(m);
  for (EdgeId e = 0; e < static_cast<EdgeId>(m); ++e) {
    const auto& ed = g.edge(e);
    switch (std::min(dist[ed.u], dist[ed.v])) {
      case 0:
        out.e1.insert(e);
        costs[e] = k;
        break;
      case 1:
        out.e2.insert(e);
        costs[e] = 2;
        break;
      case 2:
        out.e3.insert(e);
        costs[e] = 1;
        break;
      default:
        throw std::logic_error("edge farther than 2 from v0");
    }
  }
  out.instance.graph = std::move(g);
  out.instance.costs = std::move(costs);
  out.instance.pair_threshold = 4;
  if (k <= kExplicitPairsUpTo) {
    out.instance.pairs = materialize_pairs(out.instance);
    out.instance.pair_threshold.reset();
  }
  validate(out.instance);
  return out;
}

Rational quarter_cost(const TwoLevelCactus& s) {
  Rational total = 0;
  for (const auto& c : s.instance.costs) total += c;
  return total / 4;
}

CycleGadget gen_cycle_gadget(int w) {
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("gadget needs an even w >= 2");
  CycleGadget out;
  out.w = w;
  const int half = w / 2;
  Graph g(2 * w);
  std::vector<EdgeId> cycle;
  for (int i = 0; i < 2 * w; ++i) cycle.push_back(g.add_edge(i, (i + 1) % (2 * w)));
  auto arc = [&](int from) { return std::vector<EdgeId>(cycle.begin() + from, cycle.begin() + from + half); };
  out.paths["P_u"] = arc(0);
  out.paths["P_a"] = arc(half);
  out.paths["P_b"] = arc(w);
  // P_v runs from v to r.
  out.paths["P_v"] = arc(w + half);
  auto pendant = [&](VertexId from) {
    std::vector<EdgeId> ids;
    VertexId prev = from;
    for (int i = 0; i < half; ++i) {
      const VertexId fresh = g.add_vertex();
      ids.push_back(g.add_edge(prev, fresh));
      prev = fresh;
    }
    return std::pair{ids, prev};
  };
  g.set_mark("r", 0);
  g.set_mark("u", half);
  g.set_mark("r'", w);
  g.set_mark("v", w + half);
  auto [pc, uprime] = pendant(half);
  auto [pd, vprime] = pendant(w + half);
  out.paths["P_c"] = pc;
  out.paths["P_d"] = pd;
  g.set_mark("u'", uprime);
  g.set_mark("v'", vprime);
  out.graph = std::move(g);
  return out;
}

MulticutInstance gen_star_gap(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  MulticutInstance inst;
  inst.graph = Graph(leaves + 1);
  for (int i = 1; i <= leaves; ++i) inst.graph.add_edge(0, i);
  inst.graph.set_mark("center", 0);
  for (int a = 1; a <= leaves; ++a)
    for (int b = a + 1; b <= leaves; ++b) inst.pairs.push_back({a, b});
  inst.costs.assign(leaves, 1);
  validate(inst);
  return inst;
}

Graph attach_path(const Graph& g, VertexId v, int len, const std::string& end_mark) {
  g.check_vertex(v);
  if (len < 0) throw std::invalid_argument("path length must be nonnegative");
  Graph out = g;
  VertexId prev = v;
  for (int i = 0; i < len; ++i) {
    const VertexId fresh = out.add_vertex();
    out.add_edge(prev, fresh);
    prev = fresh;
  }
  out.set_mark(end_mark, prev);
  return out;
}

Graph amplify_one_sum(const Graph& g, VertexId r, int m) {
  if (m < 1) throw std::invalid_argument("amplification needs m >= 1");
  std::vector<std::pair<Graph, VertexId>> parts(m, {g, r});
  auto sum = one_sum(parts);
  sum.graph.set_mark("main", sum.main_vertex);
  return std::move(sum.graph);
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("tree needs a vertex");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return g;
}

Graph random_connected_graph(int n, int extra, std::mt19937_64& rng) {
  Graph g = random_tree(n, rng);
  if (n < 2) return g;
  std::uniform_int_distribution<int> pick(0, n - 1);
  const auto target = static_cast<std::size_t>(n - 1 + extra);
  for (int tries = 0; tries < 20 * extra && g.edge_count() < target; ++tries) {
    const int a = pick(rng);
    const int b = pick(rng);
    if (a != b && !g.find_edge(a, b)) g.add_edge(a, b);
  }
  return g;
}

}  // namespace mcg
