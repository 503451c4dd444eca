#include "mcg/multicut.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace mcg {

namespace {

using lp::Coefficient;
using lp::Relation;
using lp::Sense;
using lp::Status;

std::vector<std::vector<VertexId>> targets_by_source(std::size_t n, const std::vector<VertexPair>& pairs) {
  std::vector<std::vector<VertexId>> out(n);
  for (auto [s, t] : pairs) out[s].push_back(t);
  return out;
}

// Dijkstra under rational lengths x, skipping `removed` edges. Ties settle by
// vertex id so the predecessor tree is reproducible.
struct RationalTree {
  std::vector<Rational> dist;
  std::vector<char> reached;
  std::vector<EdgeId> via;
};

RationalTree rational_dijkstra(const Graph& g, VertexId source, const std::vector<Rational>& x,
                               const std::vector<char>* removed) {
  const std::size_t n = g.vertex_count();
  RationalTree tree{std::vector<Rational>(n), std::vector<char>(n, 0), std::vector<EdgeId>(n, -1)};
  std::vector<char> done(n, 0);
  using Item = std::pair<Rational, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  tree.reached[source] = 1;
  heap.push({Rational(0), source});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = 1;
    for (const auto& inc : g.neighbors(v)) {
      if (removed && (*removed)[inc.edge]) continue;
      if (done[inc.to]) continue;
      Rational nd = d + x[inc.edge];
      if (!tree.reached[inc.to] || nd < tree.dist[inc.to]) {
        tree.reached[inc.to] = 1;
        tree.dist[inc.to] = nd;
        tree.via[inc.to] = inc.edge;
        heap.push({std::move(nd), inc.to});
      }
    }
  }
  return tree;
}

Path trace(const Graph& g, const RationalTree& tree, VertexId s, VertexId t) {
  Path p;
  p.pair = {s, t};
  for (VertexId v = t; v != s;) {
    const EdgeId e = tree.via[v];
    p.vertices.push_back(v);
    p.edges.push_back(e);
    v = g.edge(e).other(v);
  }
  p.vertices.push_back(s);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

std::optional<Path> separate_with(const Graph& g, const std::vector<std::vector<VertexId>>& targets,
                                  const std::vector<Rational>& x, const std::vector<char>* removed) {
  for (std::size_t s = 0; s < targets.size(); ++s) {
    if (targets[s].empty()) continue;
    const auto tree = rational_dijkstra(g, static_cast<VertexId>(s), x, removed);
    for (VertexId t : targets[s]) {
      if (tree.reached[t] && tree.dist[t] < 1) return trace(g, tree, static_cast<VertexId>(s), t);
    }
  }
  return std::nullopt;
}

bool all_split(const Graph& g, const std::vector<VertexPair>& pairs, const EdgeSet& cut) {
  const auto label = component_labels(g, cut);
  return std::all_of(pairs.begin(), pairs.end(), [&](const VertexPair& p) { return label[p.first] != label[p.second]; });
}

// Path-flow master over the edges not in `removed`. Edges flagged
// `uncapacitated` carry unlimited flow, which pins their x to 0.
struct PathMaster {
  enum class Result { optimal, unbounded };

  const Graph& g;
  const std::vector<std::vector<VertexId>>& targets;
  std::vector<char> removed;
  std::vector<char> uncapacitated;
  lp::Solver solver;
  std::vector<Path> paths;
  std::vector<Rational> x;
  lp::LpOutcome last;
  std::size_t rounds = 0;

  PathMaster(const Graph& graph, const std::vector<std::vector<VertexId>>& tgt, const std::vector<Rational>& capacity,
             std::vector<char> removed_edges, std::vector<char> free_edges)
      : g(graph), targets(tgt), removed(std::move(removed_edges)), uncapacitated(std::move(free_edges)),
        solver(make_lp(capacity)) {}

  static lp::LinearProgram make_lp(const std::vector<Rational>& capacity) {
    lp::LinearProgram lp(Sense::maximize);
    for (const auto& c : capacity) lp.add_constraint({}, Relation::less_equal, c);
    return lp;
  }

  bool add_path(Path p) {
    std::vector<Coefficient> column;
    for (EdgeId e : p.edges) {
      if (removed[e]) return false;
      if (!uncapacitated[e]) column.push_back({static_cast<std::size_t>(e), 1});
    }
    solver.add_column(1, std::move(column));
    paths.push_back(std::move(p));
    return true;
  }

  Result run() {
    for (;;) {
      last = solver.solve();
      if (last.status == Status::unbounded) return Result::unbounded;
      if (last.status != Status::optimal) throw std::logic_error("path master cannot be infeasible");
      x = last.duals;
      for (std::size_t e = 0; e < x.size(); ++e)
        if (uncapacitated[e]) x[e] = 0;
      auto path = separate_with(g, targets, x, &removed);
      if (!path) return Result::optimal;
      ++rounds;
      add_path(std::move(*path));
    }
  }
};

std::optional<EdgeSet> greedy_from(const Graph& g, const std::vector<VertexPair>& pairs,
                                   const std::vector<Rational>& weights, const std::optional<EdgeSet>& forbidden,
                                   EdgeSet cut) {
  auto banned = [&](EdgeId e) { return forbidden && forbidden->contains(e); };
  for (;;) {
    const auto label = component_labels(g, cut);
    auto it = std::find_if(pairs.begin(), pairs.end(),
                           [&](const VertexPair& p) { return label[p.first] == label[p.second]; });
    if (it == pairs.end()) break;
    // 0-1 BFS: fewest cuttable edges, then fewest hops.
    const auto [s, t] = *it;
    const std::size_t n = g.vertex_count();
    std::vector<std::pair<std::size_t, std::size_t>> best(n, {SIZE_MAX, SIZE_MAX});
    std::vector<EdgeId> via(n, -1);
    using Item = std::pair<std::pair<std::size_t, std::size_t>, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    best[s] = {0, 0};
    heap.push({best[s], s});
    while (!heap.empty()) {
      auto [key, v] = heap.top();
      heap.pop();
      if (key != best[v]) continue;
      for (const auto& inc : g.neighbors(v)) {
        if (cut.contains(inc.edge)) continue;
        const std::pair<std::size_t, std::size_t> nk{key.first + (banned(inc.edge) ? 0 : 1), key.second + 1};
        if (nk < best[inc.to]) {
          best[inc.to] = nk;
          via[inc.to] = inc.edge;
          heap.push({nk, inc.to});
        }
      }
    }
    if (best[t].first == 0) return std::nullopt;
    EdgeId pick = -1;
    for (VertexId v = t; v != s; v = g.edge(via[v]).other(v)) {
      const EdgeId e = via[v];
      if (banned(e)) continue;
      if (pick == -1 || weights[e] < weights[pick] || (weights[e] == weights[pick] && e < pick)) pick = e;
    }
    cut.insert(pick);
  }
  auto order = cut.ids();
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return weights[a] != weights[b] ? weights[a] > weights[b] : a > b;
  });
  for (EdgeId e : order) {
    cut.erase(e);
    if (!all_split(g, pairs, cut)) cut.insert(e);
  }
  return cut;
}

}  // namespace

void validate(MulticutInstance& instance) {
  const Graph& g = instance.graph;
  if (instance.costs.size() != g.edge_count()) throw std::invalid_argument("one cost per edge is required");
  for (auto& c : instance.costs) {
    c.canonicalize();
    if (c < 0) throw std::invalid_argument("edge costs must be nonnegative");
  }
  if (instance.pair_threshold) {
    if (!instance.pairs.empty()) throw std::invalid_argument("pairs are either explicit or a distance threshold");
    if (*instance.pair_threshold < 1) throw std::invalid_argument("pair distance threshold must be positive");
    return;
  }
  for (auto& [s, t] : instance.pairs) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::invalid_argument("pair with s = t");
    if (s > t) std::swap(s, t);
  }
  std::sort(instance.pairs.begin(), instance.pairs.end());
  if (std::adjacent_find(instance.pairs.begin(), instance.pairs.end()) != instance.pairs.end()) {
    throw std::invalid_argument("duplicate pair");
  }
  const auto label = component_labels(g, EdgeSet(g.edge_count()));
  for (auto [s, t] : instance.pairs) {
    if (label[s] != label[t]) {
      throw std::invalid_argument("pair " + std::to_string(s) + "-" + std::to_string(t) + " is disconnected");
    }
  }
}

std::vector<VertexPair> materialize_pairs(const MulticutInstance& instance) {
  if (!instance.pair_threshold) return instance.pairs;
  std::vector<VertexPair> out;
  const auto n = static_cast<VertexId>(instance.graph.vertex_count());
  for (VertexId s = 0; s < n; ++s) {
    const auto dist = distances_from(instance.graph, s);
    for (VertexId t = s + 1; t < n; ++t) {
      if (dist[t] != kUnreachable && dist[t] >= *instance.pair_threshold) out.push_back({s, t});
    }
  }
  return out;
}

bool is_feasible_multicut(const MulticutInstance& instance, const EdgeSet& cut) {
  const Graph& g = instance.graph;
  if (!instance.pair_threshold) return all_split(g, instance.pairs, cut);
  return is_t_diameter_decomposition(g, cut, *instance.pair_threshold);
}

Rational cut_cost(const std::vector<Rational>& weights, const EdgeSet& cut) {
  Rational total = 0;
  for (EdgeId e : cut.ids()) total += weights.at(e);
  return total;
}

std::optional<Path> separate(const MulticutInstance& instance, const std::vector<Rational>& x) {
  const Graph& g = instance.graph;
  if (x.size() != g.edge_count()) throw std::invalid_argument("x needs one entry per edge");
  if (!instance.pair_threshold) return separate_with(g, targets_by_source(g.vertex_count(), instance.pairs), x, nullptr);
  // Implicit pairs: build each source's targets on the fly.
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId s = 0; s < n; ++s) {
    const auto dist = distances_from(g, s);
    std::vector<std::vector<VertexId>> one(n);
    for (VertexId t = s + 1; t < n; ++t)
      if (dist[t] != kUnreachable && dist[t] >= *instance.pair_threshold) one[s].push_back(t);
    if (auto p = separate_with(g, one, x, nullptr)) return p;
  }
  return std::nullopt;
}

FractionalSolution solve_fractional(const MulticutInstance& instance) {
  const Graph& g = instance.graph;
  const auto targets = targets_by_source(g.vertex_count(), materialize_pairs(instance));
  PathMaster master(g, targets, instance.costs, std::vector<char>(g.edge_count(), 0),
                    std::vector<char>(g.edge_count(), 0));
  if (master.run() != PathMaster::Result::optimal) throw std::logic_error("path master unbounded");
  FractionalSolution out;
  out.x = master.x;
  out.value = master.last.objective;
  out.paths = master.paths;
  out.flows = master.last.primal;
  out.rounds = master.rounds;
  out.pivots = master.solver.total_pivots();
  return out;
}

MultiflowSolution extract_multiflow(const MulticutInstance& instance, const FractionalSolution& fractional) {
  if (fractional.paths.size() != fractional.flows.size()) throw std::invalid_argument("master state is inconsistent");
  (void)instance;
  MultiflowSolution out;
  out.value = 0;
  for (std::size_t i = 0; i < fractional.paths.size(); ++i) {
    if (fractional.flows[i] == 0) continue;
    out.paths.push_back({fractional.paths[i].pair, fractional.paths[i].vertices, fractional.flows[i]});
    out.value += fractional.flows[i];
  }
  return out;
}

bool verify_multiflow(const MulticutInstance& instance, const MultiflowSolution& flow, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const Graph& g = instance.graph;
  const auto pairs = materialize_pairs(instance);
  std::vector<Rational> load(g.edge_count(), 0);
  Rational total = 0;
  for (const auto& fp : flow.paths) {
    if (fp.flow < 0) return fail("negative flow");
    if (!std::binary_search(pairs.begin(), pairs.end(), fp.pair)) return fail("flow on a non-pair");
    if (fp.vertices.size() < 2) return fail("empty path");
    const auto [a, b] = std::minmax(fp.vertices.front(), fp.vertices.back());
    if (VertexPair{a, b} != fp.pair) return fail("path does not join its pair");
    for (std::size_t i = 0; i + 1 < fp.vertices.size(); ++i) {
      const auto e = g.find_edge(fp.vertices[i], fp.vertices[i + 1]);
      if (!e) return fail("path uses a non-edge");
      load[*e] += fp.flow;
    }
    total += fp.flow;
  }
  for (std::size_t e = 0; e < load.size(); ++e)
    if (load[e] > instance.costs[e]) return fail("capacity exceeded on edge " + std::to_string(e));
  if (total != flow.value) return fail("value does not match path flows");
  return true;
}

std::optional<EdgeSet> greedy_multicut(const MulticutInstance& instance, const std::vector<Rational>& weights,
                                       const std::optional<EdgeSet>& forbidden) {
  const Graph& g = instance.graph;
  return greedy_from(g, materialize_pairs(instance), weights, forbidden, EdgeSet(g.edge_count()));
}

MulticutSolution min_weight_multicut(const MulticutInstance& instance, const std::vector<Rational>& weights,
                                     const BranchOptions& options) {
  const Graph& g = instance.graph;
  const std::size_t m = g.edge_count();
  if (weights.size() != m) throw std::invalid_argument("one weight per edge is required");
  const auto pairs = materialize_pairs(instance);
  const auto targets = targets_by_source(g.vertex_count(), pairs);
  const bool integral = std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return is_integer(w); });

  MulticutSolution result;
  result.cut = EdgeSet(m);
  auto incumbent = greedy_from(g, pairs, weights, options.forbidden, EdgeSet(m));
  if (!incumbent) {
    result.feasible = false;
    result.optimal = true;
    return result;
  }
  result.cut = *incumbent;
  result.cost = cut_cost(weights, result.cut);

  // 0 = free, 1 = cut, 2 = kept.
  struct Node {
    std::vector<std::uint8_t> fix;
    Rational bound;
    std::vector<Path> seed;
  };
  std::vector<std::uint8_t> root_fix(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    if (options.forbidden && options.forbidden->contains(static_cast<EdgeId>(e))) root_fix[e] = 2;
    else if (weights[e] == 0) root_fix[e] = 1;
  }
  std::vector<Node> stack;
  stack.push_back({root_fix, Rational(0), {}});
  std::size_t nodes = 0;

  while (!stack.empty()) {
    if (nodes >= options.node_budget) break;
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.bound >= result.cost) continue;
    ++nodes;

    std::vector<char> removed(m), uncap(m);
    EdgeSet in(m), kept_only(m);
    Rational fixed_cost = 0;
    for (std::size_t e = 0; e < m; ++e) {
      removed[e] = node.fix[e] == 1;
      uncap[e] = node.fix[e] == 2;
      if (node.fix[e] == 1) {
        in.insert(static_cast<EdgeId>(e));
        fixed_cost += weights[e];
      }
      if (node.fix[e] != 2) kept_only.insert(static_cast<EdgeId>(e));
    }
    // A pair joined by kept edges alone cannot be separated here.
    if (!all_split(g, pairs, kept_only)) continue;

    PathMaster master(g, targets, weights, removed, uncap);
    for (auto& p : node.seed) master.add_path(std::move(p));
    if (master.run() != PathMaster::Result::optimal) continue;
    Rational bound = fixed_cost + master.last.objective;
    if (integral) bound = ceil(bound);
    if (bound >= result.cost) continue;

    // Local incumbent under the node's fixings.
    EdgeSet banned(m);
    for (std::size_t e = 0; e < m; ++e)
      if (node.fix[e] == 2) banned.insert(static_cast<EdgeId>(e));
    if (auto local = greedy_from(g, pairs, weights, banned, in)) {
      const Rational c = cut_cost(weights, *local);
      if (c < result.cost) {
        result.cost = c;
        result.cut = *local;
      }
    }
    if (bound >= result.cost) continue;

    const auto& x = master.x;
    EdgeId branch = -1;
    Rational best_gap;
    const Rational half(1, 2);
    for (std::size_t e = 0; e < m; ++e) {
      if (node.fix[e] != 0 || x[e] == 0 || x[e] >= 1) continue;
      Rational d = abs(x[e] - half);
      if (branch == -1 || d < best_gap) {
        branch = static_cast<EdgeId>(e);
        best_gap = d;
      }
    }
    if (branch == -1) {
      // x is 0/1 on free edges: its support is an optimal multicut here.
      EdgeSet cut = in;
      for (std::size_t e = 0; e < m; ++e)
        if (node.fix[e] == 0 && x[e] >= 1) cut.insert(static_cast<EdgeId>(e));
      const Rational c = cut_cost(weights, cut);
      if (c < result.cost && all_split(g, pairs, cut)) {
        result.cost = c;
        result.cut = cut;
      }
      continue;
    }
    Node cut_child{node.fix, bound, master.paths};
    cut_child.fix[branch] = 1;
    Node keep_child{node.fix, bound, master.paths};
    keep_child.fix[branch] = 2;
    // The child nearer to x(branch) is explored first (pushed last).
    if (x[branch] >= half) {
      stack.push_back(std::move(keep_child));
      stack.push_back(std::move(cut_child));
    } else {
      stack.push_back(std::move(cut_child));
      stack.push_back(std::move(keep_child));
    }
  }

  result.nodes = nodes;
  result.lower_bound = result.cost;
  result.optimal = true;
  for (const auto& open : stack) {
    if (open.bound < result.cost) {
      result.optimal = false;
      result.lower_bound = std::min(result.lower_bound, open.bound);
    }
  }
  return result;
}

MulticutSolution solve_integral(const MulticutInstance& instance, std::size_t node_budget) {
  return min_weight_multicut(instance, instance.costs, {.node_budget = node_budget, .forbidden = std::nullopt});
}

GapResult gap(const MulticutInstance& instance, std::size_t node_budget) {
  GapResult out;
  const auto frac = solve_fractional(instance);
  const auto ip = solve_integral(instance, node_budget);
  out.opt_lp = frac.value;
  out.opt_ip = ip.optimal ? ip.cost : ip.lower_bound;
  out.ip_optimal = ip.optimal;
  out.lp_rounds = frac.rounds;
  out.lp_pivots = frac.pivots;
  out.ip_nodes = ip.nodes;
  if (out.opt_lp > ip.cost) throw std::logic_error("weak duality violated: OPT_LP > OPT_IP");
  const bool has_pairs = !materialize_pairs(instance).empty();
  if (has_pairs && out.opt_lp == 0) out.degenerate = true;
  if (has_pairs && out.opt_lp > 0 && ip.optimal) out.gap = Rational(ip.cost / out.opt_lp);
  return out;
}

}  // namespace mcg
