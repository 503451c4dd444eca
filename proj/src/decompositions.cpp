#include "mcg/decompositions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcg {

namespace {

struct MaskUnionFind {
  std::vector<int> parent;
  explicit MaskUnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

DecompositionFamily enumerate(const Graph& g, Length t, const EnumerateOptions& options) {
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  if (m > options.cap || m > 32) {
    throw std::length_error("graph has " + std::to_string(m) + " edges, above the enumeration cap of " +
                            std::to_string(options.cap));
  }
  if (!g.has_unit_lengths()) throw std::invalid_argument("decomposition enumeration needs unit lengths");
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (options.radius_bound && !options.root) throw std::invalid_argument("radius bound needs a root");
  if (options.root) g.check_vertex(*options.root);

  DecompositionFamily family;
  family.graph = g;
  family.t = t;
  family.root = options.root;
  family.radius_bound = options.radius_bound;

  const auto dist = all_pairs_distances(g);
  std::vector<std::pair<int, int>> far;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (dist[u][v] != kUnreachable && dist[u][v] >= t) far.push_back({static_cast<int>(u), static_cast<int>(v)});

  const std::uint64_t total = std::uint64_t{1} << m;
  // valid[mask]: upward closure lets a mask inherit validity from any subset
  // missing one edge.
  std::vector<bool> valid(total, false);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = false;
    for (std::uint64_t rest = mask; rest && !ok; rest &= rest - 1) {
      ok = valid[mask ^ (rest & -rest)];
    }
    MaskUnionFind uf(n);
    const bool need_components = !ok || options.root;
    if (need_components) {
      for (std::size_t e = 0; e < m; ++e)
        if (!((mask >> e) & 1)) uf.unite(g.edge(static_cast<EdgeId>(e)).u, g.edge(static_cast<EdgeId>(e)).v);
    }
    if (!ok) {
      ok = true;
      for (auto [u, v] : far) {
        if (uf.find(u) == uf.find(v)) {
          ok = false;
          break;
        }
      }
    }
    valid[mask] = ok;
    if (!ok) continue;
    Length radius = 0;
    if (options.root) {
      const int rr = uf.find(*options.root);
      for (std::size_t u = 0; u < n; ++u)
        if (uf.find(static_cast<int>(u)) == rr) radius = std::max(radius, dist[*options.root][u]);
      if (options.radius_bound && radius >= *options.radius_bound) continue;
      family.radii.push_back(radius);
    }
    family.members.push_back(EdgeSet::from_mask(m, mask));
  }
  return family;
}

std::vector<std::size_t> members_with_radius_below(const DecompositionFamily& family, Length k) {
  if (!family.root) throw std::invalid_argument("family has no root");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < family.radii.size(); ++i)
    if (family.radii[i] < k) out.push_back(i);
  return out;
}

std::vector<EdgeSet> tree_family(const Graph& tree, VertexId r, int w) {
  if (!is_tree(tree)) throw std::invalid_argument("tree_family needs a tree");
  if (!tree.has_unit_lengths()) throw std::invalid_argument("tree_family needs unit lengths");
  if (w < 1) throw std::invalid_argument("w must be positive");
  tree.check_vertex(r);
  const auto dist = distances_from(tree, r);
  std::vector<EdgeSet> out(w, EdgeSet(tree.edge_count()));
  for (EdgeId e = 0; e < static_cast<EdgeId>(tree.edge_count()); ++e) {
    const auto& ed = tree.edge(e);
    out[std::min(dist[ed.u], dist[ed.v]) % w].insert(e);
  }
  return out;
}

DiameterReduction diameter_reduce(const Graph& g, Length t) {
  if (!g.has_unit_lengths()) throw std::invalid_argument("reduction needs unit lengths");
  if (t < 1) throw std::invalid_argument("t must be positive");
  DiameterReduction out;
  out.instance.graph = g;
  out.instance.costs.assign(g.edge_count(), 1);
  out.instance.pair_threshold = t;
  out.instance.pairs = materialize_pairs(out.instance);
  out.instance.pair_threshold.reset();
  validate(out.instance);
  out.x.assign(g.edge_count(), Rational(1, static_cast<long>(t)));
  for (auto& v : out.x) v.canonicalize();
  return out;
}

TreeReport verify_tree_properties(const Graph& tree, VertexId r, int w) {
  TreeReport rep;
  rep.w = w;
  rep.family = tree_family(tree, r, w);
  const std::size_t m = tree.edge_count();
  const Rational y = frac(1, w);

  std::vector<int> hits(m, 0);
  rep.loads.assign(m, 0);
  for (const auto& f : rep.family)
    for (EdgeId e : f.ids()) {
      ++hits[e];
      rep.loads[e] += y;
    }
  for (std::size_t e = 0; e < m; ++e) {
    if (hits[e] != 1) rep.failures.push_back("edge " + std::to_string(e) + " lies in " + std::to_string(hits[e]) + " classes");
    if (rep.loads[e] != y) rep.failures.push_back("edge " + std::to_string(e) + " has load " + to_string(rep.loads[e]));
  }
  for (int i = 0; i < w; ++i) {
    const auto& f = rep.family[i];
    if (!is_t_diameter_decomposition(tree, f, 2 * static_cast<Length>(w))) {
      rep.failures.push_back("F_" + std::to_string(i) + " is not a 2w-diameter decomposition");
    }
    const Length rad = radius_after(tree, f, r);
    rep.radii.push_back(rad);
    if (rad > i) {
      rep.failures.push_back("rad of F_" + std::to_string(i) + " is " + std::to_string(rad) + " > " + std::to_string(i));
    }
  }
  for (int k = 1; k <= w; ++k) {
    const Rational bound = 1 - frac(2, 2 * w) * (w - k);
    Rational by_index = 0;
    Rational by_radius = 0;
    for (int i = 0; i < w; ++i) {
      if (i < k) by_index += y;
      if (rep.radii[i] < k) by_radius += y;
    }
    rep.index_mass.push_back(by_index);
    rep.radius_mass.push_back(by_radius);
    if (by_index != frac(k, w) || by_index != bound) {
      rep.failures.push_back("index mass at k=" + std::to_string(k) + " is " + to_string(by_index));
    }
    if (by_radius < bound) {
      rep.failures.push_back("radius mass at k=" + std::to_string(k) + " is " + to_string(by_radius));
    }
  }
  return rep;
}

std::string family_csv(const DecompositionFamily& family) {
  std::ostringstream out;
  out << "member_id,mask_hex,diameter,radius_from_root\n";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    out << i << ',' << family.members[i].to_hex() << ',' << decomposition_diameter(family.graph, family.members[i]) << ',';
    if (family.root) out << family.radii[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace mcg
