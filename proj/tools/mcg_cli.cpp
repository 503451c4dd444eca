#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "mcg/acceptance.hpp"
#include "mcg/carr_vempala.hpp"
#include "mcg/decompositions.hpp"
#include "mcg/instance_gen.hpp"
#include "mcg/io.hpp"
#include "mcg/pload.hpp"

using namespace mcg;

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, budget = 3, invariant = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string output;
  std::string format = "text";
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
  bool csv() const { return format == "csv"; }
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(g.output, text);
  }
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("bad ") + what + " '" + text + "'");
  }
}

// Vertex by mark name, or by numeric id.
VertexId vertex_arg(const Graph& g, const std::string& text) {
  if (auto v = g.mark(text)) return *v;
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const auto v = std::stoll(text);
    if (static_cast<std::size_t>(v) < g.vertex_count()) return static_cast<VertexId>(v);
  }
  throw UsageError("no vertex or mark named '" + text + "'");
}

std::string join_ids(const std::vector<EdgeId>& ids, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string join_vertices(const std::vector<VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string distribution_csv(const Distribution& d) {
  std::ostringstream out;
  out << "member_id,y,edges\n";
  for (std::size_t i = 0; i < d.members.size(); ++i)
    out << i << ',' << to_string(d.y[i]) << ',' << join_ids(d.members[i].ids()) << '\n';
  return out.str();
}

MulticutInstance tree_instance(int n, int pairs, std::mt19937_64& rng) {
  MulticutInstance inst;
  inst.graph = random_tree(n, rng);
  inst.costs.assign(inst.graph.edge_count(), Rational(1));
  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  for (int tries = 0; static_cast<int>(inst.pairs.size()) < pairs && tries < 100 * pairs; ++tries) {
    VertexId s = pick(rng), t = pick(rng);
    if (s == t) continue;
    const VertexPair key{std::min(s, t), std::max(s, t)};
    if (std::find(inst.pairs.begin(), inst.pairs.end(), key) == inst.pairs.end()) inst.pairs.push_back(key);
  }
  validate(inst);
  return inst;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int k = 1;
  int w = 2;
  int leaves = 3;
  int n = 10;
  int pairs = 3;
};

void cmd_gen(const Globals& g, const GenArgs& a) {
  MulticutInstance inst;
  if (a.family == "cactus") {
    inst = gen_two_level_cactus(a.k).instance;
  } else if (a.family == "gadget") {
    // unit costs, pairs at distance >= 2w
    inst = diameter_reduce(gen_cycle_gadget(a.w).graph, 2 * a.w).instance;
  } else if (a.family == "star") {
    inst = gen_star_gap(a.leaves);
  } else if (a.family == "tree") {
    std::mt19937_64 rng(g.seed);
    inst = tree_instance(a.n, a.pairs, rng);
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  emit(g, io::emit_instance(inst));
}

void cmd_solve_lp(const Globals& g, const std::string& file) {
  const auto inst = io::read_instance_file(file);
  const auto sol = solve_fractional(inst);
  if (separate(inst, sol.x)) throw InvariantViolation("LP solution violates a path constraint");
  std::ostringstream out;
  if (g.csv()) {
    out << "edge,u,v,x\n";
  } else {
    out << "opt_lp " << to_string(sol.value) << "\nrounds " << sol.rounds << "\npivots " << sol.pivots << '\n';
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(inst.graph.edge_count()); ++e) {
    const auto& ed = inst.graph.edge(e);
    if (g.csv()) {
      out << e << ',' << ed.u << ',' << ed.v << ',' << to_string(sol.x[e]) << '\n';
    } else if (sol.x[e] != 0) {
      out << "x " << e << " (" << ed.u << '-' << ed.v << ") = " << to_string(sol.x[e]) << '\n';
    }
  }
  emit(g, out.str());
}

void cmd_solve_ip(const Globals& g, const std::string& file, std::size_t node_budget) {
  const auto inst = io::read_instance_file(file);
  const auto sol = solve_integral(inst, node_budget);
  if (!is_feasible_multicut(inst, sol.cut)) throw InvariantViolation("returned edge set is not a multicut");
  std::ostringstream out;
  if (g.csv()) {
    out << "cost,optimal,lower_bound,nodes,edges\n"
        << to_string(sol.cost) << ',' << (sol.optimal ? "true" : "false") << ',' << to_string(sol.lower_bound) << ','
        << sol.nodes << ',' << join_ids(sol.cut.ids()) << '\n';
  } else {
    out << (sol.optimal ? "opt_ip " : "best ") << to_string(sol.cost) << '\n';
    if (!sol.optimal) out << "lower_bound " << to_string(sol.lower_bound) << '\n';
    out << "nodes " << sol.nodes << "\ncut " << join_ids(sol.cut.ids(), ' ') << '\n';
  }
  emit(g, out.str());
  if (!sol.optimal) throw BudgetExhausted("node budget of " + std::to_string(node_budget) + " exhausted");
}

struct GapArgs {
  std::vector<std::string> files;
  std::size_t budget = 1'000'000;
  bool timings = false;
  std::string reference_x;
};

void cmd_gap(const Globals& g, const GapArgs& a) {
  std::optional<Rational> ref_x;
  if (!a.reference_x.empty()) ref_x = rational_arg(a.reference_x, "--reference-x");
  std::vector<MulticutInstance> insts;
  for (const auto& f : a.files) insts.push_back(io::read_instance_file(f));

  std::vector<io::GapReport> reports(insts.size());
  std::vector<std::exception_ptr> errors(insts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < insts.size();) {
      try {
        using clock = std::chrono::steady_clock;
        const auto t0 = clock::now();
        const auto lp = solve_fractional(insts[i]);
        const auto t1 = clock::now();
        auto res = gap(insts[i], a.budget);
        const auto t2 = clock::now();
        if (res.opt_lp != lp.value) throw InvariantViolation("OPT_LP differs between runs");
        if (res.opt_ip < res.opt_lp) throw InvariantViolation("OPT_IP < OPT_LP");
        auto& rep = reports[i];
        rep.instance_id = std::filesystem::path(a.files[i]).stem().string();
        rep.result = res;
        if (ref_x) {
          Rational c = 0;
          for (const auto& cost : insts[i].costs) c += cost;
          rep.reference_cost = c * *ref_x;
        }
        rep.lp_seconds = std::chrono::duration<double>(t1 - t0).count();
        rep.ip_seconds = std::chrono::duration<double>(t2 - t1).count();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(g.threads, static_cast<unsigned>(insts.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::ostringstream out;
  bool exhausted = false;
  if (g.csv()) out << io::gap_csv_header(a.timings);
  for (const auto& rep : reports) {
    exhausted |= !rep.result.ip_optimal;
    if (g.csv()) {
      out << io::gap_csv_row(rep, a.timings);
      continue;
    }
    const auto& r = rep.result;
    out << rep.instance_id << ": opt_lp " << to_string(r.opt_lp) << ", opt_ip " << to_string(r.opt_ip)
        << (r.ip_optimal ? "" : " (not proven optimal)") << ", gap " << (r.gap ? to_string(*r.gap) : "n/a");
    if (rep.reference_cost) out << ", reference " << to_string(*rep.reference_cost);
    if (a.timings) out << ", " << *rep.lp_seconds << " s + " << *rep.ip_seconds << " s";
    out << '\n';
  }
  emit(g, out.str());
  if (exhausted) throw BudgetExhausted("node budget exhausted on at least one instance");
}

void cmd_flow(const Globals& g, const std::string& file) {
  const auto inst = io::read_instance_file(file);
  const auto frac_sol = solve_fractional(inst);
  const auto flow = extract_multiflow(inst, frac_sol);
  std::string why;
  if (!verify_multiflow(inst, flow, &why)) throw InvariantViolation("multiflow check failed: " + why);
  if (flow.value != frac_sol.value) throw InvariantViolation("flow value differs from OPT_LP");
  std::ostringstream out;
  if (g.csv()) {
    out << "s,t,flow,vertices\n";
    for (const auto& p : flow.paths)
      out << p.pair.first << ',' << p.pair.second << ',' << to_string(p.flow) << ',' << join_vertices(p.vertices)
          << '\n';
  } else {
    out << "value " << to_string(flow.value) << '\n';
    for (const auto& p : flow.paths)
      out << p.pair.first << "->" << p.pair.second << ' ' << to_string(p.flow) << " via "
          << join_vertices(p.vertices) << '\n';
  }
  emit(g, out.str());
}

struct DecompArgs {
  std::string file;
  Length t = 2;
  std::string root;
  Length radius_bound = 0;
  std::size_t cap = kDefaultEnumerationCap;
};

void cmd_decomp_enum(const Globals& g, const DecompArgs& a) {
  const auto inst = io::read_instance_file(a.file);
  EnumerateOptions opts;
  opts.cap = a.cap;
  if (!a.root.empty()) opts.root = vertex_arg(inst.graph, a.root);
  if (a.radius_bound > 0) {
    if (!opts.root) throw UsageError("--radius-bound needs --root");
    opts.radius_bound = a.radius_bound;
  }
  const auto fam = enumerate(inst.graph, a.t, opts);
  if (g.csv()) {
    emit(g, family_csv(fam));
    return;
  }
  std::ostringstream out;
  out << "t " << a.t << "\nmembers " << fam.size() << '\n';
  for (std::size_t i = 0; i < fam.size(); ++i) {
    out << '{' << join_ids(fam.members[i].ids(), ' ') << '}';
    if (fam.root) out << " radius " << fam.radii[i];
    out << '\n';
  }
  emit(g, out.str());
}

void cmd_tree_decomp(const Globals& g, const std::string& file, const std::string& root, int w) {
  const auto inst = io::read_instance_file(file);
  const auto rep = verify_tree_properties(inst.graph, vertex_arg(inst.graph, root), w);
  std::ostringstream out;
  if (g.csv()) {
    out << "i,radius,edges\n";
    for (std::size_t i = 0; i < rep.family.size(); ++i)
      out << i << ',' << rep.radii[i] << ',' << join_ids(rep.family[i].ids()) << '\n';
  } else {
    for (std::size_t i = 0; i < rep.family.size(); ++i)
      out << "F_" << i << " radius " << rep.radii[i] << " edges " << join_ids(rep.family[i].ids(), ' ') << '\n';
    for (std::size_t k = 0; k < rep.index_mass.size(); ++k)
      out << "k " << k + 1 << ": index mass " << to_string(rep.index_mass[k]) << ", radius mass "
          << to_string(rep.radius_mass[k]) << '\n';
    for (const auto& f : rep.failures) out << "failure: " << f << '\n';
  }
  emit(g, out.str());
  if (!rep.ok()) throw InvariantViolation(rep.failures.front());
}

struct PloadArgs {
  std::string file;
  int w = 2;
  std::string rooted;
  int radius = 0;
  std::size_t cap = kDefaultEnumerationCap;
};

void cmd_pload(const Globals& g, const PloadArgs& a) {
  const auto inst = io::read_instance_file(a.file);
  const Graph& gr = inst.graph;
  std::optional<VertexId> root;
  if (!a.rooted.empty()) root = vertex_arg(gr, a.rooted);
  std::optional<int> k;
  if (a.radius > 0) {
    if (!root) throw UsageError("--radius needs --rooted");
    k = a.radius;
  }
  const auto res = k ? min_pload_radius(gr, *root, a.w, *k, a.cap)
                     : root ? min_pload_rooted(gr, *root, a.w, a.cap) : min_pload(gr, a.w, a.cap);
  std::ostringstream out;
  if (res.status != lp::Status::optimal) {
    out << "status " << lp::to_string(res.status) << "\nfamily_size " << res.family_size << '\n';
    emit(g, out.str());
    return;
  }
  const auto chk = verify_distribution(gr, a.w, res.distribution, res.p, root, k);
  if (!chk.ok()) throw InvariantViolation("distribution check failed: " + chk.failures.front());
  if (g.csv()) {
    FrontierRow row{a.w, k, 1, res.p, res.family_size, res.pivots};
    out << frontier_csv({row}) << distribution_csv(res.distribution);
  } else {
    out << "min_p " << to_string(res.p) << "\nw_times_p " << to_string(res.p * a.w) << "\nfamily_size "
        << res.family_size << "\npivots " << res.pivots << '\n';
    for (std::size_t i = 0; i < res.distribution.members.size(); ++i)
      out << to_string(res.distribution.y[i]) << " {" << join_ids(res.distribution.members[i].ids(), ' ') << "}\n";
  }
  emit(g, out.str());
}

struct AmplifyArgs {
  std::string file;
  std::string root;
  int w = 2;
  std::string p;
  int max_m = 3;
  std::size_t cap = kDefaultEnumerationCap;
};

void cmd_amplify(const Globals& g, const AmplifyArgs& a) {
  const auto inst = io::read_instance_file(a.file);
  const Rational p = rational_arg(a.p, "--p");
  const auto rows = amplification_experiment(inst.graph, vertex_arg(inst.graph, a.root), a.w, p, a.max_m, a.cap);
  std::ostringstream out;
  if (g.csv()) out << "m,edges,family_size,status,z,m_times_z,bound_holds,counting_holds,lp_pivots\n";
  for (const auto& r : rows) {
    const bool feasible = r.status == lp::Status::optimal;
    if (g.csv()) {
      out << r.m << ',' << r.edges << ',' << r.family_size << ',' << lp::to_string(r.status) << ','
          << (feasible ? to_string(r.z) : "") << ',' << (feasible ? to_string(r.z * r.m) : "") << ','
          << (r.bound_holds ? "true" : "false") << ',' << (r.counting_holds ? "true" : "false") << ',' << r.pivots
          << '\n';
    } else if (feasible) {
      out << "m " << r.m << ": z " << to_string(r.z) << ", m z " << to_string(r.z * r.m)
          << (r.bound_holds ? " <= 1" : " > 1") << ", family " << r.family_size << '\n';
    } else {
      out << "m " << r.m << ": " << lp::to_string(r.status) << '\n';
    }
  }
  emit(g, out.str());
}

struct CvArgs {
  std::string file;
  std::string x;
  std::string alpha;
  bool min_alpha = false;
  std::size_t budget = 1'000'000;
};

void cmd_carr_vempala(const Globals& g, const CvArgs& a) {
  const auto inst = io::read_instance_file(a.file);
  std::vector<Rational> x;
  if (a.x.empty()) {
    x = solve_fractional(inst).x;
  } else {
    x.assign(inst.graph.edge_count(), rational_arg(a.x, "--x"));
  }
  DecomposeOptions opts;
  opts.node_budget = a.budget;
  DecompositionResult res;
  try {
    res = a.min_alpha ? min_alpha(inst, x, opts) : decompose(inst, x, rational_arg(a.alpha, "--alpha"), opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream out;
  if (res.status == DecompositionStatus::decomposed) {
    const auto bad = verify_decomposition(inst, x, res.alpha, res.terms);
    if (!bad.empty()) throw InvariantViolation("decomposition check failed: " + bad.front());
  } else if (res.status == DecompositionStatus::witness) {
    const auto bad = verify_witness(inst, x, res.alpha, *res.witness);
    if (!bad.empty()) throw InvariantViolation("witness check failed: " + bad.front());
  }
  if (g.csv()) {
    if (res.status == DecompositionStatus::decomposed) {
      out << decomposition_csv(res.terms);
    } else if (res.status == DecompositionStatus::witness) {
      out << "edge,c\n";
      for (std::size_t e = 0; e < res.witness->c.size(); ++e) out << e << ',' << to_string(res.witness->c[e]) << '\n';
      out << "u," << to_string(res.witness->u) << '\n';
    }
  } else {
    out << "status " << to_string(res.status) << "\nalpha " << to_string(res.alpha) << "\nrounds " << res.rounds
        << "\npricing_nodes " << res.pricing_nodes << '\n';
    for (const auto& t : res.terms) out << to_string(t.weight) << " {" << join_ids(t.cut.ids(), ' ') << "}\n";
    if (res.witness) {
      out << "u " << to_string(res.witness->u) << "\nc";
      for (const auto& c : res.witness->c) out << ' ' << to_string(c);
      out << '\n';
    }
  }
  emit(g, out.str());
  if (res.status == DecompositionStatus::inconclusive) throw BudgetExhausted("pricing budget exhausted");
}

void cmd_verify(const Globals& g, const std::vector<int>& only) {
  acceptance::Options opts;
  opts.seed = g.seed;
  opts.only = only;
  std::string text;
  const auto results = acceptance::run(opts, [&](const acceptance::CriterionResult& r) {
    const auto line = acceptance::format(r);
    if (!g.output.empty()) std::cerr << line << std::flush;
    text += line;
  });
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  const std::string summary = (passed == static_cast<long>(results.size()) ? "ALL PASSED " : "FAILED ") +
                              std::to_string(passed) + "/" + std::to_string(results.size()) + "\n";
  if (g.output.empty()) {
    std::cout << text << summary;
  } else {
    io::write_text_file(g.output, text + summary);
  }
  if (passed != static_cast<long>(results.size())) throw InvariantViolation("acceptance criteria failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multicut / multiflow gap toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("-o,--output", g.output, "Write results to FILE instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
  app.add_option("--seed", g.seed, "Seed for randomized commands");
  app.add_option("--threads", g.threads, "Worker threads for batch commands")->check(CLI::PositiveNumber);

  std::function<void()> action;

  GenArgs gen;
  auto* sc = app.add_subcommand("gen", "Generate an instance (cactus, gadget, star, tree)");
  sc->add_option("family", gen.family)->required()->check(CLI::IsMember({"cactus", "gadget", "star", "tree"}));
  sc->add_option("--k", gen.k, "cactus: copies at each level")->check(CLI::PositiveNumber);
  sc->add_option("--w", gen.w, "gadget: even width")->check(CLI::PositiveNumber);
  sc->add_option("--leaves", gen.leaves, "star: leaf count")->check(CLI::PositiveNumber);
  sc->add_option("--n", gen.n, "tree: vertex count")->check(CLI::Range(2, 1 << 20));
  sc->add_option("--pairs", gen.pairs, "tree: number of random pairs")->check(CLI::NonNegativeNumber);
  sc->callback([&] { action = [&] { cmd_gen(g, gen); }; });

  std::string file;
  sc = app.add_subcommand("solve-lp", "Exact fractional multicut (OPT_LP)");
  sc->add_option("file", file)->required()->check(CLI::ExistingFile);
  sc->callback([&] { action = [&] { cmd_solve_lp(g, file); }; });

  std::size_t ip_budget = 1'000'000;
  sc = app.add_subcommand("solve-ip", "Exact integral multicut by branch and bound");
  sc->add_option("file", file)->required()->check(CLI::ExistingFile);
  sc->add_option("--budget", ip_budget, "Node budget")->check(CLI::PositiveNumber);
  sc->callback([&] { action = [&] { cmd_solve_ip(g, file, ip_budget); }; });

  GapArgs gap_args;
  sc = app.add_subcommand("gap", "OPT_IP / OPT_LP for one or more instance files");
  sc->add_option("files", gap_args.files)->required()->check(CLI::ExistingFile);
  sc->add_option("--budget", gap_args.budget, "Node budget per instance")->check(CLI::PositiveNumber);
  sc->add_flag("--timings", gap_args.timings, "Append lp_seconds and ip_seconds");
  sc->add_option("--reference-x", gap_args.reference_x, "Report the cost of x = p/q on every edge");
  sc->callback([&] { action = [&] { cmd_gap(g, gap_args); }; });

  sc = app.add_subcommand("flow", "Maximum multiflow as path flows");
  sc->add_option("file", file)->required()->check(CLI::ExistingFile);
  sc->callback([&] { action = [&] { cmd_flow(g, file); }; });

  DecompArgs dec;
  sc = app.add_subcommand("decomp-enum", "Enumerate t-diameter decompositions");
  sc->add_option("file", dec.file)->required()->check(CLI::ExistingFile);
  sc->add_option("--t", dec.t, "Diameter bound (components have diameter < t)")->check(CLI::PositiveNumber);
  sc->add_option("--root", dec.root, "Root vertex (mark or id) for radii");
  sc->add_option("--radius-bound", dec.radius_bound, "Keep members with root radius < K")->check(CLI::PositiveNumber);
  sc->add_option("--cap", dec.cap, "Edge cap");
  sc->callback([&] { action = [&] { cmd_decomp_enum(g, dec); }; });

  std::string tree_root = "0";
  int tree_w = 2;
  sc = app.add_subcommand("tree-decomp", "Layered 2w-diameter decompositions of a tree");
  sc->add_option("file", file)->required()->check(CLI::ExistingFile);
  sc->add_option("--root", tree_root, "Root vertex (mark or id)");
  sc->add_option("--w", tree_w, "Layer count")->check(CLI::PositiveNumber);
  sc->callback([&] { action = [&] { cmd_tree_decomp(g, file, tree_root, tree_w); }; });

  PloadArgs pl;
  sc = app.add_subcommand("pload", "Minimum p of a p-load distribution");
  sc->add_option("file", pl.file)->required()->check(CLI::ExistingFile);
  sc->add_option("--w", pl.w, "Half the diameter bound")->check(CLI::PositiveNumber);
  sc->add_option("--rooted", pl.rooted, "Require root radius < w at this vertex");
  sc->add_option("--radius", pl.radius, "Radius variant with this k")->check(CLI::PositiveNumber);
  sc->add_option("--cap", pl.cap, "Edge cap");
  sc->callback([&] { action = [&] { cmd_pload(g, pl); }; });

  AmplifyArgs amp;
  sc = app.add_subcommand("amplify", "Escaping mass on m-fold 1-sums");
  sc->add_option("file", amp.file)->required()->check(CLI::ExistingFile);
  sc->add_option("--root", amp.root, "Gluing vertex (mark or id)")->required();
  sc->add_option("--w", amp.w, "Half the diameter bound")->check(CLI::PositiveNumber);
  sc->add_option("--p", amp.p, "Load bound p/q")->required();
  sc->add_option("--max-m", amp.max_m, "Largest number of copies")->check(CLI::PositiveNumber);
  sc->add_option("--cap", amp.cap, "Edge cap");
  sc->callback([&] { action = [&] { cmd_amplify(g, amp); }; });

  CvArgs cv;
  sc = app.add_subcommand("carr-vempala", "Convex decomposition of alpha x into multicuts");
  sc->add_option("file", cv.file)->required()->check(CLI::ExistingFile);
  sc->add_option("--x", cv.x, "Uniform x = p/q (default: the OPT_LP solution)");
  auto* alpha_opt = sc->add_option("--alpha", cv.alpha, "Scale p/q");
  auto* min_opt = sc->add_flag("--min-alpha", cv.min_alpha, "Find the least alpha");
  alpha_opt->excludes(min_opt);
  sc->add_option("--budget", cv.budget, "Node budget per pricing call")->check(CLI::PositiveNumber);
  sc->callback([&] {
    if (cv.alpha.empty() && !cv.min_alpha) throw CLI::ValidationError("carr-vempala", "give --alpha or --min-alpha");
    action = [&] { cmd_carr_vempala(g, cv); };
  });

  std::vector<int> only;
  sc = app.add_subcommand("verify", "Run the acceptance criteria");
  sc->add_option("--only", only, "Criterion ids to run")->check(CLI::Range(1, 9));
  sc->callback([&] { action = [&] { cmd_verify(g, only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    action();
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return Exit::parse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return Exit::budget;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return Exit::invariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return Exit::invariant;
  }
  return Exit::ok;
}
