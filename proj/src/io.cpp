#include "mcg/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace mcg::io {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return at_ >= lines_.size(); }
  const Line& peek() const { return lines_[at_]; }

  // Next line, which must start with `keyword` and have `arity` more tokens.
  const Line& expect(const std::string& keyword, std::size_t arity) {
    if (done()) throw ParseError(last_line() + 1, 1, "expected '" + keyword + "', found end of input");
    const Line& line = lines_[at_++];
    if (line.tokens[0].text != keyword) {
      throw ParseError(line.number, line.tokens[0].column,
                       "expected '" + keyword + "', found '" + line.tokens[0].text + "'");
    }
    if (line.tokens.size() != arity + 1) {
      const auto col = line.tokens.size() > arity + 1 ? line.tokens[arity + 1].column : end_column(line);
      throw ParseError(line.number, col,
                       "'" + keyword + "' takes " + std::to_string(arity) + " field" + (arity == 1 ? "" : "s"));
    }
    return line;
  }

  static std::size_t end_column(const Line& line) {
    const auto& t = line.tokens.back();
    return t.column + t.text.size();
  }

 private:
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

long long to_count(const Line& line, std::size_t i, const char* what) {
  const auto& tok = line.tokens[i];
  long long value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw ParseError(line.number, tok.column, std::string("expected a nonnegative integer ") + what + ", found '" +
                                                  tok.text + "'");
  }
  return value;
}

VertexId to_vertex(const Line& line, std::size_t i, std::size_t n) {
  const auto v = to_count(line, i, "vertex id");
  if (static_cast<std::size_t>(v) >= n) {
    throw ParseError(line.number, line.tokens[i].column,
                     "vertex " + std::to_string(v) + " out of range (graph has " + std::to_string(n) + ")");
  }
  return static_cast<VertexId>(v);
}

}  // namespace

MulticutInstance parse_instance(const std::string& text) {
  Reader in(tokenize(text));
  {
    const Line& head = in.expect("mcg", 1);
    if (head.tokens[1].text != "1") throw ParseError(head.number, head.tokens[1].column, "unsupported version");
  }
  MulticutInstance inst;
  const Line& gl = in.expect("graph", 2);
  const auto n = static_cast<std::size_t>(to_count(gl, 1, "vertex count"));
  const auto m = static_cast<std::size_t>(to_count(gl, 2, "edge count"));
  inst.graph = Graph(n);
  for (std::size_t i = 0; i < m; ++i) {
    const Line& el = in.expect("edge", 4);
    const VertexId u = to_vertex(el, 1, n);
    const VertexId v = to_vertex(el, 2, n);
    const auto len = to_count(el, 3, "length");
    if (len < 1) throw ParseError(el.number, el.tokens[3].column, "edge length must be positive");
    if (u == v) throw ParseError(el.number, el.tokens[2].column, "self-loop at vertex " + std::to_string(u));
    if (inst.graph.find_edge(u, v)) {
      throw ParseError(el.number, el.tokens[1].column,
                       "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    Rational cost;
    try {
      cost = parse_rational(el.tokens[4].text);
    } catch (const std::invalid_argument&) {
      throw ParseError(el.number, el.tokens[4].column, "malformed cost '" + el.tokens[4].text + "'");
    }
    if (cost < 0) throw ParseError(el.number, el.tokens[4].column, "cost must be nonnegative");
    inst.graph.add_edge(u, v, len);
    inst.costs.push_back(cost);
  }

  if (in.done()) in.expect("pairs", 1);
  const Line& pl = in.peek();
  if (pl.tokens[0].text == "pairs" && pl.tokens.size() == 3 && pl.tokens[1].text == "dist>=") {
    in.expect("pairs", 2);
    const auto t = to_count(pl, 2, "distance threshold");
    if (t < 1) throw ParseError(pl.number, pl.tokens[2].column, "distance threshold must be positive");
    inst.pair_threshold = t;
  } else {
    const Line& hdr = in.expect("pairs", 1);
    const auto k = static_cast<std::size_t>(to_count(hdr, 1, "pair count"));
    for (std::size_t i = 0; i < k; ++i) {
      const Line& line = in.expect("pair", 2);
      const VertexId s = to_vertex(line, 1, n);
      const VertexId t = to_vertex(line, 2, n);
      if (s == t) throw ParseError(line.number, line.tokens[2].column, "pair with s = t");
      const VertexPair key{std::min(s, t), std::max(s, t)};
      if (std::find(inst.pairs.begin(), inst.pairs.end(), key) != inst.pairs.end()) {
        throw ParseError(line.number, line.tokens[1].column, "duplicate pair");
      }
      if (shortest_dist(inst.graph, s, t) == kUnreachable) {
        throw ParseError(line.number, line.tokens[1].column, "pair is disconnected");
      }
      inst.pairs.push_back(key);
    }
  }

  while (!in.done()) {
    const Line& ml = in.expect("mark", 2);
    const std::string& name = ml.tokens[1].text;
    if (inst.graph.mark(name)) throw ParseError(ml.number, ml.tokens[1].column, "mark '" + name + "' repeated");
    inst.graph.set_mark(name, to_vertex(ml, 2, n));
  }

  try {
    validate(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(pl.number, 1, e.what());
  }
  return inst;
}

std::string emit_instance(const MulticutInstance& instance) {
  MulticutInstance inst = instance;
  validate(inst);
  std::ostringstream out;
  const auto& g = inst.graph;
  out << "mcg 1\n";
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    const auto& ed = g.edge(e);
    out << "edge " << ed.u << ' ' << ed.v << ' ' << ed.length << ' ' << to_string(inst.costs[e]) << '\n';
  }
  if (inst.pair_threshold) {
    out << "pairs dist>= " << *inst.pair_threshold << '\n';
  } else {
    out << "pairs " << inst.pairs.size() << '\n';
    for (auto [s, t] : inst.pairs) out << "pair " << s << ' ' << t << '\n';
  }
  for (const auto& [name, v] : g.marks()) out << "mark " << name << ' ' << v << '\n';
  return out.str();
}

MulticutInstance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string gap_csv_header(bool timings) {
  std::string h = "instance_id,opt_lp,opt_ip,ip_optimal,gap,degenerate,reference_cost,lp_rounds,lp_pivots,ip_nodes";
  if (timings) h += ",lp_seconds,ip_seconds";
  return h + "\n";
}

std::string gap_csv_row(const GapReport& report, bool timings) {
  const auto& r = report.result;
  std::ostringstream out;
  out << report.instance_id << ',' << to_string(r.opt_lp) << ',' << to_string(r.opt_ip) << ','
      << (r.ip_optimal ? "true" : "false") << ',' << (r.gap ? to_string(*r.gap) : "n/a") << ','
      << (r.degenerate ? "true" : "false") << ',' << (report.reference_cost ? to_string(*report.reference_cost) : "")
      << ',' << r.lp_rounds << ',' << r.lp_pivots << ',' << r.ip_nodes;
  if (timings) {
    out << std::fixed << std::setprecision(6);
    out << ',';
    if (report.lp_seconds) out << *report.lp_seconds;
    out << ',';
    if (report.ip_seconds) out << *report.ip_seconds;
  }
  out << '\n';
  return out.str();
}

}  // namespace mcg::io
