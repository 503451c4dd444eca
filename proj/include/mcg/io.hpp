#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcg/multicut.hpp"
#include "mcg/rational.hpp"

namespace mcg::io {

/// Syntax or semantic error at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Text format, one record per line; '#' starts a comment.
///
///   mcg 1
///   graph <n> <m>
///   edge <u> <v> <length> <cost>      (m lines, ids in order)
///   pairs <K>                         then K lines: pair <s> <t>
///   pairs dist>= <t>                  (implicit pairs)
///   mark <name> <vertex>              (any number, after the pairs)
MulticutInstance parse_instance(const std::string& text);

/// Canonical form: edges by id, pairs sorted, marks by name.
std::string emit_instance(const MulticutInstance& instance);

MulticutInstance read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

struct GapReport {
  std::string instance_id;
  GapResult result;
  /// Cost of some fixed fractional solution, for comparison with OPT_LP.
  std::optional<Rational> reference_cost;
  std::optional<double> lp_seconds;
  std::optional<double> ip_seconds;
};

/// Columns: instance_id,opt_lp,opt_ip,ip_optimal,gap,degenerate,
/// reference_cost,lp_rounds,lp_pivots,ip_nodes, then lp_seconds,ip_seconds
/// when `timings` is set. A missing gap is written "n/a".
std::string gap_csv_header(bool timings = false);
std::string gap_csv_row(const GapReport& report, bool timings = false);

}  // namespace mcg::io
