#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mcg/rational.hpp"

namespace mcg::lp {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class VarKind { nonnegative, free };

/// Sparse entry: `index` is a constraint id inside a column and a variable id
/// inside a row.
struct Coefficient {
  std::size_t index;
  Rational value;
};

/// Exact rational LP stored column-wise. Variable and constraint ids are
/// dense and never change when rows or columns are appended.
class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::minimize) : sense_(sense) {}

  std::size_t add_variable(Rational objective = 0, VarKind kind = VarKind::nonnegative,
                           std::string name = {});
  /// Row entries index variables; throws std::invalid_argument on an unknown
  /// variable or a repeated entry.
  std::size_t add_constraint(const std::vector<Coefficient>& row, Relation relation, Rational rhs,
                             std::string name = {});
  /// Column entries index existing constraints.
  std::size_t add_column(Rational objective, std::vector<Coefficient> column,
                         VarKind kind = VarKind::nonnegative, std::string name = {});

  Sense sense() const { return sense_; }
  std::size_t variable_count() const { return columns_.size(); }
  std::size_t constraint_count() const { return rows_.size(); }

  const Rational& objective(std::size_t var) const { return columns_.at(var).objective; }
  VarKind kind(std::size_t var) const { return columns_.at(var).kind; }
  const std::vector<Coefficient>& column(std::size_t var) const { return columns_.at(var).entries; }
  const std::string& variable_name(std::size_t var) const { return columns_.at(var).name; }
  Relation relation(std::size_t row) const { return rows_.at(row).relation; }
  const Rational& rhs(std::size_t row) const { return rows_.at(row).rhs; }
  const std::string& constraint_name(std::size_t row) const { return rows_.at(row).name; }

  /// Row activity a_i . x for a full primal vector.
  std::vector<Rational> activities(const std::vector<Rational>& x) const;
  Rational objective_value(const std::vector<Rational>& x) const;

  /// Line-oriented debug form: one constraint per line, rationals as p/q.
  std::string dump() const;

 private:
  struct Column {
    Rational objective;
    VarKind kind;
    std::string name;
    std::vector<Coefficient> entries;  // sorted by constraint id
  };
  struct Row {
    Relation relation;
    Rational rhs;
    std::string name;
  };

  Sense sense_;
  std::vector<Column> columns_;
  std::vector<Row> rows_;
};

enum class Status { optimal, infeasible, unbounded };

namespace detail {
// Identity of a standard-form column that survives rebuilds.
struct BasisKey {
  enum Kind : std::uint8_t { plus, minus, slack, artificial } kind;
  std::size_t index;
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
};
}  // namespace detail

struct SolveStats {
  std::size_t pivots = 0;
  std::size_t phase1_pivots = 0;
  bool warm_started = false;
  /// Only maintained with Solver::Options::track_bases.
  bool basis_repeated = false;
  std::size_t distinct_bases = 0;
};

struct LpOutcome {
  Status status = Status::infeasible;
  /// Optimal: value per variable.
  std::vector<Rational> primal;
  Rational objective;
  /// Optimal: d(objective)/d(rhs) per constraint.
  std::vector<Rational> duals;
  /// Infeasible: u with u_i >= 0 on <= rows, u_i <= 0 on >= rows,
  /// u^T A_j >= 0 for nonnegative and = 0 for free variables, u^T b < 0.
  std::vector<Rational> farkas;
  /// Unbounded: improving direction per variable.
  std::vector<Rational> ray;
  SolveStats stats;
};

/// Primal simplex with Bland's rule over a dense basis inverse. Keeps the
/// last optimal basis and reuses it after add_row/add_column whenever it is
/// still primal feasible.
class Solver {
 public:
  struct Options {
    std::size_t pivot_limit = 50'000'000;
    bool track_bases = false;
  };

  explicit Solver(LinearProgram lp) : Solver(std::move(lp), Options{}) {}
  Solver(LinearProgram lp, Options options);

  const LinearProgram& problem() const { return lp_; }
  std::size_t add_row(const std::vector<Coefficient>& row, Relation relation, Rational rhs,
                      std::string name = {});
  std::size_t add_column(Rational objective, std::vector<Coefficient> column,
                         VarKind kind = VarKind::nonnegative, std::string name = {});
  LpOutcome solve();
  std::size_t total_pivots() const { return total_pivots_; }

 private:
  LinearProgram lp_;
  Options options_;
  std::vector<detail::BasisKey> last_basis_;
  std::size_t total_pivots_ = 0;
};

/// One-shot convenience wrapper.
LpOutcome solve(const LinearProgram& lp);

/// Throws std::logic_error unless the outcome is optimal.
const std::vector<Rational>& dual_values(const LpOutcome& outcome);

/// Exact re-verification independent of the simplex: primal feasibility,
/// dual sign/reduced-cost feasibility and equal objective values.
bool verify_optimal(const LinearProgram& lp, const LpOutcome& outcome, std::string* why = nullptr);
bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& u, std::string* why = nullptr);
bool verify_ray(const LinearProgram& lp, const std::vector<Rational>& ray, std::string* why = nullptr);

std::string to_string(Status status);

}  // namespace mcg::lp
