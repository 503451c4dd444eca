#include "mcg/exact_lp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace mcg::lp {

// ---------------------------------------------------------------------------
// LinearProgram

std::size_t LinearProgram::add_variable(Rational objective, VarKind kind, std::string name) {
  objective.canonicalize();
  columns_.push_back({std::move(objective), kind, std::move(name), {}});
  return columns_.size() - 1;
}

std::size_t LinearProgram::add_constraint(const std::vector<Coefficient>& row, Relation relation,
                                          Rational rhs, std::string name) {
  std::vector<char> seen(columns_.size(), 0);
  for (const auto& [var, value] : row) {
    if (var >= columns_.size()) throw std::invalid_argument("constraint references unknown variable");
    if (seen[var]) throw std::invalid_argument("constraint repeats a variable");
    seen[var] = 1;
  }
  const std::size_t id = rows_.size();
  rhs.canonicalize();
  rows_.push_back({relation, std::move(rhs), std::move(name)});
  for (const auto& [var, value] : row) {
    Rational v = value;
    v.canonicalize();
    if (v != 0) columns_[var].entries.push_back({id, std::move(v)});
  }
  return id;
}

std::size_t LinearProgram::add_column(Rational objective, std::vector<Coefficient> column, VarKind kind,
                                      std::string name) {
  std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (column[i].index >= rows_.size()) throw std::invalid_argument("column references unknown constraint");
    if (i > 0 && column[i].index == column[i - 1].index) throw std::invalid_argument("column repeats a constraint");
  }
  for (auto& c : column) c.value.canonicalize();
  std::erase_if(column, [](const Coefficient& c) { return c.value == 0; });
  objective.canonicalize();
  columns_.push_back({std::move(objective), kind, std::move(name), std::move(column)});
  return columns_.size() - 1;
}

std::vector<Rational> LinearProgram::activities(const std::vector<Rational>& x) const {
  if (x.size() != columns_.size()) throw std::invalid_argument("primal vector has wrong dimension");
  std::vector<Rational> act(rows_.size(), 0);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& [row, value] : columns_[j].entries) act[row] += value * x[j];
  }
  return act;
}

Rational LinearProgram::objective_value(const std::vector<Rational>& x) const {
  if (x.size() != columns_.size()) throw std::invalid_argument("primal vector has wrong dimension");
  Rational total = 0;
  for (std::size_t j = 0; j < columns_.size(); ++j) total += columns_[j].objective * x[j];
  return total;
}

std::string LinearProgram::dump() const {
  auto var_name = [&](std::size_t j) {
    return columns_[j].name.empty() ? "x" + std::to_string(j) : columns_[j].name;
  };
  std::ostringstream out;
  out << (sense_ == Sense::minimize ? "minimize" : "maximize");
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].objective != 0) out << ' ' << mcg::to_string(columns_[j].objective) << ' ' << var_name(j);
  }
  out << '\n';
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> rows(rows_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [row, value] : columns_[j].entries) rows[row].push_back({j, &value});
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out << (rows_[i].name.empty() ? "c" + std::to_string(i) : rows_[i].name) << ':';
    for (const auto& [j, value] : rows[i]) out << ' ' << mcg::to_string(*value) << ' ' << var_name(j);
    static constexpr const char* kRel[] = {"<=", "=", ">="};
    out << ' ' << kRel[static_cast<int>(rows_[i].relation)] << ' ' << mcg::to_string(rows_[i].rhs) << '\n';
  }
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].kind == VarKind::free) out << "free " << var_name(j) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Standard form: min c^T z, A z = b, z >= 0, b >= 0. Rows are negated where
// the user rhs is negative; free variables are split; <=/>= rows get slacks.

namespace {

using detail::BasisKey;

class StandardForm {
 public:
  StandardForm(const LinearProgram& lp, const Solver::Options& options)
      : lp_(lp), options_(options), m_(lp.constraint_count()) {
    sign_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) sign_[i] = lp.rhs(i) < 0 ? -1 : 1;
    sense_ = lp.sense() == Sense::minimize ? 1 : -1;
    integral_.resize(lp.variable_count());
    for (std::size_t j = 0; j < lp.variable_count(); ++j) {
      bool integral = is_integer(lp.objective(j));
      for (const auto& c : lp.column(j)) integral = integral && is_integer(c.value);
      integral_[j] = integral;
      cols_.push_back({BasisKey::plus, j});
      if (lp.kind(j) == VarKind::free) cols_.push_back({BasisKey::minus, j});
    }
    slack_index_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.relation(i) == Relation::equal) continue;
      slack_index_[i] = cols_.size();
      cols_.push_back({BasisKey::slack, i});
    }
    first_artificial_ = cols_.size();
    b_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) b_[i] = lp.rhs(i) * sign_[i];
  }

  LpOutcome run(std::vector<BasisKey>& basis_keys, std::size_t& total_pivots) {
    LpOutcome out;
    const bool warm = !basis_keys.empty() && try_warm_start(basis_keys);
    out.stats.warm_started = warm;
    if (!warm) {
      cold_start();
      if (first_artificial_ < cols_.size()) {
        const auto r = iterate(/*phase=*/1, out.stats);
        (void)r;  // phase 1 is bounded below by zero
        Rational infeas = 0;
        for (std::size_t i = 0; i < m_; ++i) {
          if (is_artificial(basis_[i])) infeas += xb_[i];
        }
        out.stats.phase1_pivots = out.stats.pivots;
        if (infeas > 0) {
          const auto pi = duals(1);
          out.status = Status::infeasible;
          out.farkas.resize(m_);
          for (std::size_t i = 0; i < m_; ++i) out.farkas[i] = -pi[i] * sign_[i];
          total_pivots += out.stats.pivots;
          basis_keys.clear();
          return out;
        }
        drive_out_artificials(out.stats);
      }
    }
    const auto entering = iterate(/*phase=*/2, out.stats);
    total_pivots += out.stats.pivots;
    if (entering != npos) {
      out.status = Status::unbounded;
      out.ray = unbounded_ray(entering);
      basis_keys.clear();
      return out;
    }
    out.status = Status::optimal;
    std::vector<Rational> z(cols_.size(), 0);
    for (std::size_t i = 0; i < m_; ++i) z[basis_[i]] = xb_[i];
    out.primal.assign(lp_.variable_count(), 0);
    for (std::size_t c = 0; c < first_artificial_; ++c) {
      const auto& key = cols_[c];
      if (key.kind == BasisKey::plus) out.primal[key.index] += z[c];
      if (key.kind == BasisKey::minus) out.primal[key.index] -= z[c];
    }
    out.objective = lp_.objective_value(out.primal);
    const auto pi = duals(2);
    out.duals.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) out.duals[i] = pi[i] * sign_[i] * sense_;
    basis_keys.clear();
    bool clean = true;
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_artificial(basis_[i])) clean = false;
      basis_keys.push_back(cols_[basis_[i]]);
    }
    if (!clean) basis_keys.clear();
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool is_artificial(std::size_t c) const { return c >= first_artificial_; }

  // Visits the nonzero entries of standard-form column c as (row, value).
  template <class F>
  void for_each_entry(std::size_t c, F&& f) const {
    const auto& key = cols_[c];
    switch (key.kind) {
      case BasisKey::plus:
      case BasisKey::minus: {
        const int s = key.kind == BasisKey::plus ? 1 : -1;
        for (const auto& [row, value] : lp_.column(key.index)) {
          f(row, (s * sign_[row] > 0) ? Rational(value) : Rational(-value));
        }
        break;
      }
      case BasisKey::slack: {
        const int coef = lp_.relation(key.index) == Relation::less_equal ? 1 : -1;
        f(key.index, Rational(coef * sign_[key.index]));
        break;
      }
      case BasisKey::artificial:
        f(key.index, Rational(1));
        break;
    }
  }

  Rational cost(std::size_t c, int phase) const {
    const auto& key = cols_[c];
    if (phase == 1) return key.kind == BasisKey::artificial ? 1 : 0;
    if (key.kind == BasisKey::plus) return lp_.objective(key.index) * sense_;
    if (key.kind == BasisKey::minus) return -lp_.objective(key.index) * sense_;
    return 0;
  }

  void cold_start() {
    cols_.resize(first_artificial_);
    basis_.assign(m_, npos);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto s = slack_index_[i];
      if (s != npos) {
        const int coef = lp_.relation(i) == Relation::less_equal ? 1 : -1;
        if (coef * sign_[i] > 0) {
          basis_[i] = s;
          continue;
        }
      }
      basis_[i] = cols_.size();
      cols_.push_back({BasisKey::artificial, i});
    }
    binv_.assign(m_ * m_, 0);
    for (std::size_t i = 0; i < m_; ++i) binv_[i * m_ + i] = 1;
    xb_ = b_;
    reset_basic_flags();
  }

  bool try_warm_start(const std::vector<BasisKey>& keys) {
    // Old rows keep their basic columns; rows added since need a slack.
    std::vector<std::size_t> col_of_plus(lp_.variable_count(), npos);
    std::vector<std::size_t> col_of_minus(lp_.variable_count(), npos);
    for (std::size_t c = 0; c < first_artificial_; ++c) {
      if (cols_[c].kind == BasisKey::plus) col_of_plus[cols_[c].index] = c;
      if (cols_[c].kind == BasisKey::minus) col_of_minus[cols_[c].index] = c;
    }
    if (keys.size() > m_) return false;
    std::vector<std::size_t> basis;
    std::vector<char> used(first_artificial_, 0);
    for (const auto& key : keys) {
      std::size_t c = npos;
      if (key.kind == BasisKey::plus && key.index < col_of_plus.size()) c = col_of_plus[key.index];
      if (key.kind == BasisKey::minus && key.index < col_of_minus.size()) c = col_of_minus[key.index];
      if (key.kind == BasisKey::slack && key.index < m_) c = slack_index_[key.index];
      if (c == npos || used[c]) return false;
      used[c] = 1;
      basis.push_back(c);
    }
    for (std::size_t i = keys.size(); i < m_; ++i) {
      if (slack_index_[i] == npos) return false;
      basis.push_back(slack_index_[i]);
    }
    // Gauss-Jordan inverse of B.
    std::vector<Rational> a(m_ * m_, 0);
    for (std::size_t k = 0; k < m_; ++k) {
      for_each_entry(basis[k], [&](std::size_t row, const Rational& v) { a[row * m_ + k] = v; });
    }
    std::vector<Rational> inv(m_ * m_, 0);
    for (std::size_t i = 0; i < m_; ++i) inv[i * m_ + i] = 1;
    for (std::size_t col = 0; col < m_; ++col) {
      std::size_t piv = npos;
      for (std::size_t r = col; r < m_; ++r) {
        if (a[r * m_ + col] != 0) {
          piv = r;
          break;
        }
      }
      if (piv == npos) return false;
      if (piv != col) {
        for (std::size_t k = 0; k < m_; ++k) {
          std::swap(a[piv * m_ + k], a[col * m_ + k]);
          std::swap(inv[piv * m_ + k], inv[col * m_ + k]);
        }
      }
      const Rational scale = 1 / a[col * m_ + col];
      for (std::size_t k = 0; k < m_; ++k) {
        a[col * m_ + k] *= scale;
        inv[col * m_ + k] *= scale;
      }
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == col || a[r * m_ + col] == 0) continue;
        const Rational f = a[r * m_ + col];
        for (std::size_t k = 0; k < m_; ++k) {
          if (a[col * m_ + k] != 0) a[r * m_ + k] -= f * a[col * m_ + k];
          if (inv[col * m_ + k] != 0) inv[r * m_ + k] -= f * inv[col * m_ + k];
        }
      }
    }
    std::vector<Rational> xb(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) {
        if (inv[i * m_ + k] != 0 && b_[k] != 0) xb[i] += inv[i * m_ + k] * b_[k];
      }
      if (xb[i] < 0) return false;
    }
    cols_.resize(first_artificial_);
    basis_ = std::move(basis);
    binv_ = std::move(inv);
    xb_ = std::move(xb);
    reset_basic_flags();
    return true;
  }

  void reset_basic_flags() {
    is_basic_.assign(cols_.size(), 0);
    for (auto c : basis_) is_basic_[c] = 1;
  }

  // Simplex multipliers pi^T = c_B^T B^{-1} in normalized row orientation.
  std::vector<Rational> duals(int phase) const {
    std::vector<Rational> pi(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational cb = cost(basis_[i], phase);
      if (cb == 0) continue;
      for (std::size_t k = 0; k < m_; ++k) {
        if (binv_[i * m_ + k] != 0) pi[k] += cb * binv_[i * m_ + k];
      }
    }
    return pi;
  }

  // Returns npos at optimality, otherwise the entering column of an
  // unbounded direction.
  std::size_t iterate(int phase, SolveStats& stats) {
    std::unordered_set<std::string> seen;
    auto record_basis = [&] {
      if (!options_.track_bases) return;
      auto sorted = basis_;
      std::sort(sorted.begin(), sorted.end());
      std::string key(reinterpret_cast<const char*>(sorted.data()), sorted.size() * sizeof(std::size_t));
      key.push_back(static_cast<char>(phase));
      if (!seen.insert(std::move(key)).second) stats.basis_repeated = true;
      stats.distinct_bases = std::max(stats.distinct_bases, seen.size());
    };
    record_basis();
    BigInt denom;
    std::vector<BigInt> scaled(m_);
    BigInt acc;
    BigInt tmp;
    for (;;) {
      const auto pi = duals(phase);
      // Integer image of pi for fast pricing of integral columns.
      denom = 1;
      for (const auto& p : pi) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), p.get_den_mpz_t());
      for (std::size_t k = 0; k < m_; ++k) {
        scaled[k] = (denom / pi[k].get_den()) * pi[k].get_num() * sign_[k];
      }
      std::size_t entering = npos;
      for (std::size_t c = 0; c < cols_.size() && entering == npos; ++c) {
        if (is_basic_[c]) continue;
        const auto& key = cols_[c];
        int sign = 0;
        switch (key.kind) {
          case BasisKey::plus:
          case BasisKey::minus: {
            const int s = key.kind == BasisKey::plus ? 1 : -1;
            if (integral_[key.index]) {
              // reduced cost * denom = s * (sense*c*denom - sum sign_k pi_k denom a_k)
              if (phase == 2) {
                mpz_mul(acc.get_mpz_t(), denom.get_mpz_t(), lp_.objective(key.index).get_num_mpz_t());
                if (sense_ < 0) mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
              } else {
                acc = 0;
              }
              for (const auto& [row, value] : lp_.column(key.index)) {
                mpz_submul(acc.get_mpz_t(), scaled[row].get_mpz_t(), value.get_num_mpz_t());
              }
              sign = s * sgn(acc);
            } else {
              Rational d = cost(c, phase);
              for_each_entry(c, [&](std::size_t row, const Rational& v) { d -= pi[row] * v; });
              sign = sgn(d);
            }
            break;
          }
          case BasisKey::slack: {
            const int coef = lp_.relation(key.index) == Relation::less_equal ? 1 : -1;
            sign = -coef * sign_[key.index] * sgn(pi[key.index]);
            break;
          }
          case BasisKey::artificial:
            if (phase == 2) continue;
            sign = sgn(Rational(1 - pi[key.index]));
            break;
        }
        if (sign < 0) entering = c;
      }
      if (entering == npos) return npos;

      // Direction d = B^{-1} a_entering.
      std::vector<Rational> d(m_, 0);
      for_each_entry(entering, [&](std::size_t row, const Rational& v) {
        for (std::size_t i = 0; i < m_; ++i) {
          if (binv_[i * m_ + row] != 0) d[i] += binv_[i * m_ + row] * v;
        }
      });
      // Ratio test; ties go to the lowest basic column index.
      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (d[i] <= 0) continue;
        Rational ratio = xb_[i] / d[i];
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == npos) {
        ray_direction_ = std::move(d);
        return entering;
      }
      pivot(leave, entering, d);
      ++stats.pivots;
      if (stats.pivots > options_.pivot_limit) throw std::runtime_error("simplex pivot limit exceeded");
      record_basis();
    }
  }

  void pivot(std::size_t leave, std::size_t entering, const std::vector<Rational>& d) {
    const Rational inv_pivot = 1 / d[leave];
    for (std::size_t k = 0; k < m_; ++k) {
      if (binv_[leave * m_ + k] != 0) binv_[leave * m_ + k] *= inv_pivot;
    }
    xb_[leave] *= inv_pivot;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == leave || d[i] == 0) continue;
      for (std::size_t k = 0; k < m_; ++k) {
        if (binv_[leave * m_ + k] != 0) binv_[i * m_ + k] -= d[i] * binv_[leave * m_ + k];
      }
      xb_[i] -= d[i] * xb_[leave];
    }
    is_basic_[basis_[leave]] = 0;
    basis_[leave] = entering;
    is_basic_[entering] = 1;
  }

  void drive_out_artificials(SolveStats& stats) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t c = 0; c < first_artificial_; ++c) {
        if (is_basic_[c]) continue;
        std::vector<Rational> d(m_, 0);
        for_each_entry(c, [&](std::size_t row, const Rational& v) {
          for (std::size_t r = 0; r < m_; ++r) {
            if (binv_[r * m_ + row] != 0) d[r] += binv_[r * m_ + row] * v;
          }
        });
        if (d[i] != 0) {
          pivot(i, c, d);
          ++stats.pivots;
          break;
        }
      }
      // A row with no replacement is redundant; its artificial stays at zero.
    }
  }

  std::vector<Rational> unbounded_ray(std::size_t entering) const {
    std::vector<Rational> z(cols_.size(), 0);
    z[entering] = 1;
    for (std::size_t i = 0; i < m_; ++i) z[basis_[i]] = -ray_direction_[i];
    std::vector<Rational> ray(lp_.variable_count(), 0);
    for (std::size_t c = 0; c < first_artificial_; ++c) {
      if (cols_[c].kind == BasisKey::plus) ray[cols_[c].index] += z[c];
      if (cols_[c].kind == BasisKey::minus) ray[cols_[c].index] -= z[c];
    }
    return ray;
  }

  const LinearProgram& lp_;
  const Solver::Options& options_;
  std::size_t m_;
  int sense_ = 1;
  std::vector<int> sign_;
  std::vector<char> integral_;
  std::vector<BasisKey> cols_;
  std::vector<std::size_t> slack_index_;
  std::size_t first_artificial_ = 0;
  std::vector<Rational> b_;

  std::vector<std::size_t> basis_;
  std::vector<char> is_basic_;
  std::vector<Rational> binv_;
  std::vector<Rational> xb_;
  std::vector<Rational> ray_direction_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Solver

Solver::Solver(LinearProgram lp, Options options) : lp_(std::move(lp)), options_(options) {}

std::size_t Solver::add_row(const std::vector<Coefficient>& row, Relation relation, Rational rhs,
                            std::string name) {
  return lp_.add_constraint(row, relation, std::move(rhs), std::move(name));
}

std::size_t Solver::add_column(Rational objective, std::vector<Coefficient> column, VarKind kind,
                               std::string name) {
  return lp_.add_column(std::move(objective), std::move(column), kind, std::move(name));
}

LpOutcome Solver::solve() {
  StandardForm form(lp_, options_);
  return form.run(last_basis_, total_pivots_);
}

LpOutcome solve(const LinearProgram& lp) {
  Solver solver(lp);
  return solver.solve();
}

const std::vector<Rational>& dual_values(const LpOutcome& outcome) {
  if (outcome.status != Status::optimal) throw std::logic_error("dual values requested for a non-optimal outcome");
  return outcome.duals;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

bool fail(std::string* why, std::string message) {
  if (why) *why = std::move(message);
  return false;
}

// u^T A per variable.
std::vector<Rational> row_combination(const LinearProgram& lp, const std::vector<Rational>& u) {
  std::vector<Rational> out(lp.variable_count(), 0);
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    for (const auto& [row, value] : lp.column(j)) out[j] += u[row] * value;
  }
  return out;
}

}  // namespace

bool verify_optimal(const LinearProgram& lp, const LpOutcome& outcome, std::string* why) {
  if (outcome.status != Status::optimal) return fail(why, "outcome is not optimal");
  const auto& x = outcome.primal;
  const auto& y = outcome.duals;
  if (x.size() != lp.variable_count() || y.size() != lp.constraint_count()) {
    return fail(why, "dimension mismatch");
  }
  const auto act = lp.activities(x);
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
    const auto rel = lp.relation(i);
    if ((rel == Relation::less_equal && act[i] > lp.rhs(i)) ||
        (rel == Relation::greater_equal && act[i] < lp.rhs(i)) ||
        (rel == Relation::equal && act[i] != lp.rhs(i))) {
      return fail(why, "primal row " + std::to_string(i) + " violated");
    }
  }
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    if (lp.kind(j) == VarKind::nonnegative && x[j] < 0) return fail(why, "negative variable");
  }
  // For minimization: y >= 0 on >= rows, y <= 0 on <= rows and c - y^T A >= 0
  // (= 0 for free variables). Maximization flips every sign.
  const int s = lp.sense() == Sense::minimize ? 1 : -1;
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
    const int sy = s * sgn(y[i]);
    if ((lp.relation(i) == Relation::less_equal && sy > 0) ||
        (lp.relation(i) == Relation::greater_equal && sy < 0)) {
      return fail(why, "dual sign wrong on row " + std::to_string(i));
    }
  }
  const auto ya = row_combination(lp, y);
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    const int rc = s * sgn(Rational(lp.objective(j) - ya[j]));
    if (rc < 0 || (lp.kind(j) == VarKind::free && rc != 0)) {
      return fail(why, "reduced cost infeasible for variable " + std::to_string(j));
    }
  }
  Rational by = 0;
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) by += lp.rhs(i) * y[i];
  if (by != lp.objective_value(x) || outcome.objective != by) return fail(why, "objective values differ");
  return true;
}

bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& u, std::string* why) {
  if (u.size() != lp.constraint_count()) return fail(why, "certificate has wrong dimension");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((lp.relation(i) == Relation::less_equal && u[i] < 0) ||
        (lp.relation(i) == Relation::greater_equal && u[i] > 0)) {
      return fail(why, "certificate sign wrong on row " + std::to_string(i));
    }
  }
  const auto ua = row_combination(lp, u);
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    if (ua[j] < 0 || (lp.kind(j) == VarKind::free && ua[j] != 0)) {
      return fail(why, "certificate column condition fails for variable " + std::to_string(j));
    }
  }
  Rational ub = 0;
  for (std::size_t i = 0; i < u.size(); ++i) ub += u[i] * lp.rhs(i);
  if (ub >= 0) return fail(why, "u^T b is not negative");
  return true;
}

bool verify_ray(const LinearProgram& lp, const std::vector<Rational>& ray, std::string* why) {
  if (ray.size() != lp.variable_count()) return fail(why, "ray has wrong dimension");
  const auto act = lp.activities(ray);
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
    const auto rel = lp.relation(i);
    if ((rel == Relation::less_equal && act[i] > 0) || (rel == Relation::greater_equal && act[i] < 0) ||
        (rel == Relation::equal && act[i] != 0)) {
      return fail(why, "ray leaves the recession cone at row " + std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    if (lp.kind(j) == VarKind::nonnegative && ray[j] < 0) return fail(why, "ray negative on a nonnegative variable");
  }
  const Rational gain = lp.objective_value(ray);
  if ((lp.sense() == Sense::minimize && gain >= 0) || (lp.sense() == Sense::maximize && gain <= 0)) {
    return fail(why, "ray does not improve the objective");
  }
  return true;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

}  // namespace mcg::lp
