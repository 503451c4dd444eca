#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcg/multicut.hpp"
#include "mcg/rational.hpp"

namespace mcg {

struct ConvexTerm {
  EdgeSet cut;
  Rational weight;
};

/// c >= 0 and u with c . chi_F >= u for every multicut F, but alpha c . x < u.
struct FarkasWitness {
  std::vector<Rational> c;
  Rational u;
};

enum class DecompositionStatus { decomposed, witness, inconclusive };
std::string to_string(DecompositionStatus s);

struct DecompositionResult {
  DecompositionStatus status = DecompositionStatus::inconclusive;
  Rational alpha;
  /// decomposed: sum of weights is 1 and loads are <= alpha x.
  std::vector<ConvexTerm> terms;
  std::optional<FarkasWitness> witness;
  /// max sum of y subject to loads <= alpha x.
  Rational master_value;
  std::size_t rounds = 0;
  std::size_t pricing_nodes = 0;
  std::size_t pivots = 0;
};

struct DecomposeOptions {
  /// Branch-and-bound budget for each pricing call.
  std::size_t node_budget = 1'000'000;
};

/// Writes alpha x as a convex combination of multicuts, or returns a witness
/// that no such combination exists. x must satisfy every path constraint
/// (std::invalid_argument otherwise).
DecompositionResult decompose(const MulticutInstance& instance, const std::vector<Rational>& x, const Rational& alpha,
                              const DecomposeOptions& options = {});

/// Least alpha for which decompose succeeds, with its decomposition. Status
/// is decomposed or inconclusive. No pairs gives alpha = 0 and the empty cut.
DecompositionResult min_alpha(const MulticutInstance& instance, const std::vector<Rational>& x,
                              const DecomposeOptions& options = {});

/// Direct re-evaluation: weights >= 0 summing to 1, every term a multicut,
/// every load <= alpha x(e).
std::vector<std::string> verify_decomposition(const MulticutInstance& instance, const std::vector<Rational>& x,
                                              const Rational& alpha, const std::vector<ConvexTerm>& terms);

/// c >= 0, alpha c . x < u, and the exact minimum-weight multicut under c is
/// >= u. Empty when the witness holds.
std::vector<std::string> verify_witness(const MulticutInstance& instance, const std::vector<Rational>& x,
                                        const Rational& alpha, const FarkasWitness& witness);

/// CSV with header term_id,weight,edges; edges are ';'-separated ids.
std::string decomposition_csv(const std::vector<ConvexTerm>& terms);

}  // namespace mcg
