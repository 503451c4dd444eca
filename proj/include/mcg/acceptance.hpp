#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mcg::acceptance {

struct Options {
  std::uint64_t seed = 20240601;
  /// Criterion ids to run; empty runs all nine.
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  /// Extra indented lines printed under the verdict.
  std::vector<std::string> notes;
  double seconds = 0;
};

/// Runs the criteria in id order; `on_result` fires as each one finishes.
std::vector<CriterionResult> run(const Options& options = {},
                                 const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS 3 <title>: <detail> (1.23 s)" plus the notes, newline-terminated.
std::string format(const CriterionResult& result);

}  // namespace mcg::acceptance
