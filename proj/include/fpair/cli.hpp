#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpair/problem.hpp"
#include "json.hpp"

namespace fpair {

using Report = nlohmann::ordered_json;

/// Command-line overrides applied on top of the problem file.
struct RunOptions {
  std::optional<std::string> cmd;
  std::optional<std::uint64_t> e_max;
  std::optional<std::uint64_t> degree_bound;
  std::optional<std::string> test_element;
  std::optional<std::string> point;
  std::uint64_t seed = 0;
  bool timing = false;
};

struct Outcome {
  int exit_code;
  Report report;
};

/// Exit codes: 0 yes / complete, 2 no, 3 unknown or lower bound, 1 error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNo = 2;
inline constexpr int kExitUnknown = 3;

/// Folds the flag overrides into the problem (flag text is parsed against the problem's
/// variables; errors report line 0).
Problem apply_options(Problem problem, const RunOptions& options);

/// Runs problem.cmd (everything except hunt). Library errors propagate.
Outcome run_problem(const Problem& problem, const RunOptions& options);

/// Runs the discrepancy search over a corpus.
Outcome run_hunt(const std::vector<Problem>& corpus, const RunOptions& options);

/// Report for an error; exit code 1.
Outcome error_outcome(const std::string& code, const std::string& message);

/// Stable text rendering: one `key: value` line per scalar, nested keys joined with '.',
/// array elements as key[i], empty arrays as `key: []`.
std::string render_text(const Report& report);

}  // namespace fpair
