#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpair/pair.hpp"

namespace fpair {

enum class Verdict { Yes, No, Unknown };
std::string_view to_string(Verdict v);

struct SearchBounds {
  std::uint64_t e_max = 0;
  std::optional<std::uint64_t> degree_bound;
};

struct CheckReport {
  Verdict verdict = Verdict::Unknown;
  /// Level e of the certifying (or refuting) computation.
  std::optional<std::uint64_t> level_e;
  /// Terms (g, a) of the certifying map: 1 lies in I + sum of I_e(d g a).
  std::vector<SplittingWitness> witnesses;
  /// The multiplier d the check was run with (1 for sharp F-purity).
  std::optional<Polynomial> multiplier;
  /// Rational point of the maximal ideal for local checks.
  std::optional<std::vector<std::uint64_t>> point;
  SearchBounds bounds;
  std::string method;
  std::vector<std::string> notes;
};

/// E_e = I_e(d a^ceil(t(p^e-1)) (I^[p^e] : I)) + I, the ideal of S whose image in R is the
/// image of evaluation at 1 on the pair's maps at level e.
Ideal eval_image_ideal(const PairSpec& pair, std::uint64_t e, const std::optional<Polynomial>& d = std::nullopt);

/// Yes when E_e contains 1 for some e <= e_max. No only when a = R: a splitting at any level
/// restricts to one at level 1, so E_1 not containing 1 settles it. Otherwise Unknown.
CheckReport is_locally_sharply_F_pure(const PairSpec& pair, std::uint64_t e_max);

struct RegularityProbe {
  Polynomial d;
  CheckReport report;
};

/// (I : c) = I, i.e. c is a nonzerodivisor on S/I (for reduced S/I: c lies in R°).
bool is_nonzerodivisor(const Polynomial& c, const Ideal& i);

/// The k x k minors of the Jacobian matrix of the generators of I that are nonzero mod I,
/// for the largest k where one exists. Empty for I = 0.
std::vector<Polynomial> jacobian_minors(const Ideal& i);

/// Elements of the span of `gens` that are nonzerodivisors modulo I, tried in a fixed order:
/// each generator, sums of two, the sum of all, then 16 combinations with seeded random
/// coefficients. Empty when none qualifies.
std::vector<Polynomial> nonzerodivisor_combinations(std::span<const Polynomial> gens, const Ideal& i);

/// {1} plus nonzerodivisor combinations of the Jacobian minors of I and the generators of a.
std::vector<Polynomial> default_d_candidates(const PairSpec& pair);

/// Per-element probe: for each d, Yes when E_e(d) contains 1 for some e <= e_max.
std::vector<RegularityProbe> is_locally_strongly_F_regular(const PairSpec& pair, std::span<const Polynomial> d_candidates,
                                                           std::uint64_t e_max);

/// 2 * (largest generator degree of a and I), at least 1.
std::uint64_t default_degree_bound(const PairSpec& pair);

/// Bounded search for a single element a in a^ceil(t(p^e-1)) with 1 in I_e(a (I^[q] : I)) + I.
/// Candidates are generators of the power times monomials of degree <= degree_bound, and
/// F_p-combinations of those (at most max_candidates per level). Never answers No.
CheckReport is_sharply_F_pure_old(const PairSpec& pair, std::uint64_t e_max, std::uint64_t degree_bound,
                                  std::uint64_t seed = 0, std::size_t max_candidates = 512);

/// The point c of m = (x_1 - c_1, ..., x_n - c_n); ContractError if m is not of that form.
std::vector<std::uint64_t> rational_point(const Ideal& m);

/// Yes when d a^N (I^[q] : I) is not inside m^[q] for some e <= e_max. With a = R and d = 1 a
/// failure at e = 1 is final (No); otherwise failures are reported Unknown.
CheckReport local_check_at_maximal(const PairSpec& pair, const Ideal& m, std::uint64_t e_max,
                                   const std::optional<Polynomial>& d = std::nullopt);

/// Re-checks a Yes report: every g lies in (I^[q] : I), every a in a^N, and the roots of the
/// products d g a together with I contain 1 (for local reports: some product d g a is not in
/// m^[q] at the recorded point).
bool verify_witnesses(const PairSpec& pair, const CheckReport& report);

struct CorpusItem {
  PairSpec pair;
  /// The presentation is local (one rational maximal ideal of interest); never a discrepancy.
  bool local = false;
};

struct DiscrepancyCandidate {
  std::size_t index;
  CheckReport new_report;
  CheckReport old_report;
  std::uint64_t seed;
};

struct DiscrepancySearch {
  std::vector<DiscrepancyCandidate> candidates;
  /// One line per skipped item (principal a, local flag, resource errors).
  std::vector<std::string> log;
};

/// Pairs where the new definition says Yes and the bounded old search says Unknown. Items run
/// in parallel; results are ordered by corpus index. Item i uses seed + i.
DiscrepancySearch search_discrepancy(std::span<const CorpusItem> corpus, std::uint64_t e_max,
                                     std::uint64_t degree_bound, std::uint64_t seed = 0);

}  // namespace fpair
