#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpair/pair.hpp"

namespace fpair {

enum class Exactness { Exact, LowerBound };
std::string_view to_string(Exactness x);

struct TestIdealResult {
  /// Ideal of S containing I.
  Ideal tau;
  /// Regular path: last level computed (where the bounds met, or e_cap). Quotient path: rounds.
  std::uint64_t stabilized_at_e = 0;
  std::uint64_t e_cap = 0;
  Exactness exactness = Exactness::LowerBound;
  std::vector<std::string> notes;
};

/// tau(a^t) on S = F_p[x] as the value of the ascending chain e -> I_e(a^ceil(t p^e)),
/// e = 1..e_cap. Each term is a lower bound; I_e(a^s) with s = floor(t p^e) (a principal) or
/// floor(t p^e) - r (a with r generators) is an upper bound. Exact once a term contains
/// some upper bound. Two equal consecutive terms are not enough: for f = x^2 + y^3 over F_2,
/// I_1(f) = I_2(f^2) = (x, y) while tau(f^(1/3)) = (1).
TestIdealResult test_ideal_regular(const Ideal& a, const ExactRational& t, std::uint64_t e_cap);

/// Smallest J containing (c) + I with I_e(a^ceil(t(p^e-1)) (I^[p^e] : I) J) inside J for all
/// e <= e_cap, by iterating J <- J + sum over e of those roots. Equal to the big test ideal when
/// c lies in it and in R°, and compatibility at e <= e_cap implies it for all e.
TestIdealResult test_ideal_quotient(const PairSpec& pair, const Polynomial& c, std::uint64_t e_cap);

/// A nonzerodivisor modulo I from the Jacobian minors of I (1 when I = 0), via
/// nonzerodivisor_combinations. Heuristic: the caller must accept that the element lies in
/// the test ideal. ContractError when nothing qualifies.
Polynomial test_element_heuristic(const RingPresentation& ring);

/// test_element_heuristic(ring) times h^ceil(t), h the first nonzerodivisor combination of
/// the generators of a (no factor when a = R).
Polynomial pair_test_element(const PairSpec& pair);

struct RadicalSample {
  bool radical = true;
  std::size_t samples = 0;
  /// First f, k with f^k in J and f not in J.
  std::optional<Polynomial> f;
  std::uint64_t k = 0;
};

/// Checks f^k in J => f in J over every sampled f and k.
RadicalSample is_radical_sample(const Ideal& j, std::span<const Polynomial> fs, std::span<const std::uint64_t> ks);

/// Polynomials worth testing for radicality: variables, generators of I_1(J), their pairwise
/// sums, and random polynomials of degree <= 3 (seeded).
std::vector<Polynomial> radical_probes(const Ideal& j, std::size_t count, std::uint64_t seed);

}  // namespace fpair
