#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpair/criteria.hpp"

namespace fpair {

/// Yes when I_e(a^ceil(t(p^e-1)) (I^[q] : I) J) lies in J for every e <= e_max ("yes up to
/// e_max"); No as soon as one level fails, which is final. J must contain I.
CheckReport is_uniformly_compatible(const PairSpec& pair, const Ideal& j, std::uint64_t e_max);

/// The candidates (asserted prime by the caller) that pass is_uniformly_compatible.
std::vector<Ideal> centers_among(const PairSpec& pair, std::span<const Ideal> candidates, std::uint64_t e_max);

/// F-purity of S/J for a compatible J: at the level e where the pair splits, checks that the
/// maps descend (a^N (I^[q] : I) J inside J^[q]) and that their images contain 1 modulo J.
/// ContractError for J = (1), J not compatible, or a pair not split within e_max.
CheckReport quotient_F_pure_check(const PairSpec& pair, const Ideal& j, std::uint64_t e_max);

enum class ClosureVerdict { InClosure, NotInClosure, Unknown };
std::string_view to_string(ClosureVerdict v);

struct ClosureReport {
  ClosureVerdict verdict = ClosureVerdict::Unknown;
  /// InClosure is only bounded: the containment held at every e in [e_min, e_max].
  std::uint64_t e_min = 1;
  std::uint64_t e_max = 1;
  /// First e in range where a^N z^q is not inside J^[q] + I.
  std::optional<std::uint64_t> failing_e;
  /// Level of a splitting of the pair (certifies NotInClosure when z is not in J).
  std::optional<std::uint64_t> split_e;
  std::vector<std::string> notes;
};

/// Membership of z in the a^t-sharp Frobenius closure of J, probed at e_min..e_max.
ClosureReport frobenius_closure_membership(const PairSpec& pair, const Ideal& j, const Polynomial& z,
                                           std::uint64_t e_min, std::uint64_t e_max);

}  // namespace fpair
