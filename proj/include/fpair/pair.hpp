#pragma once

#include <cstdint>
#include <vector>

#include "fpair/arith.hpp"
#include "fpair/ideal.hpp"

namespace fpair {

/// A pair (R, a^t): the ring R = S/I, an ideal a given by lifts to S, and t > 0.
struct PairSpec {
  /// Validates t > 0 and that a is not contained in I.
  PairSpec(RingPresentation ring, Ideal a, ExactRational t);

  std::uint64_t p() const noexcept { return ring.p; }
  std::size_t nvars() const noexcept { return ring.nvars(); }
  const Ideal& defining() const noexcept { return ring.defining_ideal; }
  /// ceil(t (p^e - 1)).
  std::uint64_t exponent(std::uint64_t e) const { return ceil_threshold_exponent(t, ring.p, e); }
  /// a^ceil(t (p^e - 1)), cached.
  const Ideal& a_power(std::uint64_t e) const;
  bool a_is_unit() const { return a.contains_one(); }
  PairSpec with_t(ExactRational t2) const { return PairSpec(ring, a, t2); }

  RingPresentation ring;
  Ideal a;
  ExactRational t;

 private:
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// One term of a map at level e: multiplication by g a followed by the trace, with
/// g in (I^[p^e] : I) and a in a^ceil(t (p^e - 1)).
struct SplittingWitness {
  Polynomial g;
  Polynomial a;
};

struct ComposedWitness {
  Polynomial g;
  Polynomial a;
  std::uint64_t level;
};

/// Composes the level-e map with the level-d map, phi_e after F^e_*(phi_d). The result lives
/// at level e + d with carrier g_e^(p^d) g_d and a-part a_e^(p^d) a_d. Both input memberships
/// are checked first and both output memberships after; a failure raises ContractError naming
/// the membership.
ComposedWitness splitting_compose(std::uint64_t e, std::uint64_t d, const SplittingWitness& at_e,
                                  const SplittingWitness& at_d, const PairSpec& pair);

}  // namespace fpair
