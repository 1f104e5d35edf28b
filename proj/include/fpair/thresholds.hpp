#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fpair/arith.hpp"
#include "fpair/pair.hpp"

namespace fpair {

struct NuEntry {
  std::uint64_t e;
  std::uint64_t q;
  std::uint64_t nu;
};

struct NuSequence {
  std::vector<NuEntry> entries;
  /// Point of the maximal ideal the values were computed at.
  std::vector<std::uint64_t> point;

  /// nu(p^(e+1)) >= p nu(p^e) for consecutive recorded entries.
  bool supermultiplicative(std::uint64_t p) const;
};

/// Largest N with a^N (I^[q] : I) not inside m^[q], q = p^e; 0 if there is none.
/// Requires I + a inside m, m rational maximal.
std::uint64_t nu_value(const RingPresentation& ring, const Ideal& a, const Ideal& m, std::uint64_t e);

NuSequence nu_sequence(const RingPresentation& ring, const Ideal& a, const Ideal& m, std::uint64_t e_max);

struct FptInterval {
  ExactRational lower;
  ExactRational upper;
  NuSequence nus;
  /// Number of generators r used in the upper bound (nu + r) / q.
  std::size_t generators;
};

/// [max nu(q)/q, min (nu(q) + r)/q] over e <= e_max, r the number of generators of a.
/// For principal a this is (nu + 1)/q.
FptInterval fpt_interval(const RingPresentation& ring, const Ideal& a, const Ideal& m, std::uint64_t e_max);

/// Largest bracket over several maximal ideals (both endpoints maximized).
FptInterval fpt_interval_global(const RingPresentation& ring, const Ideal& a, std::span<const Ideal> ms,
                                std::uint64_t e_max);

/// a^ceil(t(p^e - 1)) (I^[q] : I) not inside m^[q].
bool is_sharp_at(const PairSpec& pair, const Ideal& m, std::uint64_t e);

}  // namespace fpair
