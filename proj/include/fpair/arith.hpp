#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <numeric>
#include <string>

#include "fpair/errors.hpp"

namespace fpair {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent addition overflows 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent product overflows 64 bits");
  return r;
}

/// base^exp, raising OverflowError instead of wrapping.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

bool is_prime(std::uint64_t n);

/// Residue class modulo a prime p < 2^32, always stored fully reduced.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint64_t value, std::uint64_t p);
  static PrimeFieldElement from_signed(std::int64_t value, std::uint64_t p);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;
  PrimeFieldElement pow(std::uint64_t n) const;

  bool operator==(const PrimeFieldElement&) const = default;

 private:
  void check_same(const PrimeFieldElement& o) const;

  std::uint64_t value_;
  std::uint64_t p_;
};

// Raw helpers used in the polynomial kernels (p < 2^32 so products fit).
inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t n, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

/// Exact rational in lowest terms with positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t num, std::int64_t den = 1);

  /// Parses "n" or "n/d".
  static ExactRational parse(const std::string& text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  ExactRational operator+(const ExactRational& o) const;
  ExactRational operator-(const ExactRational& o) const;
  ExactRational operator*(const ExactRational& o) const;
  ExactRational operator/(const ExactRational& o) const;

  bool operator==(const ExactRational&) const = default;
  std::strong_ordering operator<=>(const ExactRational& o) const;

  /// ceil(this * k) computed exactly.
  std::int64_t ceil_times(std::uint64_t k) const;
  std::int64_t ceil() const { return ceil_times(1); }
  /// floor(this * k) computed exactly.
  std::int64_t floor_times(std::uint64_t k) const;
  std::int64_t floor() const;

  std::string str() const;

 private:
  static ExactRational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

enum class ThresholdVariant { PeMinusOne, Pe };

/// ceil(t (p^e - 1)) or ceil(t p^e); the first is the pair exponent, the second the
/// exponent of the ascending chain computing test ideals of regular rings.
std::uint64_t ceil_threshold_exponent(const ExactRational& t, std::uint64_t p, std::uint64_t e,
                                      ThresholdVariant variant = ThresholdVariant::PeMinusOne);

}  // namespace fpair
