#include "fpair/arith.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace fpair {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw OverflowError(std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
    }
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (n) {
    if (n & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    n >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ContractError("inverse of zero in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

PrimeFieldElement::PrimeFieldElement(std::uint64_t value, std::uint64_t p) : value_(0), p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 32)) {
    throw ContractError("characteristic must be a prime below 2^32, got " + std::to_string(p));
  }
  value_ = value % p;
}

PrimeFieldElement PrimeFieldElement::from_signed(std::int64_t value, std::uint64_t p) {
  auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = value % sp;
  if (r < 0) r += sp;
  return {static_cast<std::uint64_t>(r), p};
}

void PrimeFieldElement::check_same(const PrimeFieldElement& o) const {
  if (p_ != o.p_) throw StructuralError("field elements of different characteristic");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  check_same(o);
  return {mod_add(value_, o.value_, p_), p_};
}
PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  check_same(o);
  return {mod_sub(value_, o.value_, p_), p_};
}
PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  check_same(o);
  return {mod_mul(value_, o.value_, p_), p_};
}
PrimeFieldElement PrimeFieldElement::operator-() const { return {mod_sub(0, value_, p_), p_}; }
PrimeFieldElement PrimeFieldElement::inverse() const { return {mod_inv(value_, p_), p_}; }
PrimeFieldElement PrimeFieldElement::pow(std::uint64_t n) const { return {mod_pow(value_, n, p_), p_}; }

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

ExactRational ExactRational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw ContractError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw OverflowError("rational arithmetic overflows 64 bits");
  ExactRational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

ExactRational::ExactRational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

ExactRational ExactRational::parse(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ParseError("malformed rational '" + text + "'", 1, 1);
    }
    return v;
  };
  std::string_view sv(text);
  if (slash == std::string::npos) return {parse_int(sv), 1};
  return {parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1))};
}

ExactRational ExactRational::operator+(const ExactRational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}
ExactRational ExactRational::operator-(const ExactRational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}
ExactRational ExactRational::operator*(const ExactRational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}
ExactRational ExactRational::operator/(const ExactRational& o) const {
  if (o.num_ == 0) throw ContractError("division by zero rational");
  return from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering ExactRational::operator<=>(const ExactRational& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t ExactRational::ceil_times(std::uint64_t k) const {
  __int128 n = static_cast<__int128>(num_) * static_cast<__int128>(k);
  __int128 q = n / den_;
  if (n % den_ != 0 && n > 0) q += 1;
  if (!fits64(q)) throw OverflowError("ceiling overflows 64 bits");
  return static_cast<std::int64_t>(q);
}

std::int64_t ExactRational::floor_times(std::uint64_t k) const {
  __int128 n = static_cast<__int128>(num_) * static_cast<__int128>(k);
  __int128 q = n / den_;
  if (n % den_ != 0 && n < 0) q -= 1;
  if (!fits64(q)) throw OverflowError("floor overflows 64 bits");
  return static_cast<std::int64_t>(q);
}

std::int64_t ExactRational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) q -= 1;
  return q;
}

std::string ExactRational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

std::uint64_t ceil_threshold_exponent(const ExactRational& t, std::uint64_t p, std::uint64_t e,
                                      ThresholdVariant variant) {
  if (t <= ExactRational(0)) throw ContractError("threshold exponent requires t > 0");
  std::uint64_t q = checked_pow(p, e);
  std::uint64_t k = variant == ThresholdVariant::PeMinusOne ? q - 1 : q;
  return static_cast<std::uint64_t>(t.ceil_times(k));
}

}  // namespace fpair
