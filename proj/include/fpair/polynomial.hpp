#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fpair/arith.hpp"

namespace fpair {

/// Exponent vector x^alpha, one entry per ambient variable. Total degree is cached.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::uint64_t, 4>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(Storage exps);
  Monomial(std::initializer_list<std::uint64_t> exps);

  static Monomial variable(std::size_t index, std::size_t nvars);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint64_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  std::span<const std::uint64_t> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

  Monomial operator*(const Monomial& o) const;
  /// Caller guarantees divides(o, *this).
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;  // this | o
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const noexcept;
  /// x^(k alpha)
  Monomial scaled(std::uint64_t k) const;
  /// Appends `extra` zero exponents (embedding into a ring with more variables).
  Monomial extended(std::size_t extra) const;
  Monomial truncated(std::size_t nvars) const;

  bool operator==(const Monomial& o) const noexcept { return exps_ == o.exps_; }
  std::size_t hash() const noexcept;

 private:
  Storage exps_;
  std::uint64_t degree_ = 0;
};

enum class MonomialOrder {
  DegRevLex,
  Lex,
  /// Elimination order for the last variable: its exponent decides first, ties by degrevlex
  /// on the remaining variables.
  EliminateLast,
};

/// Three-way comparison of monomials under `order` (-1, 0, 1).
int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial mono;
  std::uint64_t coef;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial over F_p in a fixed number of variables. Terms are kept sorted
/// descending in degrevlex with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial(std::uint64_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

  static Polynomial constant(std::int64_t c, std::uint64_t p, std::size_t nvars);
  static Polynomial variable(std::size_t index, std::uint64_t p, std::size_t nvars);
  static Polynomial monomial(const Monomial& m, std::uint64_t coef, std::uint64_t p);
  /// Normalizes arbitrary terms: combines duplicates, drops zeros, sorts.
  static Polynomial from_terms(std::uint64_t p, std::size_t nvars, std::vector<Term> terms);

  std::uint64_t characteristic() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Degrevlex leading term; undefined on zero.
  const Term& leading() const { return terms_.front(); }
  std::uint64_t total_degree() const noexcept;
  PrimeFieldElement coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(std::uint64_t c) const;
  Polynomial times_monomial(const Monomial& m, std::uint64_t c = 1) const;
  Polynomial pow(std::uint64_t n) const;
  /// f^(p^e): exponents scale by p^e and F_p coefficients are Frobenius-fixed.
  Polynomial frobenius_power(std::uint64_t e) const;
  Polynomial monic() const;
  Polynomial derivative(std::size_t var) const;
  /// f(x_1 + c_1, ..., x_n + c_n).
  Polynomial translated(std::span<const std::uint64_t> point) const;
  /// Drops every term divisible by x_i^q for some i (reduction modulo (x_1^q, ..., x_n^q)).
  Polynomial truncated_below(std::uint64_t q) const;
  Polynomial extended(std::size_t extra) const;
  Polynomial truncated(std::size_t nvars) const;

  bool operator==(const Polynomial& o) const noexcept {
    return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  std::size_t hash() const noexcept;

  std::string str(std::span<const std::string> names) const;

  void check_same_ring(const Polynomial& o) const;

 private:
  std::uint64_t p_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

struct PolynomialHash {
  std::size_t operator()(const Polynomial& f) const noexcept { return f.hash(); }
};

/// Default variable names x0, x1, ... for printing without a presentation.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace fpair
