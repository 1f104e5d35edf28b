#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpair/polynomial.hpp"

namespace fpair {

/// Bounds on Buchberger's algorithm. Exceeding either raises ResourceLimitError.
struct GbLimits {
  std::size_t max_pairs = 500000;
  std::size_t max_basis = 20000;
};

/// Process-wide limits used by Ideal's cached bases; set once at startup (CLI flags).
GbLimits default_gb_limits();
void set_default_gb_limits(const GbLimits& limits);

/// Reduced Groebner basis (monic, sorted by decreasing leading monomial under `order`).
/// The zero ideal yields {0}. Buchberger with Gebauer-Moeller pair elimination.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, MonomialOrder order,
                                       const GbLimits& limits = default_gb_limits());

/// Full normal form of f modulo a Groebner basis computed under `order`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, MonomialOrder order);

/// f / g when g divides f exactly, otherwise nullopt.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

/// Ideal of F_p[x_1..x_n] given by generators. Value type: operations return new ideals and
/// the reduced Groebner basis is computed lazily, cached per monomial order and shared
/// between copies (thread-safe).
class Ideal {
 public:
  /// The zero ideal, represented by the single generator 0.
  Ideal(std::uint64_t p, std::size_t nvars);
  /// Zero generators are dropped; an empty list gives the zero ideal.
  Ideal(std::uint64_t p, std::size_t nvars, std::vector<Polynomial> generators);
  explicit Ideal(std::vector<Polynomial> generators);

  static Ideal unit(std::uint64_t p, std::size_t nvars);

  std::uint64_t characteristic() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept;
  bool is_monomial() const noexcept;
  bool is_principal() const;

  const std::vector<Polynomial>& groebner(MonomialOrder order = MonomialOrder::DegRevLex) const;
  Polynomial reduce(const Polynomial& f) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool contains_one() const;
  /// Ideal equality via reduced Groebner bases.
  bool equals(const Ideal& other) const;

  /// Generators of the reduced basis as a fresh ideal (canonical generating set).
  Ideal canonical() const;

  std::string str(std::span<const std::string> names) const;

  void check_same_ring(const Ideal& o) const;
  void check_same_ring(const Polynomial& f) const;

 private:
  struct Cache;

  std::uint64_t p_;
  std::size_t nvars_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal operator*(const Polynomial& f, const Ideal& a);
/// a^n with a^0 = (1).
Ideal power(const Ideal& a, std::uint64_t n);
Ideal intersect(const Ideal& a, const Ideal& b);
/// (J : f) = {g : g f in J}.
Ideal colon(const Ideal& j, const Polynomial& f);
/// (J : K) = {g : g K subset J}.
Ideal colon(const Ideal& j, const Ideal& k);

/// R = S/I with S = F_p[variables]. The defining ideal must be proper.
struct RingPresentation {
  RingPresentation(std::uint64_t p, std::vector<std::string> variables);
  RingPresentation(std::uint64_t p, std::vector<std::string> variables, std::vector<Polynomial> defining);
  RingPresentation(std::uint64_t p, std::vector<std::string> variables, Ideal defining);

  std::size_t nvars() const noexcept { return variables.size(); }
  bool is_polynomial_ring() const { return defining_ideal.is_zero(); }
  Polynomial zero() const { return Polynomial(p, nvars()); }
  Polynomial one() const { return Polynomial::constant(1, p, nvars()); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(i, p, nvars()); }
  Ideal ideal(std::vector<Polynomial> gens) const { return Ideal(p, nvars(), std::move(gens)); }
  Ideal unit_ideal() const { return Ideal::unit(p, nvars()); }

  std::uint64_t p;
  std::vector<std::string> variables;
  Ideal defining_ideal;
};

}  // namespace fpair
