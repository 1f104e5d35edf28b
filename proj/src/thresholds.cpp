#include "fpair/thresholds.hpp"

#include <algorithm>
#include <map>

#include "fpair/criteria.hpp"
#include "fpair/frobenius.hpp"

namespace fpair {

bool NuSequence::supermultiplicative(std::uint64_t p) const {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const auto& lo = entries[i - 1];
    const auto& hi = entries[i];
    if (hi.e != lo.e + 1) continue;
    if (hi.nu < checked_mul(p, lo.nu)) return false;
  }
  return true;
}

namespace {

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, MonomialOrder::DegRevLex) < 0;
  }
};

// F_p-basis of the span of polynomials already reduced modulo (x_1^q, ..., x_n^q). The ideal
// they generate is unchanged, and the basis never exceeds q^n elements.
class SpanBasis {
 public:
  void add(Polynomial f) {
    while (!f.is_zero()) {
      auto it = pivots_.find(f.leading().mono);
      if (it == pivots_.end()) {
        Polynomial m = f.monic();
        pivots_.emplace(m.leading().mono, std::move(m));
        return;
      }
      f = f - it->second.scaled(f.leading().coef);
    }
  }
  std::vector<Polynomial> elements() const {
    std::vector<Polynomial> out;
    out.reserve(pivots_.size());
    for (const auto& [m, f] : pivots_) out.push_back(f);
    return out;
  }
  bool empty() const { return pivots_.empty(); }

 private:
  std::map<Monomial, Polynomial, MonoLess> pivots_;
};

// Translated generators (point moved to the origin) reduced modulo m^[q].
std::vector<Polynomial> local_gens(const Ideal& j, std::span<const std::uint64_t> point, std::uint64_t q) {
  std::vector<Polynomial> out;
  for (const auto& g : j.generators()) {
    Polynomial t = g.translated(point).truncated_below(q);
    if (!t.is_zero()) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Polynomial> times_truncated(std::span<const Polynomial> cur, std::span<const Polynomial> gens,
                                        std::uint64_t q) {
  SpanBasis b;
  for (const auto& f : cur) {
    for (const auto& g : gens) b.add((f * g).truncated_below(q));
  }
  return b.elements();
}

bool escapes(std::span<const Polynomial> a_part, std::span<const Polynomial> carrier, std::uint64_t q) {
  for (const auto& f : a_part) {
    for (const auto& g : carrier) {
      if (!(f * g).truncated_below(q).is_zero()) return true;
    }
  }
  return false;
}

bool vanishes_at_origin(const Polynomial& f) { return f.is_zero() || !f.terms().back().mono.is_one(); }

std::vector<std::uint64_t> checked_point(const RingPresentation& ring, const Ideal& a, const Ideal& m) {
  a.check_same_ring(m);
  ring.defining_ideal.check_same_ring(m);
  std::vector<std::uint64_t> point = rational_point(m);
  for (const auto& g : ring.defining_ideal.generators()) {
    if (!vanishes_at_origin(g.translated(point))) throw ContractError("maximal ideal does not contain I");
  }
  for (const auto& g : a.generators()) {
    if (!vanishes_at_origin(g.translated(point))) throw ContractError("a is not contained in the maximal ideal");
  }
  return point;
}

std::uint64_t nu_at(const RingPresentation& ring, const Ideal& a, std::span<const std::uint64_t> point,
                    std::uint64_t e) {
  const std::uint64_t q = checked_pow(ring.p, e);
  const auto carrier = local_gens(fedder_carrier(ring.defining_ideal, e), point, q);
  const auto gens = local_gens(a, point, q);
  std::vector<Polynomial> cur{Polynomial::constant(1, ring.p, ring.nvars())};
  if (!escapes(cur, carrier, q)) return 0;
  // a^N m^[q] membership is monotone in N, so walk N upward until the product vanishes.
  std::uint64_t n = 0;
  while (true) {
    cur = times_truncated(cur, gens, q);
    if (!escapes(cur, carrier, q)) return n;
    ++n;
  }
}

}  // namespace

std::uint64_t nu_value(const RingPresentation& ring, const Ideal& a, const Ideal& m, std::uint64_t e) {
  if (e == 0) throw ContractError("e must be at least 1");
  return nu_at(ring, a, checked_point(ring, a, m), e);
}

NuSequence nu_sequence(const RingPresentation& ring, const Ideal& a, const Ideal& m, std::uint64_t e_max) {
  if (e_max == 0) throw ContractError("e_max must be at least 1");
  NuSequence s;
  s.point = checked_point(ring, a, m);
  for (std::uint64_t e = 1; e <= e_max; ++e) {
    s.entries.push_back({e, checked_pow(ring.p, e), nu_at(ring, a, s.point, e)});
  }
  return s;
}

FptInterval fpt_interval(const RingPresentation& ring, const Ideal& a, const Ideal& m, std::uint64_t e_max) {
  FptInterval out{ExactRational(0), ExactRational(0), nu_sequence(ring, a, m, e_max), 0};
  out.generators = std::min(a.generators().size(), a.canonical().generators().size());
  const auto r = static_cast<std::int64_t>(out.generators);
  bool first = true;
  for (const auto& en : out.nus.entries) {
    const auto q = static_cast<std::int64_t>(en.q);
    const auto nu = static_cast<std::int64_t>(en.nu);
    ExactRational lo(nu, q), hi(nu + r, q);
    if (first || lo > out.lower) out.lower = lo;
    if (first || hi < out.upper) out.upper = hi;
    first = false;
  }
  return out;
}

FptInterval fpt_interval_global(const RingPresentation& ring, const Ideal& a, std::span<const Ideal> ms,
                                std::uint64_t e_max) {
  if (ms.empty()) throw ContractError("no maximal ideals given");
  FptInterval best = fpt_interval(ring, a, ms[0], e_max);
  for (std::size_t i = 1; i < ms.size(); ++i) {
    FptInterval cur = fpt_interval(ring, a, ms[i], e_max);
    if (cur.lower > best.lower) best.lower = cur.lower;
    if (cur.upper > best.upper) {
      best.upper = cur.upper;
      best.nus = cur.nus;
    }
  }
  return best;
}

bool is_sharp_at(const PairSpec& pair, const Ideal& m, std::uint64_t e) {
  if (e == 0) throw ContractError("e must be at least 1");
  std::vector<std::uint64_t> point = checked_point(pair.ring, pair.a, m);
  const std::uint64_t q = checked_pow(pair.p(), e);
  const auto carrier = local_gens(fedder_carrier(pair.defining(), e), point, q);
  const auto gens = local_gens(pair.a, point, q);
  std::vector<Polynomial> cur{Polynomial::constant(1, pair.p(), pair.nvars())};
  const std::uint64_t n = pair.exponent(e);
  for (std::uint64_t k = 0; k < n && !cur.empty(); ++k) cur = times_truncated(cur, gens, q);
  return escapes(cur, carrier, q);
}

}  // namespace fpair
