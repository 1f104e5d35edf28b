#include "fpair/testideal.hpp"

#include <random>

#include "fpair/criteria.hpp"
#include "fpair/frobenius.hpp"

namespace fpair {

std::string_view to_string(Exactness x) { return x == Exactness::Exact ? "exact" : "lower_bound"; }

TestIdealResult test_ideal_regular(const Ideal& a, const ExactRational& t, std::uint64_t e_cap) {
  if (a.is_zero()) throw ContractError("test ideal of the zero ideal");
  if (e_cap == 0) throw ContractError("e_cap must be at least 1");
  if (t <= ExactRational(0)) throw ContractError("t must be positive, got " + t.str());
  const std::uint64_t p = a.characteristic();
  const Ideal gens = a.canonical();
  const std::uint64_t r = gens.generators().size();
  TestIdealResult out{Ideal::unit(p, a.nvars()), 0, e_cap, Exactness::LowerBound, {}};
  std::vector<Ideal> uppers;
  for (std::uint64_t e = 1; e <= e_cap; ++e) {
    // Lower bound: the chain term. Upper bound: a^N lies in (a^s)^[p^d] once
    // N >= p^d s + r (p^d - 1), so the limit of the chain lies in I_e(a^s).
    Ideal lower = frobenius_root(power(gens, ceil_threshold_exponent(t, p, e, ThresholdVariant::Pe)), e).canonical();
    std::int64_t fl = t.floor_times(checked_pow(p, e));
    std::int64_t s = r == 1 ? fl : fl - static_cast<std::int64_t>(r);
    uppers.push_back(s <= 0 ? Ideal::unit(p, a.nvars())
                            : frobenius_root(power(gens, static_cast<std::uint64_t>(s)), e).canonical());
    out.tau = lower;
    out.stabilized_at_e = e;
    bool closed = lower.contains_one();
    for (const auto& u : uppers) closed = closed || lower.contains(u);
    if (closed) {
      out.exactness = Exactness::Exact;
      return out;
    }
  }
  out.notes.push_back("chain term and upper bound still differ at e = " + std::to_string(e_cap));
  return out;
}

namespace {

// Sum over e <= e_cap of I_e(a^N C_e J), plus J.
Ideal apply_maps(const PairSpec& pair, const Ideal& j, std::uint64_t e_from, std::uint64_t e_to) {
  std::vector<Polynomial> gens = j.generators();
  for (std::uint64_t e = e_from; e <= e_to; ++e) {
    Ideal carrier = fedder_carrier(pair.defining(), e);
    std::vector<Polynomial> as;
    if (pair.a_is_unit()) {
      as.push_back(Polynomial::constant(1, pair.p(), pair.nvars()));
    } else {
      as = pair.a_power(e).generators();
    }
    for (const auto& a : as) {
      for (const auto& g : carrier.generators()) {
        Polynomial ag = a * g;
        for (const auto& h : j.generators()) {
          for (auto& comp : root_components(ag * h, e)) gens.push_back(comp.monic());
        }
      }
    }
  }
  return Ideal(j.characteristic(), j.nvars(), std::move(gens)).canonical();
}

Ideal fixpoint(const PairSpec& pair, Ideal j, std::uint64_t e_cap, std::uint64_t& rounds) {
  rounds = 0;
  while (true) {
    Ideal next = apply_maps(pair, j, 1, e_cap);
    ++rounds;
    if (next.equals(j) || next.contains_one()) return next;
    j = std::move(next);
  }
}

}  // namespace

TestIdealResult test_ideal_quotient(const PairSpec& pair, const Polynomial& c, std::uint64_t e_cap) {
  if (e_cap == 0) throw ContractError("e_cap must be at least 1");
  const Ideal& i = pair.defining();
  if (i.contains(c)) throw ContractError("test element lies in I");
  Ideal start = (Ideal(pair.p(), pair.nvars(), {c}) + i).canonical();
  TestIdealResult r{start, 0, e_cap, Exactness::LowerBound, {}};
  std::uint64_t rounds = 0;
  r.tau = fixpoint(pair, start, e_cap, rounds);
  r.stabilized_at_e = rounds;
  if (r.tau.contains_one()) {
    r.exactness = Exactness::Exact;
    return r;
  }
  if (i.is_zero()) {
    TestIdealResult reg = test_ideal_regular(pair.a, pair.t, std::max<std::uint64_t>(e_cap, 4));
    if (reg.exactness == Exactness::Exact && reg.tau.equals(r.tau)) {
      r.exactness = Exactness::Exact;
      r.notes.push_back("agrees with the stabilized regular chain");
      return r;
    }
  }
  if (e_cap >= 2) {
    std::uint64_t rounds1 = 0;
    Ideal level_one = fixpoint(pair, start, 1, rounds1);
    if (apply_maps(pair, level_one, 2, 2).equals(level_one) && level_one.equals(r.tau)) {
      r.exactness = Exactness::Exact;
      r.notes.push_back("the e = 1 closure is stable under the e = 2 maps");
      return r;
    }
  }
  r.notes.push_back("compatibility verified only for e <= " + std::to_string(e_cap));
  return r;
}

Polynomial test_element_heuristic(const RingPresentation& ring) {
  const Ideal& i = ring.defining_ideal;
  if (i.is_zero()) return ring.one();
  auto found = nonzerodivisor_combinations(jacobian_minors(i), i);
  if (found.empty()) throw ContractError("no combination of Jacobian minors is a nonzerodivisor modulo I; supply a test element c");
  return found.front();
}

Polynomial pair_test_element(const PairSpec& pair) {
  Polynomial c = test_element_heuristic(pair.ring);
  if (pair.a_is_unit()) return c;
  auto found = nonzerodivisor_combinations(pair.a.generators(), pair.defining());
  if (found.empty()) throw ContractError("no combination of generators of a is a nonzerodivisor modulo I; supply a test element c");
  return c * found.front().pow(static_cast<std::uint64_t>(pair.t.ceil()));
}

RadicalSample is_radical_sample(const Ideal& j, std::span<const Polynomial> fs, std::span<const std::uint64_t> ks) {
  RadicalSample r;
  for (const auto& f : fs) {
    if (j.contains(f)) {
      r.samples += ks.size();
      continue;
    }
    for (std::uint64_t k : ks) {
      ++r.samples;
      if (j.contains(f.pow(k))) {
        r.radical = false;
        r.f = f;
        r.k = k;
        return r;
      }
    }
  }
  return r;
}

std::vector<Polynomial> radical_probes(const Ideal& j, std::size_t count, std::uint64_t seed) {
  const std::uint64_t p = j.characteristic();
  const std::size_t n = j.nvars();
  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < n; ++v) out.push_back(Polynomial::variable(v, p, n));
  if (!j.is_zero()) {
    auto roots = frobenius_root(j, 1).generators();
    for (std::size_t a = 0; a < roots.size(); ++a) {
      out.push_back(roots[a]);
      for (std::size_t b = a + 1; b < roots.size(); ++b) out.push_back(roots[a] + roots[b]);
    }
  }
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    std::vector<Term> terms;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      Monomial::Storage s(n, 0);
      std::uint64_t d = rng() % 4;
      for (std::uint64_t x = 0; x < d; ++x) s[rng() % n] += 1;
      terms.push_back({Monomial(s), 1 + rng() % (p - 1)});
    }
    Polynomial f = Polynomial::from_terms(p, n, std::move(terms));
    if (!f.is_zero()) out.push_back(f);
  }
  if (out.size() > count) out.erase(out.begin() + static_cast<std::ptrdiff_t>(count), out.end());
  return out;
}

}  // namespace fpair
