#include "fpair/frobenius.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

#include "fpair/pair.hpp"

namespace fpair {

Ideal bracket_power(const Ideal& j, std::uint64_t e) {
  if (e == 0) throw ContractError("bracket power needs e >= 1");
  checked_pow(j.characteristic(), e);
  std::vector<Polynomial> gens;
  for (const auto& g : j.generators()) gens.push_back(g.frobenius_power(e));
  return Ideal(j.characteristic(), j.nvars(), std::move(gens));
}

std::vector<Polynomial> root_components(const Polynomial& f, std::uint64_t e) {
  const std::uint64_t p = f.characteristic();
  const std::uint64_t q = checked_pow(p, e);
  const std::size_t n = f.nvars();
  std::map<std::vector<std::uint64_t>, std::vector<Term>> parts;
  for (const auto& t : f.terms()) {
    std::vector<std::uint64_t> mu(n);
    Monomial::Storage root(n);
    for (std::size_t i = 0; i < n; ++i) {
      mu[i] = t.mono[i] % q;
      root[i] = t.mono[i] / q;
    }
    // c^(1/q) = c for c in F_p.
    parts[mu].push_back({Monomial(std::move(root)), t.coef});
  }
  std::vector<Polynomial> out;
  for (auto& [mu, terms] : parts) out.push_back(Polynomial::from_terms(p, n, std::move(terms)));
  return out;
}

Ideal frobenius_root(const Ideal& j, std::uint64_t e) {
  if (e == 0) throw ContractError("Frobenius root needs e >= 1");
  std::vector<Polynomial> gens;
  for (const auto& f : j.generators()) {
    for (auto& g : root_components(f, e)) gens.push_back(g.monic());
  }
  return Ideal(j.characteristic(), j.nvars(), std::move(gens));
}

namespace {

struct CarrierKey {
  std::vector<Polynomial> basis;
  std::uint64_t e;
  bool operator==(const CarrierKey&) const = default;
};

struct CarrierKeyHash {
  std::size_t operator()(const CarrierKey& k) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(k.e);
    for (const auto& g : k.basis) h = h * 1000003 ^ g.hash();
    return h;
  }
};

std::mutex carrier_mutex;
std::unordered_map<CarrierKey, Ideal, CarrierKeyHash> carrier_memo;

}  // namespace

Ideal fedder_carrier(const Ideal& i, std::uint64_t e) {
  if (i.is_zero()) return Ideal::unit(i.characteristic(), i.nvars());
  CarrierKey key{i.groebner(), e};
  {
    std::lock_guard lock(carrier_mutex);
    auto it = carrier_memo.find(key);
    if (it != carrier_memo.end()) return it->second;
  }
  Ideal c = [&] {
    if (!i.is_principal()) return colon(bracket_power(i, e), i).canonical();
    // (f^q : f) = (f^(q-1)).
    const Polynomial& f = i.groebner().front();
    return Ideal(i.characteristic(), i.nvars(), {f.pow(checked_pow(i.characteristic(), e) - 1)});
  }();
  std::lock_guard lock(carrier_mutex);
  return carrier_memo.emplace(std::move(key), std::move(c)).first->second;
}

struct PairSpec::Cache {
  std::mutex mutex;
  std::map<std::uint64_t, Ideal> powers;
};

PairSpec::PairSpec(RingPresentation ring_, Ideal a_, ExactRational t_)
    : ring(std::move(ring_)), a(std::move(a_)), t(t_), cache_(std::make_shared<Cache>()) {
  if (t <= ExactRational(0)) throw ContractError("t must be positive, got " + t.str());
  if (a.characteristic() != ring.p || a.nvars() != ring.nvars()) {
    throw StructuralError("ideal a does not live in the ambient ring");
  }
  if (ring.defining_ideal.contains(a)) throw ContractError("a is contained in I, so a meets no element of R°");
}

const Ideal& PairSpec::a_power(std::uint64_t e) const {
  std::uint64_t n = exponent(e);
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->powers.find(n);
  if (it == cache_->powers.end()) it = cache_->powers.emplace(n, power(a, n)).first;
  return it->second;
}

namespace {

bool in_carrier(const Polynomial& g, const Ideal& i, std::uint64_t e) {
  if (i.is_zero()) return true;
  Ideal target = bracket_power(i, e);
  for (const auto& h : i.generators()) {
    if (!target.contains(g * h)) return false;
  }
  return true;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractError("splitting_compose: " + what + " fails");
}

}  // namespace

ComposedWitness splitting_compose(std::uint64_t e, std::uint64_t d, const SplittingWitness& at_e,
                                  const SplittingWitness& at_d, const PairSpec& pair) {
  if (e == 0 || d == 0) throw ContractError("splitting_compose needs e, d >= 1");
  const Ideal& i = pair.defining();
  const std::uint64_t p = pair.p();
  auto in_a_power = [&](const Polynomial& x, std::uint64_t level) {
    return pair.a_is_unit() || power(pair.a, ceil_threshold_exponent(pair.t, p, level)).contains(x);
  };
  require(in_carrier(at_e.g, i, e), "g_e in (I^[p^e] : I)");
  require(in_carrier(at_d.g, i, d), "g_d in (I^[p^d] : I)");
  require(in_a_power(at_e.a, e), "a_e in a^ceil(t(p^e-1))");
  require(in_a_power(at_d.a, d), "a_d in a^ceil(t(p^d-1))");

  ComposedWitness out{at_e.g.frobenius_power(d) * at_d.g, at_e.a.frobenius_power(d) * at_d.a,
                      checked_add(e, d)};
  require(in_carrier(out.g, i, out.level), "composed carrier in (I^[p^(e+d)] : I)");
  require(in_a_power(out.a, out.level), "composed a-part in a^ceil(t(p^(e+d)-1))");
  return out;
}

}  // namespace fpair
