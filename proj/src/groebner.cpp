#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "fpair/ideal.hpp"

namespace fpair {

namespace {

std::atomic<std::size_t> g_max_pairs{GbLimits{}.max_pairs};
std::atomic<std::size_t> g_max_basis{GbLimits{}.max_basis};

// Working polynomial: terms sorted descending under the active order.
using Terms = std::vector<Term>;

struct Engine {
  std::uint64_t p;
  std::size_t nvars;
  MonomialOrder order;

  int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b, order); }

  Terms sorted(const Polynomial& f) const {
    Terms t = f.terms();
    if (order != MonomialOrder::DegRevLex) {
      std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return cmp(a.mono, b.mono) > 0; });
    }
    return t;
  }

  Polynomial to_poly(Terms t) const { return Polynomial::from_terms(p, nvars, std::move(t)); }

  void make_monic(Terms& f) const {
    if (f.empty() || f.front().coef == 1) return;
    std::uint64_t inv = mod_inv(f.front().coef, p);
    for (auto& t : f) t.coef = mod_mul(t.coef, inv, p);
  }

  // f[from..] - c * m * g, merged under the active order.
  Terms sub_mul(const Terms& f, std::size_t from, std::uint64_t c, const Monomial& m, const Terms& g) const {
    Terms out;
    out.reserve(f.size() - from + g.size());
    std::size_t i = from, j = 0;
    while (i < f.size() && j < g.size()) {
      Monomial gm = g[j].mono * m;
      int s = cmp(f[i].mono, gm);
      if (s > 0) {
        out.push_back(f[i++]);
      } else if (s < 0) {
        out.push_back({std::move(gm), mod_sub(0, mod_mul(c, g[j].coef, p), p)});
        ++j;
      } else {
        std::uint64_t v = mod_sub(f[i].coef, mod_mul(c, g[j].coef, p), p);
        if (v != 0) out.push_back({f[i].mono, v});
        ++i;
        ++j;
      }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].mono * m, mod_sub(0, mod_mul(c, g[j].coef, p), p)});
    return out;
  }

  // Full reduction by monic polynomials `basis` (only indices in `use`).
  Terms reduce(Terms f, const std::vector<Terms>& basis, const std::vector<std::size_t>& use) const {
    Terms rem;
    std::size_t head = 0;
    while (head < f.size()) {
      const Term& lt = f[head];
      const Terms* divisor = nullptr;
      for (std::size_t idx : use) {
        const Terms& g = basis[idx];
        if (!g.empty() && g.front().mono.divides(lt.mono)) {
          divisor = &g;
          break;
        }
      }
      if (divisor == nullptr) {
        rem.push_back(lt);
        ++head;
        continue;
      }
      Monomial m = lt.mono / divisor->front().mono;
      f = sub_mul(f, head, lt.coef, m, *divisor);
      head = 0;
    }
    return rem;
  }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const Engine& eng, const GbLimits& limits) : eng_(eng), limits_(limits) {}

  std::vector<Polynomial> run(std::span<const Polynomial> generators) {
    for (const auto& g : generators) {
      Terms t = eng_.reduce(eng_.sorted(g), store_, active_);
      if (t.empty()) continue;
      eng_.make_monic(t);
      add(std::move(t));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > limits_.max_pairs) {
        throw ResourceLimitError("Groebner basis exceeded " + std::to_string(limits_.max_pairs) + " S-pairs");
      }
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = eng_.cmp(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::make_pair(pairs_[k].i, pairs_[k].j) < std::make_pair(pairs_[best].i, pairs_[best].j))) {
          best = k;
        }
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Terms s = spoly(pr);
      s = eng_.reduce(std::move(s), store_, active_);
      if (s.empty()) continue;
      eng_.make_monic(s);
      add(std::move(s));
    }
    return reduced();
  }

 private:
  Terms spoly(const Pair& pr) const {
    const Terms& f = store_[pr.i];
    const Terms& g = store_[pr.j];
    Monomial mf = pr.lcm / f.front().mono;
    Monomial mg = pr.lcm / g.front().mono;
    Terms fm;
    fm.reserve(f.size());
    for (const auto& t : f) fm.push_back({t.mono * mf, t.coef});
    // f and g are monic; the leading terms cancel.
    return eng_.sub_mul(fm, 0, 1, mg, g);
  }

  const Monomial& lm(std::size_t k) const { return store_[k].front().mono; }

  void add(Terms h_terms) {
    if (active_.size() + 1 > limits_.max_basis) {
      throw ResourceLimitError("Groebner basis exceeded " + std::to_string(limits_.max_basis) + " elements");
    }
    store_.push_back(std::move(h_terms));
    std::size_t h = store_.size() - 1;
    const Monomial& lh = lm(h);

    std::vector<Pair> c;
    c.reserve(active_.size());
    for (std::size_t g : active_) c.push_back({g, h, lh.lcm(lm(g))});
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = lh.coprime(lm(c[k].i));
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < c.size() && keep; ++r) {
          if (c[r].lcm.divides(c[k].lcm)) keep = false;
        }
        for (const auto& q : d) {
          if (!keep) break;
          if (q.lcm.divides(c[k].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + d.size());
    for (auto& q : pairs_) {
      bool drop = lh.divides(q.lcm) && lh.lcm(lm(q.i)) != q.lcm && lh.lcm(lm(q.j)) != q.lcm;
      if (!drop) next.push_back(std::move(q));
    }
    for (auto& q : d) {
      if (!lh.coprime(lm(q.i))) next.push_back(std::move(q));
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> kept;
    kept.reserve(active_.size() + 1);
    for (std::size_t g : active_) {
      if (!lh.divides(lm(g))) kept.push_back(g);
    }
    kept.push_back(h);
    active_ = std::move(kept);
  }

  std::vector<Polynomial> reduced() const {
    std::vector<Terms> basis;
    for (std::size_t g : active_) basis.push_back(store_[g]);
    std::sort(basis.begin(), basis.end(),
              [&](const Terms& a, const Terms& b) { return eng_.cmp(a.front().mono, b.front().mono) > 0; });
    std::vector<Terms> out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<std::size_t> others;
      for (std::size_t r = 0; r < basis.size(); ++r) {
        if (r != k) others.push_back(r);
      }
      Terms tail(basis[k].begin() + 1, basis[k].end());
      Terms rem = eng_.reduce(std::move(tail), basis, others);
      out[k].push_back(basis[k].front());
      out[k].insert(out[k].end(), rem.begin(), rem.end());
    }
    std::vector<Polynomial> polys;
    polys.reserve(out.size());
    for (auto& t : out) polys.push_back(eng_.to_poly(std::move(t)));
    if (polys.empty()) polys.emplace_back(eng_.p, eng_.nvars);
    return polys;
  }

  const Engine& eng_;
  GbLimits limits_;
  std::vector<Terms> store_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

// Minimal monic monomial generators, sorted by decreasing monomial.
std::vector<Polynomial> monomial_basis(std::span<const Polynomial> generators, MonomialOrder order,
                                       std::uint64_t p, std::size_t nvars) {
  std::vector<Monomial> monos;
  for (const auto& g : generators) {
    if (!g.is_zero()) monos.push_back(g.leading().mono);
  }
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, MonomialOrder::DegRevLex) < 0;
  });
  std::vector<Monomial> minimal;
  for (const auto& m : monos) {
    bool redundant = false;
    for (const auto& k : minimal) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Monomial& a, const Monomial& b) { return compare(a, b, order) > 0; });
  std::vector<Polynomial> out;
  for (const auto& m : minimal) out.push_back(Polynomial::monomial(m, 1, p));
  if (out.empty()) out.emplace_back(p, nvars);
  return out;
}

}  // namespace

GbLimits default_gb_limits() { return {g_max_pairs.load(), g_max_basis.load()}; }

void set_default_gb_limits(const GbLimits& limits) {
  g_max_pairs.store(limits.max_pairs);
  g_max_basis.store(limits.max_basis);
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, MonomialOrder order,
                                       const GbLimits& limits) {
  if (generators.empty()) throw ContractError("groebner_basis needs at least one generator");
  std::uint64_t p = generators.front().characteristic();
  std::size_t nvars = generators.front().nvars();
  for (const auto& g : generators) generators.front().check_same_ring(g);
  bool monomial = std::all_of(generators.begin(), generators.end(),
                              [](const Polynomial& g) { return g.size() <= 1; });
  if (monomial) return monomial_basis(generators, order, p, nvars);
  Engine eng{p, nvars, order};
  return Buchberger(eng, limits).run(generators);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, MonomialOrder order) {
  Engine eng{f.characteristic(), f.nvars(), order};
  std::vector<Terms> b;
  std::vector<std::size_t> use;
  for (const auto& g : basis) {
    f.check_same_ring(g);
    if (g.is_zero()) continue;
    Terms t = eng.sorted(g);
    eng.make_monic(t);
    use.push_back(b.size());
    b.push_back(std::move(t));
  }
  return eng.to_poly(eng.reduce(eng.sorted(f), b, use));
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  f.check_same_ring(g);
  if (g.is_zero()) throw ContractError("division by the zero polynomial");
  std::uint64_t p = f.characteristic();
  const Term& lg = g.leading();
  std::uint64_t inv = mod_inv(lg.coef, p);
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    if (!lg.mono.divides(lt.mono)) return std::nullopt;
    Monomial m = lt.mono / lg.mono;
    std::uint64_t c = mod_mul(lt.coef, inv, p);
    quotient.push_back({m, c});
    rest = rest - g.times_monomial(m, c);
  }
  return Polynomial::from_terms(p, f.nvars(), std::move(quotient));
}

struct Ideal::Cache {
  std::mutex mutex;
  std::map<MonomialOrder, std::vector<Polynomial>> bases;
};

Ideal::Ideal(std::uint64_t p, std::size_t nvars)
    : p_(p), nvars_(nvars), gens_{Polynomial(p, nvars)}, cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(std::uint64_t p, std::size_t nvars, std::vector<Polynomial> generators)
    : p_(p), nvars_(nvars), cache_(std::make_shared<Cache>()) {
  std::unordered_set<Polynomial, PolynomialHash> seen;
  for (auto& g : generators) {
    if (g.characteristic() != p || g.nvars() != nvars) {
      throw StructuralError("generator does not live in the ideal's ambient ring");
    }
    if (g.is_zero() || !seen.insert(g).second) continue;
    gens_.push_back(std::move(g));
  }
  if (gens_.empty()) gens_.emplace_back(p, nvars);
}

Ideal::Ideal(std::vector<Polynomial> generators)
    : Ideal(generators.empty() ? throw ContractError("ideal needs at least one generator")
                               : generators.front().characteristic(),
            generators.front().nvars(), std::move(generators)) {}

Ideal Ideal::unit(std::uint64_t p, std::size_t nvars) {
  return Ideal(p, nvars, {Polynomial::constant(1, p, nvars)});
}

bool Ideal::is_zero() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }

bool Ideal::is_monomial() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.size() <= 1; });
}

bool Ideal::is_principal() const { return groebner().size() == 1; }

const std::vector<Polynomial>& Ideal::groebner(MonomialOrder order) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->bases.find(order);
  if (it == cache_->bases.end()) it = cache_->bases.emplace(order, groebner_basis(gens_, order)).first;
  return it->second;
}

Polynomial Ideal::reduce(const Polynomial& f) const {
  check_same_ring(f);
  return normal_form(f, groebner(), MonomialOrder::DegRevLex);
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return reduce(f).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  check_same_ring(other);
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::contains_one() const {
  for (const auto& g : gens_) {
    if (g.is_constant() && !g.is_zero()) return true;
  }
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

bool Ideal::equals(const Ideal& other) const {
  check_same_ring(other);
  return groebner() == other.groebner();
}

Ideal Ideal::canonical() const { return Ideal(p_, nvars_, groebner()); }

std::string Ideal::str(std::span<const std::string> names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].str(names);
  }
  return out + ")";
}

void Ideal::check_same_ring(const Ideal& o) const {
  if (p_ != o.p_ || nvars_ != o.nvars_) throw StructuralError("ideals from different ambient rings");
}

void Ideal::check_same_ring(const Polynomial& f) const {
  if (p_ != f.characteristic() || nvars_ != f.nvars()) {
    throw StructuralError("polynomial and ideal from different ambient rings");
  }
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  a.check_same_ring(b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.characteristic(), a.nvars(), std::move(gens));
}

namespace {

std::vector<Polynomial> minimize_monomials(std::vector<Polynomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Polynomial& x, const Polynomial& y) {
    return compare(x.leading().mono, y.leading().mono, MonomialOrder::DegRevLex) < 0;
  });
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : out) {
      if (k.leading().mono.divides(g.leading().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g.monic());
  }
  return out;
}

}  // namespace

Ideal operator*(const Ideal& a, const Ideal& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Ideal(a.characteristic(), a.nvars());
  std::vector<Polynomial> gens;
  std::unordered_set<Polynomial, PolynomialHash> seen;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial h = (f * g).monic();
      if (seen.insert(h).second) gens.push_back(std::move(h));
    }
  }
  if (a.is_monomial() && b.is_monomial()) gens = minimize_monomials(std::move(gens));
  return Ideal(a.characteristic(), a.nvars(), std::move(gens));
}

Ideal operator*(const Polynomial& f, const Ideal& a) {
  a.check_same_ring(f);
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(f * g);
  return Ideal(a.characteristic(), a.nvars(), std::move(gens));
}

Ideal power(const Ideal& a, std::uint64_t n) {
  Ideal result = Ideal::unit(a.characteristic(), a.nvars());
  if (n == 0) return result;
  if (a.contains_one()) return result;
  if (a.is_principal()) return Ideal(a.characteristic(), a.nvars(), {a.groebner().front().pow(n)});
  result = a;
  for (std::uint64_t k = 1; k < n; ++k) result = result * a;
  return result;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  a.check_same_ring(b);
  std::uint64_t p = a.characteristic();
  std::size_t n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Ideal(p, n);
  if (a.contains_one()) return b;
  if (b.contains_one()) return a;
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) {
      for (const auto& g : b.generators()) {
        gens.push_back(Polynomial::monomial(f.leading().mono.lcm(g.leading().mono), 1, p));
      }
    }
    return Ideal(p, n, minimize_monomials(std::move(gens)));
  }
  // Eliminate t from t*a + (1-t)*b; t is the appended last variable.
  Polynomial t = Polynomial::variable(n, p, n + 1);
  Polynomial one_minus_t = Polynomial::constant(1, p, n + 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.extended(1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.extended(1));
  std::vector<Polynomial> gb = groebner_basis(gens, MonomialOrder::EliminateLast);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool free_of_t = std::all_of(g.terms().begin(), g.terms().end(),
                                 [&](const Term& term) { return term.mono[n] == 0; });
    if (free_of_t) out.push_back(g.truncated(n));
  }
  return Ideal(p, n, std::move(out));
}

Ideal colon(const Ideal& j, const Polynomial& f) {
  j.check_same_ring(f);
  std::uint64_t p = j.characteristic();
  std::size_t n = j.nvars();
  if (f.is_zero() || j.contains(f)) return Ideal::unit(p, n);
  if (j.is_zero()) return j;
  if (j.is_monomial() && f.is_monomial()) {
    const Monomial& m = f.leading().mono;
    std::vector<Polynomial> gens;
    for (const auto& g : j.generators()) {
      Monomial::Storage s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = g.leading().mono[i] > m[i] ? g.leading().mono[i] - m[i] : 0;
      gens.push_back(Polynomial::monomial(Monomial(std::move(s)), 1, p));
    }
    return Ideal(p, n, minimize_monomials(std::move(gens)));
  }
  if (j.is_principal()) {
    if (auto q = exact_divide(j.groebner().front(), f)) return Ideal(p, n, {*q});
  }
  Ideal meet = intersect(j, Ideal(p, n, {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = exact_divide(g, f);
    if (!q) throw ContractError("internal: intersection generator not divisible in colon computation");
    gens.push_back(*q);
  }
  return Ideal(p, n, std::move(gens));
}

Ideal colon(const Ideal& j, const Ideal& k) {
  j.check_same_ring(k);
  std::optional<Ideal> result;
  for (const auto& g : k.generators()) {
    if (g.is_zero()) continue;
    Ideal part = colon(j, g);
    result = result ? intersect(*result, part) : part;
  }
  return result ? *result : Ideal::unit(j.characteristic(), j.nvars());
}

RingPresentation::RingPresentation(std::uint64_t p_, std::vector<std::string> variables_)
    : RingPresentation(p_, std::move(variables_), std::vector<Polynomial>{}) {}

RingPresentation::RingPresentation(std::uint64_t p_, std::vector<std::string> variables_,
                                   std::vector<Polynomial> defining)
    : RingPresentation(p_, variables_, Ideal(p_, variables_.size(), std::move(defining))) {}

RingPresentation::RingPresentation(std::uint64_t p_, std::vector<std::string> variables_, Ideal defining)
    : p(p_), variables(std::move(variables_)), defining_ideal(std::move(defining)) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 32)) {
    throw ContractError("characteristic " + std::to_string(p) + " is not a prime below 2^32");
  }
  if (variables.empty()) throw ContractError("ring needs at least one variable");
  if (defining_ideal.characteristic() != p || defining_ideal.nvars() != variables.size()) {
    throw StructuralError("defining ideal does not live in F_p[variables]");
  }
  if (defining_ideal.contains_one()) throw ContractError("defining ideal is the unit ideal (R = 0)");
}

}  // namespace fpair
