#include "fpair/criteria.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>
#include <unordered_set>

#include "fpair/frobenius.hpp"

namespace fpair {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

struct Product {
  Polynomial g;
  Polynomial a;
  Polynomial value;  // d g a
};

Polynomial one_of(const PairSpec& pair) { return Polynomial::constant(1, pair.p(), pair.nvars()); }

std::vector<Polynomial> a_generators(const PairSpec& pair, std::uint64_t e) {
  if (pair.a_is_unit()) return {one_of(pair)};
  return pair.a_power(e).generators();
}

std::vector<Product> products(const PairSpec& pair, std::uint64_t e, const std::optional<Polynomial>& d) {
  Ideal carrier = fedder_carrier(pair.defining(), e);
  std::vector<Product> out;
  for (const auto& a : a_generators(pair, e)) {
    for (const auto& g : carrier.generators()) {
      Polynomial v = a * g;
      if (d) v = v * *d;
      out.push_back({g, a, std::move(v)});
    }
  }
  return out;
}

bool has_unit_component(const Polynomial& f, std::uint64_t e) {
  for (const auto& c : root_components(f, e)) {
    if (c.is_constant() && !c.is_zero()) return true;
  }
  return false;
}

Ideal roots_plus(std::span<const Product> prods, std::uint64_t e, const Ideal& i) {
  std::vector<Polynomial> gens = i.generators();
  for (const auto& pr : prods) {
    for (auto& c : root_components(pr.value, e)) gens.push_back(c.monic());
  }
  return Ideal(i.characteristic(), i.nvars(), std::move(gens));
}

// A short list of products whose roots together with I contain 1. Caller guarantees the
// full list does.
std::vector<SplittingWitness> extract_witnesses(const std::vector<Product>& prods, std::uint64_t e, const Ideal& i) {
  for (const auto& pr : prods) {
    if (has_unit_component(pr.value, e)) return {{pr.g, pr.a}};
  }
  std::size_t lo = 1, hi = prods.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (roots_plus(std::span(prods).first(mid), e, i).contains_one()) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  std::vector<Product> kept(prods.begin(), prods.begin() + static_cast<std::ptrdiff_t>(lo));
  if (kept.size() <= 16) {
    for (std::size_t k = kept.size(); k-- > 0;) {
      if (kept.size() == 1) break;
      std::vector<Product> trial = kept;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
      if (roots_plus(trial, e, i).contains_one()) kept = std::move(trial);
    }
  }
  std::vector<SplittingWitness> out;
  for (auto& pr : kept) out.push_back({pr.g, pr.a});
  return out;
}

bool in_carrier(const Polynomial& g, const Ideal& i, std::uint64_t e) {
  if (i.is_zero()) return true;
  Ideal target = bracket_power(i, e);
  return std::all_of(i.generators().begin(), i.generators().end(),
                     [&](const Polynomial& h) { return target.contains(g * h); });
}

std::uint64_t max_degree(const Ideal& j) {
  std::uint64_t d = 0;
  for (const auto& g : j.generators()) d = std::max(d, g.total_degree());
  return d;
}

// Determinant by cofactor expansion along the first row (matrices here are tiny).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  std::size_t k = m.size();
  if (k == 1) return m[0][0];
  Polynomial acc(m[0][0].characteristic(), m[0][0].nvars());
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t cc = 0; cc < k; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(minor);
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint64_t degree) {
  std::vector<Monomial> out{Monomial(nvars)};
  for (std::uint64_t d = 1; d <= degree; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      if (m.degree() != d - 1) continue;
      // Extend only at or after the last variable used, so each monomial appears once.
      std::size_t last = 0;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (m[i] > 0) last = i;
      }
      for (std::size_t i = last; i < nvars; ++i) next.push_back(m * Monomial::variable(i, nvars));
    }
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

std::vector<Polynomial> old_candidates(const PairSpec& pair, std::uint64_t e, std::uint64_t degree_bound,
                                       std::uint64_t seed, std::size_t max_candidates) {
  std::vector<Polynomial> gens = a_generators(pair, e);
  std::vector<Polynomial> pool;
  std::unordered_set<Polynomial, PolynomialHash> seen;
  for (const auto& g : gens) {
    for (const auto& m : monomials_up_to(pair.nvars(), degree_bound)) {
      Polynomial h = g.times_monomial(m);
      if (seen.insert(h).second) pool.push_back(h);
    }
  }
  std::vector<Polynomial> singles = gens;
  std::vector<Polynomial> combos;
  const std::uint64_t p = pair.p();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      for (std::uint64_t c = 1; c < p; ++c) combos.push_back(pool[i] + pool[j].scaled(c));
    }
  }
  for (std::size_t i = 0; i + 2 < pool.size() && i < 12; ++i) {
    for (std::size_t j = i + 1; j + 1 < pool.size() && j < 12; ++j) {
      for (std::size_t k = j + 1; k < pool.size() && k < 12; ++k) combos.push_back(pool[i] + pool[j] + pool[k]);
    }
  }
  std::size_t room = max_candidates > singles.size() ? max_candidates - singles.size() : 0;
  if (combos.size() > room) {
    std::mt19937_64 rng(seed);
    std::shuffle(combos.begin(), combos.end(), rng);
    combos.erase(combos.begin() + static_cast<std::ptrdiff_t>(room), combos.end());
  }
  singles.insert(singles.end(), combos.begin(), combos.end());
  return singles;
}

}  // namespace

Ideal eval_image_ideal(const PairSpec& pair, std::uint64_t e, const std::optional<Polynomial>& d) {
  if (e == 0) throw ContractError("eval_image_ideal needs e >= 1");
  if (d && pair.defining().contains(*d)) throw ContractError("multiplier d lies in I");
  return roots_plus(products(pair, e, d), e, pair.defining());
}

CheckReport is_locally_sharply_F_pure(const PairSpec& pair, std::uint64_t e_max) {
  if (e_max == 0) throw ContractError("e_max must be at least 1");
  CheckReport r;
  r.bounds.e_max = e_max;
  r.multiplier = one_of(pair);
  if (pair.a_is_unit() && pair.defining().is_zero()) {
    r.verdict = Verdict::Yes;
    r.level_e = 1;
    r.witnesses = {{one_of(pair), one_of(pair)}};
    r.method = "polynomial-ring";
    return r;
  }
  r.method = "evaluation-image";
  for (std::uint64_t e = 1; e <= e_max; ++e) {
    auto prods = products(pair, e, std::nullopt);
    if (roots_plus(prods, e, pair.defining()).contains_one()) {
      r.verdict = Verdict::Yes;
      r.level_e = e;
      r.witnesses = extract_witnesses(prods, e, pair.defining());
      return r;
    }
    if (pair.a_is_unit()) {
      r.verdict = Verdict::No;
      r.level_e = 1;
      r.method = pair.defining().is_principal() ? "hypersurface-fast-path" : "level-one-criterion";
      r.notes.push_back("a = R: a splitting at any level restricts to level 1, and E_1 does not contain 1");
      return r;
    }
  }
  r.notes.push_back("E_e does not contain 1 for e <= " + std::to_string(e_max));
  return r;
}

bool is_nonzerodivisor(const Polynomial& c, const Ideal& i) {
  if (c.is_zero()) return false;
  if (i.is_zero()) return true;
  if (i.contains(c)) return false;
  return colon(i, c).equals(i);
}

std::vector<Polynomial> jacobian_minors(const Ideal& i) {
  if (i.is_zero()) return {};
  const auto& gens = i.generators();
  std::size_t r = gens.size(), n = i.nvars();
  if (r > 8 || n > 8) throw ResourceLimitError("Jacobian minors limited to 8 generators and 8 variables");
  std::vector<std::vector<Polynomial>> jac(r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t v = 0; v < n; ++v) jac[a].push_back(gens[a].derivative(v));
  }
  for (std::size_t k = std::min(r, n); k >= 1; --k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(r, k, 0, cur, rows);
    subsets(n, k, 0, cur, cols);
    std::vector<Polynomial> out;
    std::unordered_set<Polynomial, PolynomialHash> seen;
    for (const auto& rs : rows) {
      for (const auto& cs : cols) {
        std::vector<std::vector<Polynomial>> m;
        for (std::size_t a : rs) {
          std::vector<Polynomial> row;
          for (std::size_t v : cs) row.push_back(jac[a][v]);
          m.push_back(std::move(row));
        }
        Polynomial det = i.reduce(determinant(m));
        if (!det.is_zero() && seen.insert(det.monic()).second) out.push_back(det);
      }
    }
    if (!out.empty()) return out;
  }
  return {};
}

std::vector<Polynomial> nonzerodivisor_combinations(std::span<const Polynomial> gens, const Ideal& i) {
  std::vector<Polynomial> out;
  std::unordered_set<Polynomial, PolynomialHash> seen;
  auto add = [&](const Polynomial& f) {
    if (f.is_zero()) return;
    if (seen.insert(f.monic()).second && is_nonzerodivisor(f, i)) out.push_back(f);
  };
  for (const auto& f : gens) add(f);
  // Single elements can all be zerodivisors (the node: x and y); combinations need not be.
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) add(gens[a] + gens[b]);
  }
  if (gens.size() > 2) {
    Polynomial sum = gens.front() - gens.front();
    for (const auto& f : gens) sum += f;
    add(sum);
  }
  if (out.empty() && gens.size() > 1) {
    std::mt19937_64 rng(gens.size());
    const std::uint64_t p = gens.front().characteristic();
    for (int k = 0; k < 16 && out.empty(); ++k) {
      Polynomial sum = gens.front() - gens.front();
      for (const auto& f : gens) sum += f.scaled(rng() % p);
      add(sum);
    }
  }
  return out;
}

std::vector<Polynomial> default_d_candidates(const PairSpec& pair) {
  std::vector<Polynomial> out{one_of(pair)};
  std::unordered_set<Polynomial, PolynomialHash> seen{out.front()};
  auto keep = [&](const std::vector<Polynomial>& fs) {
    for (const auto& f : fs) {
      if (seen.insert(f).second) out.push_back(f);
    }
  };
  keep(nonzerodivisor_combinations(jacobian_minors(pair.defining()), pair.defining()));
  if (!pair.a_is_unit()) keep(nonzerodivisor_combinations(pair.a.generators(), pair.defining()));
  return out;
}

std::vector<RegularityProbe> is_locally_strongly_F_regular(const PairSpec& pair, std::span<const Polynomial> d_candidates,
                                                           std::uint64_t e_max) {
  if (e_max == 0) throw ContractError("e_max must be at least 1");
  std::optional<bool> pure_at_one;
  std::vector<RegularityProbe> out;
  for (const auto& d : d_candidates) {
    if (pair.defining().contains(d)) throw ContractError("candidate d = " + d.str(pair.ring.variables) + " lies in I");
    CheckReport r;
    r.bounds.e_max = e_max;
    r.multiplier = d;
    r.method = "evaluation-image";
    for (std::uint64_t e = 1; e <= e_max && r.verdict != Verdict::Yes; ++e) {
      auto prods = products(pair, e, d);
      if (roots_plus(prods, e, pair.defining()).contains_one()) {
        r.verdict = Verdict::Yes;
        r.level_e = e;
        r.witnesses = extract_witnesses(prods, e, pair.defining());
      }
    }
    if (r.verdict != Verdict::Yes && pair.a_is_unit()) {
      if (!pure_at_one) pure_at_one = roots_plus(products(pair, 1, std::nullopt), 1, pair.defining()).contains_one();
      if (!*pure_at_one) {
        r.verdict = Verdict::No;
        r.level_e = 1;
        r.method = "level-one-criterion";
        r.notes.push_back("R is not F-pure (E_1 with d = 1 does not contain 1), so no d splits");
      }
    }
    if (r.verdict == Verdict::Unknown) r.notes.push_back("E_e(d) does not contain 1 for e <= " + std::to_string(e_max));
    out.push_back({d, std::move(r)});
  }
  return out;
}

std::uint64_t default_degree_bound(const PairSpec& pair) {
  return std::max<std::uint64_t>(1, 2 * std::max(max_degree(pair.a), max_degree(pair.defining())));
}

CheckReport is_sharply_F_pure_old(const PairSpec& pair, std::uint64_t e_max, std::uint64_t degree_bound,
                                  std::uint64_t seed, std::size_t max_candidates) {
  if (e_max == 0) throw ContractError("e_max must be at least 1");
  CheckReport r;
  r.bounds = {e_max, degree_bound};
  r.multiplier = one_of(pair);
  r.method = "single-element-search";
  std::size_t tried = 0;
  for (std::uint64_t e = 1; e <= e_max; ++e) {
    Ideal carrier = fedder_carrier(pair.defining(), e);
    for (const auto& a : old_candidates(pair, e, degree_bound, seed, max_candidates)) {
      ++tried;
      std::vector<Product> prods;
      for (const auto& g : carrier.generators()) prods.push_back({g, a, a * g});
      if (roots_plus(prods, e, pair.defining()).contains_one()) {
        r.verdict = Verdict::Yes;
        r.level_e = e;
        r.witnesses = extract_witnesses(prods, e, pair.defining());
        r.notes.push_back("single element a = " + a.str(pair.ring.variables));
        return r;
      }
    }
  }
  r.notes.push_back("no single-element splitting among " + std::to_string(tried) + " candidates");
  return r;
}

std::vector<std::uint64_t> rational_point(const Ideal& m) {
  const std::size_t n = m.nvars();
  const std::uint64_t p = m.characteristic();
  const auto& gb = m.groebner();
  if (gb.size() != n) throw ContractError("maximal ideal must be (x_1 - c_1, ..., x_n - c_n)");
  std::vector<std::uint64_t> point(n, 0);
  std::vector<bool> hit(n, false);
  for (const auto& g : gb) {
    if (g.total_degree() != 1 || g.size() > 2) throw ContractError("maximal ideal must be (x_1 - c_1, ..., x_n - c_n)");
    const Monomial& lm = g.leading().mono;
    std::size_t v = 0;
    while (lm[v] == 0) ++v;
    if (hit[v]) throw ContractError("maximal ideal must be (x_1 - c_1, ..., x_n - c_n)");
    hit[v] = true;
    if (g.size() == 2) {
      if (!g.terms()[1].mono.is_one()) throw ContractError("maximal ideal must be (x_1 - c_1, ..., x_n - c_n)");
      point[v] = mod_sub(0, g.terms()[1].coef, p);
    }
  }
  return point;
}

namespace {

bool vanishes_at(const Polynomial& f, std::span<const std::uint64_t> point) {
  Polynomial t = f.translated(point);
  return t.is_zero() || !t.terms().back().mono.is_one();
}

}  // namespace

CheckReport local_check_at_maximal(const PairSpec& pair, const Ideal& m, std::uint64_t e_max,
                                   const std::optional<Polynomial>& d) {
  if (e_max == 0) throw ContractError("e_max must be at least 1");
  std::vector<std::uint64_t> point = rational_point(m);
  for (const auto& g : pair.defining().generators()) {
    if (!vanishes_at(g, point)) throw ContractError("maximal ideal does not contain I");
  }
  CheckReport r;
  r.bounds.e_max = e_max;
  r.multiplier = d ? *d : one_of(pair);
  r.point = point;
  r.method = "local-fedder";
  Polynomial dt = r.multiplier->translated(point);
  for (std::uint64_t e = 1; e <= e_max; ++e) {
    const std::uint64_t q = checked_pow(pair.p(), e);
    Ideal carrier = fedder_carrier(pair.defining(), e);
    std::vector<Polynomial> carrier_t;
    for (const auto& g : carrier.generators()) carrier_t.push_back(g.translated(point).truncated_below(q));
    Polynomial dq = dt.truncated_below(q);
    for (const auto& a : a_generators(pair, e)) {
      Polynomial at = (a.translated(point).truncated_below(q) * dq).truncated_below(q);
      if (at.is_zero()) continue;
      for (std::size_t k = 0; k < carrier_t.size(); ++k) {
        if (!(at * carrier_t[k]).truncated_below(q).is_zero()) {
          r.verdict = Verdict::Yes;
          r.level_e = e;
          r.witnesses = {{carrier.generators()[k], a}};
          return r;
        }
      }
    }
    if (e == 1 && pair.a_is_unit() && !d) {
      r.verdict = Verdict::No;
      r.level_e = 1;
      if (pair.defining().is_principal()) r.method = "hypersurface-fast-path";
      r.notes.push_back("a = R: (I^[p] : I) lies in m^[p], and a local splitting at any level restricts to level 1");
      return r;
    }
  }
  r.notes.push_back("d a^N (I^[q] : I) lies in m^[q] for e <= " + std::to_string(e_max));
  return r;
}

bool verify_witnesses(const PairSpec& pair, const CheckReport& report) {
  if (report.verdict != Verdict::Yes || !report.level_e || report.witnesses.empty()) return false;
  const std::uint64_t e = *report.level_e;
  const Ideal& i = pair.defining();
  Polynomial d = report.multiplier ? *report.multiplier : one_of(pair);
  Ideal a_power = power(pair.a, pair.exponent(e));
  std::vector<Product> prods;
  for (const auto& w : report.witnesses) {
    if (!in_carrier(w.g, i, e) || !a_power.contains(w.a)) return false;
    prods.push_back({w.g, w.a, d * w.g * w.a});
  }
  if (report.point) {
    const std::uint64_t q = checked_pow(pair.p(), e);
    return std::any_of(prods.begin(), prods.end(), [&](const Product& pr) {
      return !pr.value.translated(*report.point).truncated_below(q).is_zero();
    });
  }
  return roots_plus(prods, e, i).contains_one();
}

DiscrepancySearch search_discrepancy(std::span<const CorpusItem> corpus, std::uint64_t e_max,
                                     std::uint64_t degree_bound, std::uint64_t seed) {
  struct Outcome {
    std::optional<DiscrepancyCandidate> candidate;
    std::optional<std::string> log;
  };
  auto run = [&](std::size_t idx) -> Outcome {
    const CorpusItem& item = corpus[idx];
    std::string tag = "item " + std::to_string(idx) + ": ";
    if (item.local) return {std::nullopt, tag + "skipped (local presentation)"};
    if (item.pair.a_is_unit() || item.pair.a.is_principal()) return {std::nullopt, tag + "skipped (principal a)"};
    try {
      CheckReport fresh = is_locally_sharply_F_pure(item.pair, e_max);
      if (fresh.verdict != Verdict::Yes) return {};
      CheckReport old = is_sharply_F_pure_old(item.pair, e_max, degree_bound, seed + idx);
      if (old.verdict == Verdict::Yes) return {};
      return {DiscrepancyCandidate{idx, std::move(fresh), std::move(old), seed + idx}, std::nullopt};
    } catch (const ResourceLimitError& err) {
      return {std::nullopt, tag + "skipped (" + std::string(err.code()) + ": " + err.what() + ")"};
    }
  };

  std::vector<Outcome> outcomes(corpus.size());
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < corpus.size(); start += width) {
    std::vector<std::future<Outcome>> batch;
    for (std::size_t k = start; k < std::min(corpus.size(), start + width); ++k) {
      batch.push_back(std::async(std::launch::async, run, k));
    }
    for (std::size_t k = 0; k < batch.size(); ++k) outcomes[start + k] = batch[k].get();
  }
  DiscrepancySearch out;
  for (auto& o : outcomes) {
    if (o.log) out.log.push_back(std::move(*o.log));
    if (o.candidate) out.candidates.push_back(std::move(*o.candidate));
  }
  return out;
}

}  // namespace fpair
