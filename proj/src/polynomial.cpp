#include "fpair/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace fpair {

Monomial::Monomial(Storage exps) : exps_(std::move(exps)) {
  for (auto x : exps_) degree_ = checked_add(degree_, x);
}

Monomial::Monomial(std::initializer_list<std::uint64_t> exps) : exps_(exps.begin(), exps.end()) {
  for (auto x : exps_) degree_ = checked_add(degree_, x);
}

Monomial Monomial::variable(std::size_t index, std::size_t nvars) {
  Monomial m(nvars);
  m.exps_[index] = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checked_add(r.exps_[i], o.exps_[i]);
  r.degree_ = checked_add(degree_, o.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  r.degree_ = degree_ - o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Storage s(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) s[i] = std::max(exps_[i], o.exps_[i]);
  return Monomial(std::move(s));
}

bool Monomial::coprime(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Storage s(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) s[i] = checked_mul(exps_[i], k);
  return Monomial(std::move(s));
}

Monomial Monomial::extended(std::size_t extra) const {
  Monomial r(*this);
  r.exps_.resize(exps_.size() + extra, 0);
  return r;
}

Monomial Monomial::truncated(std::size_t nvars) const {
  Storage s(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(nvars));
  return Monomial(std::move(s));
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : exps_) {
    h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

int degrevlex(const Monomial& a, const Monomial& b, std::size_t nvars) noexcept {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
  switch (order) {
    case MonomialOrder::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::EliminateLast: {
      std::size_t last = a.size() - 1;
      if (a[last] != b[last]) return a[last] > b[last] ? 1 : -1;
      return degrevlex(a, b, last);
    }
  }
  return 0;
}

namespace {

bool term_greater(const Term& a, const Term& b) {
  return compare(a.mono, b.mono, MonomialOrder::DegRevLex) > 0;
}

}  // namespace

Polynomial Polynomial::constant(std::int64_t c, std::uint64_t p, std::size_t nvars) {
  Polynomial f(p, nvars);
  auto v = PrimeFieldElement::from_signed(c, p).value();
  if (v != 0) f.terms_.push_back({Monomial(nvars), v});
  return f;
}

Polynomial Polynomial::variable(std::size_t index, std::uint64_t p, std::size_t nvars) {
  Polynomial f(p, nvars);
  f.terms_.push_back({Monomial::variable(index, nvars), 1 % p});
  return f;
}

Polynomial Polynomial::monomial(const Monomial& m, std::uint64_t coef, std::uint64_t p) {
  Polynomial f(p, m.size());
  coef %= p;
  if (coef != 0) f.terms_.push_back({m, coef});
  return f;
}

Polynomial Polynomial::from_terms(std::uint64_t p, std::size_t nvars, std::vector<Term> terms) {
  Polynomial f(p, nvars);
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    std::uint64_t c = t.coef % p;
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coef = mod_add(f.terms_.back().coef, c, p);
      if (f.terms_.back().coef == 0) f.terms_.pop_back();
    } else if (c != 0) {
      f.terms_.push_back({std::move(t.mono), c});
    }
  }
  return f;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

PrimeFieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return {t.coef, p_};
  }
  return {0, p_};
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (p_ != o.p_ || nvars_ != o.nvars_) {
    throw StructuralError("polynomials from different ambient rings (F_" + std::to_string(p_) + " in " +
                          std::to_string(nvars_) + " variables vs F_" + std::to_string(o.p_) + " in " +
                          std::to_string(o.nvars_) + ")");
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(p_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare(terms_[i].mono, o.terms_[j].mono, MonomialOrder::DegRevLex);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint64_t s = mod_add(terms_[i].coef, o.terms_[j].coef, p_);
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef = mod_sub(0, t.coef, p_);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(p_, nvars_);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].mono, terms_[0].coef);
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono, o.terms_[0].coef);
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto& slot = acc[a.mono * b.mono];
      slot = mod_add(slot, mod_mul(a.coef, b.coef, p_), p_);
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  std::sort(out.begin(), out.end(), term_greater);
  Polynomial r(p_, nvars_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::scaled(std::uint64_t c) const {
  c %= p_;
  Polynomial r(p_, nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = mod_mul(t.coef, c, p_);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, std::uint64_t c) const {
  c %= p_;
  Polynomial r(p_, nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, mod_mul(t.coef, c, p_)});
  return r;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(1, p_, nvars_);
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius_power(std::uint64_t e) const {
  std::uint64_t q = checked_pow(p_, e);
  Polynomial r(p_, nvars_);
  r.terms_.reserve(terms_.size());
  // Scaling exponents by q preserves degrevlex order; c^q = c in F_p.
  for (const auto& t : terms_) r.terms_.push_back({t.mono.scaled(q), t.coef});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inv(terms_.front().coef, p_));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint64_t k = t.mono[var];
    if (k == 0 || k % p_ == 0) continue;
    Monomial::Storage s(t.mono.exponents().begin(), t.mono.exponents().end());
    s[var] -= 1;
    out.push_back({Monomial(std::move(s)), mod_mul(t.coef, k % p_, p_)});
  }
  return from_terms(p_, nvars_, std::move(out));
}

Polynomial Polynomial::translated(std::span<const std::uint64_t> point) const {
  if (point.size() != nvars_) throw StructuralError("translation point has wrong dimension");
  std::vector<Polynomial> shifted;
  shifted.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    shifted.push_back(variable(i, p_, nvars_) + constant(static_cast<std::int64_t>(point[i] % p_), p_, nvars_));
  }
  Polynomial r(p_, nvars_);
  for (const auto& t : terms_) {
    Polynomial piece = constant(static_cast<std::int64_t>(t.coef), p_, nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] != 0) piece = piece * shifted[i].pow(t.mono[i]);
    }
    r += piece;
  }
  return r;
}

Polynomial Polynomial::truncated_below(std::uint64_t q) const {
  Polynomial r(p_, nvars_);
  for (const auto& t : terms_) {
    bool keep = true;
    for (std::size_t i = 0; i < nvars_ && keep; ++i) keep = t.mono[i] < q;
    if (keep) r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::extended(std::size_t extra) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.extended(extra), t.coef});
  return from_terms(p_, nvars_ + extra, std::move(out));
}

Polynomial Polynomial::truncated(std::size_t nvars) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t i = nvars; i < nvars_; ++i) {
      if (t.mono[i] != 0) throw StructuralError("polynomial involves an eliminated variable");
    }
    out.push_back({t.mono.truncated(nvars), t.coef});
  }
  return from_terms(p_, nvars, std::move(out));
}

std::size_t Polynomial::hash() const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(p_) ^ (nvars_ << 7);
  for (const auto& t : terms_) {
    h ^= t.mono.hash() + t.coef * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Polynomial::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += names[i];
      if (t.mono[i] > 1) factors += "^" + std::to_string(t.mono[i]);
    }
    if (factors.empty()) {
      out += std::to_string(t.coef);
    } else if (t.coef == 1) {
      out += factors;
    } else {
      out += std::to_string(t.coef) + "*" + factors;
    }
  }
  return out;
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace fpair
