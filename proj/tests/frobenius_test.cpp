#include <random>

#include "doctest.h"
#include "fpair/frobenius.hpp"
#include "fpair/pair.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fpair;
using fpair::testing::Ctx;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::uint64_t p, std::size_t n, std::uint64_t max_deg, int terms) {
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Monomial::Storage s(n, 0);
    std::uint64_t d = rng() % (max_deg + 1);
    for (std::uint64_t j = 0; j < d; ++j) s[rng() % n] += 1;
    t.push_back({Monomial(s), 1 + rng() % (p - 1)});
  }
  return Polynomial::from_terms(p, n, t);
}

Ideal random_ideal(std::mt19937_64& rng, std::uint64_t p, std::size_t n, std::uint64_t deg) {
  std::vector<Polynomial> g;
  int k = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < k; ++i) g.push_back(random_poly(rng, p, n, deg, 3));
  return Ideal(p, n, g);
}

}  // namespace

TEST_CASE("bracket power examples") {
  Ctx c(2, {"x", "y"});
  CHECK(bracket_power(c.ideal({"x", "y"}), 1).equals(c.ideal({"x^2", "y^2"})));
  CHECK(bracket_power(c.ideal({"x*y"}), 1).equals(c.ideal({"x^2*y^2"})));
  Ctx f3(3, {"x", "y"});
  CHECK(bracket_power(f3.ideal({"x + y", "y"}), 1).equals(f3.ideal({"x^3", "y^3"})));
  CHECK_THROWS_AS(bracket_power(c.ideal({"x"}), 70), OverflowError);
}

TEST_CASE("frobenius root examples") {
  Ctx c(2, {"x", "y"});
  CHECK(frobenius_root(c.ideal({"x^2*y^3"}), 1).equals(c.ideal({"x*y"})));
  CHECK(frobenius_root(c.ideal({"x"}), 1).contains_one());
  CHECK(frobenius_root(c.ideal({"x*y"}), 1).contains_one());
  Ideal k = c.ideal({"x^2", "x*y"});
  CHECK(frobenius_root(bracket_power(k, 1), 1).equals(k));
  CHECK(frobenius_root(bracket_power(k, 2), 2).equals(k));
  CHECK(frobenius_root(c.zero(), 1).is_zero());
  Ctx f3(3, {"x"});
  CHECK(frobenius_root(f3.ideal({"x^9"}), 2).equals(f3.ideal({"x"})));
  CHECK(frobenius_root(f3.ideal({"x^8"}), 2).contains_one());
}

TEST_CASE("root adjunction and minimality against exhaustive monomial search") {
  for (std::uint64_t p : {2, 3}) {
    for (std::uint64_t e : {1, 2}) {
      for (std::uint64_t a = 0; a <= 5; ++a) {
        for (std::uint64_t b = 0; b <= 5; ++b) {
          oracle::MonoIdeal j{{a, b}, {b, a + 1}};
          j = oracle::minimize(j);
          std::vector<Polynomial> gens;
          for (const auto& g : j) gens.push_back(Polynomial::monomial(Monomial{g[0], g[1]}, 1, p));
          Ideal ideal(p, 2, gens);
          Ideal root = frobenius_root(ideal, e);
          CHECK(bracket_power(root, e).contains(ideal));
          auto brute = oracle::brute_frobenius_root(j, 2, p, e);
          std::vector<Polynomial> bg;
          for (const auto& g : brute) bg.push_back(Polynomial::monomial(Monomial{g[0], g[1]}, 1, p));
          CHECK(root.equals(Ideal(p, 2, bg)));
        }
      }
    }
  }
}

TEST_CASE("root is minimal among ideals whose bracket power contains J") {
  std::mt19937_64 rng(21);
  for (std::uint64_t p : {2, 3}) {
    for (int trial = 0; trial < 30; ++trial) {
      Ideal j = random_ideal(rng, p, 2, 6);
      Ideal root = frobenius_root(j, 1);
      CHECK(bracket_power(root, 1).contains(j));
      // Any K with J in K^[p] contains the root; try K = root + noise and K from the components.
      Ideal k = root + Ideal(p, 2, {random_poly(rng, p, 2, 2, 2)});
      CHECK(bracket_power(k, 1).contains(j));
      CHECK(k.contains(root));
    }
  }
}

TEST_CASE("root linearity, twist, iteration and generating-set independence") {
  std::mt19937_64 rng(23);
  for (std::uint64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      Ideal j = random_ideal(rng, p, 2, 7), k = random_ideal(rng, p, 2, 7);
      for (std::uint64_t e : {1, 2}) {
        CHECK(frobenius_root(j + k, e).equals(frobenius_root(j, e) + frobenius_root(k, e)));
        Polynomial h = random_poly(rng, p, 2, 2, 2);
        if (!h.is_zero()) {
          CHECK(frobenius_root(h.frobenius_power(e) * j, e).equals(h * frobenius_root(j, e)));
        }
      }
      CHECK(frobenius_root(frobenius_root(j, 1), 1).equals(frobenius_root(j, 2)));
      // Regenerate j: add combinations of generators, then compare root and bracket power.
      std::vector<Polynomial> regen = j.generators();
      for (const auto& g : j.generators()) regen.push_back(g * random_poly(rng, p, 2, 2, 2) + g);
      Ideal j2(p, 2, regen);
      REQUIRE(j2.equals(j));
      CHECK(frobenius_root(j2, 1).equals(frobenius_root(j, 1)));
      CHECK(bracket_power(j2, 1).equals(bracket_power(j, 1)));
      CHECK(frobenius_root(j.canonical(), 2).equals(frobenius_root(j, 2)));
    }
  }
}

TEST_CASE("fedder carrier") {
  Ctx c(2, {"x", "y"});
  CHECK(fedder_carrier(c.ideal({"x*y"}), 1).equals(c.ideal({"x*y"})));
  CHECK(fedder_carrier(c.zero(), 3).contains_one());
  Ctx c3(2, {"x", "y", "z"});
  Ideal i3 = c3.ideal({"x*y", "x*z"});
  Ideal carrier = fedder_carrier(i3, 1);
  CHECK(carrier.equals(colon(bracket_power(i3, 1), i3)));
  CHECK(bracket_power(i3, 1).contains(carrier * i3));
}

TEST_CASE("splitting_compose") {
  Ctx c(2, {"x"});
  PairSpec pair(RingPresentation(2, {"x"}), c.ideal({"x"}), ExactRational(1));
  auto out = splitting_compose(1, 1, {c("1"), c("x")}, {c("1"), c("x")}, pair);
  CHECK(out.level == 2);
  CHECK(out.a == c("x^3"));
  CHECK(out.g == c("1"));

  Ctx node(2, {"x", "y"});
  PairSpec npair(RingPresentation(2, {"x", "y"}, node.ideal({"x*y"})), node.unit(), ExactRational(1));
  auto composed = splitting_compose(1, 2, {node("x*y"), node("1")}, {node("x^3*y^3"), node("1")}, npair);
  CHECK(composed.g == node("x^7*y^7"));
  CHECK(composed.a == node("1"));
  CHECK_THROWS_AS(splitting_compose(1, 1, {node("x"), node("1")}, {node("x*y"), node("1")}, npair), ContractError);
  CHECK_THROWS_AS(splitting_compose(1, 1, {c("1"), c("1")}, {c("1"), c("x")}, pair), ContractError);

  // p = 3, t = 1/2: the bookkeeping 3 ceil(1) + ceil(1) = 4 >= ceil(8/2).
  Ctx f3(3, {"x", "y"});
  PairSpec half(RingPresentation(3, {"x", "y"}), f3.ideal({"x", "y"}), ExactRational(1, 2));
  auto h = splitting_compose(1, 1, {f3("1"), f3("x")}, {f3("1"), f3("y")}, half);
  CHECK(h.a == f3("x^3*y"));
  CHECK(h.a.total_degree() >= half.exponent(2));
}

TEST_CASE("composition outputs satisfy both memberships") {
  std::mt19937_64 rng(29);
  Ctx c(2, {"x", "y"});
  for (int trial = 0; trial < 20; ++trial) {
    ExactRational t(1 + static_cast<std::int64_t>(rng() % 5), 1 + static_cast<std::int64_t>(rng() % 4));
    PairSpec pair(RingPresentation(2, {"x", "y"}, c.ideal({"x*y"})), c.ideal({"x", "y"}), t);
    std::uint64_t e = 1 + rng() % 2, d = 1 + rng() % 2;
    auto pick_a = [&](std::uint64_t level) {
      std::uint64_t n = pair.exponent(level);
      std::uint64_t i = rng() % (n + 1);
      return Polynomial::monomial(Monomial{i, n - i}, 1, 2);
    };
    auto carrier = [&](std::uint64_t level) {
      std::uint64_t q = checked_pow(2, level);
      return c("x*y").pow(q - 1) * random_poly(rng, 2, 2, 2, 2) + c("x*y").pow(q - 1);
    };
    SplittingWitness we{carrier(e), pick_a(e)}, wd{carrier(d), pick_a(d)};
    CHECK_NOTHROW(splitting_compose(e, d, we, wd, pair));
  }
}
