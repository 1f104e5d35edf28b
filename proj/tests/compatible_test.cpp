#include <random>

#include "doctest.h"
#include "fpair/compatible.hpp"
#include "fpair/frobenius.hpp"
#include "fpair/testideal.hpp"
#include "support.hpp"

using namespace fpair;
using fpair::testing::Ctx;

TEST_CASE("uniform compatibility examples") {
  Ctx c(2, {"x", "y"});
  RingPresentation node(2, c.names, std::vector<Polynomial>{c("x*y")});
  PairSpec pn(node, c.unit(), ExactRational(1));
  for (auto j : {c.ideal({"x", "y"}), c.ideal({"x"}), c.ideal({"y"}), c.unit(), c.ideal({"x*y"})}) {
    CHECK(is_uniformly_compatible(pn, j, 2).verdict == Verdict::Yes);
  }
  CHECK(is_uniformly_compatible(pn, c.ideal({"x + y", "x*y"}), 2).verdict == Verdict::No);
  CHECK_THROWS_AS(is_uniformly_compatible(pn, c.ideal({"x^2"}), 1), ContractError);

  Ctx c1(2, {"x"});
  RingPresentation line(2, c1.names);
  auto r = is_uniformly_compatible(PairSpec(line, c1.unit(), ExactRational(1)), c1.ideal({"x"}), 2);
  CHECK(r.verdict == Verdict::No);
  CHECK(r.level_e == 1u);
  // With a = (x) at t = 1 the maps carry the x factor, and (x) becomes compatible.
  CHECK(is_uniformly_compatible(PairSpec(line, c1.ideal({"x"}), ExactRational(1)), c1.ideal({"x"}), 2).verdict ==
        Verdict::Yes);
}

TEST_CASE("centers of F-purity") {
  Ctx c(2, {"x", "y"});
  RingPresentation node(2, c.names, std::vector<Polynomial>{c("x*y")});
  PairSpec pn(node, c.unit(), ExactRational(1));
  std::vector<Ideal> cands{c.ideal({"x", "y"}), c.ideal({"x"}), c.ideal({"y"})};
  CHECK(centers_among(pn, cands, 2).size() == 3);
  CHECK(centers_among(pn, std::vector<Ideal>{}, 2).empty());

  RingPresentation plane(2, c.names);
  PairSpec reg(plane, c.unit(), ExactRational(1));
  std::vector<Ideal> primes{c.ideal({"x", "y"}), c.ideal({"x"}), c.ideal({"y"}), c.ideal({"x + y^2"}),
                            c.ideal({"x - 1", "y"})};
  CHECK(centers_among(reg, primes, 2).empty());
}

TEST_CASE("quotient F-purity") {
  Ctx c(2, {"x", "y"});
  RingPresentation node(2, c.names, std::vector<Polynomial>{c("x*y")});
  PairSpec pn(node, c.unit(), ExactRational(1));
  for (auto j : {c.ideal({"x"}), c.ideal({"y"}), c.ideal({"x", "y"})}) {
    auto r = quotient_F_pure_check(pn, j, 2);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.level_e == 1u);
  }
  CHECK_THROWS_AS(quotient_F_pure_check(pn, c.unit(), 2), ContractError);
  CHECK_THROWS_AS(quotient_F_pure_check(pn, c.ideal({"x + y", "x*y"}), 2), ContractError);
  RingPresentation cusp(2, c.names, std::vector<Polynomial>{c("x^2 + y^3")});
  CHECK_THROWS_AS(quotient_F_pure_check(PairSpec(cusp, c.unit(), ExactRational(1)), c.ideal({"x", "y"}), 2),
                  ContractError);
}

TEST_CASE("Frobenius closure") {
  Ctx c1(2, {"x"});
  RingPresentation line(2, c1.names);
  PairSpec p1(line, c1.unit(), ExactRational(1));
  auto r = frobenius_closure_membership(p1, c1.ideal({"x^2"}), c1("x"), 1, 3);
  CHECK(r.verdict == ClosureVerdict::NotInClosure);
  CHECK(r.failing_e == 1u);
  CHECK(frobenius_closure_membership(p1, c1.ideal({"x^2"}), c1("x^3"), 1, 3).verdict == ClosureVerdict::InClosure);
  CHECK_THROWS_AS(frobenius_closure_membership(p1, c1.ideal({"x^2"}), c1("x"), 3, 1), ContractError);

  // The cusp is not F-pure, so a failure there is never certified.
  Ctx c(2, {"x", "y"});
  RingPresentation cusp(2, c.names, std::vector<Polynomial>{c("x^2 + y^3")});
  PairSpec pc(cusp, c.unit(), ExactRational(1));
  auto rc = frobenius_closure_membership(pc, c.ideal({"y"}), c("x"), 1, 3);
  CHECK(rc.verdict != ClosureVerdict::NotInClosure);
}

TEST_CASE("compatible ideals closed under sum and intersection") {
  Ctx c(2, {"x", "y"});
  RingPresentation node(2, c.names, std::vector<Polynomial>{c("x*y")});
  PairSpec pn(node, c.unit(), ExactRational(1));
  std::vector<Ideal> comp{c.ideal({"x"}), c.ideal({"y"}), c.ideal({"x", "y"}), c.ideal({"x*y"})};
  for (const auto& a : comp) {
    for (const auto& b : comp) {
      CHECK(is_uniformly_compatible(pn, a + b, 2).verdict == Verdict::Yes);
      CHECK(is_uniformly_compatible(pn, intersect(a, b), 2).verdict == Verdict::Yes);
    }
  }
}

TEST_CASE("test ideal is compatible") {
  Ctx c(2, {"x", "y"});
  RingPresentation plane(2, c.names);
  for (auto [a, t] : std::vector<std::pair<Ideal, ExactRational>>{{c.ideal({"x^2 + y^3"}), ExactRational(3, 5)},
                                                                   {c.ideal({"x", "y"}), ExactRational(5, 2)},
                                                                   {c.ideal({"x*y"}), ExactRational(3, 2)}}) {
    PairSpec pr(plane, a, t);
    auto tau = test_ideal_quotient(pr, pair_test_element(pr), 2).tau;
    CHECK(is_uniformly_compatible(pr, tau, 2).verdict == Verdict::Yes);
  }
  RingPresentation node(2, c.names, std::vector<Polynomial>{c("x*y")});
  PairSpec pn(node, c.unit(), ExactRational(1));
  auto tau = test_ideal_quotient(pn, pair_test_element(pn), 2).tau;
  CHECK(is_uniformly_compatible(pn, tau, 2).verdict == Verdict::Yes);
}
