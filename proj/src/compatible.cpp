#include "fpair/compatible.hpp"

#include "fpair/frobenius.hpp"

namespace fpair {

namespace {

Ideal twisted(const PairSpec& pair, std::uint64_t e) {
  Ideal carrier = fedder_carrier(pair.defining(), e);
  if (pair.a_is_unit()) return carrier;
  return pair.a_power(e) * carrier;
}

void require_contains_i(const PairSpec& pair, const Ideal& j) {
  pair.a.check_same_ring(j);
  if (!j.contains(pair.defining())) throw ContractError("J must contain the defining ideal I");
}

}  // namespace

CheckReport is_uniformly_compatible(const PairSpec& pair, const Ideal& j, std::uint64_t e_max) {
  if (e_max == 0) throw ContractError("e_max must be at least 1");
  require_contains_i(pair, j);
  CheckReport r;
  r.bounds.e_max = e_max;
  r.method = "root-containment";
  for (std::uint64_t e = 1; e <= e_max; ++e) {
    Ideal img = frobenius_root(twisted(pair, e) * j, e);
    if (!j.contains(img)) {
      r.verdict = Verdict::No;
      r.level_e = e;
      r.notes.push_back("e = " + std::to_string(e) + ": image not inside J");
      return r;
    }
    r.notes.push_back("e = " + std::to_string(e) + ": image inside J");
  }
  r.verdict = Verdict::Yes;
  r.notes.push_back("yes up to e_max = " + std::to_string(e_max));
  return r;
}

std::vector<Ideal> centers_among(const PairSpec& pair, std::span<const Ideal> candidates, std::uint64_t e_max) {
  std::vector<Ideal> out;
  for (const auto& c : candidates) {
    if (is_uniformly_compatible(pair, c, e_max).verdict == Verdict::Yes) out.push_back(c);
  }
  return out;
}

CheckReport quotient_F_pure_check(const PairSpec& pair, const Ideal& j, std::uint64_t e_max) {
  if (j.contains_one()) throw ContractError("J = (1): the quotient is the zero ring");
  if (is_uniformly_compatible(pair, j, e_max).verdict != Verdict::Yes) {
    throw ContractError("J is not uniformly compatible up to e_max");
  }
  CheckReport split = is_locally_sharply_F_pure(pair, e_max);
  if (split.verdict != Verdict::Yes) throw ContractError("pair is not sharply F-pure within e_max");
  const std::uint64_t e = *split.level_e;
  const Ideal maps = twisted(pair, e);
  CheckReport r;
  r.bounds.e_max = e_max;
  r.level_e = e;
  r.method = "descent";
  if (!bracket_power(j, e).contains(maps * j)) {
    r.verdict = Verdict::No;
    r.notes.push_back("maps at e = " + std::to_string(e) + " do not descend to S/J");
    return r;
  }
  Ideal image = frobenius_root(maps, e) + j;
  r.verdict = image.contains_one() ? Verdict::Yes : Verdict::No;
  r.witnesses = split.witnesses;
  r.notes.push_back("induced maps on S/J at e = " + std::to_string(e) +
                    (image.contains_one() ? " send some element to 1" : " miss 1"));
  return r;
}

std::string_view to_string(ClosureVerdict v) {
  switch (v) {
    case ClosureVerdict::InClosure:
      return "in_closure";
    case ClosureVerdict::NotInClosure:
      return "not_in_closure";
    case ClosureVerdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

ClosureReport frobenius_closure_membership(const PairSpec& pair, const Ideal& j, const Polynomial& z,
                                           std::uint64_t e_min, std::uint64_t e_max) {
  if (e_min == 0 || e_min > e_max) throw ContractError("need 1 <= e_min <= e_max");
  pair.a.check_same_ring(j);
  pair.a.check_same_ring(z);
  ClosureReport r;
  r.e_min = e_min;
  r.e_max = e_max;
  const Ideal ji = j + pair.defining();
  for (std::uint64_t e = e_min; e <= e_max; ++e) {
    Ideal lhs = pair.a_is_unit() ? Ideal(pair.p(), pair.nvars(), {z.frobenius_power(e)})
                                 : z.frobenius_power(e) * pair.a_power(e);
    if (!(bracket_power(j, e) + pair.defining()).contains(lhs)) {
      r.failing_e = e;
      break;
    }
  }
  if (!r.failing_e) {
    r.verdict = ClosureVerdict::InClosure;
    r.notes.push_back("containment holds for e in [" + std::to_string(e_min) + ", " + std::to_string(e_max) + "]");
    return r;
  }
  // A splitting at level s composes to every multiple of s; containment at such a level would
  // put z = phi(a z^q) in J, so z outside J is outside the closure.
  if (!ji.contains(z)) {
    CheckReport split = is_locally_sharply_F_pure(pair, e_max);
    if (split.verdict == Verdict::Yes) {
      r.split_e = split.level_e;
      r.verdict = ClosureVerdict::NotInClosure;
      r.notes.push_back("pair splits at e = " + std::to_string(*split.level_e) + " and z is not in J");
      return r;
    }
  }
  r.verdict = ClosureVerdict::Unknown;
  r.notes.push_back("containment fails at e = " + std::to_string(*r.failing_e) + " without a certificate for larger e");
  return r;
}

}  // namespace fpair
