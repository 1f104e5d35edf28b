#pragma once

#include <cstdint>
#include <vector>

#include "fpair/ideal.hpp"

namespace fpair {

/// J^[p^e]: generated by the p^e-th powers of the generators of J.
Ideal bracket_power(const Ideal& j, std::uint64_t e);

/// The components g_mu of f = sum over mu < q (componentwise) of g_mu^q x^mu, with q = p^e.
/// Only nonzero components are returned, ordered by mu.
std::vector<Polynomial> root_components(const Polynomial& f, std::uint64_t e);

/// I_e(J), the smallest ideal K with J contained in K^[p^e].
///
/// Computed generator by generator: J is inside K^[q] exactly when every generator of J is,
/// and f lies in K^[q] exactly when all of its components g_mu lie in K, because the x^mu
/// with mu < q form a basis of S over S^q. So the components of the generators generate I_e(J).
Ideal frobenius_root(const Ideal& j, std::uint64_t e);

/// (I^[p^e] : I), memoized per (I, e). Equal to (1) for I = 0.
Ideal fedder_carrier(const Ideal& i, std::uint64_t e);

}  // namespace fpair
