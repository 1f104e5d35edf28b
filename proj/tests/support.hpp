#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "fpair/ideal.hpp"
#include "fpair/parse.hpp"

namespace fpair::testing {

// Parses polynomials and ideals over F_p in the given variables.
struct Ctx {
  std::uint64_t p;
  std::vector<std::string> names;

  Ctx(std::uint64_t p_, std::vector<std::string> names_) : p(p_), names(std::move(names_)) {}

  std::size_t n() const { return names.size(); }
  Polynomial operator()(std::string_view text) const { return parse_polynomial(text, names, p); }
  Ideal ideal(std::initializer_list<std::string_view> gens) const {
    std::vector<Polynomial> v;
    for (auto g : gens) v.push_back((*this)(g));
    return Ideal(p, n(), std::move(v));
  }
  Ideal zero() const { return Ideal(p, n()); }
  Ideal unit() const { return Ideal::unit(p, n()); }
  std::string str(const Polynomial& f) const { return f.str(names); }
};

}  // namespace fpair::testing
