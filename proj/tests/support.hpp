#pragma once

#include <random>
#include <string>
#include <vector>

#include "insep/field.hpp"

namespace insep::testing {

inline MultiPoly random_poly(std::mt19937& rng, int p, int nvars, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> coeff(1, p - 1);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<MultiPoly::Term> terms;
  const int count = nterms(rng);
  for (int i = 0; i < count; ++i) {
    std::array<int, MultiPoly::kMaxVars> e{};
    int budget = deg(rng);
    for (int v = 0; v < nvars && budget > 0; ++v) {
      std::uniform_int_distribution<int> take(0, budget);
      e[v] = take(rng);
      budget -= e[v];
    }
    terms.push_back({MultiPoly::pack(e), static_cast<std::uint8_t>(coeff(rng))});
  }
  return MultiPoly::from_terms(p, nvars, std::move(terms));
}

inline RatFunc random_ratfunc(std::mt19937& rng, int p, int nvars, int max_deg = 2, int max_terms = 3) {
  MultiPoly den(p, nvars);
  while (den.is_zero()) den = random_poly(rng, p, nvars, max_deg, max_terms);
  return RatFunc(random_poly(rng, p, nvars, max_deg, max_terms), den);
}

inline RatFunc nonzero_ratfunc(std::mt19937& rng, int p, int nvars, int max_deg = 2, int max_terms = 3) {
  RatFunc r = random_ratfunc(rng, p, nvars, max_deg, max_terms);
  while (r.is_zero()) r = random_ratfunc(rng, p, nvars, max_deg, max_terms);
  return r;
}

inline FieldDesc field(int p, std::vector<std::string> vars) { return FieldDesc(p, std::move(vars)); }

}  // namespace insep::testing
