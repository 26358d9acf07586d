#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "insep/groebner.hpp"
#include "support.hpp"

using namespace insep;
using insep::testing::field;

namespace {

using FPoly = Polynomial<Fp>;

UExponent ex(std::initializer_list<int> e) {
  UExponent out{};
  std::size_t i = 0;
  for (int x : e) out[i++] = static_cast<std::uint16_t>(x);
  return out;
}

FPoly term(int p, std::initializer_list<int> e, long c, MonomialOrder order = MonomialOrder::Grevlex) {
  return FPoly::monomial(static_cast<int>(e.size()), ex(e), Fp(c, p), order);
}

FPoly random_fpoly(std::mt19937& rng, int p, int nvars, int max_deg, int max_terms,
                   MonomialOrder order = MonomialOrder::Grevlex) {
  std::uniform_int_distribution<int> count(1, max_terms), deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(1, p - 1);
  FPoly f(nvars, Fp(0, p), order);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    UExponent e{};
    int budget = deg(rng);
    for (int v = 0; v < nvars && budget > 0; ++v) {
      std::uniform_int_distribution<int> take(0, budget);
      e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(take(rng));
      budget -= e[static_cast<std::size_t>(v)];
    }
    f += FPoly::monomial(nvars, e, Fp(coeff(rng), p), order);
  }
  return f;
}

std::vector<FPoly> random_ideal(std::mt19937& rng, int p, int nvars, MonomialOrder order = MonomialOrder::Grevlex) {
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<FPoly> gens;
  const int k = count(rng);
  while (static_cast<int>(gens.size()) < k) {
    auto g = random_fpoly(rng, p, nvars, 2, 3, order);
    if (!g.is_zero()) gens.push_back(g);
  }
  return gens;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto gb = buchberger<Fp>({term(2, {1, 0, 0}, 1), term(2, {0, 1, 0}, 1)});
  REQUIRE(gb.generators.size() == 2);
  CHECK(gb.reduced);
  CHECK(gb.generators[0] == term(2, {0, 1, 0}, 1));
  CHECK(gb.generators[1] == term(2, {1, 0, 0}, 1));

  // {U0^2 - U1 U2, U1^2}: coprime leading monomials, so the input is already a
  // basis; {U2} is the only independent set.
  const FPoly a = term(3, {2, 0, 0}, 1) - term(3, {0, 1, 1}, 1);
  const FPoly b = term(3, {0, 2, 0}, 1);
  gb = buchberger<Fp>({a, b});
  REQUIRE(gb.generators.size() == 2);
  CHECK(std::find(gb.generators.begin(), gb.generators.end(), a) != gb.generators.end());
  CHECK(std::find(gb.generators.begin(), gb.generators.end(), b) != gb.generators.end());
  const auto dim = ideal_dimension(gb);
  CHECK(dim.affine_dim == 1);
  CHECK(dim.projective_dim == 0);
  CHECK_FALSE(dim.projective_empty);

  // A principal ideal is its monic generator.
  const FPoly f = term(5, {1, 1}, 3) + term(5, {0, 2}, 2) + term(5, {0, 0}, 1);
  gb = buchberger<Fp>({f});
  REQUIRE(gb.generators.size() == 1);
  CHECK(gb.generators[0] == f.monic());
  CHECK(gb.generators[0].lead_coeff() == Fp(1, 5));

  CHECK_THROWS_AS(buchberger<Fp>({}), InvalidInput);
}

TEST_CASE("buchberger over a rational function field") {
  const auto K = field(2, {"s", "t"});
  using P = Polynomial<RatFunc>;
  const P f = P::power(2, 0, 2, parse_expr("s", K)) + P::power(2, 1, 2, parse_expr("t", K));
  const P g = P::power(2, 0, 1, parse_expr("1/(s+t)", K)) + P::power(2, 1, 1, K.one());
  const auto gb = buchberger<RatFunc>({f, g});
  CHECK(is_groebner_basis(gb.generators));
  CHECK(normal_form(f, gb.generators).is_zero());
  CHECK(normal_form(g, gb.generators).is_zero());
  for (const auto& h : gb.generators) CHECK(h.lead_coeff() == K.one());
}

TEST_CASE("ideal dimension examples") {
  CHECK(ideal_dimension({ex({1, 0, 0}), ex({0, 1, 0})}, 3).affine_dim == 1);
  CHECK(ideal_dimension({ex({1, 0, 0}), ex({0, 1, 0})}, 3).projective_dim == 0);
  CHECK(ideal_dimension({ex({1, 1, 0})}, 3).affine_dim == 2);
  const auto whole = ideal_dimension({ex({0, 0, 0})}, 3);
  CHECK(whole.affine_dim == -1);
  CHECK(whole.projective_empty);
  CHECK(ideal_dimension({}, 4).affine_dim == 4);
  const auto irrelevant = ideal_dimension({ex({1, 0, 0}), ex({0, 1, 0}), ex({0, 0, 1})}, 3);
  CHECK(irrelevant.affine_dim == 0);
  CHECK(irrelevant.projective_empty);

  // The same through buchberger.
  const auto gb = buchberger<Fp>({term(2, {3, 0, 0}, 1), term(2, {0, 2, 0}, 1) + term(2, {1, 1, 0}, 1),
                                  term(2, {0, 0, 1}, 1)});
  CHECK(ideal_dimension(gb).projective_empty);
}

TEST_CASE("verify_codim examples") {
  auto X = PFermatHypersurface::parse(field(2, {"s", "t"}), {"s", "t", "1"});
  auto c = verify_codim(X);
  CHECK(c.predicted_d == 2);
  CHECK(c.oracle_empty);
  CHECK(c.match);

  X = PFermatHypersurface::parse(field(2, {"s", "t"}), {"s", "t", "1", "1"});
  c = verify_codim(X);
  CHECK(c.predicted_d == 2);
  REQUIRE(c.oracle_codim.has_value());
  CHECK(*c.oracle_codim == 2);
  CHECK(c.match);

  X = PFermatHypersurface::parse(field(3, {"t"}), {"t", "t^2", "1"});
  c = verify_codim(X);
  CHECK(c.predicted_d == 1);
  REQUIRE(c.oracle_codim.has_value());
  CHECK(*c.oracle_codim == 1);
  CHECK(c.dimension.projective_dim == 0);
  CHECK(c.match);

  // d = 0: the partials vanish and the locus is all of X.
  X = PFermatHypersurface::parse(field(2, {"s", "t"}), {"s^2", "t^2", "1"});
  c = verify_codim(X);
  CHECK(c.predicted_d == 0);
  REQUIRE(c.oracle_codim.has_value());
  CHECK(*c.oracle_codim == 0);
  CHECK(c.match);
}

TEST_CASE("S-polynomials of computed bases reduce to zero") {
  std::mt19937 rng(31337);
  int bases = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int p = trial % 3 == 0 ? 3 : 2;
    const auto order = trial % 2 ? MonomialOrder::Lex : MonomialOrder::Grevlex;
    const auto gens = random_ideal(rng, p, 3, order);
    const auto gb = buchberger(gens, order);
    CAPTURE(trial);
    for (std::size_t j = 0; j < gb.generators.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) CHECK(normal_form(s_polynomial(gb.generators[i], gb.generators[j]), gb.generators).is_zero());
    // Reduced: monic, and no term divisible by another leading monomial.
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
      CHECK(gb.generators[i].lead_coeff() == Fp(1, p));
      for (std::size_t j = 0; j < gb.generators.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : gb.generators[i].terms()) CHECK_FALSE(monomial_divides(gb.generators[j].lead_exp(), t.exp));
      }
    }
    for (const auto& g : gens) CHECK(normal_form(g, gb.generators).is_zero());
    ++bases;
  }
  CHECK(bases == 500);
}

TEST_CASE("reduced bases do not depend on generator order") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    auto gens = random_ideal(rng, 2, 3);
    const auto a = buchberger(gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    // Adding an ideal member changes nothing.
    gens.push_back(gens.front() * random_fpoly(rng, 2, 3, 1, 2));
    const auto b = buchberger(gens);
    CHECK(a.generators == b.generators);
  }
}

TEST_CASE("normal forms are independent of the reduction order") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 500; ++trial) {
    const auto gb = buchberger(random_ideal(rng, 3, 3));
    const auto f = random_fpoly(rng, 3, 3, 4, 6);
    const auto first = normal_form(f, gb.generators, ReductionStrategy::FirstDivisor);
    const auto last = normal_form(f, gb.generators, ReductionStrategy::LastDivisor);
    CHECK(first == last);
    for (const auto& t : first.terms())
      for (const auto& g : gb.generators) CHECK_FALSE(monomial_divides(g.lead_exp(), t.exp));
  }
}

TEST_CASE("ideal members reduce to zero") {
  std::mt19937 rng(161);
  for (int trial = 0; trial < 200; ++trial) {
    const auto gens = random_ideal(rng, 2, 3);
    const auto gb = buchberger(gens);
    FPoly member(3, Fp(0, 2));
    for (const auto& g : gens) member += g * random_fpoly(rng, 2, 3, 2, 3);
    CHECK(normal_form(member, gb.generators).is_zero());
  }
}

TEST_CASE("resource caps raise instead of answering") {
  std::vector<FPoly> gens = {term(2, {2, 0, 0}, 1) + term(2, {0, 1, 1}, 1), term(2, {0, 2, 0}, 1) + term(2, {1, 0, 1}, 1),
                             term(2, {0, 0, 2}, 1) + term(2, {1, 1, 0}, 1)};
  GroebnerLimits tight;
  tight.max_pairs = 1;
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::Grevlex, tight), ResourceLimit);
  GroebnerLimits few;
  few.max_monomials = 2;
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::Grevlex, few), ResourceLimit);
  CHECK_NOTHROW(buchberger(gens));
}
