#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "insep/extension.hpp"
#include "insep/field.hpp"
#include "insep/matrix.hpp"
#include "insep/series.hpp"
#include "support.hpp"

using namespace insep;
using insep::testing::field;

namespace {

// Independent dense model of F_2[s,t] restricted to total degree <= 4, used to
// brute-force common divisors by trial multiplication.
using Dense = std::set<std::pair<int, int>>;  // monomials s^i t^j with coefficient 1

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (auto [i, j] : a)
    for (auto [k, l] : b) {
      std::pair<int, int> m{i + k, j + l};
      if (!out.erase(m)) out.insert(m);
    }
  return out;
}

std::vector<Dense> all_dense_upto(int deg) {
  std::vector<std::pair<int, int>> monos;
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) monos.push_back({i, j});
  std::vector<Dense> out;
  for (unsigned mask = 1; mask < (1u << monos.size()); ++mask) {
    Dense d;
    for (std::size_t b = 0; b < monos.size(); ++b)
      if (mask & (1u << b)) d.insert(monos[b]);
    out.push_back(d);
  }
  return out;
}

bool dense_divides(const Dense& d, const Dense& a, const std::vector<Dense>& candidates) {
  for (const auto& q : candidates)
    if (dense_mul(d, q) == a) return true;
  return false;
}

int dense_degree(const Dense& d) {
  int m = 0;
  for (auto [i, j] : d) m = std::max(m, i + j);
  return m;
}

}  // namespace

TEST_CASE("gcd examples") {
  const auto K = field(2, {"s", "t"});
  auto P = [&](const char* e) { return parse_expr(e, K).num(); };
  CHECK(gcd(P("s^2+t^2"), P("s+t")) == P("s+t"));
  CHECK(gcd(P("s*t+s"), MultiPoly(2, 2)) == P("s*t+s"));
  CHECK(gcd(MultiPoly(2, 2), MultiPoly(2, 2)).is_zero());

  // Oracle: the highest-degree common divisor of st+s and t^2+1 found by trial
  // multiplication over all polynomials of total degree <= 2.
  const Dense a{{1, 1}, {1, 0}};
  const Dense b{{0, 2}, {0, 0}};
  const auto cands = all_dense_upto(2);
  Dense best{{0, 0}};
  for (const auto& d : cands)
    if (dense_divides(d, a, cands) && dense_divides(d, b, cands) && dense_degree(d) > dense_degree(best)) best = d;
  CHECK(best == Dense{{0, 1}, {0, 0}});  // t + 1
  CHECK(gcd(P("s*t+s"), P("t^2+1")) == P("t+1"));
}

TEST_CASE("gcd divides both inputs and leaves coprime cofactors") {
  std::mt19937 rng(11);
  for (int p : {2, 3, 5}) {
    for (int i = 0; i < 150; ++i) {
      const auto c = insep::testing::random_poly(rng, p, 3, 2, 3);
      const auto a = insep::testing::random_poly(rng, p, 3, 3, 4) * c;
      const auto b = insep::testing::random_poly(rng, p, 3, 3, 4) * c;
      const auto g = gcd(a, b);
      if (a.is_zero() && b.is_zero()) {
        CHECK(g.is_zero());
        continue;
      }
      auto qa = divide_exact(a, g);
      auto qb = divide_exact(b, g);
      REQUIRE(qa);
      REQUIRE(qb);
      CHECK(gcd(*qa, *qb).is_one());
      if (!c.is_zero()) CHECK(divide_exact(g, c.monic()).has_value());
    }
  }
}

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const int p = (i % 2) ? 3 : 2;
    const auto a = insep::testing::random_poly(rng, p, 3, 3, 4);
    const auto b = insep::testing::random_poly(rng, p, 3, 3, 4);
    const auto c = insep::testing::random_poly(rng, p, 3, 3, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("rational function arithmetic") {
  const auto K2 = field(2, {"s", "t"});
  const auto K3 = field(3, {"s", "t"});
  CHECK((parse_expr("1/t", K2) + parse_expr("1/t", K2)).is_zero());
  CHECK((parse_expr("s/t", K2) * parse_expr("t/s", K2)).is_one());
  // Cross-multiplied by hand: 1/(s+t) + 1/(st) = (st + s + t) / (st(s+t)).
  const auto sum = parse_expr("1/(s+t)", K3) + parse_expr("1/(s*t)", K3);
  const auto expect = RatFunc(parse_expr("s*t+s+t", K3).num(), parse_expr("s*t*(s+t)", K3).num());
  CHECK(sum == expect);
  CHECK(sum.den() == parse_expr("s^2*t+s*t^2", K3).num());
  CHECK_THROWS_AS(parse_expr("s", K2) / K2.zero(), DivisionByZero);
}

TEST_CASE("canonical form and cross-multiplication agree") {
  std::mt19937 rng(7);
  for (int i = 0; i < 600; ++i) {
    const int p = (i % 3 == 0) ? 3 : 2;
    const auto a = insep::testing::random_ratfunc(rng, p, 2);
    RatFunc b = insep::testing::random_ratfunc(rng, p, 2);
    if (i % 4 == 0) {
      // Same value, different unreduced presentation.
      const auto u = insep::testing::random_poly(rng, p, 2, 2, 3);
      if (!u.is_zero()) b = RatFunc(a.num() * u, a.den() * u);
    }
    CHECK((a == b) == RatFunc::cross_equal(a, b));
    CHECK(RatFunc(a.num(), a.den()) == a);  // idempotent normalization
    CHECK(a.den().lead_coeff().value() == 1);
  }
}

TEST_CASE("field axioms for rational functions") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const int p = (i % 2) ? 5 : 2;
    const auto a = insep::testing::random_ratfunc(rng, p, 2);
    const auto b = insep::testing::random_ratfunc(rng, p, 2);
    const auto c = insep::testing::nonzero_ratfunc(rng, p, 2);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a / c) * c == a);
    CHECK(a.frobenius() == a.pow(p));
  }
}

TEST_CASE("parser") {
  const auto K2 = field(2, {"s", "t"});
  const auto K3 = field(3, {"s", "t"});
  const auto v = parse_expr("t^2/(s+1)", K2);
  CHECK(v == RatFunc(K2.var(1).num() * K2.var(1).num(), K2.var(0).num() + MultiPoly::constant(2, 2, 1)));
  CHECK_THROWS_AS(parse_expr("1/0", K2), DivisionByZero);
  CHECK_THROWS_AS(parse_expr("s + u", K2), UnknownVariable);
  try {
    parse_expr("s + * t", K2);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_expr("(s + t", K2), SyntaxError);
  CHECK_THROWS_AS(parse_expr("", K2), SyntaxError);
  CHECK(parse_expr("-s", K3) == parse_expr("2*s", K3));
  CHECK(parse_expr(" 7 ", K3) == K3.one());

  // Oracle: expand s*(s+t)^3 by repeated multiplication. In characteristic 3
  // the binomial coefficients 3 vanish, leaving s^4 + s t^3.
  const auto s = K3.var(0).num();
  const auto t = K3.var(1).num();
  MultiPoly expand = s;
  for (int i = 0; i < 3; ++i) expand = expand * (s + t);
  const auto parsed = parse_expr("s*(s+t)^3", K3);
  CHECK(parsed.num() == expand);
  CHECK(parsed.num().size() == 2);
}

TEST_CASE("format and parse round-trip") {
  std::mt19937 rng(19);
  for (int p : {2, 3, 5, 7}) {
    const auto K = field(p, {"s", "t", "u"});
    for (int i = 0; i < 150; ++i) {
      const auto f = insep::testing::random_ratfunc(rng, p, 3);
      CHECK(parse_expr(format(f, K), K) == f);
    }
  }
  const auto K = field(3, {"s", "t"});
  CHECK(format(parse_expr("(s*t)/(s^2*t)", K), K) == "1/s");
  CHECK(format(parse_expr("1/(s*t)", K), K) == "1/(s*t)");
}

TEST_CASE("field descriptor validation") {
  CHECK_THROWS_AS(FieldDesc(4, {"s"}), InvalidField);
  CHECK_THROWS_AS(FieldDesc(2, {"s", "s"}), InvalidField);
  CHECK_THROWS_AS(FieldDesc(2, {"a", "b", "c", "d", "e"}), InvalidField);
  CHECK_THROWS_AS(FieldDesc(2, {"1x"}), InvalidField);
  CHECK(FieldDesc(2, {}).nvars() == 0);
}

TEST_CASE("exact linear algebra") {
  const auto K = field(2, {"s", "t"});
  auto E = [&](const char* e) { return parse_expr(e, K); };
  const auto zero = K.zero();

  auto id = Matrix<RatFunc>::identity(3, zero);
  std::vector<RatFunc> b{E("s"), E("t+1"), E("1/s")};
  CHECK(*linear_solve(id, b) == b);

  Matrix<RatFunc> z(2, 2, zero);
  CHECK(rank(z) == 0);
  CHECK(kernel_basis(z).size() == 2);

  // det [[s, t], [t, s]] = s^2 + t^2 = (s+t)^2, nonzero as a rational function.
  auto a = Matrix<RatFunc>::from_rows({{E("s"), E("t")}, {E("t"), E("s")}}, 2, zero);
  CHECK((a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) == E("(s+t)^2"));
  CHECK(rank(a) == 2);

  auto singular = Matrix<RatFunc>::from_rows({{E("s"), E("s")}, {E("t"), E("t")}}, 2, zero);
  CHECK(rank(singular) == 1);
  const auto ker = kernel_basis(singular);
  REQUIRE(ker.size() == 1);
  for (const auto& x : singular * ker[0]) CHECK(x.is_zero());
  CHECK_FALSE(linear_solve(singular, {E("1"), E("0")}).has_value());

  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    Matrix<RatFunc> m(3, 4, zero);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = insep::testing::random_ratfunc(rng, 2, 2, 1, 2);
    std::vector<RatFunc> x0(4, zero);
    for (auto& x : x0) x = insep::testing::random_ratfunc(rng, 2, 2, 1, 2);
    const auto rhs = m * x0;
    auto sol = linear_solve(m, rhs);
    REQUIRE(sol);
    CHECK(m * *sol == rhs);
    const auto kb = kernel_basis(m);
    CHECK(kb.size() + rank(m) == 4);
    for (const auto& k : kb)
      for (const auto& y : m * k) CHECK(y.is_zero());
  }
}

TEST_CASE("simple p-th root extension") {
  const auto K = field(3, {"t"});
  auto L = HeightOneExtension::simple(K.var(0));
  const auto x = ExtElem::generator(L, 0);
  CHECK(x.pow(3) == ExtElem::from_base(L, K.var(0)));
  CHECK(x.pth_power() == K.var(0));
  const auto y = x * x + ExtElem::from_base(L, K.constant(1));
  CHECK(y * y.inverse() == ExtElem::one(L));
  CHECK_THROWS_AS(HeightOneExtension::simple(parse_expr("t^3", K)), InvalidPresentation);

  const auto K2 = field(2, {"s", "t"});
  auto L2 = HeightOneExtension::make({K2.var(0), K2.var(1)}, 2, 2);
  CHECK(L2->degree() == 4);
  const auto a = ExtElem::generator(L2, 0) + ExtElem::generator(L2, 1);
  CHECK(a.pth_power() == parse_expr("s+t", K2));
  CHECK(a * a.inverse() == ExtElem::one(L2));
  CHECK_THROWS_AS(HeightOneExtension::make({K2.var(1), parse_expr("s^2*t", K2)}, 2, 2), InvalidPresentation);
}

TEST_CASE("truncated series") {
  const auto K = field(2, {"t"});
  const auto one = K.one();
  auto u = TruncatedSeries<RatFunc>::parameter(4, K.zero());
  auto unit = TruncatedSeries<RatFunc>::constant(4, K.var(0)) + u;
  CHECK(unit * unit.inverse() == TruncatedSeries<RatFunc>::constant(4, one));
  CHECK(u.pow(4).is_zero());
  CHECK(u.pow(3).valuation() == 3);
  CHECK_THROWS_AS(u.inverse(), DivisionByZero);
}
