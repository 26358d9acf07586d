#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "insep/errors.hpp"
#include "insep/scalar.hpp"

namespace insep {

enum class MonomialOrder { Grevlex, Lex };

// Exponent vector in the homogeneous variables U_0, ..., U_{k-1}, k <= 8.
constexpr int kMaxUVars = 8;
using UExponent = std::array<std::uint16_t, kMaxUVars>;

inline int udegree(const UExponent& e) {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

// True if a > b in the given order.
inline bool monomial_greater(const UExponent& a, const UExponent& b, MonomialOrder order) {
  if (order == MonomialOrder::Grevlex) {
    const int da = udegree(a), db = udegree(b);
    if (da != db) return da > db;
    for (int i = kMaxUVars - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  for (int i = 0; i < kMaxUVars; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline bool monomial_divides(const UExponent& d, const UExponent& m) {
  for (int i = 0; i < kMaxUVars; ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline UExponent monomial_lcm(const UExponent& a, const UExponent& b) {
  UExponent r{};
  for (int i = 0; i < kMaxUVars; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline UExponent monomial_quotient(const UExponent& m, const UExponent& d) {
  UExponent r{};
  for (int i = 0; i < kMaxUVars; ++i) r[i] = static_cast<std::uint16_t>(m[i] - d[i]);
  return r;
}

inline UExponent monomial_product(const UExponent& a, const UExponent& b) {
  UExponent r{};
  for (int i = 0; i < kMaxUVars; ++i) {
    const int s = a[i] + b[i];
    if (s > 0xFFFF) throw ResourceLimit("exponent overflow in U-monomial");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

inline bool monomials_coprime(const UExponent& a, const UExponent& b) {
  for (int i = 0; i < kMaxUVars; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// Sparse polynomial in U_0, ..., U_{k-1} with coefficients in a field F.
// Terms are sorted in decreasing order under the polynomial's monomial order,
// with no zero coefficients, so the leading term is terms().front().
template <class F>
class Polynomial {
 public:
  struct Term {
    UExponent exp;
    F coeff;
  };

  Polynomial(int nvars, const F& zero, MonomialOrder order = MonomialOrder::Grevlex)
      : nvars_(nvars), zero_(zero), order_(order) {
    if (nvars < 1 || nvars > kMaxUVars) throw InvalidInput("polynomials support 1 to 8 U-variables");
  }

  static Polynomial monomial(int nvars, const UExponent& e, const F& c, MonomialOrder order = MonomialOrder::Grevlex) {
    Polynomial r(nvars, zero_like(c), order);
    if (!detail::coeff_is_zero(c)) r.terms_.push_back({e, c});
    return r;
  }
  static Polynomial constant(int nvars, const F& c, MonomialOrder order = MonomialOrder::Grevlex) {
    return monomial(nvars, UExponent{}, c, order);
  }
  // U_i^e with coefficient c.
  static Polynomial power(int nvars, int i, int e, const F& c, MonomialOrder order = MonomialOrder::Grevlex) {
    if (i < 0 || i >= nvars) throw InvalidInput("U-variable index out of range");
    UExponent x{};
    x[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
    return monomial(nvars, x, c, order);
  }
  static Polynomial variable(int nvars, int i, const F& one, MonomialOrder order = MonomialOrder::Grevlex) {
    return power(nvars, i, 1, one, order);
  }

  int nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const F& zero() const { return zero_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && udegree(terms_[0].exp) == 0); }

  const Term& lead() const {
    if (terms_.empty()) throw InvalidInput("leading term of the zero polynomial");
    return terms_.front();
  }
  const UExponent& lead_exp() const { return lead().exp; }
  const F& lead_coeff() const { return lead().coeff; }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, udegree(t.exp));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (udegree(t.exp) != udegree(terms_.front().exp)) return false;
    return true;
  }

  F coeff(const UExponent& e) const {
    for (const auto& t : terms_)
      if (t.exp == e) return t.coeff;
    return zero_;
  }

  Polynomial with_order(MonomialOrder order) const {
    Polynomial r = *this;
    r.order_ = order;
    r.sort();
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check(o);
    Polynomial r(nvars_, zero_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && monomial_greater(terms_[i].exp, o.terms_[j].exp, order_))) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || monomial_greater(o.terms_[j].exp, terms_[i].exp, order_)) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        F c = terms_[i].coeff + o.terms_[j].coeff;
        if (!detail::coeff_is_zero(c)) r.terms_.push_back({terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const F& c) const {
    if (detail::coeff_is_zero(c)) return Polynomial(nvars_, zero_, order_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }
  // c * x^e * this
  Polynomial mul_term(const UExponent& e, const F& c) const {
    if (detail::coeff_is_zero(c)) return Polynomial(nvars_, zero_, order_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.exp = monomial_product(t.exp, e);
      t.coeff = t.coeff * c;
    }
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check(o);
    Polynomial r(nvars_, zero_, order_);
    for (const auto& t : o.terms_) r += mul_term(t.exp, t.coeff);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(nvars_, one_like(zero_), order_);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(one_like(zero_) / lead_coeff());
  }

  // Partial derivative with respect to U_i.
  Polynomial derivative(int i) const {
    Polynomial r(nvars_, zero_, order_);
    for (const auto& t : terms_) {
      const int e = t.exp[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      F c = zero_;
      for (int k = 0; k < e; ++k) c = c + t.coeff;
      if (detail::coeff_is_zero(c)) continue;
      UExponent x = t.exp;
      --x[static_cast<std::size_t>(i)];
      r.terms_.push_back({x, c});
    }
    r.sort();
    return r;
  }

  // Applies fn to every coefficient, e.g. a derivation of K.
  template <class G, class Fn>
  Polynomial<G> map_coeffs(Fn&& fn, const G& zero) const {
    Polynomial<G> r(nvars_, zero, order_);
    std::vector<typename Polynomial<G>::Term> out;
    for (const auto& t : terms_) {
      G c = fn(t.coeff);
      if (!detail::coeff_is_zero(c)) out.push_back({t.exp, std::move(c)});
    }
    return Polynomial<G>::from_terms(nvars_, zero, std::move(out), order_);
  }
  template <class Fn>
  Polynomial map_coeffs(Fn&& fn) const {
    return map_coeffs<F>(std::forward<Fn>(fn), zero_);
  }

  // Substitutes U_i -> images[i] (polynomials in a possibly different ring).
  // lift maps coefficients of this polynomial into the target coefficient field.
  template <class G, class Lift>
  Polynomial<G> substitute(const std::vector<Polynomial<G>>& images, Lift&& lift) const {
    if (static_cast<int>(images.size()) != nvars_) throw InvalidInput("substitution needs one image per variable");
    const auto& target = images.front();
    Polynomial<G> r(target.nvars(), target.zero(), target.order());
    for (const auto& t : terms_) {
      Polynomial<G> m = Polynomial<G>::constant(target.nvars(), lift(t.coeff), target.order());
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < t.exp[static_cast<std::size_t>(i)]; ++k) m *= images[static_cast<std::size_t>(i)];
      r += m;
    }
    return r;
  }

  // Value at a point whose coordinates live in G.
  template <class G, class Lift>
  G evaluate(const std::vector<G>& point, Lift&& lift) const {
    if (static_cast<int>(point.size()) != nvars_) throw InvalidInput("point has wrong number of coordinates");
    G acc = zero_like(point.front());
    for (const auto& t : terms_) {
      G m = lift(t.coeff);
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < t.exp[static_cast<std::size_t>(i)]; ++k) m = m * point[static_cast<std::size_t>(i)];
      acc = acc + m;
    }
    return acc;
  }

  static Polynomial from_terms(int nvars, const F& zero, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::Grevlex) {
    Polynomial r(nvars, zero, order);
    r.terms_ = std::move(terms);
    r.sort();
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    const Polynomial tmp = (a.order_ == b.order_) ? b : b.with_order(a.order_);
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exp != tmp.terms_[i].exp || !(a.terms_[i].coeff == tmp.terms_[i].coeff)) return false;
    return true;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw InvalidInput("polynomials in different numbers of variables");
    if (o.order_ != order_) throw InvalidInput("polynomials under different monomial orders");
  }
  // Sorts descending and merges equal exponents.
  void sort() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term& a, const Term& b) { return monomial_greater(a.exp, b.exp, order_); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().exp == t.exp)
        merged.back().coeff = merged.back().coeff + t.coeff;
      else
        merged.push_back(std::move(t));
      if (!merged.empty() && detail::coeff_is_zero(merged.back().coeff)) merged.pop_back();
    }
    terms_ = std::move(merged);
  }

  int nvars_;
  F zero_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// Text form such as "s*U0^2 + (t+1)*U1^2" using a coefficient formatter.
template <class F, class Fmt>
std::string format_polynomial(const Polynomial<F>& f, Fmt&& fmt, const std::string& var_prefix = "U") {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i < f.nvars(); ++i) {
      const int e = t.exp[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string c = fmt(t.coeff);
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      const bool wrap = c.find_first_of("+-/") != std::string::npos;
      out += (wrap ? "(" + c + ")" : c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace insep
