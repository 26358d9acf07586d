#include "insep/ratfunc.hpp"

#include <utility>

namespace insep {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.prime(), num_.nvars(), 1)) {}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.prime(), num_.nvars(), 1);
    return;
  }
  if (!den_.is_constant()) {
    const MultiPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const Fp lc = den_.lead_coeff();
  if (lc.value() != 1) {
    const Fp inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_constant() && o.den_.is_constant()) return RatFunc(num_ + o.num_);
  // Henrici: with g = gcd(b, d), gcd(a d/g + c b/g, b d/g) = gcd(a d/g + c b/g, g).
  const MultiPoly g = gcd(den_, o.den_);
  const MultiPoly b1 = *divide_exact(den_, g);
  const MultiPoly d1 = *divide_exact(o.den_, g);
  MultiPoly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return zero(prime(), nvars());
  MultiPoly den = b1 * o.den_;
  if (!g.is_one()) {
    const MultiPoly h = gcd(t, g);
    if (!h.is_one()) {
      t = *divide_exact(t, h);
      den = b1 * *divide_exact(o.den_, h);
    }
  }
  const Fp inv = den.lead_coeff().inverse();
  return RatFunc(t * inv, den * inv, Canonical{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return zero(prime(), nvars());
  if (o.is_constant()) return RatFunc(num_ * (o.num_.lead_coeff() / o.den_.lead_coeff()), den_, Canonical{});
  if (is_constant()) return o * *this;
  // Cross-cancel first; the product of the reduced parts is already canonical up to scaling.
  const MultiPoly g1 = gcd(num_, o.den_);
  const MultiPoly g2 = gcd(o.num_, den_);
  MultiPoly n = *divide_exact(num_, g1) * *divide_exact(o.num_, g2);
  MultiPoly d = *divide_exact(den_, g2) * *divide_exact(o.den_, g1);
  const Fp inv = d.lead_coeff().inverse();
  return RatFunc(n * inv, d * inv, Canonical{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  const Fp inv = num_.lead_coeff().inverse();
  return RatFunc(den_ * inv, num_ * inv, Canonical{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  return *this * o.inverse();
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  // Numerator and denominator stay coprime under powers.
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

RatFunc RatFunc::derivative(int var) const {
  if (var < 0 || var >= nvars()) throw InvalidInput("derivative variable out of range");
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

}  // namespace insep
