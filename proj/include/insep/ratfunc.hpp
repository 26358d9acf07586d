#pragma once

#include "insep/multipoly.hpp"

namespace insep {

// Element of K = F_p(t_1, ..., t_n) in canonical form: gcd(num, den) = 1 and
// den has lex-leading coefficient 1. Canonical form makes equality structural.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(MultiPoly num, MultiPoly den);
  explicit RatFunc(MultiPoly num);

  static RatFunc zero(int p, int nvars) { return RatFunc(MultiPoly(p, nvars)); }
  static RatFunc one(int p, int nvars) { return RatFunc(MultiPoly::constant(p, nvars, 1)); }
  static RatFunc constant(int p, int nvars, long c) { return RatFunc(MultiPoly::constant(p, nvars, c)); }
  static RatFunc variable(int p, int nvars, int index) { return RatFunc(MultiPoly::variable(p, nvars, index)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  int prime() const { return num_.prime(); }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const;
  RatFunc pow(long e) const;
  RatFunc derivative(int var) const;
  // x -> x^p, computed exponent-wise without multiplication.
  RatFunc frobenius() const { return RatFunc(num_.frobenius(), den_.frobenius(), Canonical{}); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  // Equality by cross-multiplication; agrees with == on canonical values.
  static bool cross_equal(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

 private:
  struct Canonical {};
  RatFunc(MultiPoly num, MultiPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  MultiPoly num_{2, 0};
  MultiPoly den_ = MultiPoly::constant(2, 0, 1);
};

inline RatFunc zero_like(const RatFunc& x) { return RatFunc::zero(x.prime(), x.nvars()); }
inline RatFunc one_like(const RatFunc& x) { return RatFunc::one(x.prime(), x.nvars()); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

}  // namespace insep
