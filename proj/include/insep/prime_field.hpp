#pragma once

#include <cstdint>
#include <ostream>

#include "insep/errors.hpp"

namespace insep {

// Supported characteristics.
inline bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

// Element of F_p for a small prime p. Carries its characteristic so that
// values can be combined without a separate context object.
class Fp {
 public:
  Fp() = default;
  Fp(long value, int p) : p_(static_cast<std::uint8_t>(p)) {
    long r = value % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint8_t>(r);
  }

  int value() const { return v_; }
  int prime() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp o) const { return Fp(v_ + o.v_, p_); }
  Fp operator-(Fp o) const { return Fp(v_ + p_ - o.v_, p_); }
  Fp operator-() const { return Fp(p_ - v_, p_); }
  Fp operator*(Fp o) const { return Fp(v_ * o.v_, p_); }
  Fp operator/(Fp o) const { return *this * o.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  Fp inverse() const {
    if (v_ == 0) throw DivisionByZero("inverse of zero in F_p");
    // Fermat: x^(p-2)
    Fp r(1, p_);
    for (int i = 0; i < p_ - 2; ++i) r *= *this;
    return r;
  }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

 private:
  std::uint8_t v_ = 0;
  std::uint8_t p_ = 2;
};

inline Fp zero_like(const Fp& x) { return Fp(0, x.prime()); }
inline Fp one_like(const Fp& x) { return Fp(1, x.prime()); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

}  // namespace insep
