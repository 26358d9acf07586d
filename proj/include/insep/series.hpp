#pragma once

#include <vector>

#include "insep/errors.hpp"
#include "insep/scalar.hpp"

namespace insep {

// Truncated power series c_0 + c_1 u + ... + c_{N-1} u^{N-1} over a field F,
// with arithmetic exact modulo u^N.
template <class F>
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t order, const F& zero) : coeffs_(order, zero) {
    if (order == 0) throw InvalidInput("series order must be positive");
  }
  TruncatedSeries(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidInput("series order must be positive");
  }

  static TruncatedSeries constant(std::size_t order, const F& c) {
    TruncatedSeries s(order, zero_like(c));
    s.coeffs_[0] = c;
    return s;
  }
  // The uniformizer u (zero when the order is 1).
  static TruncatedSeries parameter(std::size_t order, const F& zero) {
    TruncatedSeries s(order, zero);
    if (order > 1) s.coeffs_[1] = one_like(zero);
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<F>& coeffs() const { return coeffs_; }
  const F& operator[](std::size_t i) const { return coeffs_[i]; }
  F& operator[](std::size_t i) { return coeffs_[i]; }

  // u-adic valuation; order() for the zero series.
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < coeffs_.size() && insep_is_zero(coeffs_[v])) ++v;
    return v;
  }
  bool is_zero() const { return valuation() == order(); }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    check(o);
    TruncatedSeries r = *this;
    for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] = r.coeffs_[i] + o.coeffs_[i];
    return r;
  }
  TruncatedSeries operator-(const TruncatedSeries& o) const {
    check(o);
    TruncatedSeries r = *this;
    for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] = r.coeffs_[i] - o.coeffs_[i];
    return r;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  TruncatedSeries operator*(const TruncatedSeries& o) const {
    check(o);
    TruncatedSeries r(order(), zero_like(coeffs_[0]));
    for (std::size_t i = 0; i < order(); ++i) {
      if (insep_is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < order(); ++j)
        if (!insep_is_zero(o.coeffs_[j])) r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    }
    return r;
  }
  TruncatedSeries scaled(const F& c) const {
    TruncatedSeries r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
  }

  // Requires an invertible constant term.
  TruncatedSeries inverse() const {
    if (insep_is_zero(coeffs_[0])) throw DivisionByZero("series with zero constant term is not a unit");
    const F inv0 = one_like(coeffs_[0]) / coeffs_[0];
    TruncatedSeries r(order(), zero_like(coeffs_[0]));
    r.coeffs_[0] = inv0;
    for (std::size_t k = 1; k < order(); ++k) {
      F acc = zero_like(coeffs_[0]);
      for (std::size_t j = 1; j <= k; ++j)
        if (!insep_is_zero(coeffs_[j])) acc = acc + coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -(acc * inv0);
    }
    return r;
  }

  TruncatedSeries pow(unsigned e) const {
    TruncatedSeries result = constant(order(), one_like(coeffs_[0]));
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static bool insep_is_zero(const F& x) { return detail::coeff_is_zero(x); }
  void check(const TruncatedSeries& o) const {
    if (o.order() != order()) throw InvalidInput("series of different truncation order");
  }

  std::vector<F> coeffs_;
};

}  // namespace insep
