#pragma once

#include <memory>
#include <vector>

#include "insep/ratfunc.hpp"

namespace insep {

// L = K(b_1^{1/p}, ..., b_m^{1/p}) for K-p-independent b_i, presented as
// K[x_1, ..., x_m]/(x_i^p - b_i). Elements are coefficient vectors over the
// monomial basis x^a, a in {0..p-1}^m, indexed in mixed radix with x_1 as the
// least significant digit. m = 1 is the simple extension K(beta^{1/p}).
class HeightOneExtension {
 public:
  // Throws InvalidPresentation unless the moduli are p-independent over K^p.
  static std::shared_ptr<const HeightOneExtension> make(std::vector<RatFunc> moduli, int p, int nvars);
  static std::shared_ptr<const HeightOneExtension> simple(const RatFunc& beta) {
    return make({beta}, beta.prime(), beta.nvars());
  }

  int prime() const { return p_; }
  int nvars() const { return nvars_; }
  int generators() const { return static_cast<int>(moduli_.size()); }
  const std::vector<RatFunc>& moduli() const { return moduli_; }
  // [L:K] = p^m
  std::size_t degree() const { return degree_; }

  std::vector<int> digits(std::size_t index) const;
  std::size_t index(const std::vector<int>& digits) const;

 private:
  HeightOneExtension(std::vector<RatFunc> moduli, int p, int nvars);

  int p_;
  int nvars_;
  std::vector<RatFunc> moduli_;
  std::size_t degree_;
};

class ExtElem {
 public:
  using FieldPtr = std::shared_ptr<const HeightOneExtension>;

  ExtElem() = default;
  ExtElem(FieldPtr field, std::vector<RatFunc> coeffs);

  static ExtElem zero(const FieldPtr& field);
  static ExtElem one(const FieldPtr& field) { return from_base(field, RatFunc::one(field->prime(), field->nvars())); }
  static ExtElem from_base(const FieldPtr& field, const RatFunc& c);
  // The i-th generator x_i = b_i^{1/p}.
  static ExtElem generator(const FieldPtr& field, int i);

  const FieldPtr& field() const { return field_; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  const RatFunc& coeff(std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;
  // True if the element lies in K (only the constant coordinate is nonzero).
  bool in_base() const;

  ExtElem operator+(const ExtElem& o) const;
  ExtElem operator-(const ExtElem& o) const;
  ExtElem operator-() const;
  ExtElem operator*(const ExtElem& o) const;
  ExtElem operator*(const RatFunc& c) const;
  ExtElem operator/(const ExtElem& o) const { return *this * o.inverse(); }
  ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
  ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
  ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }

  // y^p lies in K for every y in L.
  RatFunc pth_power() const;
  ExtElem pow(unsigned e) const;
  // y^{-1} = y^{p-1} / y^p.
  ExtElem inverse() const;

  friend bool operator==(const ExtElem& a, const ExtElem& b);

 private:
  FieldPtr field_;
  std::vector<RatFunc> coeffs_;
};

inline ExtElem zero_like(const ExtElem& x) { return ExtElem::zero(x.field()); }
inline ExtElem one_like(const ExtElem& x) { return ExtElem::one(x.field()); }
inline bool is_zero(const ExtElem& x) { return x.is_zero(); }

}  // namespace insep
