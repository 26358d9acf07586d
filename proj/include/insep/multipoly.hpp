#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "insep/prime_field.hpp"

namespace insep {

// Sparse polynomial in F_p[t_1, ..., t_n], n <= 4.
//
// A monomial is packed into 64 bits, 16 bits per variable with t_1 in the
// most significant slot, so comparing packed values is the lexicographic order
// t_1 > t_2 > ... > t_n. Terms are kept sorted ascending; the last term is the
// lex-leading one.
class MultiPoly {
 public:
  using Monomial = std::uint64_t;
  static constexpr int kMaxVars = 4;

  struct Term {
    Monomial mono;
    std::uint8_t coeff;  // nonzero residue
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(int p, int nvars);

  static MultiPoly constant(int p, int nvars, long c);
  static MultiPoly variable(int p, int nvars, int index);
  static MultiPoly monomial(int p, int nvars, Monomial m, long c = 1);
  // Builds from unsorted terms, combining duplicates and dropping zeros.
  static MultiPoly from_terms(int p, int nvars, std::vector<Term> terms);

  static int exponent(Monomial m, int var) {
    return static_cast<int>((m >> (16 * (kMaxVars - 1 - var))) & 0xffffu);
  }
  static Monomial pack(const std::array<int, kMaxVars>& e);
  static std::array<int, kMaxVars> unpack(Monomial m);

  int prime() const { return p_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono == 0 && terms_[0].coeff == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // Lex-leading term; undefined on zero.
  const Term& lead() const { return terms_.back(); }
  Fp lead_coeff() const { return Fp(terms_.back().coeff, p_); }
  Fp coeff(Monomial m) const;
  int degree(int var) const;
  int total_degree() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(Fp c) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned e) const;
  MultiPoly mul_monomial(Monomial m) const;
  // Scales so that the lex-leading coefficient is 1 (zero stays zero).
  MultiPoly monic() const;
  MultiPoly derivative(int var) const;
  // Frobenius on F_p[t]: raising to the p-th power multiplies every exponent by p.
  MultiPoly frobenius() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int p_ = 2;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Exact quotient a / b, or nullopt if b does not divide a. Throws DivisionByZero for b = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

// Monic greatest common divisor. gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace insep
