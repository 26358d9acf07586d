#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "insep/ratfunc.hpp"

namespace insep {

// K = F_p(vars...). The names only matter for parsing and printing.
struct FieldDesc {
  int p = 2;
  std::vector<std::string> vars;

  FieldDesc() = default;
  FieldDesc(int prime, std::vector<std::string> names);

  int nvars() const { return static_cast<int>(vars.size()); }
  RatFunc zero() const { return RatFunc::zero(p, nvars()); }
  RatFunc one() const { return RatFunc::one(p, nvars()); }
  RatFunc constant(long c) const { return RatFunc::constant(p, nvars(), c); }
  RatFunc var(int i) const { return RatFunc::variable(p, nvars(), i); }
  RatFunc var(std::string_view name) const;

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

// Grammar:
//   expr   := ['-'] term (('+'|'-') ['-'] term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' NAT)?
//   base   := NAT | IDENT | '(' expr ')'
// NAT literals are reduced mod p; whitespace is insignificant.
// Throws SyntaxError, UnknownVariable or DivisionByZero.
RatFunc parse_expr(std::string_view input, const FieldDesc& field);

// Canonical text that parse_expr maps back to an equal value.
std::string format(const MultiPoly& f, const FieldDesc& field);
std::string format(const RatFunc& f, const FieldDesc& field);

}  // namespace insep
