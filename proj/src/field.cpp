#include "insep/field.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace insep {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view in, const FieldDesc& field) : in_(in), field_(field) {}

  RatFunc parse() {
    RatFunc value = expr();
    skip_ws();
    if (pos_ != in_.size()) throw SyntaxError(pos_, std::string("unexpected '") + in_[pos_] + "'");
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc signed_term() {
    bool negate = false;
    while (accept('-')) negate = !negate;
    RatFunc t = term();
    return negate ? -t : t;
  }

  RatFunc expr() {
    RatFunc acc = signed_term();
    while (true) {
      if (accept('+')) {
        acc += signed_term();
      } else if (accept('-')) {
        acc -= signed_term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    RatFunc b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const std::string digits = natural();
      if (digits.empty()) throw SyntaxError(at, "expected exponent");
      if (digits.size() > 6) throw SyntaxError(at, "exponent too large");
      b = b.pow(std::stol(digits));
    }
    return b;
  }

  std::string natural() {
    const std::size_t start = pos_;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    return std::string(in_.substr(start, pos_ - start));
  }

  RatFunc base() {
    skip_ws();
    if (pos_ >= in_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = in_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = natural();
      long r = 0;
      for (char d : digits) r = (r * 10 + (d - '0')) % field_.p;
      return field_.constant(r);
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < in_.size() && is_ident_char(in_[pos_])) ++pos_;
      const std::string_view name = in_.substr(start, pos_ - start);
      auto it = std::find(field_.vars.begin(), field_.vars.end(), name);
      if (it == field_.vars.end())
        throw UnknownVariable("unknown variable '" + std::string(name) + "' at position " + std::to_string(start));
      return field_.var(static_cast<int>(it - field_.vars.begin()));
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view in_;
  const FieldDesc& field_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldDesc::FieldDesc(int prime, std::vector<std::string> names) : p(prime), vars(std::move(names)) {
  if (!is_supported_prime(p)) throw InvalidField("unsupported characteristic " + std::to_string(p));
  if (vars.size() > static_cast<std::size_t>(MultiPoly::kMaxVars))
    throw InvalidField("at most 4 variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !is_ident_start(v[0]) || !std::all_of(v.begin(), v.end(), is_ident_char))
      throw InvalidField("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InvalidField("duplicate variable name '" + v + "'");
  }
}

RatFunc FieldDesc::var(std::string_view name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw UnknownVariable("unknown variable '" + std::string(name) + "'");
  return var(static_cast<int>(it - vars.begin()));
}

RatFunc parse_expr(std::string_view input, const FieldDesc& field) { return Parser(input, field).parse(); }

std::string format(const MultiPoly& f, const FieldDesc& field) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i < f.nvars(); ++i) {
      const int e = MultiPoly::exponent(it->mono, i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += field.vars.at(static_cast<std::size_t>(i));
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += std::to_string(it->coeff);
    } else if (it->coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(it->coeff) + "*" + mono;
    }
  }
  return out;
}

std::string format(const RatFunc& f, const FieldDesc& field) {
  if (f.den().is_one()) return format(f.num(), field);
  const std::string num = format(f.num(), field);
  const std::string den = format(f.den(), field);
  const bool bare_den = f.den().size() == 1 && den.find('*') == std::string::npos;
  return (f.num().size() == 1 ? num : "(" + num + ")") + "/" + (bare_den ? den : "(" + den + ")");
}

}  // namespace insep
