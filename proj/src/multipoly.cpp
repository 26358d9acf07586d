#include "insep/multipoly.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace insep {

namespace {

constexpr MultiPoly::Monomial kHighBits = 0x8000800080008000ull;

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.prime() != b.prime() || a.nvars() != b.nvars())
    throw InvalidInput("polynomials over different rings");
}

MultiPoly::Monomial add_monomials(MultiPoly::Monomial a, MultiPoly::Monomial b) {
  if ((a | b) & kHighBits) throw ResourceLimit("monomial exponent overflow");
  return a + b;
}

bool divides(MultiPoly::Monomial d, MultiPoly::Monomial m) {
  for (int i = 0; i < MultiPoly::kMaxVars; ++i)
    if (MultiPoly::exponent(d, i) > MultiPoly::exponent(m, i)) return false;
  return true;
}

}  // namespace

MultiPoly::MultiPoly(int p, int nvars) : p_(p), nvars_(nvars) {
  if (!is_supported_prime(p)) throw InvalidField("unsupported characteristic " + std::to_string(p));
  if (nvars < 0 || nvars > kMaxVars) throw InvalidField("at most 4 variables are supported");
}

MultiPoly MultiPoly::constant(int p, int nvars, long c) { return monomial(p, nvars, 0, c); }

MultiPoly MultiPoly::variable(int p, int nvars, int index) {
  if (index < 0 || index >= nvars) throw InvalidInput("variable index out of range");
  std::array<int, kMaxVars> e{};
  e[index] = 1;
  return monomial(p, nvars, pack(e));
}

MultiPoly MultiPoly::monomial(int p, int nvars, Monomial m, long c) {
  MultiPoly r(p, nvars);
  Fp v(c, p);
  if (!v.is_zero()) r.terms_.push_back({m, static_cast<std::uint8_t>(v.value())});
  return r;
}

MultiPoly MultiPoly::from_terms(int p, int nvars, std::vector<Term> terms) {
  MultiPoly r(p, nvars);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (const auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff = static_cast<std::uint8_t>((r.terms_.back().coeff + t.coeff) % p);
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    } else if (t.coeff % p != 0) {
      r.terms_.push_back({t.mono, static_cast<std::uint8_t>(t.coeff % p)});
    }
  }
  return r;
}

MultiPoly::Monomial MultiPoly::pack(const std::array<int, kMaxVars>& e) {
  Monomial m = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[i] < 0 || e[i] >= (1 << 15)) throw ResourceLimit("monomial exponent out of range");
    m |= static_cast<Monomial>(e[i]) << (16 * (kMaxVars - 1 - i));
  }
  return m;
}

std::array<int, MultiPoly::kMaxVars> MultiPoly::unpack(Monomial m) {
  std::array<int, kMaxVars> e{};
  for (int i = 0; i < kMaxVars; ++i) e[i] = exponent(m, i);
  return e;
}

Fp MultiPoly::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return Fp(it->coeff, p_);
  return Fp(0, p_);
}

int MultiPoly::degree(int var) const {
  int d = is_zero() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, exponent(t.mono, var));
  return d;
}

int MultiPoly::total_degree() const {
  int d = is_zero() ? -1 : 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int i = 0; i < nvars_; ++i) s += exponent(t.mono, i);
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(*this, o);
  MultiPoly r(p_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono < o.terms_[j].mono)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].mono < terms_[i].mono) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      int c = (terms_[i].coeff + o.terms_[j].coeff) % p_;
      if (c != 0) r.terms_.push_back({terms_[i].mono, static_cast<std::uint8_t>(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = static_cast<std::uint8_t>(p_ - t.coeff);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(*this, o);
  if (is_zero() || o.is_zero()) return MultiPoly(p_, nvars_);
  if (o.is_constant()) return *this * o.lead_coeff();
  if (is_constant()) return o * lead_coeff();
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      acc.push_back({add_monomials(a.mono, b.mono), static_cast<std::uint8_t>((a.coeff * b.coeff) % p_)});
  return from_terms(p_, nvars_, std::move(acc));
}

MultiPoly MultiPoly::operator*(Fp c) const {
  if (c.is_zero()) return MultiPoly(p_, nvars_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = static_cast<std::uint8_t>((t.coeff * c.value()) % p_);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(p_, nvars_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::mul_monomial(Monomial m) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.mono = add_monomials(t.mono, m);
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || lead().coeff == 1) return *this;
  return *this * lead_coeff().inverse();
}

MultiPoly MultiPoly::derivative(int var) const {
  std::vector<Term> out;
  const Monomial unit = static_cast<Monomial>(1) << (16 * (kMaxVars - 1 - var));
  for (const auto& t : terms_) {
    int e = exponent(t.mono, var);
    int c = (e % p_) * t.coeff % p_;
    if (c != 0) out.push_back({t.mono - unit, static_cast<std::uint8_t>(c)});
  }
  return from_terms(p_, nvars_, std::move(out));
}

MultiPoly MultiPoly::frobenius() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    auto e = unpack(t.mono);
    for (auto& x : e) x *= p_;
    t.mono = pack(e);
  }
  // Scaling all exponents by p preserves lex order; coefficients satisfy c^p = c.
  return r;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (b.is_constant()) return a * b.lead_coeff().inverse();
  std::vector<MultiPoly::Term> quotient;
  MultiPoly r = a;
  const auto lb = b.lead();
  const Fp lb_inv = Fp(lb.coeff, a.prime()).inverse();
  while (!r.is_zero()) {
    const auto lr = r.lead();
    if (!divides(lb.mono, lr.mono)) return std::nullopt;
    const MultiPoly::Monomial m = lr.mono - lb.mono;
    const Fp c = Fp(lr.coeff, a.prime()) * lb_inv;
    quotient.push_back({m, static_cast<std::uint8_t>(c.value())});
    r -= b.mul_monomial(m) * c;
  }
  return MultiPoly::from_terms(a.prime(), a.nvars(), std::move(quotient));
}

namespace {

// Coefficients of a with respect to the variable `var`; entry j holds the
// coefficient of var^j with that variable removed.
std::vector<MultiPoly> split(const MultiPoly& a, int var) {
  std::vector<std::vector<MultiPoly::Term>> parts(static_cast<std::size_t>(std::max(0, a.degree(var)) + 1));
  const int shift = 16 * (MultiPoly::kMaxVars - 1 - var);
  for (const auto& t : a.terms()) {
    const int e = MultiPoly::exponent(t.mono, var);
    parts[e].push_back({t.mono - (static_cast<MultiPoly::Monomial>(e) << shift), t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(MultiPoly::from_terms(a.prime(), a.nvars(), std::move(p)));
  return out;
}

MultiPoly join(const std::vector<MultiPoly>& parts, int var, int p, int nvars) {
  std::vector<MultiPoly::Term> terms;
  const int shift = 16 * (MultiPoly::kMaxVars - 1 - var);
  for (std::size_t e = 0; e < parts.size(); ++e)
    for (const auto& t : parts[e].terms())
      terms.push_back({t.mono + (static_cast<MultiPoly::Monomial>(e) << shift), t.coeff});
  return MultiPoly::from_terms(p, nvars, std::move(terms));
}

void trim(std::vector<MultiPoly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}


MultiPoly gcd_nonzero(const MultiPoly& a, const MultiPoly& b);

MultiPoly content(const std::vector<MultiPoly>& coeffs) {
  MultiPoly g(coeffs.front().prime(), coeffs.front().nvars());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_nonzero(g, c);
    if (g.is_one()) break;
  }
  return g;
}

std::vector<MultiPoly> primitive_part(std::vector<MultiPoly> coeffs, const MultiPoly& cont) {
  if (cont.is_one()) return coeffs;
  for (auto& c : coeffs) c = *divide_exact(c, cont);
  return coeffs;
}

// prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b, in the split representation.
std::vector<MultiPoly> pseudo_remainder(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
  const std::size_t db = b.size() - 1;
  const MultiPoly& lb = b.back();
  trim(a);
  if (a.size() < b.size()) return a;
  std::size_t pending = a.size() - b.size() + 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const MultiPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    --pending;
  }
  if (pending > 0) {
    const MultiPoly f = lb.pow(static_cast<unsigned>(pending));
    for (auto& c : a) c = c * f;
  }
  return a;
}

MultiPoly monomial_gcd(const MultiPoly& m, const MultiPoly& f) {
  auto e = MultiPoly::unpack(m.lead().mono);
  for (const auto& t : f.terms())
    for (int i = 0; i < MultiPoly::kMaxVars; ++i) e[i] = std::min(e[i], MultiPoly::exponent(t.mono, i));
  return MultiPoly::monomial(m.prime(), m.nvars(), MultiPoly::pack(e));
}

// Content with respect to `var`, i.e. the gcd of the coefficients of var^j.
MultiPoly content_in(const MultiPoly& a, int var) { return content(split(a, var)); }

MultiPoly gcd_nonzero(const MultiPoly& a0, const MultiPoly& b0) {
  const int p = a0.prime(), n = a0.nvars();
  if (a0.is_constant() || b0.is_constant()) return MultiPoly::constant(p, n, 1);
  if (a0.size() == 1) return monomial_gcd(a0, b0);
  if (b0.size() == 1) return monomial_gcd(b0, a0);
  // A variable occurring in only one argument can be eliminated by taking
  // content with respect to it.
  MultiPoly a = a0, b = b0;
  for (int v = 0; v < n; ++v) {
    const bool in_a = a.degree(v) > 0, in_b = b.degree(v) > 0;
    if (in_a && !in_b) a = content_in(a, v);
    if (in_b && !in_a) b = content_in(b, v);
  }
  if (!(a == a0) || !(b == b0)) return gcd_nonzero(a, b);
  // Main variable: prefer constant leading coefficients, which keep the
  // pseudo-remainders free of coefficient growth.
  int var = -1;
  std::tuple<int, int, int> best{};
  for (int v = 0; v < n; ++v) {
    if (a.degree(v) <= 0) continue;
    const MultiPoly la = split(a, v).back(), lb = split(b, v).back();
    const std::tuple<int, int, int> score{!la.is_constant() + !lb.is_constant(),
                                          la.total_degree() + lb.total_degree(), std::min(a.degree(v), b.degree(v))};
    if (var < 0 || score < best) {
      var = v;
      best = score;
    }
  }
  auto ca = split(a, var);
  auto cb = split(b, var);
  const MultiPoly conta = content(ca);
  const MultiPoly contb = content(cb);
  const MultiPoly cont = gcd_nonzero(conta, contb);
  auto pa = primitive_part(std::move(ca), conta);
  auto pb = primitive_part(std::move(cb), contb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  // Subresultant remainder sequence in `var`; the divisions by g h^delta are exact.
  MultiPoly g = MultiPoly::constant(p, n, 1);
  MultiPoly h = MultiPoly::constant(p, n, 1);
  MultiPoly result = MultiPoly::constant(p, n, 1);
  while (true) {
    const std::size_t delta = pa.size() - pb.size();
    auto r = pseudo_remainder(pa, pb);
    if (r.empty()) {
      result = join(primitive_part(pb, content(pb)), var, p, n);
      break;
    }
    if (r.size() == 1) break;
    pa = std::move(pb);
    const MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = *divide_exact(c, divisor);
    pb = std::move(r);
    g = pa.back();
    if (delta == 0) continue;
    // h <- g^delta / h^(delta - 1)
    h = *divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  return (cont * result).monic();
}

}  // namespace

namespace {

// q with q^p = a when every exponent of a is divisible by p.
std::optional<MultiPoly> frobenius_root(const MultiPoly& a) {
  const int p = a.prime();
  std::vector<MultiPoly::Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    auto e = MultiPoly::unpack(t.mono);
    for (auto& x : e) {
      if (x % p) return std::nullopt;
      x /= p;
    }
    terms.push_back({MultiPoly::pack(e), t.coeff});
  }
  return MultiPoly::from_terms(a.prime(), a.nvars(), std::move(terms));
}

MultiPoly gcd_dispatch(const MultiPoly& a, const MultiPoly& b);

// gcd(t, q^k) by peeling off gcd(t, q) repeatedly; every gcd involves q only.
MultiPoly gcd_with_power(MultiPoly t, MultiPoly q, int k) {
  MultiPoly result = MultiPoly::constant(t.prime(), t.nvars(), 1);
  for (int i = 0; i < k; ++i) {
    const MultiPoly h = gcd_dispatch(t, q);
    if (h.is_one()) break;
    result *= h;
    t = *divide_exact(t, h);
    q = h;
  }
  return result.monic();
}

MultiPoly gcd_dispatch(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.prime(), a.nvars(), 1);
  const auto ra = frobenius_root(a);
  const auto rb = frobenius_root(b);
  if (ra && rb) return gcd_dispatch(*ra, *rb).frobenius();
  if (rb) return gcd_with_power(a, *rb, a.prime());
  if (ra) return gcd_with_power(b, *ra, a.prime());
  return gcd_nonzero(a, b);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return gcd_dispatch(a, b);
}

}  // namespace insep
