#include "insep/extension.hpp"

#include "insep/frobenius.hpp"

namespace insep {

std::shared_ptr<const HeightOneExtension> HeightOneExtension::make(std::vector<RatFunc> moduli, int p, int nvars) {
  for (const auto& b : moduli)
    if (b.prime() != p || b.nvars() != nvars) throw InvalidPresentation("modulus over a different field");
  // The monomials b^a, a in {0..p-1}^m, must be K^p-linearly independent.
  std::vector<RatFunc> monomials{RatFunc::one(p, nvars)};
  for (const auto& b : moduli) {
    std::vector<RatFunc> next;
    for (const auto& m : monomials) {
      RatFunc x = m;
      for (int a = 0; a < p; ++a, x *= b) next.push_back(x);
    }
    monomials = std::move(next);
  }
  if (!p_linear_independent(monomials))
    throw InvalidPresentation("moduli are not p-independent; the quotient is not a field of degree p^m");
  return std::shared_ptr<const HeightOneExtension>(new HeightOneExtension(std::move(moduli), p, nvars));
}

HeightOneExtension::HeightOneExtension(std::vector<RatFunc> moduli, int p, int nvars)
    : p_(p), nvars_(nvars), moduli_(std::move(moduli)), degree_(1) {
  for (std::size_t i = 0; i < moduli_.size(); ++i) degree_ *= static_cast<std::size_t>(p_);
}

std::vector<int> HeightOneExtension::digits(std::size_t index) const {
  std::vector<int> d(moduli_.size());
  for (auto& x : d) {
    x = static_cast<int>(index % static_cast<std::size_t>(p_));
    index /= static_cast<std::size_t>(p_);
  }
  return d;
}

std::size_t HeightOneExtension::index(const std::vector<int>& digits) const {
  std::size_t idx = 0;
  for (std::size_t i = digits.size(); i-- > 0;) idx = idx * static_cast<std::size_t>(p_) + static_cast<std::size_t>(digits[i]);
  return idx;
}

ExtElem::ExtElem(FieldPtr field, std::vector<RatFunc> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_ || coeffs_.size() != field_->degree()) throw InvalidInput("extension element has wrong length");
}

ExtElem ExtElem::zero(const FieldPtr& field) {
  return ExtElem(field, std::vector<RatFunc>(field->degree(), RatFunc::zero(field->prime(), field->nvars())));
}

ExtElem ExtElem::from_base(const FieldPtr& field, const RatFunc& c) {
  ExtElem e = zero(field);
  e.coeffs_[0] = c;
  return e;
}

ExtElem ExtElem::generator(const FieldPtr& field, int i) {
  if (i < 0 || i >= field->generators()) throw InvalidInput("generator index out of range");
  ExtElem e = zero(field);
  std::vector<int> d(static_cast<std::size_t>(field->generators()), 0);
  d[static_cast<std::size_t>(i)] = 1;
  e.coeffs_[field->index(d)] = RatFunc::one(field->prime(), field->nvars());
  return e;
}

bool ExtElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool ExtElem::in_base() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool operator==(const ExtElem& a, const ExtElem& b) {
  if (a.field_ != b.field_ && (!a.field_ || !b.field_ || a.field_->moduli() != b.field_->moduli())) return false;
  return a.coeffs_ == b.coeffs_;
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
  ExtElem r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

ExtElem ExtElem::operator-() const {
  ExtElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExtElem ExtElem::operator-(const ExtElem& o) const { return *this + (-o); }

ExtElem ExtElem::operator*(const RatFunc& c) const {
  ExtElem r = *this;
  for (auto& x : r.coeffs_)
    if (!x.is_zero()) x *= c;
  return r;
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
  const auto& L = *field_;
  const int p = L.prime();
  const std::size_t m = static_cast<std::size_t>(L.generators());
  ExtElem r = zero(field_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto di = L.digits(i);
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      const auto dj = L.digits(j);
      std::vector<int> d(m);
      RatFunc c = coeffs_[i] * o.coeffs_[j];
      for (std::size_t k = 0; k < m; ++k) {
        d[k] = di[k] + dj[k];
        if (d[k] >= p) {
          d[k] -= p;
          c *= L.moduli()[k];
        }
      }
      r.coeffs_[L.index(d)] += c;
    }
  }
  return r;
}

RatFunc ExtElem::pth_power() const {
  // (sum c_a x^a)^p = sum c_a^p b^a
  const auto& L = *field_;
  RatFunc acc = RatFunc::zero(L.prime(), L.nvars());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    RatFunc term = coeffs_[i].frobenius();
    const auto d = L.digits(i);
    for (std::size_t k = 0; k < d.size(); ++k)
      if (d[k]) term *= L.moduli()[k].pow(d[k]);
    acc += term;
  }
  return acc;
}

ExtElem ExtElem::pow(unsigned e) const {
  ExtElem result = one(field_);
  ExtElem base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

ExtElem ExtElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in extension field");
  return pow(static_cast<unsigned>(field_->prime() - 1)) * pth_power().inverse();
}

}  // namespace insep
