#include "insep/curves.hpp"

#include "insep/frobenius.hpp"

namespace insep {

namespace {

ExtElem lift(const std::shared_ptr<const HeightOneExtension>& L, const RatFunc& c) { return ExtElem::from_base(L, c); }

// P(x) = sum c_i x^i as an element of L = K(x), x^p = lambda.
ExtElem root_polynomial(const std::shared_ptr<const HeightOneExtension>& L, const CurveNormalForm& nf) {
  return ExtElem(L, nf.c);
}

}  // namespace

UPoly CurveNormalForm::equation() const {
  return UPoly::power(3, 0, p(), lambda) + UPoly::power(3, 1, p(), q) + UPoly::power(3, 2, p(), field.one());
}

CurveNormalForm normal_form(const FieldDesc& field, const std::vector<RatFunc>& lambda) {
  if (lambda.size() != 3) throw InvalidInput("a plane curve needs three coefficients");
  const PFermatHypersurface X(field, lambda);
  const int d = invariant_d(X);
  if (d != 1) throw WrongInvariant("curve normal form needs d = 1, got d = " + std::to_string(d));

  CurveNormalForm nf;
  nf.field = field;
  nf.raw = lambda;
  int pivot = 2;
  while (lambda[static_cast<std::size_t>(pivot)].is_zero()) --pivot;
  nf.scale = lambda[static_cast<std::size_t>(pivot)];
  std::vector<int> others;
  for (int i = 0; i < 3; ++i)
    if (i != pivot) others.push_back(i);
  auto ratio = [&](int i) { return lambda[static_cast<std::size_t>(i)] / nf.scale; };
  // d = 1 forces one of the two ratios outside K^p.
  const int lam = is_pth_power(ratio(others[0])) ? others[1] : others[0];
  const int other = lam == others[0] ? others[1] : others[0];
  nf.perm = {lam, other, pivot};
  nf.lambda = ratio(lam);
  nf.q = ratio(other);

  const auto coeffs = membership_in_pspan(nf.q, {nf.lambda});
  ensure(coeffs.has_value(), "with d = 1 the second ratio lies in K^p(lambda)");
  nf.c.assign(static_cast<std::size_t>(field.p), field.zero());
  for (const auto& [a, value] : *coeffs) nf.c[static_cast<std::size_t>(a.front())] = value;
  RatFunc check = field.zero();
  for (int i = 0; i < field.p; ++i) check += nf.c[static_cast<std::size_t>(i)].frobenius() * nf.lambda.pow(i);
  ensure(check == nf.q, "Q(lambda) does not reproduce the coefficient");
  return nf;
}

NormalizationMap normalization(const CurveNormalForm& nf) {
  NormalizationMap out;
  out.L = HeightOneExtension::simple(nf.lambda);
  const auto& L = out.L;
  const ExtElem one = ExtElem::one(L);
  const ExtElem x = ExtElem::generator(L, 0);
  const LPoly T0 = LPoly::variable(2, 0, one), T1 = LPoly::variable(2, 1, one);
  out.images = {T0, T1, T0.scaled(-x) + T1.scaled(-root_polynomial(L, nf))};
  out.pullback = nf.equation().substitute(out.images, [&](const RatFunc& c) { return lift(L, c); });
  ensure(out.pullback.is_zero(), "the normalization does not map into the curve");

  // X cap V_+(U_0) is the binary form Q U_1^p + U_2^p of degree p over K;
  // its preimage V_+(T_0) is an L-rational point, of K-length [L:K].
  const UPoly V0(2, nf.field.zero());
  const UPoly restricted = nf.equation().substitute(
      std::vector<UPoly>{V0, UPoly::variable(2, 0, nf.field.one()), UPoly::variable(2, 1, nf.field.one())},
      [](const RatFunc& c) { return c; });
  ensure(!restricted.is_zero(), "U_0 = 0 cannot contain the curve");
  out.divisor_length = restricted.total_degree();
  out.preimage_length = static_cast<int>(L->degree()) * out.images[0].total_degree();
  ensure(out.divisor_length % out.preimage_length == 0, "lengths are incompatible");
  out.degree = out.divisor_length / out.preimage_length;
  ensure(out.degree == 1, "the normalization must be birational");
  return out;
}

SingularPointData singular_point(const CurveNormalForm& nf) {
  SingularPointData out;
  out.L = HeightOneExtension::simple(nf.lambda);
  const auto& L = out.L;
  const int p = nf.p();
  const ExtElem x = ExtElem::generator(L, 0);

  // Q'(lambda) = sum i c_i^p lambda^{i-1} lies in K^p(lambda) = L^p.
  RatFunc dq = nf.field.zero();
  ExtElem expected = ExtElem::zero(L);
  for (int i = 1; i < p; ++i) {
    const RatFunc& ci = nf.c[static_cast<std::size_t>(i)];
    if (ci.is_zero()) continue;
    const RatFunc coefficient = RatFunc::constant(p, nf.field.nvars(), i);
    dq += coefficient * ci.frobenius() * nf.lambda.pow(i - 1);
    expected += x.pow(static_cast<unsigned>(i - 1)) * (coefficient * ci);
  }
  const auto rho = field_pth_root(lift(L, dq));
  ensure(rho.has_value(), "Q'(lambda) must be a p-th power in L");
  ensure(*rho == expected, "p-th root of Q'(lambda) disagrees with sum i c_i x^{i-1}");
  out.rho = *rho;
  out.a = {-out.rho, ExtElem::one(L)};
  out.image = {-out.rho, ExtElem::one(L), x * out.rho - root_polynomial(L, nf)};
  out.raw_image.assign(3, ExtElem::zero(L));
  for (int k = 0; k < 3; ++k) out.raw_image[static_cast<std::size_t>(nf.perm[static_cast<std::size_t>(k)])] = out.image[static_cast<std::size_t>(k)];

  out.residue_degree = 1;
  for (const auto& c : out.image)
    if (!c.in_base()) out.residue_degree = p;

  auto lifter = [&](const RatFunc& c) { return lift(L, c); };
  const std::vector<ExtElem> point(out.image.begin(), out.image.end());
  ensure(nf.equation().evaluate(point, lifter).is_zero(), "a_0 does not lie on the curve");
  const auto S = singular_ideal(nf.raw_curve());
  for (const auto& g : S.partial_generators)
    ensure(g.evaluate(out.raw_image, lifter).is_zero(), "a_0 is not in the singular locus");
  for (const auto& g : S.derivation_generators)
    ensure(g.evaluate(out.raw_image, lifter).is_zero(), "a_0 is not in the singular locus");
  return out;
}

ConductorRing::ConductorRing(std::shared_ptr<const HeightOneExtension> L, std::size_t order)
    : L_(std::move(L)), order_(order), zero_(RatFunc::zero(L_->prime(), L_->nvars())) {
  if (order_ == 0) throw InvalidInput("truncation order must be positive");
}

KVector ConductorRing::to_vector(const TruncatedSeries<ExtElem>& s) const {
  if (s.order() != order_) throw InvalidInput("series has the wrong truncation order");
  KVector v(dim(), zero_);
  const std::size_t D = degree();
  for (std::size_t j = 0; j < order_; ++j)
    for (std::size_t i = 0; i < D; ++i) v[j * D + i] = s[j].coeff(i);
  return v;
}

TruncatedSeries<ExtElem> ConductorRing::to_series(const KVector& v) const {
  if (v.size() != dim()) throw InvalidInput("vector has the wrong length");
  const std::size_t D = degree();
  std::vector<ExtElem> coeffs;
  for (std::size_t j = 0; j < order_; ++j)
    coeffs.emplace_back(L_, std::vector<RatFunc>(v.begin() + static_cast<std::ptrdiff_t>(j * D),
                                                 v.begin() + static_cast<std::ptrdiff_t>((j + 1) * D)));
  return TruncatedSeries<ExtElem>(std::move(coeffs));
}

KVector ConductorRing::multiply(const KVector& a, const KVector& b) const {
  return to_vector(to_series(a) * to_series(b));
}

KVector ConductorRing::one() const { return basis_element(0, 0); }

KVector ConductorRing::basis_element(std::size_t i, std::size_t j) const {
  KVector v(dim(), zero_);
  v.at(j * degree() + i) = RatFunc::one(L_->prime(), L_->nvars());
  return v;
}

bool ConductorRing::in_power_of_m(const KVector& v, std::size_t k) const {
  for (std::size_t idx = 0; idx < std::min(dim(), k * degree()); ++idx)
    if (!v[idx].is_zero()) return false;
  return true;
}

EchelonSpace<RatFunc> subalgebra_closure(const ConductorRing& R, const std::vector<KVector>& gens) {
  EchelonSpace<RatFunc> space(R.dim(), R.zero());
  space.insert(R.one());
  for (const auto& g : gens) space.insert(g);
  std::size_t done = 0;  // products among the first `done` basis vectors are in
  while (done < space.dim()) {
    const auto basis = space.basis();
    const std::size_t n = basis.size();
    for (std::size_t j = done; j < n; ++j)
      for (std::size_t i = 0; i <= j; ++i) space.insert(R.multiply(basis[i], basis[j]));
    done = n;
  }
  return space;
}

std::string to_string(ConductorCase c) {
  switch (c) {
    case ConductorCase::P2: return "P2";
    case ConductorCase::ResidueL: return "ResidueL";
    case ConductorCase::ResidueK: return "ResidueK";
  }
  return "?";
}

namespace {

// Images in L[u]/(u^N) of U_k / U_chart, with T_0/T_1 = u - rho.
std::vector<KVector> chart_coordinates(const CurveNormalForm& nf, const SingularPointData& sp, const ConductorRing& R,
                                       int chart) {
  const auto& L = sp.L;
  const std::size_t N = R.order();
  TruncatedSeries<ExtElem> s(N, ExtElem::zero(L));
  s[0] = -sp.rho;
  if (N > 1) s[1] = ExtElem::one(L);
  const auto one = TruncatedSeries<ExtElem>::constant(N, ExtElem::one(L));
  const ExtElem x = ExtElem::generator(L, 0);
  const std::vector<TruncatedSeries<ExtElem>> images = {
      s, one, s.scaled(-x) + TruncatedSeries<ExtElem>::constant(N, -root_polynomial(L, nf))};
  const auto& den = images[static_cast<std::size_t>(chart)];
  if (den[0].is_zero()) throw InvalidInput("the chosen chart does not contain the singular point");
  const auto inv = den.inverse();
  std::vector<KVector> out;
  for (int k = 0; k < 3; ++k)
    if (k != chart) out.push_back(R.to_vector(images[static_cast<std::size_t>(k)] * inv));
  return out;
}

// Span of the vectors of `space` whose first `block` coordinates vanish.
std::vector<KVector> vanishing_on_prefix(const std::vector<KVector>& basis, std::size_t block, const RatFunc& zero) {
  if (basis.empty()) return {};
  Matrix<RatFunc> proj(block, basis.size(), zero);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < block; ++r) proj(r, c) = basis[c][r];
  std::vector<KVector> out;
  for (const auto& alpha : kernel_basis(proj)) {
    KVector v(basis.front().size(), zero);
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (!alpha[c].is_zero())
        for (std::size_t k = 0; k < v.size(); ++k)
          if (!basis[c][k].is_zero()) v[k] += alpha[c] * basis[c][k];
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_of_block(const std::vector<KVector>& vs, std::size_t from, std::size_t len, const RatFunc& zero) {
  EchelonSpace<RatFunc> space(len, zero);
  for (const auto& v : vs) space.insert(KVector(v.begin() + static_cast<std::ptrdiff_t>(from),
                                                v.begin() + static_cast<std::ptrdiff_t>(from + len)));
  return space.dim();
}

KVector sub(const KVector& a, const KVector& b) {
  KVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

}  // namespace

ConductorProfile conductor_profile(const CurveNormalForm& nf) {
  const auto sp = singular_point(nf);
  int chart = 0;
  while (sp.image[static_cast<std::size_t>(chart)].is_zero()) ++chart;
  return conductor_profile(nf, chart);
}

ConductorProfile conductor_profile(const CurveNormalForm& nf, int chart) {
  const int p = nf.p();
  if (p > 5) throw UnsupportedP("conductor profiles are computed for p <= 5");
  if (chart < 0 || chart > 2) throw InvalidInput("chart index must be 0, 1 or 2");
  const auto sp = singular_point(nf);
  const auto up = static_cast<std::size_t>(p);

  ConductorProfile out;
  out.p = p;
  out.truncation = up - 1;
  out.chart = chart;
  out.ring = std::make_shared<ConductorRing>(sp.L, out.truncation);
  const ConductorRing& R = *out.ring;
  const RatFunc& zero = R.zero();
  out.coordinates = chart_coordinates(nf, sp, R, chart);
  const auto closure = subalgebra_closure(R, out.coordinates);
  out.basis = closure.basis();
  out.oa_dim = R.dim();
  out.oa0_dim = out.basis.size();

  EchelonSpace<RatFunc> with_L = closure;
  for (std::size_t i = 0; i < up; ++i) with_L.insert(R.basis_element(i, 0));
  out.intersection_with_L = out.oa0_dim + up - with_L.dim();
  out.residue_dim = rank_of_block(out.basis, 0, up, zero);

  ensure(out.oa_dim == up * (up - 1), "dim_K O_A must be p(p-1)");
  ensure(2 * out.oa0_dim == out.oa_dim, "dim_K O_{A_0} must be half of dim_K O_A");
  ensure(out.intersection_with_L == 1, "O_{A_0} must meet L in K");

  auto generates = [&](const std::vector<KVector>& gens) { return subalgebra_closure(R, gens).dim() == out.oa0_dim; };
  if (p == 2) {
    out.tag = ConductorCase::P2;
    ensure(out.oa0_dim == 1, "for p = 2 the subring O_{A_0} is K");
  } else if (out.residue_dim == 1) {
    out.tag = ConductorCase::ResidueK;
    const auto m = vanishing_on_prefix(out.basis, up, zero);
    for (std::size_t i = 0; i < m.size() && !out.v; ++i)
      for (std::size_t j = i + 1; j < m.size() && !out.v; ++j)
        if (rank_of_block({m[i], m[j]}, up, up, zero) == 2 && generates({m[i], m[j]})) {
          out.v = m[i];
          out.w = m[j];
        }
    ensure(out.v.has_value(), "no generators v, w with independent classes mod m^2");
  } else if (out.residue_dim == up) {
    out.tag = ConductorCase::ResidueL;
    std::vector<KVector> candidates = out.coordinates;
    candidates.insert(candidates.end(), out.basis.begin(), out.basis.end());
    for (const auto& h : candidates) {
      bool residue_outside_k = false;
      for (std::size_t i = 1; i < up; ++i) residue_outside_k = residue_outside_k || !h[i].is_zero();
      if (!residue_outside_k) continue;
      KVector mu = R.basis_element(0, 0);
      for (std::size_t i = 0; i < up; ++i) mu[i] = h[i];
      const KVector f = sub(h, mu);
      if (R.in_power_of_m(f, 2)) continue;
      out.mu_plus_f = h;
      break;
    }
    ensure(out.mu_plus_f.has_value(), "no coefficient-field generator mu + f with f outside m^2");
    if (out.truncation > 2) {
      for (const auto& g : vanishing_on_prefix(out.basis, 2 * up, zero))
        if (!R.in_power_of_m(g, 3)) {
          out.g = g;
          break;
        }
      ensure(out.g.has_value(), "no element of O_{A_0} in m^2 \\ m^3");
      ensure(generates({*out.mu_plus_f, *out.g}), "mu + f and g do not generate O_{A_0}");
    } else {
      // m^2 = 0 in L[u]/(u^2): there is no g, and mu + f alone generates.
      ensure(generates({*out.mu_plus_f}), "mu + f does not generate O_{A_0}");
    }
  } else {
    throw InvariantViolation("residue field of O_{A_0} is neither K nor L");
  }

  // The truncation p - 1 is the conductor exponent: at a longer truncation
  // u^{p-1} L[u] lies in the image of the local ring, u^{p-2} L[u] does not.
  out.check_truncation = up + 1;
  const ConductorRing R2(sp.L, out.check_truncation);
  const auto closure2 = subalgebra_closure(R2, chart_coordinates(nf, sp, R2, chart));
  bool contains_conductor = true;
  for (std::size_t j = up - 1; j < R2.order(); ++j)
    for (std::size_t i = 0; i < up; ++i) contains_conductor = contains_conductor && closure2.contains(R2.basis_element(i, j));
  bool smaller_fails = false;
  for (std::size_t i = 0; i < up; ++i) smaller_fails = smaller_fails || !closure2.contains(R2.basis_element(i, up - 2));
  const bool dims = closure2.dim() == out.oa0_dim + up * (R2.order() - (up - 1));
  out.exponent_confirmed = contains_conductor && smaller_fails && dims;
  ensure(out.exponent_confirmed, "conductor exponent is not p - 1");
  return out;
}

bool remains_integral(const CurveNormalForm& nf, const RatFunc& b) {
  if (is_pth_power(b)) throw TrivialExtension("b is a p-th power in K; K(b^{1/p}) = K");
  return !membership_in_pspan(b, {nf.lambda}).has_value();
}

GlueingCohomology glueing_cohomology(const ConductorRing& R, const std::vector<KVector>& sub) {
  EchelonSpace<RatFunc> S(R.dim(), R.zero());
  for (const auto& v : sub) S.insert(v);
  if (!S.contains(R.one())) throw NotASubalgebra("the subspace does not contain 1");
  const auto basis = S.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!S.contains(R.multiply(basis[i], basis[j]))) throw NotASubalgebra("the subspace is not closed under products");

  const std::size_t D = R.degree();
  EchelonSpace<RatFunc> sum = S;
  for (std::size_t i = 0; i < D; ++i) sum.insert(R.basis_element(i, 0));
  GlueingCohomology out;
  // kernel of (g, h) -> g - h is the intersection S cap L
  out.h0 = static_cast<int>(S.dim() + D - sum.dim());
  out.h1 = static_cast<int>(R.dim()) - static_cast<int>(S.dim()) - static_cast<int>(D) + out.h0;
  ensure(out.h1 == static_cast<int>(R.dim() - sum.dim()), "H^1 must be the cokernel");
  out.admissible = 2 * S.dim() == R.dim() && out.h0 == 1;
  if (out.admissible && R.order() + 1 == D) {
    const int p = static_cast<int>(D);
    ensure(out.h1 == (p - 1) * (p - 2) / 2, "admissible glueing must give h^1 = (p-1)(p-2)/2");
  }
  out.genus_one = out.h0 == 1 && out.h1 == 1;
  return out;
}

MultipleCurveProfile multiple_curve_profile(int p) {
  if (p < 2) throw InvalidInput("multiplicity must be at least 2");
  MultipleCurveProfile out;
  out.multiplicity = p;
  out.chi = 1 - (p - 1) * (p - 2) / 2;
  // chi = sum_{j<p} (j d + 1) = d p(p-1)/2 + p
  const int slope = p * (p - 1) / 2;
  ensure((out.chi - p) % slope == 0, "no integral degree solves the Euler characteristic equation");
  out.degree = (out.chi - p) / slope;
  int sum = 0;
  for (int j = 0; j < p; ++j) sum += j * out.degree + 1;
  ensure(sum == out.chi, "graded pieces do not add up to chi");
  ensure(out.degree == -1, "the conormal degree must be -1");
  return out;
}

}  // namespace insep
