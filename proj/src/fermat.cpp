#include "insep/fermat.hpp"

#include "insep/artin.hpp"

namespace insep {

PFermatHypersurface::PFermatHypersurface(FieldDesc field, std::vector<RatFunc> lambda)
    : field_(std::move(field)), lambda_(std::move(lambda)) {
  if (lambda_.size() < 2) throw InvalidInput("a p-Fermat hypersurface needs n >= 1, i.e. at least two coefficients");
  if (lambda_.size() > static_cast<std::size_t>(kMaxUVars)) throw InvalidInput("at most 8 homogeneous coordinates");
  bool any = false;
  for (const auto& l : lambda_) {
    if (l.prime() != field_.p || l.nvars() != field_.nvars()) throw InvalidInput("coefficient over a different field");
    any = any || !l.is_zero();
  }
  if (!any) throw InvalidInput("all coefficients are zero");
}

PFermatHypersurface PFermatHypersurface::parse(const FieldDesc& field, const std::vector<std::string>& lambda) {
  std::vector<RatFunc> values;
  for (const auto& s : lambda) values.push_back(parse_expr(s, field));
  return PFermatHypersurface(field, std::move(values));
}

std::size_t PFermatHypersurface::reference_index() const {
  for (std::size_t i = 0; i < lambda_.size(); ++i)
    if (!lambda_[i].is_zero()) return i;
  throw InvariantViolation("no nonzero coefficient");
}

UPoly PFermatHypersurface::equation() const {
  UPoly f(n() + 1, field_.zero());
  for (int i = 0; i <= n(); ++i) f += UPoly::power(n() + 1, i, p(), lambda_[static_cast<std::size_t>(i)]);
  return f;
}

std::vector<RatFunc> coefficient_ratios(const PFermatHypersurface& X, std::size_t r) {
  if (r >= X.lambda().size() || X.lambda()[r].is_zero()) throw InvalidInput("reference coefficient must be nonzero");
  std::vector<RatFunc> out;
  for (const auto& l : X.lambda()) out.push_back(l / X.lambda()[r]);
  return out;
}

int invariant_d(const PFermatHypersurface& X, std::size_t r) { return pdegree_generated(coefficient_ratios(X, r)).d; }

int invariant_d(const PFermatHypersurface& X) { return invariant_d(X, X.reference_index()); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Regular: return "Regular";
    case Verdict::SingularCodim: return "SingularCodim";
    case Verdict::NonreducedEverywhere: return "NonreducedEverywhere";
  }
  return "?";
}

std::optional<std::vector<RatFunc>> rational_point(const PFermatHypersurface& X) {
  auto rel = p_linear_relation(X.lambda());
  if (!rel) return std::nullopt;
  RatFunc value = X.field().zero();
  for (std::size_t i = 0; i < rel->size(); ++i) value += (*rel)[i].frobenius() * X.lambda()[i];
  ensure(value.is_zero(), "rational point does not satisfy the equation");
  return rel;
}

Classification classify(const PFermatHypersurface& X) {
  Classification c;
  c.d = invariant_d(X);
  if (c.d == X.n())
    c.verdict = Verdict::Regular;
  else if (c.d == 0)
    c.verdict = Verdict::NonreducedEverywhere;
  else
    c.verdict = Verdict::SingularCodim;
  c.rational_point = rational_point(X);
  if (c.d == 0) {
    const auto ratios = coefficient_ratios(X, X.reference_index());
    UPoly g(X.n() + 1, X.field().zero());
    for (int i = 0; i <= X.n(); ++i)
      g += UPoly::power(X.n() + 1, i, 1, pth_root(ratios[static_cast<std::size_t>(i)]));
    const RatFunc& lr = X.lambda()[X.reference_index()];
    ensure(g.pow(static_cast<unsigned>(X.p())).scaled(lr) == X.equation(), "p-th root certificate is wrong");
    c.pth_root_factor = g;
  }
  return c;
}

SingularIdeal singular_ideal(const PFermatHypersurface& X) {
  const std::size_t r = X.reference_index();
  const auto ratios = coefficient_ratios(X, r);
  const auto basis = pdegree_generated(ratios);
  if (basis.d == 0) throw DegenerateCase("d = 0: every coefficient ratio is a p-th power, no derivation separates them");
  const int nv = X.field().nvars();
  const RatFunc zero = X.field().zero();
  const int d = basis.d;

  SingularIdeal out;
  out.basis_indices = basis.selected;
  // J[j][k] = d(mu_j)/dt_k; solve J x = e_i for each i.
  Matrix<RatFunc> jac(static_cast<std::size_t>(d), static_cast<std::size_t>(nv), zero);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < nv; ++k)
      jac(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = ratios[basis.selected[static_cast<std::size_t>(j)]].derivative(k);
  for (int i = 0; i < d; ++i) {
    std::vector<RatFunc> e(static_cast<std::size_t>(d), zero);
    e[static_cast<std::size_t>(i)] = X.field().one();
    auto x = linear_solve(jac, e);
    ensure(x.has_value(), "p-independent ratios must have independent differentials");
    out.derivations.push_back(*x);
  }

  const UPoly f = X.equation();
  const UPoly normalized = f.scaled(X.lambda()[r].inverse());
  out.derivation_generators.push_back(normalized);
  for (const auto& D : out.derivations) {
    auto apply = [&](const RatFunc& c) {
      RatFunc acc = zero;
      for (int k = 0; k < nv; ++k)
        if (!D[static_cast<std::size_t>(k)].is_zero()) acc += D[static_cast<std::size_t>(k)] * c.derivative(k);
      return acc;
    };
    out.derivation_generators.push_back(normalized.map_coeffs(apply));
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      RatFunc v = zero;
      for (int k = 0; k < nv; ++k) v += out.derivations[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * jac(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
      ensure(v == (i == j ? X.field().one() : zero), "derivations are not dual to the chosen ratios");
    }

  out.partial_generators.push_back(f);
  for (int k = 0; k < nv; ++k) out.partial_generators.push_back(f.map_coeffs([k](const RatFunc& c) { return c.derivative(k); }));
  return out;
}

namespace {

// Coefficients of U_i^p for a form in the U_i^p alone.
std::vector<RatFunc> pform_vector(const UPoly& f, int p) {
  std::vector<RatFunc> v(static_cast<std::size_t>(f.nvars()), f.zero());
  for (const auto& t : f.terms()) {
    int var = -1;
    for (int i = 0; i < f.nvars(); ++i)
      if (t.exp[static_cast<std::size_t>(i)] != 0) {
        if (var >= 0 || t.exp[static_cast<std::size_t>(i)] != p) throw InvalidInput("not a form in the U_i^p");
        var = i;
      }
    if (var < 0) throw InvalidInput("not a form in the U_i^p");
    v[static_cast<std::size_t>(var)] = t.coeff;
  }
  return v;
}

std::size_t span_rank(const std::vector<UPoly>& gens, int p, std::size_t nvars, const RatFunc& zero) {
  EchelonSpace<RatFunc> space(nvars, zero);
  for (const auto& g : gens)
    if (!g.is_zero()) space.insert(pform_vector(g, p));
  return space.dim();
}

}  // namespace

bool same_pform_ideal(const std::vector<UPoly>& a, const std::vector<UPoly>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const int p = a.front().zero().prime();
  const std::size_t nv = static_cast<std::size_t>(a.front().nvars());
  const RatFunc zero = a.front().zero();
  std::vector<UPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = span_rank(a, p, nv, zero), rb = span_rank(b, p, nv, zero);
  return ra == rb && span_rank(both, p, nv, zero) == ra;
}

FieldDesc root_field(const FieldDesc& field) {
  std::vector<std::string> names;
  for (const auto& v : field.vars) names.push_back("u_" + v);
  return FieldDesc(field.p, std::move(names));
}

GeometricEdim geometric_generic_edim(const PFermatHypersurface& X) {
  if (invariant_d(X) == 0) throw NotIntegral("d = 0: the hypersurface is nowhere reduced");
  GeometricEdim out;
  out.root_field = root_field(X.field());
  const int n1 = X.n() + 1;
  const int p = X.p();
  // Under t_i = u_i^p every lambda becomes lambda(u)^p, so f = g^p with
  // g = sum lambda_i(u) U_i. The expansion below multiplies g out honestly.
  UPoly g(n1, X.field().zero());
  UPoly f_sub(n1, X.field().zero());
  for (int i = 0; i < n1; ++i) {
    const RatFunc& l = X.lambda()[static_cast<std::size_t>(i)];
    g += UPoly::power(n1, i, 1, l);
    f_sub += UPoly::power(n1, i, p, l.frobenius());
  }
  out.witness = g;
  out.witness_verified = g.pow(static_cast<unsigned>(p)) == f_sub;
  ensure(out.witness_verified, "p-th power witness does not expand to the equation");

  // Formula route: in the chart U_r = 1 the function field is generated by n
  // elements subject to one relation with vanishing differential, so
  // dim Omega = n while the transcendence degree is n - 1.
  const UPoly f = X.equation();
  for (int j = 0; j < n1; ++j) ensure(f.derivative(j).is_zero(), "df/dU_j must vanish");
  out.formula_value = geometric_edim_formula(X.n(), X.n() - 1);
  // Locally at the generic point f = g^p with g a linear form, hence
  // irreducible, so F tensor K^{1/p} is kappa[g]/(g^p) with kappa the function
  // field of V(g); its embedding dimension is that of k[u]/(u^p).
  out.value = static_cast<int>(edim(truncated_algebra(static_cast<std::size_t>(p), Fp(0, p))).edim);
  ensure(out.value == out.formula_value, "witness and formula routes disagree");
  return out;
}

}  // namespace insep
