#include "insep/groebner.hpp"

namespace insep {

DimensionReport ideal_dimension(const std::vector<UExponent>& leading, int nvars) {
  if (nvars < 1 || nvars > kMaxUVars) throw InvalidInput("dimension needs 1 to 8 variables");
  DimensionReport r;
  r.affine_dim = -1;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    bool independent = true;
    for (const auto& e : leading) {
      bool inside = true;
      for (int i = 0; i < nvars && inside; ++i)
        if (e[static_cast<std::size_t>(i)] && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) r.affine_dim = std::max(r.affine_dim, __builtin_popcount(mask));
  }
  r.projective_empty = r.affine_dim <= 0;
  r.projective_dim = r.projective_empty ? -1 : r.affine_dim - 1;
  return r;
}

CodimCheck verify_codim(const PFermatHypersurface& X, const GroebnerLimits& limits) {
  CodimCheck out;
  out.n = X.n();
  out.predicted_d = invariant_d(X);
  std::vector<UPoly> gens{X.equation()};
  for (int k = 0; k < X.field().nvars(); ++k)
    gens.push_back(X.equation().map_coeffs([k](const RatFunc& c) { return c.derivative(k); }));
  const auto gb = buchberger(gens, MonomialOrder::Grevlex, limits);
  out.basis_size = gb.generators.size();
  out.dimension = ideal_dimension(gb);
  out.oracle_empty = out.dimension.projective_empty;
  if (!out.oracle_empty) out.oracle_codim = (X.n() - 1) - out.dimension.projective_dim;
  out.match = (out.predicted_d == X.n() && out.oracle_empty) ||
              (out.oracle_codim.has_value() && *out.oracle_codim == out.predicted_d);
  return out;
}

}  // namespace insep
