#pragma once

#include <map>
#include <optional>
#include <vector>

#include "insep/extension.hpp"
#include "insep/field.hpp"
#include "insep/matrix.hpp"

namespace insep {

// f = sum_e g_e^p t^e over the monomial p-basis {t^e : e in {0..p-1}^n} of K
// over K^p. Keys are packed exponent vectors (see MultiPoly::Monomial); zero
// coordinates are omitted.
struct FrobeniusCoordinates {
  RatFunc element;
  std::map<MultiPoly::Monomial, RatFunc> coords;
};

FrobeniusCoordinates frobenius_decompose(const RatFunc& f);
// sum_e g_e^p t^e
RatFunc reassemble(const FrobeniusCoordinates& fc);

bool is_pth_power(const RatFunc& f);
// Throws NotAPthPower.
RatFunc pth_root(const RatFunc& f);
std::optional<RatFunc> try_pth_root(const RatFunc& f);

// Rows are elements, columns the union of their Frobenius exponents; the
// entries are the coordinates g_e. A K^p-relation sum d_i^p f_i = 0 is exactly
// a K-relation sum d_i row_i = 0.
Matrix<RatFunc> frobenius_matrix(const std::vector<RatFunc>& elems);

bool p_linear_independent(const std::vector<RatFunc>& elems);
// Some nonzero (d_i) with sum d_i^p elems_i = 0, if one exists.
std::optional<std::vector<RatFunc>> p_linear_relation(const std::vector<RatFunc>& elems);

// Coefficients d_a keyed by a in {0..p-1}^k, zeros omitted.
using PSpanCoefficients = std::map<std::vector<int>, RatFunc>;

// Decides mu in K^p(basis) and, on success, returns d_a with
// mu = sum_a d_a^p prod_j basis_j^{a_j}. At most four basis elements.
std::optional<PSpanCoefficients> membership_in_pspan(const RatFunc& mu, const std::vector<RatFunc>& basis);
RatFunc evaluate_pspan(const PSpanCoefficients& coeffs, const std::vector<RatFunc>& basis);

struct PBasisResult {
  std::vector<RatFunc> examined;
  std::vector<std::size_t> selected;  // indices into examined, in scan order
  int d = 0;

  std::vector<RatFunc> basis() const {
    std::vector<RatFunc> b;
    for (auto i : selected) b.push_back(examined[i]);
    return b;
  }
};

// Greedy first-wins scan. The selected basis depends on the order of gens;
// d does not.
PBasisResult pdegree_generated(const std::vector<RatFunc>& gens);

// p-degree of K over K^p; n for F_p(t_1, ..., t_n).
inline int imperfection_degree(const FieldDesc& field) { return field.nvars(); }

// Frobenius-semilinear independence of vectors: no nonzero (c_i) with
// sum c_i^p v_i = 0. Used to certify that finite algebras are reduced.
bool p_independent_vectors(const std::vector<std::vector<RatFunc>>& vectors);
bool p_independent_vectors(const std::vector<std::vector<Fp>>& vectors);
bool p_independent_vectors(const std::vector<std::vector<ExtElem>>& vectors);

// p-th roots inside a field, when they exist.
std::optional<Fp> field_pth_root(const Fp& x);
std::optional<RatFunc> field_pth_root(const RatFunc& x);
std::optional<ExtElem> field_pth_root(const ExtElem& x);

}  // namespace insep
