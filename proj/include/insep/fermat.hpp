#pragma once

#include <optional>
#include <string>
#include <vector>

#include "insep/field.hpp"
#include "insep/frobenius.hpp"
#include "insep/polynomial.hpp"

namespace insep {

using UPoly = Polynomial<RatFunc>;

// V_+(lambda_0 U_0^p + ... + lambda_n U_n^p) in P^n over K.
class PFermatHypersurface {
 public:
  // Throws InvalidInput unless n >= 1, n + 1 <= 8 and some lambda_i != 0.
  PFermatHypersurface(FieldDesc field, std::vector<RatFunc> lambda);
  static PFermatHypersurface parse(const FieldDesc& field, const std::vector<std::string>& lambda);

  const FieldDesc& field() const { return field_; }
  int p() const { return field_.p; }
  int n() const { return static_cast<int>(lambda_.size()) - 1; }
  const std::vector<RatFunc>& lambda() const { return lambda_; }
  // Index of the first nonzero coefficient.
  std::size_t reference_index() const;
  UPoly equation() const;

 private:
  FieldDesc field_;
  std::vector<RatFunc> lambda_;
};

// lambda_i / lambda_r for all i; r must index a nonzero coefficient.
std::vector<RatFunc> coefficient_ratios(const PFermatHypersurface& X, std::size_t r);

// p-degree of K^p(lambda_i / lambda_r) over K^p, r the first nonzero index.
int invariant_d(const PFermatHypersurface& X);
int invariant_d(const PFermatHypersurface& X, std::size_t r);

enum class Verdict { Regular, SingularCodim, NonreducedEverywhere };
std::string to_string(Verdict v);

struct Classification {
  int d = 0;
  Verdict verdict = Verdict::Regular;
  std::optional<std::vector<RatFunc>> rational_point;
  // For d = 0: g with f = lambda_r * g^p.
  std::optional<UPoly> pth_root_factor;
};

Classification classify(const PFermatHypersurface& X);

// Homogeneous coordinates (d_0 : ... : d_n) with sum d_i^p lambda_i = 0, or
// empty when the lambda_i are K^p-linearly independent.
std::optional<std::vector<RatFunc>> rational_point(const PFermatHypersurface& X);

struct SingularIdeal {
  std::vector<std::size_t> basis_indices;  // the p-independent ratios used
  // derivations[i][k]: coefficient of d/dt_k in D_i, with D_i(ratio_j) = delta_ij.
  std::vector<std::vector<RatFunc>> derivations;
  // f / lambda_r followed by D_1(f / lambda_r), ..., D_d(f / lambda_r).
  std::vector<UPoly> derivation_generators;
  // f followed by df/dt_1, ..., df/dt_nvars (coefficient-wise).
  std::vector<UPoly> partial_generators;
};

// Throws DegenerateCase when d = 0.
SingularIdeal singular_ideal(const PFermatHypersurface& X);

// Ideals generated by forms of degree p in the U_i^p alone coincide iff their
// K-spans do; decided by ranks of the U^p-coefficient vectors.
bool same_pform_ideal(const std::vector<UPoly>& a, const std::vector<UPoly>& b);

struct GeometricEdim {
  int value = 0;          // geometric generic embedding dimension
  int formula_value = 0;  // dim Omega minus transcendence degree
  FieldDesc root_field;   // K^{1/p} presented as F_p(u), t_i = u_i^p
  UPoly witness{1, RatFunc()};  // g over root_field with g^p = f(u^p)
  bool witness_verified = false;
};

// Throws NotIntegral when d = 0.
GeometricEdim geometric_generic_edim(const PFermatHypersurface& X);

// F_p(u_1, ..., u_n) with u_i^p = t_i, named "u_" + t_i.
FieldDesc root_field(const FieldDesc& field);

}  // namespace insep
