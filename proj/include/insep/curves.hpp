#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "insep/extension.hpp"
#include "insep/fermat.hpp"
#include "insep/series.hpp"

namespace insep {

using LPoly = Polynomial<ExtElem>;
using KVector = std::vector<RatFunc>;

// lambda U_0^p + Q(lambda) U_1^p + U_2^p with lambda not in K^p and
// Q(lambda) = sum_i c_i^p lambda^i. The raw curve sum mu_i V_i^p is
// recovered as scale * (normal form) under V_{perm[k]} = U_k.
struct CurveNormalForm {
  FieldDesc field;
  RatFunc lambda;
  std::vector<RatFunc> c;  // c_0, ..., c_{p-1}
  RatFunc q;               // Q(lambda)
  RatFunc scale;           // the raw coefficient that was divided out
  std::array<int, 3> perm{0, 1, 2};
  std::vector<RatFunc> raw;

  int p() const { return field.p; }
  // Over K in the normal-form coordinates U_0, U_1, U_2.
  UPoly equation() const;
  // The raw curve.
  PFermatHypersurface raw_curve() const { return PFermatHypersurface(field, raw); }
};

// Throws WrongInvariant unless d = 1.
CurveNormalForm normal_form(const FieldDesc& field, const std::vector<RatFunc>& lambda);

// nu: P^1_L -> X, U_0 -> T_0, U_1 -> T_1, U_2 -> -x T_0 - P(x) T_1 with
// x = lambda^{1/p} and P(x) = sum c_i x^i.
struct NormalizationMap {
  std::shared_ptr<const HeightOneExtension> L;
  std::vector<LPoly> images;  // in L[T_0, T_1]
  LPoly pullback{2, ExtElem()};  // nu^*(f), zero
  int divisor_length = 0;     // K-length of X cap V_+(U_0)
  int preimage_length = 0;    // K-length of V_+(T_0) on P^1_L
  int degree = 0;             // of nu: divisor_length / preimage_length
};

NormalizationMap normalization(const CurveNormalForm& nf);

struct SingularPointData {
  std::shared_ptr<const HeightOneExtension> L;
  ExtElem rho;                  // rho^p = Q'(lambda)
  std::array<ExtElem, 2> a;     // (-rho : 1) on P^1_L
  std::array<ExtElem, 3> image; // a_0 in the normal-form coordinates
  std::vector<ExtElem> raw_image;  // a_0 in the raw coordinates
  int residue_degree = 1;       // [kappa(a_0) : K], 1 or p
};

SingularPointData singular_point(const CurveNormalForm& nf);

// O_A = L[u]/(u^N) viewed as a K-vector space of dimension p N, with the
// coefficient of x^i u^j at index j p + i.
class ConductorRing {
 public:
  ConductorRing(std::shared_ptr<const HeightOneExtension> L, std::size_t order);

  const std::shared_ptr<const HeightOneExtension>& field() const { return L_; }
  std::size_t order() const { return order_; }
  std::size_t degree() const { return L_->degree(); }
  std::size_t dim() const { return order_ * L_->degree(); }
  const RatFunc& zero() const { return zero_; }

  KVector to_vector(const TruncatedSeries<ExtElem>& s) const;
  TruncatedSeries<ExtElem> to_series(const KVector& v) const;
  KVector multiply(const KVector& a, const KVector& b) const;
  KVector one() const;
  // x^i u^j
  KVector basis_element(std::size_t i, std::size_t j) const;
  // Vectors supported on u^j for j >= k, i.e. m^k.
  bool in_power_of_m(const KVector& v, std::size_t k) const;

 private:
  std::shared_ptr<const HeightOneExtension> L_;
  std::size_t order_;
  RatFunc zero_;
};

// Smallest K-subalgebra containing gens: span of 1 and gens, closed under
// products. At most dim(O_A) rounds since every round adds a dimension.
EchelonSpace<RatFunc> subalgebra_closure(const ConductorRing& R, const std::vector<KVector>& gens);

enum class ConductorCase { P2, ResidueL, ResidueK };
std::string to_string(ConductorCase c);

struct ConductorProfile {
  int p = 0;
  std::size_t truncation = 0;   // p - 1
  int chart = 0;                // U_chart = 1
  std::shared_ptr<ConductorRing> ring;
  std::vector<KVector> coordinates;  // images of the affine coordinates
  std::vector<KVector> basis;        // K-basis of O_{A_0}
  std::size_t oa_dim = 0;
  std::size_t oa0_dim = 0;
  std::size_t intersection_with_L = 0;  // dim_K(O_{A_0} cap L)
  std::size_t residue_dim = 0;          // dim_K of the residue field of O_{A_0}
  ConductorCase tag = ConductorCase::P2;
  // ResidueL: mu + f generating a coefficient field, and g in m^2 \ m^3 (absent at p = 3).
  std::optional<KVector> mu_plus_f;
  std::optional<KVector> g;
  // ResidueK: v, w in m with independent classes mod m^2.
  std::optional<KVector> v;
  std::optional<KVector> w;
  // Conductor exponent check at a longer truncation: u^{p-1} L[u] lies in the
  // image of the local ring while u^{p-2} L[u] does not.
  std::size_t check_truncation = 0;
  bool exponent_confirmed = false;
};

// Throws UnsupportedP for p > 5.
ConductorProfile conductor_profile(const CurveNormalForm& nf);
// The same computation in an explicit chart; the chart must contain a_0.
ConductorProfile conductor_profile(const CurveNormalForm& nf, int chart);

// True iff X tensor K(b^{1/p}) stays integral, i.e. b is not a p-th power in
// the function field; decided by b not in K^p(lambda). Throws
// TrivialExtension when b is in K^p.
bool remains_integral(const CurveNormalForm& nf, const RatFunc& b);

struct GlueingCohomology {
  int h0 = 0;
  int h1 = 0;
  bool admissible = false;  // dim = p(p-1)/2 and L not inside
  bool genus_one = false;   // h0 = h1 = 1
};

// From 0 -> H^0 -> sub + L -> O_A -> H^1 -> 0. Throws NotASubalgebra unless
// sub spans a unital K-subalgebra of O_A.
GlueingCohomology glueing_cohomology(const ConductorRing& R, const std::vector<KVector>& sub);

struct MultipleCurveProfile {
  int multiplicity = 0;
  int degree = 0;  // deg of N / N^2 on the reduction
  int chi = 0;
};

MultipleCurveProfile multiple_curve_profile(int p);

}  // namespace insep
