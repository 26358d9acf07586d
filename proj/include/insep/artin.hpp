#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "insep/extension.hpp"
#include "insep/frobenius.hpp"
#include "insep/matrix.hpp"

namespace insep {

inline int characteristic_of(const Fp& x) { return x.prime(); }
inline int characteristic_of(const RatFunc& x) { return x.prime(); }
inline int characteristic_of(const ExtElem& x) { return x.field()->prime(); }

struct EdimReport {
  std::size_t dim = 0;            // dim_k A
  std::size_t residue_dim = 0;    // dim_k A/m
  std::size_t cotangent_dim = 0;  // dim_k m/m^2
  std::size_t edim = 0;           // dim_{A/m} m/m^2
};

// Finite-dimensional commutative local algebra over a field F, given by
// structure constants on a basis e_0, ..., e_{N-1} together with generators
// of its maximal ideal m. Construction checks commutativity, associativity,
// the unit, nilpotency of m, and that A/m is a field.
template <class F>
class FiniteLocalAlgebra {
 public:
  using Vec = std::vector<F>;
  using Sparse = std::vector<std::pair<std::uint32_t, F>>;

  // table[i * N + j] = e_i e_j as a sparse vector.
  FiniteLocalAlgebra(std::size_t dim, const F& zero, std::vector<Sparse> table, Vec unit, std::vector<Vec> m_generators)
      : dim_(dim), zero_(zero), table_(std::move(table)), unit_(std::move(unit)), m_gens_(std::move(m_generators)) {
    if (dim_ == 0) throw InvalidInput("algebra of dimension zero");
    if (table_.size() != dim_ * dim_) throw InvalidInput("structure constant table has wrong size");
    if (unit_.size() != dim_) throw InvalidInput("unit has wrong length");
    for (const auto& g : m_gens_)
      if (g.size() != dim_) throw InvalidInput("ideal generator has wrong length");
    verify();
  }

  std::size_t dim() const { return dim_; }
  const F& zero() const { return zero_; }
  const Vec& unit() const { return unit_; }
  const std::vector<Vec>& m_generators() const { return m_gens_; }
  const Sparse& product_of_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  std::size_t residue_dim() const { return dim_ - m_basis_.size(); }
  // K-basis of m in echelon form.
  const std::vector<Vec>& m_basis() const { return m_basis_; }

  Vec basis_vector(std::size_t i) const {
    Vec v(dim_, zero_);
    v[i] = one_like(zero_);
    return v;
  }
  Vec zero_vector() const { return Vec(dim_, zero_); }

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec out(dim_, zero_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        const F c = x[i] * y[j];
        for (const auto& [k, v] : table_[i * dim_ + j]) out[k] = out[k] + c * v;
      }
    }
    return out;
  }
  Vec add(const Vec& x, const Vec& y) const {
    Vec out = x;
    for (std::size_t i = 0; i < dim_; ++i) out[i] = out[i] + y[i];
    return out;
  }
  Vec sub(const Vec& x, const Vec& y) const {
    Vec out = x;
    for (std::size_t i = 0; i < dim_; ++i) out[i] = out[i] - y[i];
    return out;
  }
  Vec scale(const Vec& x, const F& c) const {
    Vec out = x;
    for (auto& v : out) v = v * c;
    return out;
  }
  Vec power(const Vec& x, unsigned e) const {
    Vec r = unit_;
    for (unsigned i = 0; i < e; ++i) r = multiply(r, x);
    return r;
  }

  // Ideal generated by gens: the K-span of gens * e_i.
  EchelonSpace<F> ideal(const std::vector<Vec>& gens) const {
    EchelonSpace<F> space(dim_, zero_);
    for (const auto& g : gens)
      for (std::size_t i = 0; i < dim_; ++i) space.insert(multiply(g, basis_vector(i)));
    return space;
  }

  // Residue of x modulo m when A/m = k, i.e. the scalar c with x - c in m.
  std::optional<F> residue_scalar(const Vec& x) const {
    if (residue_dim() != 1) return std::nullopt;
    const auto& pivots = m_space_->pivots();
    std::vector<bool> is_pivot(dim_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free = 0;
    while (is_pivot[free]) ++free;
    const Vec rx = m_space_->reduce(x);
    const Vec ru = m_space_->reduce(unit_);
    return rx[free] / ru[free];
  }

  bool in_m(const Vec& x) const { return m_space_->contains(x); }

 private:
  void verify() {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (dense(table_[i * dim_ + j]) != dense(table_[j * dim_ + i]))
          throw InvalidPresentation("multiplication is not commutative");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        const Vec eij = dense(table_[i * dim_ + j]);
        for (std::size_t k = 0; k < dim_; ++k) {
          // (e_i e_j) e_k versus e_i (e_j e_k)
          Vec left(dim_, zero_), right(dim_, zero_);
          for (std::size_t a = 0; a < dim_; ++a)
            if (!is_zero(eij[a]))
              for (const auto& [c, v] : table_[a * dim_ + k]) left[c] = left[c] + eij[a] * v;
          for (const auto& [a, w] : table_[j * dim_ + k])
            for (const auto& [c, v] : table_[i * dim_ + a]) right[c] = right[c] + w * v;
          if (left != right) throw InvalidPresentation("multiplication is not associative");
        }
      }
    for (std::size_t i = 0; i < dim_; ++i)
      if (multiply(unit_, basis_vector(i)) != basis_vector(i)) throw InvalidPresentation("unit is not a unit");

    m_space_ = std::make_shared<EchelonSpace<F>>(ideal(m_gens_));
    m_basis_ = m_space_->basis();
    if (m_space_->contains(unit_)) throw NotLocal("designated ideal is the whole algebra");
    // m^k = 0 for some k <= dim.
    std::vector<Vec> layer = m_basis_;
    for (std::size_t k = 0; !layer.empty(); ++k) {
      if (k > dim_) throw NotLocal("designated ideal is not nilpotent");
      EchelonSpace<F> next(dim_, zero_);
      for (const auto& x : layer)
        for (const auto& g : m_gens_) next.insert(multiply(x, g));
      layer = next.basis();
    }
    check_residue_field();
  }

  // A/m is a field iff it is reduced and local. Every quotient basis element
  // must have a p^e-th power in k, making the quotient purely inseparable and
  // hence local; reducedness is injectivity of Frobenius, a semilinear
  // independence condition on the images of a quotient basis.
  void check_residue_field() {
    const std::size_t r = residue_dim();
    if (r == 1) return;
    std::vector<bool> is_pivot(dim_, false);
    for (auto c : m_space_->pivots()) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!is_pivot[i]) free.push_back(i);
    auto quotient = [&](const Vec& x) {
      const Vec red = m_space_->reduce(x);
      Vec q;
      for (auto i : free) q.push_back(red[i]);
      return q;
    };
    const Vec unit_q = quotient(unit_);
    const int p = characteristic();
    // [A/m : k] = p^steps bounds the exponent of pure inseparability.
    std::size_t steps = 0;
    for (std::size_t q = 1; q < r; q *= static_cast<std::size_t>(p)) ++steps;
    std::vector<Vec> frob;
    for (auto i : free) {
      const Vec b = basis_vector(i);
      frob.push_back(quotient(power(b, static_cast<unsigned>(p))));
      Vec x = b;
      bool in_k = false;
      for (std::size_t step = 0; step < steps && !in_k; ++step) {
        x = power(x, static_cast<unsigned>(p));
        in_k = is_multiple(quotient(x), unit_q);
      }
      if (!in_k) throw NotLocal("residue algebra is not purely inseparable over the base field");
    }
    if (!p_independent_vectors(frob)) throw NotLocal("residue algebra is not reduced");
  }

  static bool is_multiple(const Vec& q, const Vec& u) {
    std::size_t lead = 0;
    while (lead < u.size() && is_zero(u[lead])) ++lead;
    if (lead == u.size()) return false;
    const auto c = q[lead] / u[lead];
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!(q[i] == c * u[i])) return false;
    return true;
  }

  int characteristic() const { return characteristic_of(zero_); }

  Vec dense(const Sparse& s) const {
    Vec v(dim_, zero_);
    for (const auto& [k, c] : s) v[k] = v[k] + c;
    return v;
  }

  std::size_t dim_;
  F zero_;
  std::vector<Sparse> table_;
  Vec unit_;
  std::vector<Vec> m_gens_;
  std::shared_ptr<EchelonSpace<F>> m_space_;
  std::vector<Vec> m_basis_;
};

// Embedding dimension dim_{A/m} m/m^2. Throws NotLocal if the residue
// dimension does not divide dim m/m^2 (impossible for a valid local algebra).
template <class F>
EdimReport edim(const FiniteLocalAlgebra<F>& A) {
  std::vector<typename FiniteLocalAlgebra<F>::Vec> products;
  const auto& g = A.m_generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) products.push_back(A.multiply(g[i], g[j]));
  const std::size_t m2 = A.ideal(products).dim();
  EdimReport r;
  r.dim = A.dim();
  r.residue_dim = A.residue_dim();
  r.cotangent_dim = A.m_basis().size() - m2;
  if (r.cotangent_dim % r.residue_dim != 0) throw NotLocal("cotangent space is not a vector space over the residue field");
  r.edim = r.cotangent_dim / r.residue_dim;
  return r;
}

// k[u]/(u^N), basis 1, u, ..., u^{N-1}, m = (u).
template <class F>
FiniteLocalAlgebra<F> truncated_algebra(std::size_t N, const F& zero) {
  using Alg = FiniteLocalAlgebra<F>;
  std::vector<typename Alg::Sparse> table(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i + j < N) table[i * N + j].push_back({static_cast<std::uint32_t>(i + j), one_like(zero)});
  typename Alg::Vec unit(N, zero), u(N, zero);
  unit[0] = one_like(zero);
  std::vector<typename Alg::Vec> gens;
  if (N > 1) {
    u[1] = one_like(zero);
    gens.push_back(u);
  }
  return Alg(N, zero, std::move(table), std::move(unit), std::move(gens));
}

// A tensor B over the common base field, basis e_i (x) f_j at index i * dim B + j.
template <class F>
FiniteLocalAlgebra<F> tensor_product(const FiniteLocalAlgebra<F>& A, const FiniteLocalAlgebra<F>& B) {
  using Alg = FiniteLocalAlgebra<F>;
  const std::size_t na = A.dim(), nb = B.dim(), n = na * nb;
  const F zero = A.zero();
  std::vector<typename Alg::Sparse> table(n * n);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          auto& cell = table[(i1 * nb + j1) * n + (i2 * nb + j2)];
          for (const auto& [a, ca] : A.product_of_basis(i1, i2))
            for (const auto& [b, cb] : B.product_of_basis(j1, j2))
              cell.push_back({static_cast<std::uint32_t>(a * nb + b), ca * cb});
        }
  auto embed = [&](const typename Alg::Vec& x, const typename Alg::Vec& y) {
    typename Alg::Vec v(n, zero);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (!is_zero(x[i]) && !is_zero(y[j])) v[i * nb + j] = x[i] * y[j];
    return v;
  };
  std::vector<typename Alg::Vec> gens;
  for (const auto& g : A.m_generators()) gens.push_back(embed(g, B.unit()));
  for (const auto& g : B.m_generators()) gens.push_back(embed(A.unit(), g));
  return Alg(n, zero, std::move(table), embed(A.unit(), B.unit()), std::move(gens));
}

// The same algebra with basis vectors reordered: new e_k = old e_{perm[k]}.
template <class F>
FiniteLocalAlgebra<F> permute_basis(const FiniteLocalAlgebra<F>& A, const std::vector<std::size_t>& perm) {
  using Alg = FiniteLocalAlgebra<F>;
  const std::size_t n = A.dim();
  if (perm.size() != n) throw InvalidInput("permutation has wrong length");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] >= n || inv[perm[k]] != n) throw InvalidInput("not a permutation");
    inv[perm[k]] = k;
  }
  std::vector<typename Alg::Sparse> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [c, v] : A.product_of_basis(perm[a], perm[b]))
        table[a * n + b].push_back({static_cast<std::uint32_t>(inv[c]), v});
  auto move = [&](const typename Alg::Vec& x) {
    typename Alg::Vec y(n, A.zero());
    for (std::size_t k = 0; k < n; ++k) y[k] = x[perm[k]];
    return y;
  };
  std::vector<typename Alg::Vec> gens;
  for (const auto& g : A.m_generators()) gens.push_back(move(g));
  return Alg(n, A.zero(), std::move(table), move(A.unit()), std::move(gens));
}

// A = R[T]/(T^{p^r} - f^p) with basis e_i T^j at index j * dim R + i.
// Requires A/m_R = k. With c the residue of f and e <= r maximal such that
// c^p = gamma^{p^e} for some gamma in k, the maximal ideal is (m_R, h) for
// h = T^{p^{r-e}} - gamma. Throws DimensionOverflow when dim A > cap.
template <class F>
FiniteLocalAlgebra<F> adjoin_root(const FiniteLocalAlgebra<F>& R, const typename FiniteLocalAlgebra<F>::Vec& f, int r,
                                  std::size_t cap = 512) {
  using Alg = FiniteLocalAlgebra<F>;
  if (r < 1) throw InvalidInput("adjoin_root needs r >= 1");
  const std::size_t n = R.dim();
  const F zero = R.zero();
  const int p = characteristic_of(zero);
  std::size_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= static_cast<std::size_t>(p);
    if (q * n > cap) throw DimensionOverflow("adjoined algebra exceeds the dimension cap");
  }
  const std::size_t N = q * n;
  const auto fp = R.power(f, static_cast<unsigned>(p));
  std::vector<typename Alg::Sparse> table(N * N);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < q; ++b)
        for (std::size_t j = 0; j < n; ++j) {
          auto& cell = table[(a * n + i) * N + (b * n + j)];
          const auto& eij = R.product_of_basis(i, j);
          if (a + b < q) {
            for (const auto& [k, c] : eij) cell.push_back({static_cast<std::uint32_t>((a + b) * n + k), c});
          } else {
            // T^{a+b} = T^{a+b-q} f^p
            auto v = R.zero_vector();
            for (const auto& [k, c] : eij) v[k] = v[k] + c;
            v = R.multiply(v, fp);
            for (std::size_t k = 0; k < n; ++k)
              if (!is_zero(v[k])) cell.push_back({static_cast<std::uint32_t>((a + b - q) * n + k), v[k]});
          }
        }
  auto lift = [&](const typename Alg::Vec& x, std::size_t tpow) {
    typename Alg::Vec y(N, zero);
    for (std::size_t k = 0; k < n; ++k) y[tpow * n + k] = x[k];
    return y;
  };
  std::vector<typename Alg::Vec> gens;
  for (const auto& g : R.m_generators()) gens.push_back(lift(g, 0));

  const auto c = R.residue_scalar(f);
  if (!c) throw InvalidInput("adjoin_root needs the residue field of R to be the base field");
  F gamma = *c;
  for (int i = 1; i < p; ++i) gamma = gamma * *c;  // c^p
  int e = 0;
  while (e < r) {
    auto root = field_pth_root(gamma);
    if (!root) break;
    gamma = *root;
    ++e;
  }
  std::size_t hdeg = 1;
  for (int i = 0; i < r - e; ++i) hdeg *= static_cast<std::size_t>(p);
  typename Alg::Vec h = lift(R.unit(), hdeg);
  const auto one = lift(R.unit(), 0);
  for (std::size_t k = 0; k < N; ++k) h[k] = h[k] - gamma * one[k];
  gens.push_back(h);
  return Alg(N, zero, std::move(table), lift(R.unit(), 0), std::move(gens));
}

// L tensor_K L as an L-algebra, L = K(b_1^{1/p}, ..., b_m^{1/p}): the algebra
// L[U]/(U_i^p - a_i^p) with basis the monomials in e_i = U_i - a_i, each of
// exponent < p, and m = (e_1, ..., e_m). Since (U_i - a_i)^p = U_i^p - a_i^p,
// the structure constants are those of L[e]/(e_i^p).
FiniteLocalAlgebra<ExtElem> tensor_self(const std::shared_ptr<const HeightOneExtension>& L);

// The same algebra computed over K: basis x^a (x) x^b, structure constants
// from the multiplication of L, and m generated by x_i (x) 1 - 1 (x) x_i.
// Residue field L, of dimension p^m over K.
FiniteLocalAlgebra<RatFunc> tensor_self_over_base(const std::shared_ptr<const HeightOneExtension>& L);

// p-degree minus transcendence degree; throws InvalidInput if pdeg < trdeg.
int geometric_edim_formula(int pdeg, int trdeg);

}  // namespace insep
