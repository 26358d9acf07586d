#include "insep/artin.hpp"

namespace insep {

FiniteLocalAlgebra<ExtElem> tensor_self(const std::shared_ptr<const HeightOneExtension>& L) {
  using Alg = FiniteLocalAlgebra<ExtElem>;
  const std::size_t n = L->degree();
  const int p = L->prime();
  const ExtElem zero = ExtElem::zero(L);
  const ExtElem one = ExtElem::one(L);
  std::vector<Alg::Sparse> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = L->digits(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = L->digits(j);
      std::vector<int> c(a.size());
      bool vanishes = false;
      for (std::size_t k = 0; k < a.size(); ++k) {
        c[k] = a[k] + b[k];
        vanishes = vanishes || c[k] >= p;
      }
      if (!vanishes) table[i * n + j].push_back({static_cast<std::uint32_t>(L->index(c)), one});
    }
  }
  Alg::Vec unit(n, zero);
  unit[0] = one;
  std::vector<Alg::Vec> gens;
  for (int i = 0; i < L->generators(); ++i) {
    std::vector<int> d(static_cast<std::size_t>(L->generators()), 0);
    d[static_cast<std::size_t>(i)] = 1;
    Alg::Vec g(n, zero);
    g[L->index(d)] = one;
    gens.push_back(g);
  }
  return Alg(n, zero, std::move(table), std::move(unit), std::move(gens));
}

FiniteLocalAlgebra<RatFunc> tensor_self_over_base(const std::shared_ptr<const HeightOneExtension>& L) {
  using Alg = FiniteLocalAlgebra<RatFunc>;
  const std::size_t D = L->degree();
  const std::size_t n = D * D;
  const int p = L->prime();
  const RatFunc zero = RatFunc::zero(p, L->nvars());
  const RatFunc one = RatFunc::one(p, L->nvars());
  // x^a x^c = kappa x^{(a+c) mod p}, kappa the product of the b_i carried over.
  auto multiply_monomials = [&](std::size_t i, std::size_t j) {
    const auto a = L->digits(i), c = L->digits(j);
    std::vector<int> out(a.size());
    RatFunc kappa = one;
    for (std::size_t k = 0; k < a.size(); ++k) {
      out[k] = a[k] + c[k];
      if (out[k] >= p) {
        out[k] -= p;
        kappa *= L->moduli()[k];
      }
    }
    return std::make_pair(L->index(out), kappa);
  };
  std::vector<Alg::Sparse> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto [left, k1] = multiply_monomials(x % D, y % D);
      const auto [right, k2] = multiply_monomials(x / D, y / D);
      table[x * n + y].push_back({static_cast<std::uint32_t>(left + D * right), k1 * k2});
    }
  Alg::Vec unit(n, zero);
  unit[0] = one;
  std::vector<Alg::Vec> gens;
  for (int i = 0; i < L->generators(); ++i) {
    std::vector<int> d(static_cast<std::size_t>(L->generators()), 0);
    d[static_cast<std::size_t>(i)] = 1;
    const std::size_t xi = L->index(d);
    Alg::Vec g(n, zero);
    g[xi] = one;       // x_i (x) 1
    g[D * xi] = -one;  // 1 (x) x_i
    gens.push_back(g);
  }
  return Alg(n, zero, std::move(table), std::move(unit), std::move(gens));
}

int geometric_edim_formula(int pdeg, int trdeg) {
  if (trdeg < 0 || pdeg < trdeg) throw InvalidInput("p-degree must be at least the transcendence degree");
  return pdeg - trdeg;
}

}  // namespace insep
