#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "insep/fermat.hpp"
#include "insep/polynomial.hpp"

namespace insep {

struct GroebnerLimits {
  std::size_t max_pairs = 10000;       // S-pairs processed
  std::size_t max_monomials = 1000000; // terms produced by reduction steps
};

template <class F>
struct GroebnerBasis {
  int nvars = 1;
  MonomialOrder order = MonomialOrder::Grevlex;
  bool reduced = false;
  std::vector<Polynomial<F>> generators;  // sorted by increasing leading monomial
};

// Which divisor to use when several leading terms divide the current term.
enum class ReductionStrategy { FirstDivisor, LastDivisor };

namespace detail {

template <class F>
std::optional<std::size_t> find_divisor(const std::vector<Polynomial<F>>& G, const UExponent& m,
                                        ReductionStrategy strategy) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero() || !monomial_divides(G[i].lead_exp(), m)) continue;
    found = i;
    if (strategy == ReductionStrategy::FirstDivisor) break;
  }
  return found;
}

}  // namespace detail

// Full reduction of f by G: no term of the result is divisible by a leading
// monomial of G. work, when given, accumulates the number of terms produced.
template <class F>
Polynomial<F> normal_form(Polynomial<F> f, const std::vector<Polynomial<F>>& G,
                          ReductionStrategy strategy = ReductionStrategy::FirstDivisor, std::size_t* work = nullptr,
                          std::size_t work_cap = 0) {
  Polynomial<F> rest(f.nvars(), f.zero(), f.order());
  std::vector<typename Polynomial<F>::Term> kept;
  while (!f.is_zero()) {
    const auto lt = f.lead();
    const auto div = detail::find_divisor(G, lt.exp, strategy);
    if (!div) {
      kept.push_back(lt);
      f -= Polynomial<F>::monomial(f.nvars(), lt.exp, lt.coeff, f.order());
      continue;
    }
    const auto& g = G[*div];
    const F c = lt.coeff / g.lead_coeff();
    f -= g.mul_term(monomial_quotient(lt.exp, g.lead_exp()), c);
    if (work) {
      *work += g.size();
      if (work_cap && *work > work_cap) throw ResourceLimit("Groebner computation exceeded the monomial cap");
    }
  }
  return Polynomial<F>::from_terms(rest.nvars(), rest.zero(), std::move(kept), rest.order());
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const UExponent l = monomial_lcm(f.lead_exp(), g.lead_exp());
  const F one = one_like(f.zero());
  return f.mul_term(monomial_quotient(l, f.lead_exp()), one / f.lead_coeff()) -
         g.mul_term(monomial_quotient(l, g.lead_exp()), one / g.lead_coeff());
}

// Removes redundant generators, inter-reduces, and makes leading coefficients 1.
template <class F>
std::vector<Polynomial<F>> reduce_basis(std::vector<Polynomial<F>> G) {
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !monomial_divides(G[j].lead_exp(), G[i].lead_exp())) continue;
      // Equal leading monomials: keep the first.
      redundant = G[j].lead_exp() != G[i].lead_exp() || j < i;
    }
    if (!redundant) minimal.push_back(G[i].monic());
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // The leading term survives since no other leading monomial divides it.
    out.push_back(normal_form(minimal[i], others).monic());
  }
  const auto order = out.empty() ? MonomialOrder::Grevlex : out.front().order();
  std::sort(out.begin(), out.end(), [order](const Polynomial<F>& a, const Polynomial<F>& b) {
    return monomial_greater(b.lead_exp(), a.lead_exp(), order);
  });
  return out;
}

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// degree first) and the coprime-leading-monomial criterion. Coefficients are
// made monic after every reduction. Returns the reduced basis; zero inputs
// are ignored. Throws ResourceLimit when a cap is exceeded.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, MonomialOrder order = MonomialOrder::Grevlex,
                            const GroebnerLimits& limits = {}) {
  if (gens.empty()) throw InvalidInput("buchberger needs at least one generator");
  const int nvars = gens.front().nvars();
  std::vector<Polynomial<F>> G;
  std::size_t work = 0;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw InvalidInput("generators in different numbers of variables");
    if (!g.is_zero()) G.push_back(g.with_order(order).monic());
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j});
  std::size_t processed = 0;
  while (!pairs.empty()) {
    // Normal strategy; ties broken by the order, then by position.
    std::size_t best = 0;
    UExponent best_lcm = monomial_lcm(G[pairs[0].first].lead_exp(), G[pairs[0].second].lead_exp());
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const UExponent l = monomial_lcm(G[pairs[k].first].lead_exp(), G[pairs[k].second].lead_exp());
      if (udegree(l) < udegree(best_lcm) || (udegree(l) == udegree(best_lcm) && monomial_greater(best_lcm, l, order))) {
        best = k;
        best_lcm = l;
      }
    }
    const auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (++processed > limits.max_pairs) throw ResourceLimit("Groebner computation exceeded the pair cap");
    if (monomials_coprime(G[i].lead_exp(), G[j].lead_exp())) continue;
    auto h = normal_form(s_polynomial(G[i], G[j]), G, ReductionStrategy::FirstDivisor, &work, limits.max_monomials);
    if (h.is_zero()) continue;
    G.push_back(h.monic());
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.push_back({k, G.size() - 1});
  }
  GroebnerBasis<F> gb;
  gb.nvars = nvars;
  gb.order = order;
  gb.generators = reduce_basis(std::move(G));
  gb.reduced = true;
  for (const auto& g : gens)
    ensure(normal_form(g.with_order(order), gb.generators).is_zero(), "input generator does not reduce to zero");
  return gb;
}

// True if every S-polynomial of the basis reduces to zero.
template <class F>
bool is_groebner_basis(const std::vector<Polynomial<F>>& G) {
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
  return true;
}

struct DimensionReport {
  int affine_dim = 0;      // Krull dimension of K[U]/I; -1 when I is the unit ideal
  bool projective_empty = false;
  int projective_dim = -1; // affine_dim - 1 unless the projective locus is empty
};

// Dimension from the leading-monomial ideal: the largest set of variables
// containing the support of no leading monomial.
DimensionReport ideal_dimension(const std::vector<UExponent>& leading, int nvars);

template <class F>
DimensionReport ideal_dimension(const GroebnerBasis<F>& gb) {
  std::vector<UExponent> leading;
  for (const auto& g : gb.generators) leading.push_back(g.lead_exp());
  return ideal_dimension(leading, gb.nvars);
}

struct CodimCheck {
  int n = 0;
  int predicted_d = 0;
  bool oracle_empty = false;       // singular locus empty in P^n
  std::optional<int> oracle_codim; // codimension within X, when nonempty
  bool match = false;
  DimensionReport dimension;
  std::size_t basis_size = 0;
};

// Runs the oracle on (f, df/dt_1, ..., df/dt_nvars).
CodimCheck verify_codim(const PFermatHypersurface& X, const GroebnerLimits& limits = {});

}  // namespace insep
