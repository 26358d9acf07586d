#include "insep/frobenius.hpp"

#include <set>

namespace insep {

FrobeniusCoordinates frobenius_decompose(const RatFunc& f) {
  FrobeniusCoordinates out{f, {}};
  if (f.is_zero()) return out;
  const int p = f.prime();
  const int n = f.nvars();
  // f = a/b = (a b^{p-1}) / b^p; split the numerator by exponents mod p.
  const MultiPoly numer = f.den().is_constant() ? f.num() : f.num() * f.den().pow(static_cast<unsigned>(p - 1));
  std::map<MultiPoly::Monomial, std::vector<MultiPoly::Term>> parts;
  for (const auto& t : numer.terms()) {
    auto e = MultiPoly::unpack(t.mono);
    std::array<int, MultiPoly::kMaxVars> residue{};
    std::array<int, MultiPoly::kMaxVars> root{};
    for (int i = 0; i < MultiPoly::kMaxVars; ++i) {
      residue[i] = e[i] % p;
      root[i] = e[i] / p;
    }
    // Coefficients are in F_p, where the p-th root is the identity.
    parts[MultiPoly::pack(residue)].push_back({MultiPoly::pack(root), t.coeff});
  }
  const RatFunc den(f.den());
  for (auto& [key, terms] : parts) {
    RatFunc g(MultiPoly::from_terms(p, n, std::move(terms)));
    out.coords.emplace(key, g / den);
  }
  return out;
}

RatFunc reassemble(const FrobeniusCoordinates& fc) {
  const int p = fc.element.prime();
  const int n = fc.element.nvars();
  RatFunc acc = RatFunc::zero(p, n);
  for (const auto& [key, g] : fc.coords) acc += g.frobenius() * RatFunc(MultiPoly::monomial(p, n, key));
  return acc;
}

bool is_pth_power(const RatFunc& f) {
  const auto fc = frobenius_decompose(f);
  return fc.coords.empty() || (fc.coords.size() == 1 && fc.coords.begin()->first == 0);
}

std::optional<RatFunc> try_pth_root(const RatFunc& f) {
  auto fc = frobenius_decompose(f);
  if (fc.coords.empty()) return RatFunc::zero(f.prime(), f.nvars());
  if (fc.coords.size() == 1 && fc.coords.begin()->first == 0) return fc.coords.begin()->second;
  return std::nullopt;
}

RatFunc pth_root(const RatFunc& f) {
  auto r = try_pth_root(f);
  if (!r) throw NotAPthPower("element is not a p-th power in K");
  return *r;
}

namespace {

Matrix<RatFunc> matrix_from_coordinates(const std::vector<FrobeniusCoordinates>& rows, const RatFunc& zero) {
  std::set<MultiPoly::Monomial> keys;
  for (const auto& fc : rows)
    for (const auto& kv : fc.coords) keys.insert(kv.first);
  const std::vector<MultiPoly::Monomial> cols(keys.begin(), keys.end());
  Matrix<RatFunc> m(rows.size(), cols.size(), zero);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto it = rows[r].coords.find(cols[c]);
      if (it != rows[r].coords.end()) m(r, c) = it->second;
    }
  return m;
}

RatFunc zero_of(const std::vector<RatFunc>& v, const RatFunc& fallback) { return v.empty() ? fallback : zero_like(v.front()); }

}  // namespace

Matrix<RatFunc> frobenius_matrix(const std::vector<RatFunc>& elems) {
  std::vector<FrobeniusCoordinates> rows;
  rows.reserve(elems.size());
  for (const auto& e : elems) rows.push_back(frobenius_decompose(e));
  return matrix_from_coordinates(rows, zero_of(elems, RatFunc()));
}

bool p_linear_independent(const std::vector<RatFunc>& elems) {
  if (elems.empty()) return true;
  return rank(frobenius_matrix(elems)) == elems.size();
}

std::optional<std::vector<RatFunc>> p_linear_relation(const std::vector<RatFunc>& elems) {
  if (elems.empty()) return std::nullopt;
  // Relations are the kernel of the transposed coordinate matrix.
  auto kernel = kernel_basis(frobenius_matrix(elems).transpose());
  if (kernel.empty()) return std::nullopt;
  return kernel.front();
}

namespace {

std::vector<std::vector<int>> exponent_grid(int p, std::size_t k) {
  // Lexicographic: first coordinate most significant.
  std::vector<std::vector<int>> out{{}};
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out)
      for (int a = 0; a < p; ++a) {
        auto v = prefix;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

RatFunc basis_monomial(const std::vector<RatFunc>& basis, const std::vector<int>& a, const RatFunc& one) {
  RatFunc m = one;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (a[j]) m *= basis[j].pow(a[j]);
  return m;
}

}  // namespace

std::optional<PSpanCoefficients> membership_in_pspan(const RatFunc& mu, const std::vector<RatFunc>& basis) {
  if (basis.size() > 4) throw InvalidInput("membership_in_pspan supports at most four basis elements");
  const int p = mu.prime();
  const RatFunc one = RatFunc::one(p, mu.nvars());
  const auto grid = exponent_grid(p, basis.size());
  std::vector<FrobeniusCoordinates> rows;
  rows.reserve(grid.size() + 1);
  for (const auto& a : grid) rows.push_back(frobenius_decompose(basis_monomial(basis, a, one)));
  rows.push_back(frobenius_decompose(mu));
  // Columns of the system are the monomials a, rows the Frobenius exponents e.
  const Matrix<RatFunc> all = matrix_from_coordinates(rows, zero_like(mu)).transpose();
  Matrix<RatFunc> system(all.rows(), grid.size(), zero_like(mu));
  std::vector<RatFunc> rhs(all.rows(), zero_like(mu));
  for (std::size_t r = 0; r < all.rows(); ++r) {
    for (std::size_t c = 0; c < grid.size(); ++c) system(r, c) = all(r, c);
    rhs[r] = all(r, grid.size());
  }
  auto sol = linear_solve(system, rhs);
  if (!sol) return std::nullopt;
  PSpanCoefficients out;
  for (std::size_t c = 0; c < grid.size(); ++c)
    if (!(*sol)[c].is_zero()) out.emplace(grid[c], (*sol)[c]);
  return out;
}

RatFunc evaluate_pspan(const PSpanCoefficients& coeffs, const std::vector<RatFunc>& basis) {
  if (coeffs.empty()) return basis.empty() ? RatFunc() : zero_like(basis.front());
  const RatFunc zero = zero_like(coeffs.begin()->second);
  RatFunc acc = zero;
  for (const auto& [a, d] : coeffs) acc += d.frobenius() * basis_monomial(basis, a, one_like(zero));
  return acc;
}

PBasisResult pdegree_generated(const std::vector<RatFunc>& gens) {
  PBasisResult result{gens, {}, 0};
  std::vector<RatFunc> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (membership_in_pspan(gens[i], kept)) continue;
    kept.push_back(gens[i]);
    result.selected.push_back(i);
  }
  result.d = static_cast<int>(kept.size());
  return result;
}

bool p_independent_vectors(const std::vector<std::vector<RatFunc>>& vectors) {
  if (vectors.empty()) return true;
  std::vector<std::vector<FrobeniusCoordinates>> coords;
  std::set<std::pair<std::size_t, MultiPoly::Monomial>> keys;
  for (const auto& v : vectors) {
    std::vector<FrobeniusCoordinates> row;
    for (std::size_t j = 0; j < v.size(); ++j) {
      row.push_back(frobenius_decompose(v[j]));
      for (const auto& kv : row.back().coords) keys.insert({j, kv.first});
    }
    coords.push_back(std::move(row));
  }
  const std::vector<std::pair<std::size_t, MultiPoly::Monomial>> cols(keys.begin(), keys.end());
  const RatFunc zero = zero_like(vectors.front().front());
  Matrix<RatFunc> m(vectors.size(), cols.size(), zero);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& fc = coords[r][cols[c].first];
      auto it = fc.coords.find(cols[c].second);
      if (it != fc.coords.end()) m(r, c) = it->second;
    }
  return rank(m) == vectors.size();
}

bool p_independent_vectors(const std::vector<std::vector<Fp>>& vectors) {
  // On F_p the Frobenius is the identity, so this is ordinary independence.
  if (vectors.empty()) return true;
  return rank(Matrix<Fp>::from_rows(vectors, vectors.front().size(), zero_like(vectors.front().front()))) ==
         vectors.size();
}

bool p_independent_vectors(const std::vector<std::vector<ExtElem>>& vectors) {
  if (vectors.empty()) return true;
  if (vectors.size() == 1) {
    for (const auto& x : vectors.front())
      if (!x.is_zero()) return true;
    return false;
  }
  throw NotLocal("cannot certify reducedness of a residue algebra over an extension field");
}

std::optional<Fp> field_pth_root(const Fp& x) { return x; }

std::optional<RatFunc> field_pth_root(const RatFunc& x) { return try_pth_root(x); }

std::optional<ExtElem> field_pth_root(const ExtElem& x) {
  // L^p = K^p(b_1, ..., b_m) lies inside K.
  if (!x.in_base()) return std::nullopt;
  const auto& L = *x.field();
  auto coeffs = membership_in_pspan(x.coeff(0), L.moduli());
  if (!coeffs) return std::nullopt;
  ExtElem root = ExtElem::zero(x.field());
  for (const auto& [a, d] : *coeffs) {
    ExtElem mono = ExtElem::one(x.field());
    for (std::size_t j = 0; j < a.size(); ++j)
      for (int k = 0; k < a[j]; ++k) mono *= ExtElem::generator(x.field(), static_cast<int>(j));
    root += mono * d;
  }
  return root;
}

}  // namespace insep
