#include "jk/chains.hpp"

#include "jk/errors.hpp"
#include "jk/krylov.hpp"

namespace jk {

bool LambdaVector::is_zero() const {
  for (const auto& e : entries) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::vector<Vector> LambdaVector::coefficient_columns() const {
  const auto d = static_cast<std::size_t>(std::max(modulus.degree(), 0));
  std::vector<Vector> cols(d, Vector(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& c = entries[i].coefficients();
    for (std::size_t t = 0; t < c.size() && t < d; ++t) cols[t][i] = c[t];
  }
  return cols;
}

LambdaVector apply_shifted(const RatMatrix& a, const LambdaVector& p) {
  if (!a.is_square() || a.cols() != p.size()) throw DimensionError("apply_shifted: dimension mismatch");
  LambdaVector out{p.modulus, std::vector<UnivarPoly>(p.size())};
  const UnivarPoly lambda = UnivarPoly::lambda();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    UnivarPoly acc;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) != 0 && !p.entries[j].is_zero()) acc += a(i, j) * p.entries[j];
    }
    acc -= lambda * p.entries[i];
    out.entries[i] = reduce_mod(acc, p.modulus);
  }
  return out;
}

SymbolicChain chain_witness(const RatMatrix& a, const UnivarPoly& f, const Vector& u, std::size_t ell) {
  if (!a.is_square() || a.cols() != u.size()) throw DimensionError("chain_witness: dimension mismatch");
  if (ell == 0) throw DimensionError("chain_witness: rank must be >= 1");
  const RatMatrix fa = eval_matrix(f, a);

  // shifted[k] = f(A)^k u for k = 0 .. ell
  std::vector<Vector> shifted{u};
  for (std::size_t k = 0; k < ell; ++k) shifted.push_back(mat_vec(fa, shifted.back()));
  std::size_t actual = 0;
  while (actual < shifted.size() && !is_zero(shifted[actual])) ++actual;
  if (actual != ell) {
    if (actual == shifted.size()) {
      throw InconsistencyError("chains", "vector has rank greater than " + std::to_string(ell));
    }
    throw InconsistencyError("chains", "vector has rank " + std::to_string(actual) + ", expected " +
                                           std::to_string(ell));
  }

  SymbolicChain chain{f, {}};
  chain.links.reserve(ell);
  for (std::size_t k = ell; k >= 1; --k) {
    const BivarPsi psi_k = psi_power_mod(f, k);
    const int mu_deg = psi_k.mu_degree();
    const Vector& w = shifted[ell - k];
    LambdaVector p{f, std::vector<UnivarPoly>(u.size())};
    Vector apow = w;
    for (int j = 0; j <= mu_deg; ++j) {
      const UnivarPoly& cj = psi_k.mu_coeffs[static_cast<std::size_t>(j)];
      if (!cj.is_zero()) {
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (sgn(apow[i]) != 0) p.entries[i] += apow[i] * cj;
        }
      }
      if (j < mu_deg) apow = mat_vec(a, apow);
    }
    for (auto& e : p.entries) e = reduce_mod(e, f);
    chain.links.push_back(std::move(p));
  }
  return chain;
}

ChainCheck verify_chain(const RatMatrix& a, const UnivarPoly& f, const SymbolicChain& chain) {
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    const LambdaVector& link = chain.links[i];
    if (link.size() != a.rows() || !(link.modulus == f)) return {false, i};
    const LambdaVector lhs = apply_shifted(a, link);
    const bool last = i + 1 == chain.links.size();
    if (last) {
      if (!lhs.is_zero() || link.is_zero()) return {false, i};
    } else if (!(lhs.entries == chain.links[i + 1].entries)) {
      return {false, i};
    }
  }
  return {};
}

std::vector<Vector> scalar_expansion(const SymbolicChain& chain) {
  const auto d = static_cast<std::size_t>(std::max(chain.modulus.degree(), 0));
  std::vector<Vector> cols;
  for (const auto& link : chain.links) {
    std::vector<UnivarPoly> cur = link.entries;
    for (std::size_t t = 0; t < d; ++t) {
      Vector col(link.size() * d);
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (std::size_t s = 0; s < d; ++s) col[i * d + s] = cur[i].coeff(s);
      }
      cols.push_back(std::move(col));
      for (auto& e : cur) e = reduce_mod(UnivarPoly::lambda() * e, chain.modulus);
    }
  }
  return cols;
}

}  // namespace jk
