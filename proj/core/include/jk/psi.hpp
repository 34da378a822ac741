#pragma once

#include <cstddef>
#include <vector>

#include "jk/poly.hpp"

namespace jk {

/// Remainder of p modulo a nonzero f.
UnivarPoly reduce_mod(const UnivarPoly& p, const UnivarPoly& f);

/// Residue class in Q[lambda]/(f); the stored value always has degree < deg f.
class PolyModF {
 public:
  PolyModF(UnivarPoly modulus, const UnivarPoly& value);

  const UnivarPoly& modulus() const noexcept { return modulus_; }
  const UnivarPoly& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }

  PolyModF operator+(const PolyModF& o) const;
  PolyModF operator-(const PolyModF& o) const;
  PolyModF operator*(const PolyModF& o) const;

  friend bool operator==(const PolyModF&, const PolyModF&) = default;

 private:
  UnivarPoly modulus_;
  UnivarPoly value_;
};

/// A polynomial in mu whose coefficients are residues in Q[lambda]/(f):
/// sum_j mu_coeffs[j](lambda) mu^j. Used for the divided difference
/// psi_f(mu, lambda) = (f(mu) - f(lambda)) / (mu - lambda) and its powers.
struct BivarPsi {
  UnivarPoly modulus;
  std::vector<UnivarPoly> mu_coeffs;

  /// -1 when every coefficient is zero.
  int mu_degree() const;
};

/// psi_f itself. Its lambda-degrees are already below deg f, so no reduction
/// takes place. Throws DimensionError for constant f.
BivarPsi psi(const UnivarPoly& f);

/// psi_f^k with every mu-coefficient reduced modulo f(lambda). Requires
/// k >= 1 and monic f of degree >= 1.
BivarPsi psi_power_mod(const UnivarPoly& f, std::size_t k);

}  // namespace jk
