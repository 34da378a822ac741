#pragma once

#include <cstddef>

#include "jk/matrix.hpp"
#include "jk/poly.hpp"

namespace jk {

/// Work counters for annihilator computations.
struct AnnihStats {
  std::size_t calls = 0;         ///< min_annih_poly invocations on nonzero vectors
  std::size_t krylov_steps = 0;  ///< matrix-vector products spent in them
};

/// Minimal annihilating polynomial of u with respect to A: the monic generator
/// of {g : g(A) u = 0}. Inserts u, Au, A^2 u, ... into a column space whose
/// partner columns record each iterate's polynomial; the first dependent
/// iterate yields the polynomial. Returns 1 for u = 0.
UnivarPoly min_annih_poly(const RatMatrix& a, const Vector& u, AnnihStats* stats = nullptr);

/// pi = f^f_exponent * g_part with gcd(f, g_part) = 1.
struct MinAnnihResult {
  UnivarPoly pi;
  std::size_t f_exponent = 0;
  UnivarPoly g_part;
};

/// Splits off the largest power of f dividing pi. f must be monic of degree
/// >= 1 and pi nonzero.
MinAnnihResult split_f_part(const UnivarPoly& pi, const UnivarPoly& f);

}  // namespace jk
