#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/poly.hpp"
#include "jk/psi.hpp"

namespace jk {

/// Vector over Q[lambda]/(f): every entry is reduced modulo the common f.
struct LambdaVector {
  UnivarPoly modulus;
  std::vector<UnivarPoly> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool is_zero() const;
  PolyModF entry(std::size_t i) const { return PolyModF(modulus, entries.at(i)); }
  /// deg f columns over Q; column t holds the lambda^t coefficients.
  std::vector<Vector> coefficient_columns() const;

  friend bool operator==(const LambdaVector&, const LambdaVector&) = default;
};

/// p^(l), p^(l-1), ..., p^(1) for a generator u of rank l, where
/// p^(k) = psi_f^(k)(A, lambda E) f(A)^(l-k) u. Evaluating at any root alpha
/// of f gives a Jordan chain for alpha.
struct SymbolicChain {
  UnivarPoly modulus;
  std::vector<LambdaVector> links;  ///< links[0] = p^(l), links.back() = p^(1)

  std::size_t length() const noexcept { return links.size(); }
};

/// (A - lambda E) p reduced modulo f.
LambdaVector apply_shifted(const RatMatrix& a, const LambdaVector& p);

/// Builds the symbolic chain of u. Throws InconsistencyError naming the
/// actual rank when rank_f u differs from ell.
SymbolicChain chain_witness(const RatMatrix& a, const UnivarPoly& f, const Vector& u, std::size_t ell);

struct ChainCheck {
  bool ok = true;
  /// Position in `links` of the first link whose relation fails.
  std::optional<std::size_t> failing_link;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks (A - lambda E) p^(k) = p^(k-1) mod f for every k (with p^(0) = 0)
/// and p^(1) != 0. The empty chain passes.
ChainCheck verify_chain(const RatMatrix& a, const UnivarPoly& f, const SymbolicChain& chain);

/// The links as a Q-spanning set of (Q[lambda]/(f))^n = Q^(n*d): for every
/// link p the d columns lambda^t p, t < d, flattened entry-major. The links
/// are independent over Q[lambda]/(f) iff these d*l columns have full rank.
std::vector<Vector> scalar_expansion(const SymbolicChain& chain);

}  // namespace jk
