#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/poly.hpp"
#include "jk/structure.hpp"

namespace jk {

struct FactorSpec {
  UnivarPoly f;
  JordanStructure counts;
};

/// Prescribed Jordan structure per irreducible factor.
struct StructureSpec {
  std::vector<FactorSpec> factors;

  /// sum_i deg f_i * m_i
  std::size_t n() const;
  /// The characteristic polynomial the generated matrix will have.
  FactoredCharPoly charpoly() const;
  /// Throws InconsistencyError on an empty or zero-terminated counts list,
  /// a non-monic or constant f, or two factors sharing a root.
  void validate() const;
};

struct GenOptions {
  /// Follow the permutation with a few integer elementary similarities.
  bool unimodular = false;
};

/// P diag(C(f_i^l) ...) P^-1 with one companion block per unit of c_l and P a
/// permutation drawn from mt19937_64(seed).
RatMatrix generate(const StructureSpec& spec, std::uint64_t seed, GenOptions options = {});

/// s51 ... s55. Throws std::invalid_argument for an unknown name or d == 0.
StructureSpec named_family(std::string_view name, std::size_t d);

/// True when f (integer coefficients, monic) is irreducible over GF(p).
bool irreducible_mod_p(const UnivarPoly& f, std::uint32_t p);

/// Smallest prime p < 200 certifying irreducibility over Q, if any. A monic
/// integer polynomial irreducible mod some p is irreducible over Q.
std::optional<std::uint32_t> irreducibility_certificate(const UnivarPoly& f);

/// The first `count` polynomials lambda^d - lambda - c, c = 1, 2, ..., that
/// carry an irreducibility certificate.
std::vector<UnivarPoly> certified_irreducibles(std::size_t d, std::size_t count);

}  // namespace jk
