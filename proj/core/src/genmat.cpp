#include "jk/genmat.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "jk/errors.hpp"

namespace jk {

std::size_t StructureSpec::n() const {
  std::size_t n = 0;
  for (const auto& fs : factors) n += static_cast<std::size_t>(std::max(fs.f.degree(), 0)) * fs.counts.multiplicity();
  return n;
}

FactoredCharPoly StructureSpec::charpoly() const {
  FactoredCharPoly chi;
  for (const auto& fs : factors) chi.factors.push_back({fs.f, fs.counts.multiplicity()});
  return chi;
}

void StructureSpec::validate() const {
  if (factors.empty()) throw InconsistencyError("genmat", "spec has no factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& counts = factors[i].counts.counts;
    if (counts.empty() || counts.back() == 0) {
      throw InconsistencyError("genmat", "counts of factor " + std::to_string(i + 1) + " must end in a positive entry");
    }
  }
  charpoly().validate();
}

namespace {

// Uniform integer in [0, bound) by rejection, so results do not depend on the
// standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace

RatMatrix generate(const StructureSpec& spec, std::uint64_t seed, GenOptions options) {
  spec.validate();
  std::vector<RatMatrix> blocks;
  for (const auto& fs : spec.factors) {
    for (std::size_t l = 1; l <= fs.counts.lbar(); ++l) {
      if (fs.counts.count(l) == 0) continue;
      const RatMatrix c = companion(pow(fs.f, l));
      for (std::size_t k = 0; k < fs.counts.count(l); ++k) blocks.push_back(c);
    }
  }
  const RatMatrix m = block_diagonal(blocks);
  const std::size_t n = m.rows();

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);

  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(perm[i], perm[j]);
  }

  if (options.unimodular && n > 1) {
    // E = I + k e_i e_j^T; out <- E out E^-1
    for (std::size_t step = 0; step < 2 * n; ++step) {
      const std::size_t i = uniform_below(rng, n);
      std::size_t j = uniform_below(rng, n - 1);
      if (j >= i) ++j;
      const Rational k(static_cast<long>(uniform_below(rng, 5)) - 2);
      if (is_zero(k)) continue;
      for (std::size_t c = 0; c < n; ++c) out(i, c) += k * out(j, c);
      for (std::size_t r = 0; r < n; ++r) out(r, j) -= k * out(r, i);
    }
  }
  return out;
}

std::vector<UnivarPoly> certified_irreducibles(std::size_t d, std::size_t count) {
  if (d == 0) throw std::invalid_argument("certified_irreducibles: degree must be >= 1");
  std::vector<UnivarPoly> out;
  for (long c = 1; out.size() < count; ++c) {
    std::vector<Rational> coeffs(d + 1);
    coeffs[d] = 1;
    coeffs[0] = -c;
    if (d > 1) {
      coeffs[1] -= 1;
    }
    UnivarPoly f(std::move(coeffs));
    if (d == 1 || irreducibility_certificate(f)) out.push_back(std::move(f));
  }
  return out;
}

StructureSpec named_family(std::string_view name, std::size_t d) {
  if (d == 0) throw std::invalid_argument("named_family: degree must be >= 1");
  using Counts = std::vector<std::size_t>;
  std::vector<Counts> shape;
  if (name == "s51") {
    shape = {{8, 0, 0, 1}};
  } else if (name == "s52") {
    shape = {{0, 1, 0, 0, 0, 0, 0, 0, 0, 1}};
  } else if (name == "s53") {
    shape = {{0, 0, 0, 0, 0, 2}};
  } else if (name == "s54") {
    shape = {{4, 0, 0, 1}, {2}};
  } else if (name == "s55") {
    shape = {{0, 0, 0, 1, 0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}};
  } else {
    throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected s51..s55)");
  }
  const auto fs = certified_irreducibles(d, shape.size());
  StructureSpec spec;
  for (std::size_t i = 0; i < shape.size(); ++i) spec.factors.push_back({fs[i], JordanStructure{shape[i]}});
  return spec;
}

// ---------------------------------------------------------------------------
// GF(p) probe

namespace {

using ModPoly = std::vector<std::int64_t>;  // ascending, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

ModPoly mod_poly(ModPoly a, const ModPoly& b, std::int64_t p) {
  const std::int64_t inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t q = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - q * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return mod_poly(std::move(c), f, p);
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = mod_poly(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly pow_mod(ModPoly base, std::uint64_t e, const ModPoly& f, std::int64_t p) {
  ModPoly r{1};
  base = mod_poly(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

bool irreducible_mod_p(const UnivarPoly& f, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("irreducible_mod_p: modulus is not prime");
  const auto P = static_cast<std::int64_t>(p);
  ModPoly fm;
  for (const auto& c : f.coefficients()) {
    if (c.get_den() != 1) throw std::invalid_argument("irreducible_mod_p: coefficients must be integers");
    mpz_class r = c.get_num() % static_cast<unsigned long>(p);
    if (r < 0) r += p;
    fm.push_back(r.get_si());
  }
  trim(fm);
  const int d = static_cast<int>(fm.size()) - 1;
  if (d != f.degree() || d < 1) return false;  // degree drops mod p
  if (d == 1) return true;
  // Ben-Or: no irreducible factor of degree i <= d/2, i.e. gcd(x^(p^i) - x, f) = 1.
  ModPoly xp{0, 1};
  for (int i = 1; i <= d / 2; ++i) {
    xp = pow_mod(xp, p, fm, P);
    ModPoly h = xp;
    if (h.size() < 2) h.resize(2, 0);
    h[1] = ((h[1] - 1) % P + P) % P;
    trim(h);
    if (h.empty()) return false;
    if (gcd_mod(fm, h, P).size() > 1) return false;
  }
  return true;
}

std::optional<std::uint32_t> irreducibility_certificate(const UnivarPoly& f) {
  if (!f.is_monic()) return std::nullopt;
  for (const auto& c : f.coefficients()) {
    if (c.get_den() != 1) return std::nullopt;
  }
  for (std::uint32_t p = 2; p < 200; ++p) {
    if (is_prime(p) && irreducible_mod_p(f, p)) return p;
  }
  return std::nullopt;
}

}  // namespace jk
