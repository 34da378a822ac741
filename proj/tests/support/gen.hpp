#pragma once

// Hand-rolled generators and brute-force reference computations shared by
// the unit, property and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "jk/genmat.hpp"
#include "jk/matrix.hpp"
#include "jk/poly.hpp"

namespace jkt {

using jk::Rational;
using jk::RatMatrix;
using jk::UnivarPoly;
using jk::Vector;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(unsigned percent = 50) { return rng_() % 100 < percent; }

  /// p/q with |p| <= num, 1 <= q <= den; zero with probability zero_pct.
  Rational rational(long num = 5, long den = 3, unsigned zero_pct = 20) {
    if (coin(zero_pct)) return 0;
    Rational q(integer(-num, num), integer(1, den));
    q.canonicalize();
    return q;
  }

  RatMatrix matrix(std::size_t r, std::size_t c, long num = 5, long den = 3, unsigned zero_pct = 20) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(num, den, zero_pct);
    return m;
  }

  RatMatrix int_matrix(std::size_t n, long bound, unsigned zero_pct = 30) { return matrix(n, n, bound, 1, zero_pct); }

  Vector vector(std::size_t n, long num = 5, long den = 3, unsigned zero_pct = 20) {
    Vector v(n);
    for (auto& x : v) x = rational(num, den, zero_pct);
    return v;
  }

  /// Random polynomial of exact degree `deg`.
  UnivarPoly poly(std::size_t deg, bool monic, long num = 6, long den = 3) {
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = rational(num, den, 15);
    if (monic) c[deg] = 1;
    while (jk::is_zero(c[deg])) c[deg] = rational(num, den, 0);
    return UnivarPoly(std::move(c));
  }

  /// Strictly upper triangular integer matrix, permuted.
  RatMatrix nilpotent(std::size_t n, long bound = 3, unsigned zero_pct = 40) {
    RatMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) u(i, j) = Rational(coin(zero_pct) ? 0 : integer(-bound, bound));
    return permute(u);
  }

  RatMatrix permute(const RatMatrix& m) {
    std::vector<std::size_t> p(m.rows());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[rng_() % i]);
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(p[i], p[j]);
    return out;
  }

  /// Random partition-like counts list ending in a positive entry.
  std::vector<std::size_t> counts(std::size_t max_mult) {
    std::vector<std::size_t> c;
    std::size_t total = 0;
    const std::size_t target = static_cast<std::size_t>(integer(1, static_cast<long>(max_mult)));
    while (total < target) {
      const auto l = static_cast<std::size_t>(integer(1, static_cast<long>(target - total)));
      if (c.size() < l) c.resize(l, 0);
      ++c[l - 1];
      total += l;
    }
    return c;
  }

  /// Random StructureSpec with n <= max_n: up to three distinct factors of
  /// degree 1..3 drawn from certified irreducibles.
  jk::StructureSpec spec(std::size_t max_n) {
    jk::StructureSpec s;
    std::size_t budget = max_n;
    const auto nf = static_cast<std::size_t>(integer(1, 3));
    std::vector<std::size_t> used_by_degree(4, 0);
    for (std::size_t i = 0; i < nf && budget > 0; ++i) {
      const auto d = static_cast<std::size_t>(integer(1, 3));
      if (d > budget) continue;
      const std::size_t k = used_by_degree[d]++;
      const UnivarPoly f = jk::certified_irreducibles(d, k + 1)[k];
      auto c = counts(budget / d);
      std::size_t m = 0;
      for (std::size_t l = 1; l <= c.size(); ++l) m += l * c[l - 1];
      budget -= d * m;
      s.factors.push_back({f, jk::JordanStructure{c}});
    }
    if (s.factors.empty()) s.factors.push_back({UnivarPoly{-1, 1}, jk::JordanStructure{{1}}});
    return s;
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

/// Rank by Gauss-Jordan with the largest-magnitude pivot, written here
/// independently of the library's elimination routines.
inline std::size_t brute_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = r;
    for (std::size_t i = r; i < m.rows(); ++i)
      if (abs(m(i, c)) > abs(m(best, c))) best = i;
    if (sgn(m(best, c)) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational q = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  return r;
}

inline Rational brute_det(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational q = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= q * m(c, j);
    }
  }
  return det;
}

/// det(x I - A) sampled at x = 0..n and interpolated (Lagrange).
inline UnivarPoly interpolated_charpoly(const RatMatrix& a) {
  const std::size_t n = a.rows();
  UnivarPoly result;
  for (std::size_t k = 0; k <= n; ++k) {
    RatMatrix m = a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Rational(static_cast<long>(k)) : Rational(0)) - a(i, j);
    const Rational y = brute_det(m);
    UnivarPoly basis = UnivarPoly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis = basis * UnivarPoly{Rational(-static_cast<long>(j)), 1};
      denom *= Rational(static_cast<long>(k) - static_cast<long>(j));
    }
    result += (y / denom) * basis;
  }
  return result;
}

inline RatMatrix brute_pow(const RatMatrix& a, std::size_t k) {
  RatMatrix r = RatMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) r = jk::mat_mul(r, a);
  return r;
}

/// Jordan block J_n(0): ones on the superdiagonal.
inline RatMatrix nilpotent_block(std::size_t n) {
  RatMatrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return j;
}

inline RatMatrix direct_sum(std::initializer_list<RatMatrix> blocks) {
  std::vector<RatMatrix> v(blocks);
  return jk::block_diagonal(v);
}

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace jkt
