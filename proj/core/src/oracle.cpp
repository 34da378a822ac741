#include "jk/oracle.hpp"

#include "jk/errors.hpp"

namespace jk {

std::vector<std::size_t> power_ranks(const RatMatrix& a, const UnivarPoly& f) {
  if (!a.is_square()) throw DimensionError("power_ranks: matrix is not square");
  if (f.degree() < 1) throw DimensionError("power_ranks: factor must have degree >= 1");
  const RatMatrix fa = eval_matrix(f, a);
  std::vector<std::size_t> r{a.rows()};
  RatMatrix p = RatMatrix::identity(a.rows());
  for (;;) {
    p = mat_mul(p, fa);
    r.push_back(rank(p));
    if (r.back() == r[r.size() - 2]) break;
  }
  return r;
}

JordanStructure structure_by_ranks(const RatMatrix& a, const UnivarPoly& f, std::size_t m) {
  const auto r = power_ranks(a, f);
  const auto d = static_cast<long long>(f.degree());
  // r has lbar + 2 entries: the last two agree.
  const std::size_t lbar = r.size() - 2;
  JordanStructure s;
  s.counts.assign(lbar, 0);
  for (std::size_t l = 1; l <= lbar; ++l) {
    const long long diff = static_cast<long long>(r[l - 1]) - 2 * static_cast<long long>(r[l]) +
                           static_cast<long long>(r[l + 1]);
    if (diff < 0) throw InconsistencyError("oracle", "negative block count at size " + std::to_string(l));
    if (diff % d != 0) {
      throw InconsistencyError("oracle", "rank differences not divisible by deg f at size " + std::to_string(l));
    }
    s.counts[l - 1] = static_cast<std::size_t>(diff / d);
  }
  if (s.multiplicity() != m) {
    throw InconsistencyError("oracle", "sum of l*c_l is " + std::to_string(s.multiplicity()) +
                                           ", multiplicity is " + std::to_string(m));
  }
  return s;
}

}  // namespace jk
