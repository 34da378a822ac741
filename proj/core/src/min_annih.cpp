#include "jk/min_annih.hpp"

#include "jk/column_space.hpp"
#include "jk/errors.hpp"

namespace jk {

UnivarPoly min_annih_poly(const RatMatrix& a, const Vector& u, AnnihStats* stats) {
  if (!a.is_square() || a.cols() != u.size()) throw DimensionError("min_annih_poly: dimension mismatch");
  if (is_zero(u)) return UnivarPoly::constant(1);
  if (stats != nullptr) ++stats->calls;

  const std::size_t n = u.size();
  ColumnSpace krylov(n, n + 1);
  Vector w = u;
  for (std::size_t k = 0; k <= n; ++k) {
    const Vector tag = unit_vector(n + 1, k);
    if (!krylov.insert(w, tag)) {
      auto [residual, coeffs] = krylov.reduce_paired(w, tag);
      coeffs.resize(k + 1);
      return UnivarPoly(std::move(coeffs));
    }
    w = mat_vec(a, w);
    if (stats != nullptr) ++stats->krylov_steps;
  }
  // n + 1 vectors in Q^n are always dependent.
  throw std::logic_error("min_annih_poly: Krylov sequence did not become dependent");
}

MinAnnihResult split_f_part(const UnivarPoly& pi, const UnivarPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw DimensionError("split_f_part: f must be monic of degree >= 1");
  if (pi.is_zero()) throw DimensionError("split_f_part: pi is zero");
  MinAnnihResult out{pi, 0, pi};
  for (;;) {
    auto [q, r] = divmod(out.g_part, f);
    if (!r.is_zero()) break;
    out.g_part = std::move(q);
    ++out.f_exponent;
  }
  return out;
}

}  // namespace jk
