#include "jk/krylov.hpp"

#include <chrono>
#include <string>

#include "jk/column_space.hpp"
#include "jk/errors.hpp"

namespace jk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::size_t ExtendedKGS::size(std::size_t rank) const {
  if (rank == 0 || rank > buckets_.size()) return 0;
  return buckets_[rank - 1].size();
}

std::size_t ExtendedKGS::total() const {
  std::size_t n = 0;
  for (const auto& b : buckets_) n += b.size();
  return n;
}

void ExtendedKGS::push(ExtEntry entry) {
  if (entry.rank == 0) throw DimensionError("ExtendedKGS::push: rank must be >= 1");
  if (entry.rank > buckets_.size()) buckets_.resize(entry.rank);
  if (entry.rank > lbar_) lbar_ = entry.rank;
  buckets_[entry.rank - 1].push_back(std::move(entry));
}

ExtEntry ExtendedKGS::take(std::size_t rank) {
  if (empty(rank)) throw std::out_of_range("ExtendedKGS::take: empty bucket");
  auto& b = buckets_[rank - 1];
  ExtEntry e = std::move(b.front());
  b.pop_front();
  return e;
}

std::vector<ExtEntry> ExtendedKGS::take_all(std::size_t rank) {
  std::vector<ExtEntry> out;
  if (empty(rank)) return out;
  auto& b = buckets_[rank - 1];
  out.assign(std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  b.clear();
  return out;
}

const std::deque<ExtEntry>& ExtendedKGS::bucket(std::size_t rank) const {
  static const std::deque<ExtEntry> kEmpty;
  if (rank == 0 || rank > buckets_.size()) return kEmpty;
  return buckets_[rank - 1];
}

std::vector<ExtEntry> ExtendedKGS::entries() const {
  std::vector<ExtEntry> out;
  for (const auto& b : buckets_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

KrylovGS krylov_gs(const RatMatrix& a, const RatMatrix& fa, const Factor& factor,
                   std::span<const Vector> basis, AnnihilatorRoute route, KrylovProfile* profile) {
  if (!a.is_square() || fa.rows() != a.rows() || !fa.is_square()) {
    throw DimensionError("krylov_gs: A and f(A) must be square of equal size");
  }
  KrylovProfile local;
  KrylovProfile& prof = profile != nullptr ? *profile : local;

  std::vector<Vector> standard;
  if (basis.empty()) {
    for (std::size_t i = 0; i < a.rows(); ++i) standard.push_back(unit_vector(a.rows(), i));
    basis = standard;
  }

  KrylovGS out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Vector& e = basis[i];
    if (e.size() != a.rows()) throw DimensionError("krylov_gs: basis vector length mismatch");

    auto t0 = Clock::now();
    UnivarPoly g;
    if (route == AnnihilatorRoute::kShifted) {
      Vector shifted = e;
      for (std::size_t k = 0; k < factor.multiplicity && !is_zero(shifted); ++k) shifted = mat_vec(fa, shifted);
      if (is_zero(shifted)) {
        g = UnivarPoly::constant(1);
      } else {
        g = min_annih_poly(a, shifted, &prof.annih);
        if (split_f_part(g, factor.f).f_exponent != 0) {
          throw InconsistencyError("KrylovGS", "f(A)^m e_" + std::to_string(i + 1) +
                                                   " is still annihilated by a power of f; "
                                                   "the multiplicity m is too small");
        }
      }
    } else {
      const auto split = split_f_part(min_annih_poly(a, e, &prof.annih), factor.f);
      if (split.f_exponent > factor.multiplicity) {
        throw InconsistencyError("KrylovGS", "e_" + std::to_string(i + 1) + " needs f^" +
                                                 std::to_string(split.f_exponent) +
                                                 " which exceeds the multiplicity m");
      }
      g = split.f_exponent == 0 ? UnivarPoly{} : split.g_part;
    }
    prof.annihpol_seconds += seconds_since(t0);

    t0 = Clock::now();
    if (!g.is_zero()) {
      Vector v = eval_matrix_vec(g, a, e);
      if (!is_zero(v)) out.vectors.push_back(std::move(v));
    }
    prof.krylovgs_seconds += seconds_since(t0);
  }
  return out;
}

KrylovGS krylov_gs(const RatMatrix& a, const Factor& factor) {
  return krylov_gs(a, eval_matrix(factor.f, a), factor, {});
}

std::vector<Vector> krylov_block(const RatMatrix& a, const Vector& u, std::size_t d) {
  if (d == 0) throw DimensionError("krylov_block: d must be >= 1");
  if (!a.is_square() || a.cols() != u.size()) throw DimensionError("krylov_block: dimension mismatch");
  std::vector<Vector> out;
  out.reserve(d);
  out.push_back(u);
  for (std::size_t j = 1; j < d; ++j) out.push_back(mat_vec(a, out.back()));
  return out;
}

ExtendedKGS extended_krylov_gs(const RatMatrix& fa, const KrylovGS& v, bool preprocess,
                               std::size_t max_rank) {
  std::vector<Vector> origin;
  if (preprocess && !v.vectors.empty()) {
    origin = column_reduce_matrix(RatMatrix::from_columns(v.vectors, fa.rows())).columns();
  } else {
    origin = v.vectors;
  }

  ExtendedKGS out;
  std::vector<Vector> current = origin;
  std::vector<bool> alive(current.size());
  std::size_t live = 0;
  for (std::size_t j = 0; j < current.size(); ++j) {
    alive[j] = !is_zero(current[j]);
    live += alive[j] ? 1 : 0;
  }
  for (std::size_t ell = 1; live > 0; ++ell) {
    if (ell > max_rank) {
      throw InconsistencyError("ExtendedKrylovGS", "a generator has rank above the multiplicity m = " +
                                                       std::to_string(max_rank));
    }
    for (std::size_t j = 0; j < current.size(); ++j) {
      if (!alive[j]) continue;
      Vector next = mat_vec(fa, current[j]);
      if (is_zero(next)) {
        out.push({origin[j], ell, std::move(current[j])});
        alive[j] = false;
        --live;
      }
      current[j] = std::move(next);
    }
  }
  return out;
}

std::pair<std::size_t, Vector> rank_and_witness(const RatMatrix& fa, const Vector& u, std::size_t max_rank) {
  if (is_zero(u)) return {0, Vector{}};
  Vector prev = u;
  for (std::size_t rank = 1;; ++rank) {
    if (rank > max_rank) {
      throw InconsistencyError("rank", "vector rank exceeds " + std::to_string(max_rank));
    }
    Vector next = mat_vec(fa, prev);
    if (is_zero(next)) return {rank, std::move(prev)};
    prev = std::move(next);
  }
}

}  // namespace jk
