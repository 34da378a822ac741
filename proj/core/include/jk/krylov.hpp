#pragma once

#include <cstddef>
#include <deque>
#include <limits>
#include <span>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/min_annih.hpp"
#include "jk/poly.hpp"

namespace jk {

/// Krylov generating set of ker f(A)^lbar: nonzero vectors v_i = g_i(A) e_i.
struct KrylovGS {
  std::vector<Vector> vectors;
};

/// (v, rank_f v, f(A)^(rank-1) v)
struct ExtEntry {
  Vector v;
  std::size_t rank = 0;
  Vector witness;
};

/// Extended Krylov generating set, bucketed by rank. Each bucket keeps
/// insertion order; `take` hands out the oldest entry first.
class ExtendedKGS {
 public:
  /// Largest rank ever pushed.
  std::size_t lbar() const noexcept { return lbar_; }
  std::size_t size(std::size_t rank) const;
  bool empty(std::size_t rank) const { return size(rank) == 0; }
  std::size_t total() const;

  void push(ExtEntry entry);
  ExtEntry take(std::size_t rank);
  std::vector<ExtEntry> take_all(std::size_t rank);
  const std::deque<ExtEntry>& bucket(std::size_t rank) const;
  /// All entries, ascending rank, insertion order within a rank.
  std::vector<ExtEntry> entries() const;

 private:
  std::vector<std::deque<ExtEntry>> buckets_;  // buckets_[rank - 1]
  std::size_t lbar_ = 0;
};

/// How the Krylov generating set obtains g_e.
enum class AnnihilatorRoute {
  /// g_e = annihilator of f(A)^m e, which is already free of f.
  kShifted,
  /// pi_{A,e} computed directly, then its f-part split off.
  kDirect,
};

/// Wall-clock split of krylov_gs into the annihilator work and the rest.
struct KrylovProfile {
  double annihpol_seconds = 0;
  double krylovgs_seconds = 0;
  AnnihStats annih;
};

/// Krylov generating set for the factor (f, m) over the given basis of Q^n.
/// `fa` must be f(A); an empty basis means the standard one. Zero vectors are
/// dropped; order follows the basis.
KrylovGS krylov_gs(const RatMatrix& a, const RatMatrix& fa, const Factor& factor,
                   std::span<const Vector> basis,
                   AnnihilatorRoute route = AnnihilatorRoute::kShifted,
                   KrylovProfile* profile = nullptr);

/// Same, over the standard basis and forming f(A) internally.
KrylovGS krylov_gs(const RatMatrix& a, const Factor& factor);

/// u, Au, ..., A^(d-1) u
std::vector<Vector> krylov_block(const RatMatrix& a, const Vector& u, std::size_t d);

/// Extended Krylov generating set by repeated application of f(A) to [V]
/// (column-reduced first when `preprocess` is set). A column that dies at
/// step l is recorded with rank l. Throws InconsistencyError when some column
/// survives more than `max_rank` applications.
ExtendedKGS extended_krylov_gs(const RatMatrix& fa, const KrylovGS& v, bool preprocess,
                               std::size_t max_rank = std::numeric_limits<std::size_t>::max());

/// rank_f u and f(A)^(rank-1) u by repeated application of f(A); rank 0 (and
/// an empty witness) for u = 0. Throws InconsistencyError past `max_rank`.
std::pair<std::size_t, Vector> rank_and_witness(const RatMatrix& fa, const Vector& u,
                                                std::size_t max_rank = std::numeric_limits<std::size_t>::max());

}  // namespace jk
