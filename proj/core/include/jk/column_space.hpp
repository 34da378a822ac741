#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "jk/matrix.hpp"

namespace jk {

/// Incrementally grown subspace of Q^rows kept in reduced column-echelon form:
/// every basis column has a 1 at its own pivot row and a 0 at the pivot rows
/// of all other columns. Pivots are the first nonzero row, scanning down.
///
/// A space may carry partner columns (of length partner_rows), one per basis
/// column. Every elementary column operation applied to the basis is mirrored
/// on the partners, so if the inserted vectors were T(p) for a linear map T and
/// their partners p, then basis_i = T(partner_i) stays true.
class ColumnSpace {
 public:
  struct Reduction {
    Vector residual;
    std::vector<Rational> coefficients;  ///< one per basis column
  };

  explicit ColumnSpace(std::size_t rows, std::size_t partner_rows = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t partner_rows() const noexcept { return partner_rows_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool empty() const noexcept { return basis_.empty(); }
  bool paired() const noexcept { return partner_rows_ != 0; }

  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const noexcept { return pivots_; }
  const std::vector<Vector>& partners() const noexcept { return partners_; }

  /// residual = v - sum coefficients_i * basis_i, zero at every pivot row.
  Reduction reduce(const Vector& v) const;
  bool contains(const Vector& v) const;

  /// Reduces v and applies the same coefficients to `partner` against the
  /// stored partners. Returns (residual of v, residual of partner).
  std::pair<Vector, Vector> reduce_paired(const Vector& v, const Vector& partner) const;

  /// Adjoins the residual of v when it is nonzero; returns whether it did.
  bool insert(const Vector& v);
  bool insert(const Vector& v, const Vector& partner);

  /// Replaces the partner columns, e.g. after applying a linear map to all of
  /// them. The count must match dim().
  void set_partners(std::vector<Vector> partners);

 private:
  bool insert_impl(const Vector& v, const Vector* partner);

  std::size_t rows_;
  std::size_t partner_rows_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> partners_;
};

ColumnSpace::Reduction reduce_against(const ColumnSpace& space, const Vector& v);

struct SimultaneousReduction {
  Vector r_prime;  ///< residual of v' against the W columns
  Vector r;        ///< v minus the paired columns with the same coefficients
};

/// Reduces v' against `w_space` and replays the coefficients on v against
/// `paired` (paired[i] belongs to basis column i of w_space).
SimultaneousReduction simultaneous_reduce(const ColumnSpace& w_space,
                                          std::span<const Vector> paired,
                                          const Vector& v_prime, const Vector& v);

/// Reduced column-echelon form of the column space of m with zero columns
/// dropped; columns are ordered by ascending pivot row, so the result is
/// canonical for the space.
RatMatrix column_reduce_matrix(const RatMatrix& m);

}  // namespace jk
