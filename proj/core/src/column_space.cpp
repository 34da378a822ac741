#include "jk/column_space.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "jk/errors.hpp"

namespace jk {

ColumnSpace::ColumnSpace(std::size_t rows, std::size_t partner_rows)
    : rows_(rows), partner_rows_(partner_rows) {}

ColumnSpace::Reduction ColumnSpace::reduce(const Vector& v) const {
  if (v.size() != rows_) throw DimensionError("ColumnSpace::reduce: length mismatch");
  Reduction out{v, std::vector<Rational>(basis_.size())};
  // Basis columns vanish at each other's pivots, so the coefficient of column
  // i is just the entry of v at pivot i.
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    out.coefficients[i] = v[pivots_[i]];
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (sgn(out.coefficients[i]) != 0) axpy(out.residual, -out.coefficients[i], basis_[i]);
  }
  return out;
}

bool ColumnSpace::contains(const Vector& v) const { return is_zero(reduce(v).residual); }

std::pair<Vector, Vector> ColumnSpace::reduce_paired(const Vector& v, const Vector& partner) const {
  if (!paired()) throw DimensionError("ColumnSpace::reduce_paired: space has no partners");
  if (partner.size() != partner_rows_) throw DimensionError("reduce_paired: partner length mismatch");
  auto red = reduce(v);
  Vector p = partner;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (sgn(red.coefficients[i]) != 0) axpy(p, -red.coefficients[i], partners_[i]);
  }
  return {std::move(red.residual), std::move(p)};
}

bool ColumnSpace::insert(const Vector& v) {
  if (paired()) throw DimensionError("ColumnSpace::insert: paired space needs a partner");
  return insert_impl(v, nullptr);
}

bool ColumnSpace::insert(const Vector& v, const Vector& partner) {
  if (!paired()) throw DimensionError("ColumnSpace::insert: space has no partners");
  if (partner.size() != partner_rows_) throw DimensionError("insert: partner length mismatch");
  return insert_impl(v, &partner);
}

bool ColumnSpace::insert_impl(const Vector& v, const Vector* partner) {
  Vector r;
  Vector pr;
  if (partner != nullptr) {
    std::tie(r, pr) = reduce_paired(v, *partner);
  } else {
    r = reduce(v).residual;
  }
  const auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (it == r.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - r.begin());

  const Rational inv = 1 / r[pivot];
  for (auto& x : r) {
    if (sgn(x) != 0) x *= inv;
  }
  for (auto& x : pr) {
    if (sgn(x) != 0) x *= inv;
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = basis_[i][pivot];
    if (sgn(c) == 0) continue;
    axpy(basis_[i], -c, r);
    if (partner != nullptr) axpy(partners_[i], -c, pr);
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(pivot);
  if (partner != nullptr) partners_.push_back(std::move(pr));
  return true;
}

void ColumnSpace::set_partners(std::vector<Vector> partners) {
  if (!paired()) throw DimensionError("ColumnSpace::set_partners: space has no partners");
  if (partners.size() != basis_.size()) throw DimensionError("set_partners: count mismatch");
  for (const auto& p : partners) {
    if (p.size() != partner_rows_) throw DimensionError("set_partners: length mismatch");
  }
  partners_ = std::move(partners);
}

ColumnSpace::Reduction reduce_against(const ColumnSpace& space, const Vector& v) {
  return space.reduce(v);
}

SimultaneousReduction simultaneous_reduce(const ColumnSpace& w_space,
                                          std::span<const Vector> paired,
                                          const Vector& v_prime, const Vector& v) {
  if (paired.size() != w_space.dim()) {
    throw DimensionError("simultaneous_reduce: " + std::to_string(paired.size()) +
                         " paired columns for " + std::to_string(w_space.dim()) + " W columns");
  }
  auto red = w_space.reduce(v_prime);
  Vector r = v;
  for (std::size_t i = 0; i < paired.size(); ++i) {
    if (paired[i].size() != v.size()) throw DimensionError("simultaneous_reduce: paired column length");
    if (sgn(red.coefficients[i]) != 0) axpy(r, -red.coefficients[i], paired[i]);
  }
  return {std::move(red.residual), std::move(r)};
}

RatMatrix column_reduce_matrix(const RatMatrix& m) {
  ColumnSpace space(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) space.insert(m.column(c));
  std::vector<std::size_t> order(space.dim());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return space.pivot_rows()[a] < space.pivot_rows()[b];
  });
  std::vector<Vector> cols;
  cols.reserve(order.size());
  for (auto i : order) cols.push_back(space.basis()[i]);
  return RatMatrix::from_columns(cols, m.rows());
}

}  // namespace jk
