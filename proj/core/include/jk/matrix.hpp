#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "jk/rational.hpp"

namespace jk {

/// Dense column vector over Q.
using Vector = std::vector<Rational>;

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

/// y += c * x
void axpy(Vector& y, const Rational& c, const Vector& x);

/// Dense row-major matrix over Q. Entries are always canonical because GMP
/// canonicalizes after every operation.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  /// Columns must all have length `rows`.
  static RatMatrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
Vector mat_vec(const RatMatrix& a, const Vector& v);
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_scale(const Rational& c, const RatMatrix& a);

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return mat_mul(a, b); }
inline Vector operator*(const RatMatrix& a, const Vector& v) { return mat_vec(a, v); }
inline RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) { return mat_add(a, b); }
inline RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return mat_sub(a, b); }

/// Exact rank over Q by row echelon elimination on a private copy. Kept
/// separate from ColumnSpace so it can serve as an independent check.
std::size_t rank(const RatMatrix& m);

/// Block-diagonal assembly of square blocks.
RatMatrix block_diagonal(std::span<const RatMatrix> blocks);

}  // namespace jk
