#include "jk/matrix.hpp"

#include <utility>

#include "jk/errors.hpp"

namespace jk {

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n);
  e.at(i) = 1;
  return e;
}

void axpy(Vector& y, const Rational& c, const Vector& x) {
  if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += c * x[i];
  }
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector RatMatrix::column(std::size_t c) const {
  if (c >= cols_) throw DimensionError("column index out of range");
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> RatMatrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  RatMatrix out(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        out(i, j) += t;
      }
    }
  }
  return out;
}

Vector mat_vec(const RatMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("mat_vec: length mismatch");
  Vector out(a.rows());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0 || sgn(v[k]) == 0) continue;
      t = a(i, k) * v[k];
      out[i] += t;
    }
  }
  return out;
}

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch");
  }
}

}  // namespace

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b, "mat_add");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b, "mat_sub");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

RatMatrix mat_scale(const Rational& c, const RatMatrix& a) {
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
  return out;
}

std::size_t rank(const RatMatrix& m) {
  std::vector<Vector> rows(m.rows(), Vector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);

  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      factor = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(rows[r][j]) != 0) rows[i][j] -= factor * rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

RatMatrix block_diagonal(std::span<const RatMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw DimensionError("block_diagonal: blocks must be square");
    n += b.rows();
  }
  RatMatrix out(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return out;
}

}  // namespace jk
