#include "jk/poly.hpp"

#include <algorithm>
#include <string>

#include "jk/errors.hpp"

namespace jk {

UnivarPoly::UnivarPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UnivarPoly::UnivarPoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

UnivarPoly UnivarPoly::constant(const Rational& c) { return UnivarPoly(std::vector<Rational>{c}); }

UnivarPoly UnivarPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UnivarPoly(std::move(v));
}

UnivarPoly UnivarPoly::lambda() { return monomial(1, 1); }

bool UnivarPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

bool UnivarPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Rational UnivarPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

const Rational& UnivarPoly::leading() const {
  if (c_.empty()) throw DimensionError("leading coefficient of the zero polynomial");
  return c_.back();
}

UnivarPoly UnivarPoly::monic() const {
  if (c_.empty()) return {};
  UnivarPoly out = *this;
  const Rational inv = 1 / c_.back();
  for (auto& x : out.c_) x *= inv;
  return out;
}

UnivarPoly UnivarPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UnivarPoly(std::move(d));
}

Rational UnivarPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UnivarPoly& UnivarPoly::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

void UnivarPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
UnivarPoly operator-(const UnivarPoly& a) { return Rational(-1) * a; }

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) != 0) out[i + j] += x[i] * y[j];
    }
  }
  return UnivarPoly(std::move(out));
}

UnivarPoly operator*(const Rational& c, UnivarPoly a) { return a *= c; }

std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& a, const UnivarPoly& b) {
  if (b.is_zero()) throw DimensionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UnivarPoly{}, a};
  std::vector<Rational> r = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  std::vector<Rational> q(r.size() - db);
  const Rational inv = 1 / d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational t = r[k + db] * inv;
    q[k] = t;
    if (sgn(t) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      if (sgn(d[j]) != 0) r[k + j] -= t * d[j];
    }
  }
  r.resize(db);
  return {UnivarPoly(std::move(q)), UnivarPoly(std::move(r))};
}

UnivarPoly operator/(const UnivarPoly& a, const UnivarPoly& b) { return divmod(a, b).first; }
UnivarPoly operator%(const UnivarPoly& a, const UnivarPoly& b) { return divmod(a, b).second; }

UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b) {
  UnivarPoly x = a;
  UnivarPoly y = b;
  while (!y.is_zero()) {
    UnivarPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UnivarPoly pow(const UnivarPoly& p, std::size_t k) {
  UnivarPoly result = UnivarPoly::constant(1);
  UnivarPoly base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

UnivarPoly charpoly(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionError("charpoly: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return UnivarPoly::constant(1);

  // Descending coefficients of det(lambda I - A_k) for the leading k x k block,
  // extended one row/column at a time by a Toeplitz product.
  std::vector<Rational> desc{Rational(1), Rational(-a(0, 0))};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Rational> t(k + 2);
    t[0] = 1;
    t[1] = -a(k, k);
    Vector x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = a(i, k);
    for (std::size_t p = 2; p < k + 2; ++p) {
      Rational dot = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if (sgn(a(k, j)) != 0 && sgn(x[j]) != 0) dot += a(k, j) * x[j];
      }
      t[p] = -dot;
      if (p + 1 < k + 2) {
        Vector y(k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) y[i] += a(i, j) * x[j];
          }
        }
        x = std::move(y);
      }
    }
    std::vector<Rational> next(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i) {
      const std::size_t top = std::min(i, k);
      for (std::size_t j = 0; j <= top; ++j) {
        if (sgn(t[i - j]) != 0 && sgn(desc[j]) != 0) next[i] += t[i - j] * desc[j];
      }
    }
    desc = std::move(next);
  }
  std::reverse(desc.begin(), desc.end());
  return UnivarPoly(std::move(desc));
}

std::vector<std::pair<UnivarPoly, std::size_t>> squarefree_decompose(const UnivarPoly& p) {
  if (p.is_zero()) throw DimensionError("squarefree_decompose: zero polynomial");
  std::vector<std::pair<UnivarPoly, std::size_t>> parts;
  const UnivarPoly f = p.monic();
  if (f.degree() == 0) return parts;

  const UnivarPoly df = f.derivative();
  const UnivarPoly a0 = gcd(f, df);
  UnivarPoly b = f / a0;
  UnivarPoly c = df / a0;
  UnivarPoly d = c - b.derivative();
  for (std::size_t i = 1; b.degree() > 0; ++i) {
    const UnivarPoly a = gcd(b, d);
    if (a.degree() > 0) parts.emplace_back(a, i);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  return parts;
}

RatMatrix eval_matrix(const UnivarPoly& p, const RatMatrix& a) {
  if (!a.is_square()) throw DimensionError("eval_matrix: matrix is not square");
  const std::size_t n = a.rows();
  RatMatrix acc(n, n);
  if (p.is_zero()) return acc;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < n; ++i) acc(i, i) = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = mat_mul(acc, a);
    if (sgn(c[k]) != 0) {
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
    }
  }
  return acc;
}

Vector eval_matrix_vec(const UnivarPoly& p, const RatMatrix& a, const Vector& v) {
  if (!a.is_square() || a.cols() != v.size()) throw DimensionError("eval_matrix_vec: dimension mismatch");
  if (p.is_zero()) return Vector(v.size());
  const auto& c = p.coefficients();
  Vector acc = v;
  for (auto& x : acc) x *= c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = mat_vec(a, acc);
    axpy(acc, c[k], v);
  }
  return acc;
}

RatMatrix companion(const UnivarPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DimensionError("companion: f must be monic of degree >= 1");
  const auto d = static_cast<std::size_t>(f.degree());
  RatMatrix c(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -f.coeff(i);
  return c;
}

std::size_t FactoredCharPoly::degree() const {
  std::size_t n = 0;
  for (const auto& fac : factors) n += static_cast<std::size_t>(std::max(fac.f.degree(), 0)) * fac.multiplicity;
  return n;
}

UnivarPoly FactoredCharPoly::expand() const {
  UnivarPoly out = UnivarPoly::constant(1);
  for (const auto& fac : factors) out = out * pow(fac.f, fac.multiplicity);
  return out;
}

void FactoredCharPoly::validate() const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& fac = factors[i];
    const std::string tag = "factor " + std::to_string(i + 1);
    if (fac.f.degree() < 1) throw InconsistencyError("factors", tag + " has degree < 1");
    if (!fac.f.is_monic()) throw InconsistencyError("factors", tag + " is not monic");
    if (fac.multiplicity == 0) throw InconsistencyError("factors", tag + " has multiplicity 0");
    for (std::size_t j = 0; j < i; ++j) {
      if (!gcd(factors[j].f, fac.f).is_one()) {
        throw InconsistencyError("factors", "factors " + std::to_string(j + 1) + " and " +
                                                std::to_string(i + 1) + " are not coprime");
      }
    }
  }
}

}  // namespace jk
