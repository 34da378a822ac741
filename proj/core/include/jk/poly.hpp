#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/rational.hpp"

namespace jk {

/// Univariate polynomial over Q, coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
class UnivarPoly {
 public:
  UnivarPoly() = default;
  explicit UnivarPoly(std::vector<Rational> ascending);
  UnivarPoly(std::initializer_list<Rational> ascending);

  static UnivarPoly constant(const Rational& c);
  static UnivarPoly monomial(const Rational& c, std::size_t degree);
  /// The polynomial lambda.
  static UnivarPoly lambda();

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const;
  bool is_monic() const;

  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  /// Coefficient of lambda^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  UnivarPoly monic() const;
  UnivarPoly derivative() const;
  Rational operator()(const Rational& x) const;

  UnivarPoly& operator+=(const UnivarPoly& o);
  UnivarPoly& operator-=(const UnivarPoly& o);
  UnivarPoly& operator*=(const Rational& c);

  friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b);
UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b);
UnivarPoly operator-(const UnivarPoly& a);
UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
UnivarPoly operator*(const Rational& c, UnivarPoly a);

/// Quotient and remainder; throws DimensionError when b is zero.
std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& a, const UnivarPoly& b);
UnivarPoly operator/(const UnivarPoly& a, const UnivarPoly& b);
UnivarPoly operator%(const UnivarPoly& a, const UnivarPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b);
UnivarPoly pow(const UnivarPoly& p, std::size_t k);

/// Characteristic polynomial det(lambda*I - A) by Berkowitz's division-free
/// method. Monic of degree n.
UnivarPoly charpoly(const RatMatrix& a);

/// Yun's squarefree decomposition of p / lc(p): pairwise coprime squarefree
/// parts with multiplicities, ordered by increasing multiplicity.
std::vector<std::pair<UnivarPoly, std::size_t>> squarefree_decompose(const UnivarPoly& p);

/// p(A) by Horner's scheme.
RatMatrix eval_matrix(const UnivarPoly& p, const RatMatrix& a);
/// p(A) v without forming p(A).
Vector eval_matrix_vec(const UnivarPoly& p, const RatMatrix& a, const Vector& v);

/// Companion matrix of a monic f: ones on the subdiagonal, -f_i in the last
/// column, so C e_i = e_{i+1} and charpoly(C) = minpoly(C) = f.
RatMatrix companion(const UnivarPoly& f);

struct Factor {
  UnivarPoly f;
  std::size_t multiplicity = 0;
};

/// chi_A as a product of pairwise coprime monic factors f_i^m_i. Irreducibility
/// of the f_i is the caller's assertion.
struct FactoredCharPoly {
  std::vector<Factor> factors;

  std::size_t degree() const;
  UnivarPoly expand() const;
  /// Checks monic, degree >= 1, multiplicity >= 1 and pairwise coprimality;
  /// throws InconsistencyError naming the violated condition.
  void validate() const;
};

}  // namespace jk
