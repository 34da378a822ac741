#include "jk/psi.hpp"

#include "jk/errors.hpp"

namespace jk {

UnivarPoly reduce_mod(const UnivarPoly& p, const UnivarPoly& f) { return p % f; }

PolyModF::PolyModF(UnivarPoly modulus, const UnivarPoly& value)
    : modulus_(std::move(modulus)), value_(reduce_mod(value, modulus_)) {}

PolyModF PolyModF::operator+(const PolyModF& o) const {
  if (!(modulus_ == o.modulus_)) throw DimensionError("PolyModF: modulus mismatch");
  return PolyModF(modulus_, value_ + o.value_);
}

PolyModF PolyModF::operator-(const PolyModF& o) const {
  if (!(modulus_ == o.modulus_)) throw DimensionError("PolyModF: modulus mismatch");
  return PolyModF(modulus_, value_ - o.value_);
}

PolyModF PolyModF::operator*(const PolyModF& o) const {
  if (!(modulus_ == o.modulus_)) throw DimensionError("PolyModF: modulus mismatch");
  return PolyModF(modulus_, value_ * o.value_);
}

int BivarPsi::mu_degree() const {
  for (std::size_t j = mu_coeffs.size(); j-- > 0;) {
    if (!mu_coeffs[j].is_zero()) return static_cast<int>(j);
  }
  return -1;
}

BivarPsi psi(const UnivarPoly& f) {
  if (f.degree() < 1) throw DimensionError("psi: f must have degree >= 1");
  const auto d = static_cast<std::size_t>(f.degree());
  BivarPsi out{f, std::vector<UnivarPoly>(d)};
  // mu^j coefficient: sum_{i > j} f_i lambda^(i - j - 1)
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> c(d - j);
    for (std::size_t i = j + 1; i <= d; ++i) c[i - j - 1] = f.coeff(i);
    out.mu_coeffs[j] = UnivarPoly(std::move(c));
  }
  return out;
}

namespace {

BivarPsi multiply(const BivarPsi& a, const BivarPsi& b) {
  BivarPsi out{a.modulus, {}};
  if (a.mu_coeffs.empty() || b.mu_coeffs.empty()) return out;
  out.mu_coeffs.resize(a.mu_coeffs.size() + b.mu_coeffs.size() - 1);
  for (std::size_t i = 0; i < a.mu_coeffs.size(); ++i) {
    if (a.mu_coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.mu_coeffs.size(); ++j) {
      if (b.mu_coeffs[j].is_zero()) continue;
      out.mu_coeffs[i + j] += a.mu_coeffs[i] * b.mu_coeffs[j];
    }
  }
  for (auto& c : out.mu_coeffs) c = reduce_mod(c, out.modulus);
  return out;
}

}  // namespace

BivarPsi psi_power_mod(const UnivarPoly& f, std::size_t k) {
  if (k == 0) throw DimensionError("psi_power_mod: k must be >= 1");
  if (!f.is_monic()) throw DimensionError("psi_power_mod: f must be monic");
  const BivarPsi base = psi(f);
  BivarPsi acc = base;
  for (std::size_t i = 1; i < k; ++i) acc = multiply(acc, base);
  return acc;
}

}  // namespace jk
