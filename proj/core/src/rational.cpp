#include "jk/rational.hpp"

#include <cctype>

#include "jk/errors.hpp"

namespace jk {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : token.substr(slash + 1);
  if (!valid_integer(num) || (slash != std::string_view::npos && !valid_integer(den))) {
    throw ParseError("malformed rational '" + std::string(token) + "'", 0, 0);
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(1);
  if (slash != std::string_view::npos) {
    if (den.front() == '+') den.remove_prefix(1);
    q = mpz_class(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(token) + "'", 0, 0);
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace jk
