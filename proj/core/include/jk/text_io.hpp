#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "jk/chains.hpp"
#include "jk/matrix.hpp"
#include "jk/poly.hpp"

namespace jk {

// Plain text formats. Rationals are written p, -p or p/q in lowest terms and
// read in any of those forms. Blank lines and text after '#' are ignored on
// input. Parse failures throw ParseError with a 1-based line and column.
//
//   matrix      "n m" then n rows of m rationals
//   vector      a matrix with one column
//   polynomial  "d c0 c1 ... cd", ascending; the zero polynomial is "0 0"
//   factored    one factor per line, "m : d c0 ... cd"

RatMatrix parse_matrix(std::string_view text);
Vector parse_vector(std::string_view text);
UnivarPoly parse_poly(std::string_view text);
FactoredCharPoly parse_factored(std::string_view text);

std::string format_matrix(const RatMatrix& m);
std::string format_vector(const Vector& v);
std::string format_poly(const UnivarPoly& p);
std::string format_factored(const FactoredCharPoly& chi);
/// "chain l", then for k = l ... 1 a line "p k" followed by one polynomial
/// line per entry of p^(k).
std::string format_chain(const SymbolicChain& chain);

/// Whole file as a string; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace jk
