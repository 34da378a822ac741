#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jk {

/// Exact rational scalar. GMP keeps every value canonical (positive
/// denominator, reduced) after arithmetic.
using Rational = mpq_class;

/// Parses `p`, `-p`, `+p` or `p/q` (q != 0, any sign or common factor) and
/// returns the canonical value. Throws ParseError on anything else.
Rational parse_rational(std::string_view token);

/// Canonical text form: `p`, `-p` or `p/q` with q > 0 in lowest terms.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace jk
