#pragma once

#include <cstddef>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/poly.hpp"
#include "jk/structure.hpp"

namespace jk {

/// rank(f(A)^k) for k = 0, 1, ... until two consecutive ranks agree.
std::vector<std::size_t> power_ranks(const RatMatrix& a, const UnivarPoly& f);

/// Block counts from the second differences of power_ranks:
/// c_l = (r_{l-1} - 2 r_l + r_{l+1}) / deg f. Deliberately naive; shares no
/// code with the elimination engine beyond matrix products.
/// Throws InconsistencyError on inexact division, a negative count, or
/// sum l * c_l != m.
JordanStructure structure_by_ranks(const RatMatrix& a, const UnivarPoly& f, std::size_t m);

}  // namespace jk
