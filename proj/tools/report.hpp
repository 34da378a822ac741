#pragma once

#include <string>

#include "json.hpp"
#include "jk/structure.hpp"

namespace jktool {

/// Seconds rounded to microseconds.
double round_us(double seconds);
/// Table cell: fixed with two decimals, or 2.17E-04 below 0.01.
std::string seconds_cell(double seconds);

nlohmann::ordered_json timings_json(const jk::PhaseTimings& t);
std::string timings_text(const jk::PhaseTimings& t);

}  // namespace jktool
