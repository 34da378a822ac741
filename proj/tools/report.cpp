#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace jktool {

double round_us(double seconds) { return std::round(seconds * 1e6) / 1e6; }

std::string seconds_cell(double seconds) {
  char buf[32];
  if (seconds >= 0.01 || seconds == 0) {
    std::snprintf(buf, sizeof buf, "%.2f", seconds);
  } else {
    std::snprintf(buf, sizeof buf, "%.2E", seconds);
  }
  return buf;
}

nlohmann::ordered_json timings_json(const jk::PhaseTimings& t) {
  nlohmann::ordered_json j{{"f1A", round_us(t.f1a)},       {"annihpol", round_us(t.annihpol)},
                   {"krylovgs", round_us(t.krylovgs)}, {"preprocessing", nullptr},
                   {"jkelim", round_us(t.jkelim)},  {"total", round_us(t.total)}};
  if (t.preprocessing) j["preprocessing"] = round_us(*t.preprocessing);
  return j;
}

std::string timings_text(const jk::PhaseTimings& t) {
  return "f1A=" + seconds_cell(t.f1a) + " AnnihPol=" + seconds_cell(t.annihpol) +
         " KrylovGS=" + seconds_cell(t.krylovgs) +
         " Preprocessing=" + (t.preprocessing ? seconds_cell(*t.preprocessing) : std::string("---")) +
         " JKElim=" + seconds_cell(t.jkelim) + " Total=" + seconds_cell(t.total);
}

}  // namespace jktool
