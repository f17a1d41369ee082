#pragma once

#include <string>

#include "lefsig/engine.hpp"

namespace lefsig {

// Deterministic JSON rendering of a report: fixed key order, exact numbers
// (integers as JSON integers when they fit, otherwise decimal strings;
// non-integral rationals as "p/q" strings). Equal reports give byte-identical
// output.
std::string report_to_json(const FibrationReport& report);

}  // namespace lefsig
