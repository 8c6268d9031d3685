#pragma once

#include <istream>
#include <string>
#include <vector>

#include "vrsmooth/smoother.hpp"

namespace vrsmooth::csv {

/// Shortest decimal text that parses back to exactly `v`; "NA" for NaN.
std::string format_double(double v);

/// Reads headerless "x,y" lines. Blank lines and lines starting with '#' are
/// skipped. Throws std::invalid_argument naming the offending line.
Dataset read_xy(std::istream& in);

}  // namespace vrsmooth::csv
