#pragma once

#include <iosfwd>
#include <string>

#include "fracdim/sample_path.hpp"

namespace fracdim::sim {

/// 17 significant digits, shortest %g-style spelling.
std::string format_g17(double value);

/// Header `t,b_1..b_d,f_1..f_d`, one row per grid time.
void write_path_csv(std::ostream& os, const SamplePath& path);

/// Reads the format written by write_path_csv. The grid is tagged custom and
/// the seed is 0. Throws Error("bad-csv") on malformed input.
SamplePath read_path_csv(std::istream& is);

}  // namespace fracdim::sim
