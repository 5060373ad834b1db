#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "alcove/geom.hpp"

namespace alcove {

/// One line per ProjLine: three whitespace-separated rationals `a b c`
/// (each `p/q` or an integer). `#` starts a comment.
std::vector<ProjLine> parse_line_file(std::istream& in);
std::vector<ProjLine> load_line_file(const std::string& path);

}  // namespace alcove
