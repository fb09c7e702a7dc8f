#pragma once

#include <string>

#include "mathieu/types.hpp"

namespace mathieu {

/// Shortest fixed formatting that round-trips binary64: %.17g.
/// Shared by the CLI emitters and the tests that compare output bytes.
std::string format_double(double v);

/// Parses complex literals of the forms "1.5", "-0.5", "1+2i", "-1-2i",
/// "0.3+0.4i", "i", "-i", "2i" (also accepts a trailing 'j').
Complex parse_complex(const std::string& text);

}  // namespace mathieu
