#pragma once

#include <string>

#include "symdist/distance.hpp"

namespace symdist {

// Plain-text matrix format: a "K N" header line, then K rows of N
// characters from {0, 1}.  Whitespace and blank lines between rows are
// ignored.  N must be even and K <= N.  Throws ParseError with a
// line/column diagnostic on malformed input.
StabilizerInstance parse_matrix_text(const std::string& text,
                                     const std::string& origin = "<input>");
StabilizerInstance parse_matrix_file(const std::string& path);

// Inverse of parsing: header plus one row per line.
std::string format_matrix(const BitMatrix& m);

}  // namespace symdist
