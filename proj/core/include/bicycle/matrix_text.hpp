#pragma once

#include <string>
#include <string_view>

#include "bicycle/subspace.hpp"

namespace bicycle {

// Matrix text format: an optional header line "n k", then k lines of n
// characters from {0,1}. Whitespace inside a row is ignored, blank lines are
// skipped and '#' starts a comment. The first line is read as a header only
// when it consists of two integers that agree with the rows that follow;
// without a header the ground size is the common row length (0 for an empty
// file), so a zero space over n > 0 needs the header "n 0".

/// Throws ParseError carrying the 1-based line and column of the problem.
Subspace parse_matrix_text(std::string_view text);

/// Header plus canonical basis rows; parse_matrix_text inverts it.
std::string format_matrix_text(const Subspace& v);

}  // namespace bicycle
