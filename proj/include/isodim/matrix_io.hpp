#pragma once

/**
 * @file matrix_io.hpp
 * @brief Plain-text matrix files.
 *
 *     # comment lines start with '#'; blank lines are ignored
 *     field GF(2)          (or: field Q)
 *     matrix 2 3
 *     1 1 0
 *     1 0 1
 *
 * Exactly R data lines of C whitespace-separated scalars follow the "matrix R C"
 * line; when C is 0 the R empty rows are implied and no data lines follow.
 * The same format serves matrices, vector lists (one per row) and spaces
 * (spanned by the rows).
 */

#include <filesystem>
#include <string>
#include <string_view>

#include "isodim/matrix.hpp"

namespace isodim {

/// Throws ParseError on any deviation from the format.
Matrix parse_matrix_file(std::string_view text);
Matrix read_matrix_file(const std::filesystem::path& path);

/// Canonical text; parse_matrix_file(format_matrix_file(m)) == m.
std::string format_matrix_file(const Matrix& m);

}  // namespace isodim
