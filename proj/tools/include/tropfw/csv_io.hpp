#pragma once

#include "tropfw/tropical.hpp"

#include <iosfwd>
#include <string>

namespace tropfw {

/// Reads a point matrix from CSV text. One point per line, comma-separated
/// cells holding integers, decimals, or `p/q` fractions; `#` starts a
/// comment (whole-line or trailing); blank lines are skipped. Rows need a
/// common width >= 2 and the first coordinate need not be 0 — every row is
/// normalized on load. Throws ParseError with "<name>:<line>: ..." context
/// (1-based data line numbers) on malformed input, including empty files.
DataMatrix read_matrix_csv(std::istream& in, const std::string& name);

/// read_matrix_csv over a file. Unreadable paths throw ParseError.
DataMatrix read_matrix_csv_file(const std::string& path);

/// Writes canonical representatives, one row per line, cells as exact
/// integers or `p/q` fractions. Reading the output back reproduces the
/// matrix exactly.
void write_matrix_csv(std::ostream& out, const DataMatrix& X);

}
