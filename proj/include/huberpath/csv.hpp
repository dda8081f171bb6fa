#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "huberpath/dataset.hpp"

namespace huberpath {

struct CsvTable {
  std::vector<std::string> names;  ///< empty when the file had no header
  Matrix values;                   ///< rows x columns
};

/// Reads a comma-separated numeric table. With has_header the first row
/// supplies column names; every data row must have the same field count.
/// Parse failures raise DataError naming the file, line and column.
CsvTable read_csv(const std::string& path, bool has_header);

/// Same, from an already-open stream (name used only in diagnostics).
CsvTable read_csv(std::istream& in, const std::string& name, bool has_header);

/// Writes values in shortest round-trip decimal form; optional header row.
void write_csv(std::ostream& out, const Matrix& values,
               std::span<const std::string> names = {});

/// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

/// Whitespace/newline-separated numbers, e.g. a response or grid file.
std::vector<double> read_number_list(std::istream& in, const std::string& name);

}  // namespace huberpath
