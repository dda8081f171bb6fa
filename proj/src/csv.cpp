#include "huberpath/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace huberpath {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r'))
    --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& field, const std::string& name,
                    std::size_t line_no, std::size_t col_no) {
  const std::string t = trimmed(field);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    throw DataError(name + ":" + std::to_string(line_no) + ": column " +
                    std::to_string(col_no) + ": cannot parse '" + t +
                    "' as a number");
  }
  return value;
}

}  // namespace

CsvTable read_csv(std::istream& in, const std::string& name, bool has_header) {
  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool expect_header = has_header;

  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (expect_header) {
      for (const std::string& f : fields) names.push_back(trimmed(f));
      width = fields.size();
      expect_header = false;
      continue;
    }
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      throw DataError(name + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(width) + " fields, got " +
                      std::to_string(fields.size()));
    }
    std::vector<double> row(width);
    for (std::size_t c = 0; c < width; ++c)
      row[c] = parse_double(fields[c], name, line_no, c + 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError(name + ": no data rows");

  CsvTable table;
  table.names = std::move(names);
  table.values = Matrix(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < width; ++c) table.values(i, c) = rows[i][c];
  return table;
}

CsvTable read_csv(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  return read_csv(in, path, has_header);
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Matrix& values,
               std::span<const std::string> names) {
  if (!names.empty()) {
    for (std::size_t c = 0; c < names.size(); ++c) {
      if (c) out << ',';
      out << names[c];
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < values.rows(); ++i) {
    for (std::size_t c = 0; c < values.cols(); ++c) {
      if (c) out << ',';
      out << format_double(values(i, c));
    }
    out << '\n';
  }
}

std::vector<double> read_number_list(std::istream& in,
                                     const std::string& name) {
  std::vector<double> values;
  std::string token;
  std::size_t count = 0;
  while (in >> token) {
    ++count;
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw DataError(name + ": entry " + std::to_string(count) +
                      ": cannot parse '" + token + "' as a number");
    values.push_back(v);
  }
  if (values.empty()) throw DataError(name + ": no numbers found");
  return values;
}

}  // namespace huberpath
