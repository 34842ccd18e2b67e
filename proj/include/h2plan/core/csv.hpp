#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace h2plan::csv {

/// Parsed RFC-4180 table with the source line of every record.
struct Table {
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> lines;

  /// Index of a header column; throws ParseError naming the file if absent.
  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
};

Table parse(std::string_view text, const std::string& source);
/// Throws ParseError when the file cannot be read or is malformed.
Table read(const std::filesystem::path& path);

std::string format_row(const std::vector<std::string>& fields);

/// Writes header plus rows; throws std::runtime_error on I/O failure.
void write(const std::filesystem::path& path, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows);

/// Shortest text that parses back to the same double; "inf"/"-inf" for
/// infinities.
std::string format_double(double v);

/// Like format_double(v * 10^shift) but computed on the decimal digits, so
/// parse_double(text, -shift) restores v exactly.
std::string format_scaled(double v, int shift);

/// Parses a finite or infinite decimal, multiplying by 10^shift exactly in
/// decimal before rounding. Throws ParseError(source, line) on bad input.
double parse_double(std::string_view text, const std::string& source, int line, int shift = 0);
int parse_int(std::string_view text, const std::string& source, int line);
bool parse_bool(std::string_view text, const std::string& source, int line);

}  // namespace h2plan::csv
