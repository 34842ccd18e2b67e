#include "h2plan/core/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "h2plan/core/errors.hpp"

namespace h2plan::csv {

std::size_t Table::column(std::string_view name) const {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw ParseError(source, 1, "missing column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header.begin());
}

bool Table::has_column(std::string_view name) const {
  return std::find(header.begin(), header.end(), name) != header.end();
}

Table parse(std::string_view text, const std::string& source) {
  Table table;
  table.source = source;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  int line = 1;
  int record_line = 1;

  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    const bool blank = record.size() == 1 && record[0].empty() && !field_started;
    if (!blank) {
      if (table.header.empty()) {
        table.header = std::move(record);
      } else {
        if (record.size() != table.header.size()) {
          throw ParseError(source, record_line,
                           "expected " + std::to_string(table.header.size()) + " fields, found " +
                               std::to_string(record.size()));
        }
        table.rows.push_back(std::move(record));
        table.lines.push_back(record_line);
      }
    }
    record.clear();
    field_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw ParseError(source, line, "stray quote inside unquoted field");
        quoted = true;
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (quoted) throw ParseError(source, line, "unterminated quoted field");
  if (field_started || !record.empty()) end_record();
  if (table.header.empty()) throw ParseError(source, 1, "missing header row");
  return table;
}

Table read(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse(buf.str(), path.string());
}

std::string format_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    const auto& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out += f;
    } else {
      out.push_back('"');
      for (char c : f) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
      }
      out.push_back('"');
    }
  }
  return out;
}

void write(const std::filesystem::path& path, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << format_row(header) << '\n';
  for (const auto& r : rows) file << format_row(r) << '\n';
  file.flush();
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_scaled(double v, int shift) {
  if (std::isinf(v) || std::isnan(v) || v == 0.0) return format_double(v);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  std::string_view s(buf, static_cast<std::size_t>(res.ptr - buf));
  const bool negative = s.front() == '-';
  if (negative) s.remove_prefix(1);
  const auto epos = s.find('e');
  std::string digits;
  for (char c : s.substr(0, epos))
    if (c != '.') digits.push_back(c);
  int exponent = 0;
  auto exp_text = s.substr(epos + 1);
  if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
  std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
  exponent += shift;

  std::string out = negative ? "-" : "";
  if (exponent >= -7 && exponent <= 15) {
    if (exponent >= 0) {
      const auto int_len = static_cast<std::size_t>(exponent) + 1;
      if (digits.size() <= int_len) {
        out += digits + std::string(int_len - digits.size(), '0');
      } else {
        out += digits.substr(0, int_len) + "." + digits.substr(int_len);
      }
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(exponent);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_double(std::string_view text, const std::string& source, int line, int shift) {
  auto t = trim(text);
  auto bad = [&] { return ParseError(source, line, "invalid number '" + std::string(text) + "'"); };
  if (t.empty()) throw bad();
  if (t == "inf" || t == "+inf" || t == "Inf") return std::numeric_limits<double>::infinity();
  if (t == "-inf" || t == "-Inf") return -std::numeric_limits<double>::infinity();
  if (t.front() == '+') t.remove_prefix(1);

  std::string composed;
  const auto epos = t.find_first_of("eE");
  long exponent = 0;
  std::string_view mantissa = t;
  if (epos != std::string_view::npos) {
    mantissa = t.substr(0, epos);
    auto e = t.substr(epos + 1);
    if (!e.empty() && e.front() == '+') e.remove_prefix(1);
    const auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), exponent);
    if (ec != std::errc() || p != e.data() + e.size() || e.empty()) throw bad();
  }
  if (mantissa.empty() || mantissa.find_first_not_of("-0123456789.") != std::string_view::npos)
    throw bad();
  composed = std::string(mantissa);
  if (exponent + shift != 0) composed += "e" + std::to_string(exponent + shift);

  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(composed.data(), composed.data() + composed.size(), v);
  if (ec != std::errc() || ptr != composed.data() + composed.size()) throw bad();
  return v;
}

int parse_int(std::string_view text, const std::string& source, int line) {
  const auto t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError(source, line, "invalid integer '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view text, const std::string& source, int line) {
  const auto t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ParseError(source, line, "invalid boolean '" + std::string(text) + "'");
}

}  // namespace h2plan::csv
