#include "h2plan/lp/mps.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

namespace h2plan::lp {

MpsParseError::MpsParseError(std::string source, std::string section, int line,
                             const std::string& what)
    : std::runtime_error(fmt::format("{}:{}: [{}] {}", source, line, section, what)),
      source_(std::move(source)),
      section_(std::move(section)),
      line_(line) {}

namespace {

constexpr std::string_view kObjRow = "OBJ";

std::string base36(unsigned long v) {
  static constexpr char digits[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::string s;
  do {
    s.insert(s.begin(), digits[v % 36]);
    v /= 36;
  } while (v != 0);
  return s;
}

std::string sanitize(std::string_view name) {
  std::string s;
  for (char ch : name) {
    const auto u = static_cast<unsigned char>(ch);
    s.push_back(u <= 0x20 || u == 0x7f ? '_' : ch);
  }
  if (s.empty()) s = "_";
  return s;
}

// Shortest representation that fits the 12-character numeric field.
std::string format_number(double v) {
  if (v == 0.0) return "0";
  for (int prec = 17; prec >= 1; --prec) {
    std::string s = fmt::format("{:.{}G}", v, prec);
    if (s.size() <= 12) return s;
  }
  return fmt::format("{:.5G}", v);
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

// Data line: field 1 in columns 2-3, name fields at 5 and 15, number at 25.
std::string data_line(std::string_view code, std::string_view name1,
                      std::string_view name2, std::string_view number) {
  std::string line = " " + pad(code, 2) + " " + pad(name1, 8) + "  ";
  if (number.empty()) {
    line += name2;
  } else {
    line += pad(name2, 8) + "  " + std::string(number);
  }
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

}  // namespace

std::vector<std::string> mangle_names(std::span<const std::string> names,
                                      const std::set<std::string>& reserved) {
  std::vector<std::string> out;
  out.reserve(names.size());
  std::unordered_set<std::string> used(reserved.begin(), reserved.end());
  std::unordered_map<std::string, unsigned long> counter;
  for (const auto& raw : names) {
    const std::string clean = sanitize(raw);
    const std::string base = clean.substr(0, 8);
    std::string candidate = base;
    if (used.contains(candidate)) {
      auto& k = counter[base];
      do {
        const std::string suffix = "~" + base36(++k);
        candidate = base.substr(0, 8 - std::min<std::size_t>(8, suffix.size())) + suffix;
      } while (used.contains(candidate));
    }
    used.insert(candidate);
    out.push_back(std::move(candidate));
  }
  return out;
}

std::string to_mps(const LpProblem& p) {
  const auto rows = mangle_names(p.row_names, {std::string(kObjRow)});
  const auto cols = mangle_names(p.col_names);
  std::ostringstream out;
  out << "NAME          " << sanitize(p.name) << "\n";
  if (p.sense == Sense::maximize) out << "OBJSENSE\n    MAX\n";

  out << "ROWS\n";
  out << " N  " << kObjRow << "\n";
  std::vector<char> type(p.num_rows());
  bool ranged = false;
  for (int i = 0; i < p.num_rows(); ++i) {
    const double lo = p.row_lower[i], up = p.row_upper[i];
    if (std::isinf(lo) && std::isinf(up)) type[i] = 'N';
    else if (lo == up) type[i] = 'E';
    else if (std::isinf(lo)) type[i] = 'L';
    else if (std::isinf(up)) type[i] = 'G';
    else {
      type[i] = 'G';
      ranged = true;
    }
    out << " " << type[i] << "  " << rows[i] << "\n";
  }

  out << "COLUMNS\n";
  const auto& a = p.matrix;
  for (int j = 0; j < p.num_cols(); ++j) {
    const bool empty = a.start[j] == a.start[j + 1];
    if (p.objective[j] != 0.0 || empty) {
      out << data_line("", cols[j], kObjRow, format_number(p.objective[j])) << "\n";
    }
    for (auto k = a.start[j]; k < a.start[j + 1]; ++k) {
      out << data_line("", cols[j], rows[a.index[k]], format_number(a.value[k])) << "\n";
    }
  }

  out << "RHS\n";
  if (p.objective_offset != 0.0) {
    out << data_line("", "RHS", kObjRow, format_number(-p.objective_offset)) << "\n";
  }
  for (int i = 0; i < p.num_rows(); ++i) {
    double rhs = 0.0;
    switch (type[i]) {
      case 'E':
      case 'G': rhs = p.row_lower[i]; break;
      case 'L': rhs = p.row_upper[i]; break;
      default: continue;
    }
    if (rhs != 0.0) out << data_line("", "RHS", rows[i], format_number(rhs)) << "\n";
  }

  if (ranged) {
    out << "RANGES\n";
    for (int i = 0; i < p.num_rows(); ++i) {
      const double lo = p.row_lower[i], up = p.row_upper[i];
      if (std::isinf(lo) || std::isinf(up) || lo == up) continue;
      out << data_line("", "RNG", rows[i], format_number(up - lo)) << "\n";
    }
  }

  std::ostringstream bounds;
  for (int j = 0; j < p.num_cols(); ++j) {
    const double lo = p.col_lower[j], up = p.col_upper[j];
    if (lo == up) {
      bounds << data_line("FX", "BND", cols[j], format_number(lo)) << "\n";
      continue;
    }
    if (std::isinf(lo) && std::isinf(up)) {
      bounds << data_line("FR", "BND", cols[j], "") << "\n";
      continue;
    }
    if (std::isinf(lo)) bounds << data_line("MI", "BND", cols[j], "") << "\n";
    else if (lo != 0.0) bounds << data_line("LO", "BND", cols[j], format_number(lo)) << "\n";
    if (!std::isinf(up)) bounds << data_line("UP", "BND", cols[j], format_number(up)) << "\n";
  }
  if (const auto text = bounds.str(); !text.empty()) out << "BOUNDS\n" << text;
  out << "ENDATA\n";
  return out.str();
}

void export_standard(const LpProblem& problem, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << to_mps(problem);
  file.flush();
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

LpProblem parse_mps(std::string_view text, const std::string& source) {
  enum class Section { none, name, objsense, rows, columns, rhs, ranges, bounds, end };
  Section section = Section::none;
  std::string section_name = "HEADER";
  int line_no = 0;

  LpProblem p;
  std::string objective_row;
  std::unordered_map<std::string, int> row_index;
  std::unordered_map<std::string, int> col_index;
  std::vector<char> row_type;
  std::vector<double> rhs, range;
  std::vector<bool> has_range;
  std::vector<std::map<int, double>> col_entries;

  auto fail = [&](const std::string& what) -> MpsParseError {
    return MpsParseError(source, section_name, line_no, what);
  };
  auto number = [&](const std::string& tok) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw fail("bad number '" + tok + "'");
    return v;
  };
  auto column = [&](const std::string& name) -> int {
    auto it = col_index.find(name);
    if (it == col_index.end()) throw fail("unknown column " + name);
    return it->second;
  };
  auto row = [&](const std::string& name) -> int {
    auto it = row_index.find(name);
    if (it == row_index.end()) throw fail("unknown row " + name);
    return it->second;
  };

  std::size_t pos = 0;
  while (pos <= text.size() && section != Section::end) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') {
      if (eol == text.size()) break;
      continue;
    }

    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (line[0] != ' ' && line[0] != '\t') {
      section_name = tok[0];
      if (tok[0] == "NAME") {
        section = Section::name;
        p.name = tok.size() > 1 ? tok[1] : "";
      } else if (tok[0] == "OBJSENSE") {
        section = Section::objsense;
        if (tok.size() > 1) p.sense = tok[1] == "MAX" ? Sense::maximize : Sense::minimize;
      } else if (tok[0] == "ROWS") section = Section::rows;
      else if (tok[0] == "COLUMNS") section = Section::columns;
      else if (tok[0] == "RHS") section = Section::rhs;
      else if (tok[0] == "RANGES") section = Section::ranges;
      else if (tok[0] == "BOUNDS") section = Section::bounds;
      else if (tok[0] == "ENDATA") section = Section::end;
      else throw fail("unknown section " + tok[0]);
      continue;
    }

    switch (section) {
      case Section::objsense:
        if (tok[0] == "MAX" || tok[0] == "MAXIMIZE") p.sense = Sense::maximize;
        else if (tok[0] == "MIN" || tok[0] == "MINIMIZE") p.sense = Sense::minimize;
        else throw fail("bad objective sense " + tok[0]);
        break;
      case Section::rows: {
        if (tok.size() != 2 || tok[0].size() != 1) throw fail("expected '<type> <name>'");
        const char t = tok[0][0];
        if (t == 'N' && objective_row.empty()) {
          objective_row = tok[1];
          break;
        }
        if (t != 'N' && t != 'E' && t != 'L' && t != 'G') throw fail("bad row type " + tok[0]);
        if (row_index.contains(tok[1]) || tok[1] == objective_row) throw fail("duplicate row " + tok[1]);
        row_index[tok[1]] = static_cast<int>(row_type.size());
        row_type.push_back(t);
        p.row_names.push_back(tok[1]);
        rhs.push_back(0.0);
        range.push_back(0.0);
        has_range.push_back(false);
        break;
      }
      case Section::columns: {
        if (tok.size() != 3 && tok.size() != 5) throw fail("expected column entries");
        auto it = col_index.find(tok[0]);
        int j;
        if (it == col_index.end()) {
          j = static_cast<int>(p.col_names.size());
          col_index[tok[0]] = j;
          p.col_names.push_back(tok[0]);
          p.objective.push_back(0.0);
          col_entries.emplace_back();
        } else {
          j = it->second;
        }
        for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
          const double v = number(tok[k + 1]);
          if (tok[k] == objective_row) p.objective[j] += v;
          else col_entries[j][row(tok[k])] += v;
        }
        break;
      }
      case Section::rhs:
      case Section::ranges: {
        if (tok.size() != 3 && tok.size() != 5) throw fail("expected '<set> <row> <value>'");
        for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
          const double v = number(tok[k + 1]);
          if (section == Section::rhs && tok[k] == objective_row) {
            p.objective_offset = -v;
            continue;
          }
          const int i = row(tok[k]);
          if (section == Section::rhs) rhs[i] = v;
          else {
            range[i] = v;
            has_range[i] = true;
          }
        }
        break;
      }
      case Section::bounds: {
        if (tok.size() < 3) throw fail("expected '<type> <set> <column> [value]'");
        p.col_lower.resize(p.col_names.size(), 0.0);
        p.col_upper.resize(p.col_names.size(), kInf);
        const int j = column(tok[2]);
        const std::string& t = tok[0];
        const bool needs_value = t == "UP" || t == "LO" || t == "FX";
        if (needs_value && tok.size() != 4) throw fail("bound " + t + " needs a value");
        if (t == "UP") p.col_upper[j] = number(tok[3]);
        else if (t == "LO") p.col_lower[j] = number(tok[3]);
        else if (t == "FX") p.col_lower[j] = p.col_upper[j] = number(tok[3]);
        else if (t == "FR") {
          p.col_lower[j] = -kInf;
          p.col_upper[j] = kInf;
        } else if (t == "MI") p.col_lower[j] = -kInf;
        else if (t == "PL") p.col_upper[j] = kInf;
        else throw fail("unsupported bound type " + t);
        break;
      }
      case Section::name:
      case Section::none:
      case Section::end:
        throw fail("data line outside a section");
    }
    if (eol == text.size()) break;
  }
  if (section != Section::end) {
    section_name = "ENDATA";
    throw fail("missing ENDATA");
  }
  if (objective_row.empty()) {
    section_name = "ROWS";
    throw fail("no objective row");
  }

  const int m = static_cast<int>(row_type.size());
  const int n = static_cast<int>(p.col_names.size());
  p.col_lower.resize(n, 0.0);
  p.col_upper.resize(n, kInf);
  p.row_lower.resize(m);
  p.row_upper.resize(m);
  for (int i = 0; i < m; ++i) {
    const double b = rhs[i], r = std::abs(range[i]);
    switch (row_type[i]) {
      case 'N':
        p.row_lower[i] = -kInf;
        p.row_upper[i] = kInf;
        break;
      case 'E':
        p.row_lower[i] = b;
        p.row_upper[i] = b;
        if (has_range[i]) {
          if (range[i] >= 0) p.row_upper[i] = b + r;
          else p.row_lower[i] = b - r;
        }
        break;
      case 'L':
        p.row_lower[i] = has_range[i] ? b - r : -kInf;
        p.row_upper[i] = b;
        break;
      case 'G':
        p.row_lower[i] = b;
        p.row_upper[i] = has_range[i] ? b + r : kInf;
        break;
    }
  }
  auto& mat = p.matrix;
  mat.rows = m;
  mat.cols = n;
  mat.start.assign(n + 1, 0);
  for (int j = 0; j < n; ++j) {
    mat.start[j] = mat.index.size();
    for (const auto& [i, v] : col_entries[j]) {
      if (v == 0.0) continue;
      mat.index.push_back(i);
      mat.value.push_back(v);
    }
  }
  mat.start[n] = mat.index.size();
  return p;
}

LpProblem import_standard(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_mps(buf.str(), path.string());
}

}  // namespace h2plan::lp
