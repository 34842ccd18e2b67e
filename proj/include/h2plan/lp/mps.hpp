#pragma once

#include <filesystem>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "h2plan/lp/problem.hpp"

namespace h2plan::lp {

class MpsParseError : public std::runtime_error {
 public:
  MpsParseError(std::string source, std::string section, int line, const std::string& what);
  const std::string& source() const { return source_; }
  const std::string& section() const { return section_; }
  int line() const { return line_; }

 private:
  std::string source_;
  std::string section_;
  int line_;
};

/// Name mangling used by the fixed-layout writer.
///
/// Each name is sanitized (whitespace and control characters become '_')
/// and truncated to 8 characters. Names are claimed in index order; when the
/// truncated form is already taken (or reserved) the name is shortened and
/// given a suffix '~' + base-36 counter, where the counter runs per
/// truncated prefix starting at 1. The first claimant always keeps the plain
/// truncated form.
std::vector<std::string> mangle_names(std::span<const std::string> names,
                                      const std::set<std::string>& reserved = {});

/// Fixed-layout MPS text (fields at columns 2, 5, 15, 25, 40). One matrix
/// entry per line, numbers in at most 12 characters, objective row "OBJ".
std::string to_mps(const LpProblem& problem);

/// Writes to_mps(problem) to path. Throws std::runtime_error on I/O failure.
void export_standard(const LpProblem& problem, const std::filesystem::path& path);

LpProblem parse_mps(std::string_view text, const std::string& source = "<memory>");
LpProblem import_standard(const std::filesystem::path& path);

}  // namespace h2plan::lp
