#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace h2plan {

/// A broken invariant in a planning instance. `subject` names the offending
/// object, e.g. "pipeline NL-DE".
struct Violation {
  std::string subject;
  std::string message;

  std::string describe() const { return subject + ": " + message; }
  friend bool operator==(const Violation&, const Violation&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, int line, const std::string& message)
      : std::runtime_error(file + (line > 0 ? ":" + std::to_string(line) : std::string()) +
                           ": " + message),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace h2plan
