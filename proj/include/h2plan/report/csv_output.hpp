#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "h2plan/report/report.hpp"

namespace h2plan::report {

/// Writes one CSV per report field into out_dir (created if missing) and
/// returns the paths in a fixed order. Schemas: docs/outputs.md.
std::vector<std::filesystem::path> emit_csv(const SystemReport& report, const std::filesystem::path& out_dir);

/// Reads a directory written by emit_csv back into a report.
SystemReport load_csv(const std::filesystem::path& dir);

struct SummaryRow {
  std::string scenario;
  std::string status;
  double objective = 0.0;  // € per year, 0 unless optimal
  double co2_t = 0.0;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

/// summary.csv with one row per scenario in the given order.
void write_summary(const std::vector<SummaryRow>& rows, const std::filesystem::path& path);
std::vector<SummaryRow> read_summary(const std::filesystem::path& path);

}  // namespace h2plan::report
