#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace h2plan::cli {

enum class Mode { embedded, export_only };
enum class LogLevel { quiet, info, debug };

struct RunConfig {
  std::filesystem::path instance_dir;
  std::vector<std::string> scenarios;  // preset names or scenario file paths
  std::filesystem::path out_dir = "out";
  Mode mode = Mode::embedded;
  std::optional<double> tolerance;  // overrides feasibility and optimality tolerances
  std::uint64_t seed = 1;           // for `generate`
  LogLevel log = LogLevel::info;
};

/// Exit codes: 0 success, 1 usage or data error, 2 some scenario not optimal.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Writes a synthetic instance (seeded by config.seed) to config.out_dir.
int cmd_generate(const RunConfig& config, int nodes, int periods, int block_len, std::ostream& out,
                 std::ostream& err);

/// Full command line front end.
int main(int argc, char** argv);

}  // namespace h2plan::cli
