#include "h2plan/cli/commands.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "h2plan/core/errors.hpp"
#include "h2plan/core/instance_io.hpp"
#include "h2plan/core/synthetic.hpp"
#include "h2plan/core/validate.hpp"
#include "h2plan/lp/mps.hpp"
#include "h2plan/model/expansion.hpp"
#include "h2plan/report/csv_output.hpp"
#include "h2plan/scenario/scenario.hpp"

namespace h2plan::cli {

namespace fs = std::filesystem;

namespace {

struct Loaded {
  NetworkModel network;
  std::vector<ScenarioConfig> scenarios;
};

// Shared front half of run and export; nullopt after reporting an error.
std::optional<Loaded> load(const RunConfig& c, std::ostream& err) {
  if (c.instance_dir.empty() || !fs::is_directory(c.instance_dir)) {
    fmt::print(err, "error: instance directory '{}' does not exist\n", c.instance_dir.string());
    return std::nullopt;
  }
  if (c.scenarios.empty()) {
    fmt::print(err, "error: no scenarios given\n");
    return std::nullopt;
  }
  Loaded l;
  try {
    l.network = load_instance(c.instance_dir);
    for (const auto& s : c.scenarios) l.scenarios.push_back(scenario::resolve(s));
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return std::nullopt;
  }
  return l;
}

bool prepare_dir(const fs::path& dir, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    fmt::print(err, "error: cannot create output directory '{}': {}\n", dir.string(), ec.message());
    return false;
  }
  return true;
}

}  // namespace

int cmd_run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.mode == Mode::export_only) return cmd_export(c, out, err);
  auto loaded = load(c, err);
  if (!loaded) return 1;
  if (!prepare_dir(c.out_dir, err)) return 1;

  scenario::SuiteOptions opts;
  if (c.tolerance) {
    opts.solver.tol.primal_feasibility = *c.tolerance;
    opts.solver.tol.dual_feasibility = *c.tolerance;
  }
  std::vector<scenario::Outcome> outcomes;
  try {
    outcomes = scenario::run_suite(loaded->network, loaded->scenarios, opts);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }

  int code = 0;
  std::vector<report::SummaryRow> summary;
  try {
    for (const auto& o : outcomes) {
      report::SummaryRow row{o.config.name, lp::to_string(o.status), 0.0, 0.0};
      if (o.result) {
        const auto rep = report::build_report(*o.result, loaded->network, o.config);
        report::emit_csv(rep, c.out_dir / o.config.name);
        row.objective = rep.objective;
        row.co2_t = rep.co2_total_t();
        if (c.log != LogLevel::quiet) {
          fmt::print(out, "{}: optimal objective={:.6e} EUR co2={:.6e} t\n", o.config.name, rep.objective,
                     rep.co2_total_t());
        }
        if (c.log == LogLevel::debug) {
          fmt::print(out, "  iterations={} primal_residual={:.2e} dual_residual={:.2e} gap={:.2e}\n",
                     o.solution.iterations, o.solution.primal_residual, o.solution.dual_residual,
                     std::abs(o.solution.objective - o.solution.dual_objective));
        }
      } else {
        code = 2;
        fmt::print(err, "{}: {}{}\n", o.config.name, lp::to_string(o.status),
                   o.solution.diagnostics.empty() ? "" : " (" + o.solution.diagnostics + ")");
      }
      summary.push_back(std::move(row));
    }
    report::write_summary(summary, c.out_dir / "summary.csv");
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }
  return code;
}

int cmd_export(const RunConfig& c, std::ostream& out, std::ostream& err) {
  auto loaded = load(c, err);
  if (!loaded) return 1;
  if (!prepare_dir(c.out_dir, err)) return 1;
  try {
    for (const auto& sc : loaded->scenarios) {
      const auto path = c.out_dir / (sc.name + ".mps");
      lp::export_standard(model::build_model(loaded->network, sc), path);
      if (c.log != LogLevel::quiet) fmt::print(out, "{}: wrote {}\n", sc.name, path.string());
    }
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}

int cmd_validate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  NetworkModel net;
  try {
    net = read_instance(c.instance_dir);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }
  const auto violations = validate_network(net);
  for (const auto& v : violations) fmt::print(out, "{}\n", v.describe());
  if (c.log != LogLevel::quiet && violations.empty()) fmt::print(out, "instance is valid\n");
  return violations.empty() ? 0 : 1;
}

int cmd_generate(const RunConfig& c, int nodes, int periods, int block_len, std::ostream& out, std::ostream& err) {
  try {
    SyntheticSpec spec;
    spec.nodes = nodes;
    spec.periods = periods;
    spec.h2_block_len = block_len;
    spec.seed = c.seed;
    const auto net = synthetic_instance(spec);
    if (auto v = validate_network(net); !v.empty()) throw ValidationError(v);
    save_instance(net, c.out_dir);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }
  if (c.log != LogLevel::quiet) fmt::print(out, "wrote instance to {}\n", c.out_dir.string());
  return 0;
}

int main(int argc, char** argv) {
  CLI::App app{"Electricity and hydrogen infrastructure planning"};
  app.require_subcommand(1);

  RunConfig config;
  if (const char* env = std::getenv("H2PLAN_LOG")) {
    const std::string level = env;
    if (level == "quiet") config.log = LogLevel::quiet;
    else if (level == "debug") config.log = LogLevel::debug;
  }
  std::string scenarios = "R2050";
  std::string mode = "embedded";
  double tol = 0.0;
  bool quiet = false;
  int nodes = 3, periods = 24, block_len = 6;

  auto common = [&](CLI::App* sub, bool needs_scenarios) {
    sub->add_option("--instance", config.instance_dir, "Instance directory")->required();
    if (needs_scenarios) {
      sub->add_option("--scenario", scenarios, "Comma-separated presets or scenario files")->capture_default_str();
      sub->add_option("--out", config.out_dir, "Output directory")->capture_default_str();
      sub->add_option("--mode", mode, "embedded or export")
          ->check(CLI::IsMember({"embedded", "export"}))
          ->capture_default_str();
      sub->add_option("--tol", tol, "Feasibility and optimality tolerance")->check(CLI::PositiveNumber);
    }
    sub->add_flag("--quiet", quiet, "Only print errors");
  };
  auto* run = app.add_subcommand("run", "Solve scenarios and write reports");
  common(run, true);
  auto* exp = app.add_subcommand("export", "Write the LP of each scenario without solving");
  common(exp, true);
  auto* val = app.add_subcommand("validate", "Check an instance and list violations");
  common(val, false);
  auto* gen = app.add_subcommand("generate", "Write a seeded synthetic instance");
  gen->add_option("--out", config.out_dir, "Output directory")->required();
  gen->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  gen->add_option("--nodes", nodes, "Number of nodes")->check(CLI::Range(1, 1000))->capture_default_str();
  gen->add_option("--periods", periods, "Electricity periods")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--block", block_len, "Periods per hydrogen block")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_flag("--quiet", quiet, "Only print errors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (quiet) config.log = LogLevel::quiet;
  if (tol > 0.0) config.tolerance = tol;
  config.mode = mode == "export" ? Mode::export_only : Mode::embedded;
  std::stringstream list(scenarios);
  for (std::string item; std::getline(list, item, ',');)
    if (!item.empty()) config.scenarios.push_back(item);

  if (run->parsed()) return cmd_run(config, std::cout, std::cerr);
  if (exp->parsed()) return cmd_export(config, std::cout, std::cerr);
  if (val->parsed()) return cmd_validate(config, std::cout, std::cerr);
  return cmd_generate(config, nodes, periods, block_len, std::cout, std::cerr);
}

}  // namespace h2plan::cli
