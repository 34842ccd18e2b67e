#include "h2plan/scenario/scenario.hpp"

#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "h2plan/core/csv.hpp"
#include "h2plan/core/errors.hpp"
#include "h2plan/model/expansion.hpp"

namespace h2plan::scenario {

ScenarioConfig preset(std::string_view name) {
  ScenarioConfig c;
  c.name = std::string(name);
  if (name == "R2050") return c;
  if (name == "NoP2H2") {
    c.allow_p2h2 = false;
    return c;
  }
  if (name == "NoH2Storage") {
    c.allow_h2_storage = false;
    return c;
  }
  if (name == "NoH2Transmission") {
    c.allow_h2_transmission = false;
    return c;
  }
  if (name == "NoETransmission") {
    c.allow_e_transmission_expansion = false;
    return c;
  }
  throw std::invalid_argument("unknown scenario preset '" + std::string(name) + "'");
}

std::vector<ScenarioConfig> all_presets() {
  std::vector<ScenarioConfig> out;
  for (auto n : kPresetNames) out.push_back(preset(n));
  return out;
}

ScenarioConfig parse_scenario_text(std::string_view text, const std::string& source) {
  ScenarioConfig c;
  c.name.clear();
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto strip = [](const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source, line_no, "expected key = value");
    const auto key = strip(line.substr(0, eq));
    const auto value = strip(line.substr(eq + 1));
    if (key == "name") c.name = value;
    else if (key == "allow_p2h2") c.allow_p2h2 = csv::parse_bool(value, source, line_no);
    else if (key == "allow_h2_storage") c.allow_h2_storage = csv::parse_bool(value, source, line_no);
    else if (key == "allow_h2_transmission") c.allow_h2_transmission = csv::parse_bool(value, source, line_no);
    else if (key == "allow_e_transmission_expansion")
      c.allow_e_transmission_expansion = csv::parse_bool(value, source, line_no);
    else throw ParseError(source, line_no, "unknown key '" + key + "'");
  }
  if (c.name.empty()) throw ParseError(source, 0, "scenario file needs a name");
  return c;
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_scenario_text(buf.str(), path.string());
}

ScenarioConfig resolve(const std::string& spec) {
  for (auto n : kPresetNames)
    if (n == spec) return preset(spec);
  if (std::filesystem::is_regular_file(spec)) return load_scenario_file(spec);
  throw std::invalid_argument("'" + spec + "' is neither a preset nor a scenario file");
}

std::vector<Outcome> run_suite(const NetworkModel& network, const std::vector<ScenarioConfig>& scenarios,
                               const SuiteOptions& options) {
  if (scenarios.empty()) return {};
  const auto skeleton = model::build_skeleton(network);

  auto solve_one = [&](const ScenarioConfig& sc) {
    Outcome o;
    o.config = sc;
    model::ModelHandle h = skeleton;
    model::apply_scenario(h, network, sc);
    auto problem = h.builder.build();
    problem.name = "H2PLAN";
    o.solution = lp::solve(problem, options.solver);
    o.status = o.solution.status;
    if (o.status == lp::SolveStatus::optimal) {
      o.result = model::extract_solution(problem, o.solution, h, network, sc);
    }
    return o;
  };

  std::vector<Outcome> out;
  if (!options.parallel || scenarios.size() == 1) {
    for (const auto& sc : scenarios) out.push_back(solve_one(sc));
    return out;
  }
  std::vector<std::future<Outcome>> jobs;
  for (const auto& sc : scenarios) jobs.push_back(std::async(std::launch::async, solve_one, std::cref(sc)));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

const Outcome* find(const std::vector<Outcome>& outcomes, std::string_view name) {
  for (const auto& o : outcomes)
    if (o.config.name == name) return &o;
  return nullptr;
}

}  // namespace h2plan::scenario
