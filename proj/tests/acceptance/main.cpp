// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fixtures.hpp"
#include "h2plan/cli/commands.hpp"
#include "h2plan/core/instance_io.hpp"
#include "h2plan/core/synthetic.hpp"
#include "h2plan/lp/mps.hpp"
#include "h2plan/lp/solver.hpp"
#include "h2plan/model/expansion.hpp"
#include "h2plan/model/solution.hpp"
#include "h2plan/report/report.hpp"
#include "h2plan/retrofit/retrofit.hpp"
#include "h2plan/scenario/scenario.hpp"
#include "vertex_oracle.hpp"

using namespace h2plan;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

struct Verdict {
  bool pass = false;
  std::string detail;
};

// Every optimal LP solved anywhere in this binary, for the duality check.
struct GapLog {
  int solves = 0;
  double worst = 0.0;

  void add(const lp::LpSolution& s) {
    if (s.status != lp::SolveStatus::optimal) return;
    ++solves;
    worst = std::max(worst, std::abs(s.objective - s.dual_objective) / std::max(1.0, std::abs(s.objective)));
  }
};
GapLog gaps;

// Worst SMR excess over the half-demand cap, over every plan produced.
struct SmrLog {
  int plans = 0;
  double worst_excess = -lp::kInf;

  void add(const model::PlanningResult& r, const NetworkModel& net) {
    ++plans;
    for (const auto& n : net.nodes) {
      double smr = 0.0, demand = 0.0;
      for (std::size_t k = 0; k < net.technologies.size(); ++k) {
        const auto& t = net.technologies[k];
        if (t.node != n.id || !is_smr_family(t.tech_class)) continue;
        for (double x : r.techs[k].output) smr += x;
      }
      for (double d : n.h2_demand) demand += d;
      worst_excess = std::max(worst_excess, smr - 0.5 * demand);
    }
  }
};
SmrLog smr_log;

std::vector<scenario::Outcome> run_logged(const NetworkModel& net, const std::vector<ScenarioConfig>& list) {
  auto out = scenario::run_suite(net, list);
  for (const auto& o : out) {
    gaps.add(o.solution);
    if (o.result) smr_log.add(*o.result, net);
  }
  return out;
}

Verdict cost_identity() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    Pipeline l;
    l.eta1 = 0.01 + 0.98 * u(rng);
    l.eta2 = l.eta1 + (1.0 - l.eta1) * (0.001 + 0.999 * u(rng));
    l.capex_retrofit1 = 1e3 + 1e5 * u(rng);
    l.capex_retrofit2 = 1e3 + 1e5 * u(rng);
    l.cap_ch4_init = 1.0 + 2e4 * u(rng);
    const double p = l.cap_ch4_init;
    const double got = retrofit::retrofit_cost(l, l.eta1 * p, (l.eta2 - l.eta1) * p, 0.0);
    const double want = l.eta2 * p * l.capex_retrofit2;
    worst = std::max(worst, std::abs(got - want) / std::abs(want));
  }
  const double dt = seconds_since(t0);
  return {worst <= 1e-12 && dt < 1.0,
          fmt::format("max relative error {:.2e} over 100 tuples (limit 1e-12), {:.3f} s", worst, dt)};
}

Verdict ch4_exclusion() {
  const auto net = testing::retrofit_corridor();
  const ScenarioConfig sc;
  const auto out = run_logged(net, {sc});
  if (!out[0].result) return {false, "solve status " + lp::to_string(out[0].status)};
  const auto& p = out[0].result->pipelines.at(0);
  const auto& l = net.pipelines[0];
  const double limit = l.eta1 * l.cap_ch4_init;
  double flow = 0.0;
  for (double f : p.ch4_flow) flow = std::max(flow, std::abs(f));
  const bool pass = p.cap_retrofit1 == limit && p.ch4_capacity == 0.0 &&
                    retrofit::residual_ch4_capacity(l, p.cap_retrofit1) == 0.0 && flow == 0.0;
  return {pass, fmt::format("p1 = {} MW at limit {} MW, residual CH4 capacity {} MW, max CH4 flow {}",
                            p.cap_retrofit1, limit, p.ch4_capacity, flow)};
}

Verdict monotonicity() {
  const auto t0 = Clock::now();
  const auto presets = scenario::all_presets();
  int instances = 0, violations = 0, failed = 0;
  double worst = -lp::kInf;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SyntheticSpec spec;
    spec.nodes = 3;
    spec.periods = 24;
    spec.seed = seed;
    const auto out = run_logged(synthetic_instance(spec), presets);
    ++instances;
    bool all_optimal = true;
    for (const auto& o : out) all_optimal &= o.result.has_value();
    if (!all_optimal) {
      ++failed;
      continue;
    }
    const double base = out[0].result->objective;
    for (std::size_t i = 1; i < out.size(); ++i) {
      const double v = out[i].result->objective;
      const double excess = (base - v) / std::max(1.0, std::abs(v));
      worst = std::max(worst, excess);
      if (excess > 1e-6) ++violations;
    }
  }
  const double dt = seconds_since(t0);
  return {violations == 0 && failed == 0 && dt < 60.0,
          fmt::format("{} instances x 5 scenarios, {} non-optimal, {} violations, "
                      "max (R2050 - variant)/variant {:.2e} (limit 1e-6), {:.1f} s",
                      instances, failed, violations, worst, dt)};
}

// Two nodes, four hydrogen blocks. The only investments are the two retrofit
// levels; everything else is fixed, so a grid over (p1, p2) enumerates every
// investment plan.
NetworkModel grid_instance(double scale) {
  NetworkModel m;
  m.grid = TimeGrid{8, 1.0, 2, 1.0};
  m.nodes.push_back(testing::make_node("A", 8, 4, 0.0, 0.0));
  m.nodes.push_back(testing::make_node("B", 8, 4, 0.0, 0.0));
  m.nodes[1].h2_demand = {4400.0 * scale, 5200.0 * scale, 3000.0 * scale, 4800.0 * scale};
  auto cheap = testing::make_tech("gen_A", "A", TechClass::conventional, Carrier::none, Carrier::electricity, 1e5);
  cheap.variable_cost_extra = 5.0;
  auto dear = testing::make_tech("gen_B", "B", TechClass::conventional, Carrier::none, Carrier::electricity, 1e5);
  dear.variable_cost_extra = 60.0;
  for (auto* t : {&cheap, &dear}) t->max_new_capacity = 0.0;
  m.technologies.push_back(cheap);
  m.technologies.push_back(dear);
  for (const auto& n : {std::string("A"), std::string("B")}) {
    auto ely = testing::make_tech("ely_" + n, n, TechClass::electrolyser, Carrier::electricity, Carrier::hydrogen,
                                  1e4);
    ely.efficiency = 0.68;
    ely.max_new_capacity = 0.0;
    m.technologies.push_back(ely);
  }
  Pipeline l;
  l.id = "A_B";
  l.from_node = "A";
  l.to_node = "B";
  l.cap_ch4_init = 5000.0;
  l.capex_retrofit1 = 150.0;
  l.capex_retrofit2 = 230.0;
  l.capex_new = 1e6;
  l.new_buildable = false;
  m.pipelines.push_back(l);
  return m;
}

Verdict grid_enumeration() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  for (double scale : {1.0, 0.83, 1.17}) {
    const auto net = grid_instance(scale);
    const auto& l = net.pipelines[0];
    const auto skeleton = model::build_skeleton(net);
    const auto continuous = lp::solve(skeleton.builder.build());
    gaps.add(continuous);
    if (continuous.status != lp::SolveStatus::optimal) return {false, "continuous LP not optimal"};
    const double lp_opt = continuous.objective;

    const auto& vars = skeleton.pipelines[0];
    auto best_on_grid = [&](int points) {
      double best = lp::kInf;
      const double p1_max = l.eta1 * l.cap_ch4_init;
      const double p2_max = (l.eta2 - l.eta1) * l.cap_ch4_init;
      for (int i = 0; i < points; ++i) {
        const double p1 = p1_max * i / (points - 1);
        for (int j = 0; j < points; ++j) {
          const double p2 = p2_max * j / (points - 1);
          if (p2 > (l.eta2 - l.eta1) / l.eta1 * p1 * (1.0 + 1e-12)) continue;
          auto h = skeleton;
          h.builder.set_bounds(vars.cap_retrofit1, p1, p1);
          h.builder.set_bounds(vars.cap_retrofit2, p2, p2);
          const auto s = lp::solve(h.builder.build());
          gaps.add(s);
          if (s.status == lp::SolveStatus::optimal) best = std::min(best, s.objective);
        }
      }
      return best;
    };
    // 99 = 11 * 9, so the fine grid contains the coarse one.
    const double gap_coarse = best_on_grid(10) - lp_opt;
    const double gap_fine = best_on_grid(100) - lp_opt;
    const double tol = 1e-9 * std::abs(lp_opt);
    pass &= gap_coarse >= -tol && gap_fine >= -tol && gap_fine <= gap_coarse + tol;
    detail += fmt::format("demand x{:.2f}: LP {:.2f}, 10-point +{:.2f}, 100-point +{:.2f}; ", scale, lp_opt,
                          gap_coarse, gap_fine);
  }
  const double dt = seconds_since(t0);
  return {pass && dt < 120.0, detail + fmt::format("{:.1f} s", dt)};
}

Verdict smr_policy() {
  return {smr_log.plans > 0 && smr_log.worst_excess <= 1e-6,
          fmt::format("{} plans checked, max SMR output minus half of demand {:.3e} MWh (limit 1e-6)", smr_log.plans,
                      smr_log.worst_excess)};
}

Verdict directional() {
  const auto net = load_instance(testing::source_path("instances/two_node"));
  const auto out = run_logged(net, {scenario::preset("R2050"), scenario::preset("NoP2H2"),
                                    scenario::preset("NoH2Transmission")});
  for (const auto& o : out)
    if (!o.result) return {false, o.config.name + " status " + lp::to_string(o.status)};
  std::vector<report::SystemReport> reps;
  for (const auto& o : out) reps.push_back(report::build_report(*o.result, net, o.config));
  const bool co2 = reps[1].co2_total_t() > reps[0].co2_total_t();
  const bool gas = reps[1].gas_consumption_mwh > reps[0].gas_consumption_mwh;
  const bool cost = reps[2].objective >= reps[0].objective * (1.0 - 1e-9);
  return {co2 && gas && cost,
          fmt::format("CO2 {:.4e} t vs {:.4e} t ({}), gas {:.4e} vs {:.4e} MWh ({}), NoH2Transmission cost "
                      "{:.6e} vs {:.6e} EUR ({})",
                      reps[1].co2_total_t(), reps[0].co2_total_t(), co2 ? "higher" : "NOT higher",
                      reps[1].gas_consumption_mwh, reps[0].gas_consumption_mwh, gas ? "higher" : "NOT higher",
                      reps[2].objective, reps[0].objective, cost ? ">=" : "<")};
}

Verdict duality_and_oracle() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(8675309);
  int compared = 0, disagreements = 0;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const auto p = testing::random_small_lp(rng);
    const auto s = lp::solve(p);
    gaps.add(s);
    const auto oracle = testing::enumerate_vertices(p);
    const bool oracle_feasible = oracle.has_value();
    if (oracle_feasible != (s.status == lp::SolveStatus::optimal)) {
      ++disagreements;
      continue;
    }
    if (!oracle_feasible) continue;
    ++compared;
    const double d = rel_diff(s.objective, oracle->objective);
    worst = std::max(worst, d);
    if (d > 1e-7) ++disagreements;
  }
  const double dt = seconds_since(t0);
  const bool pass = gaps.worst <= 1e-6 && disagreements == 0 && dt < 30.0;
  return {pass, fmt::format("{} optimal solves, max duality gap {:.2e} (limit 1e-6); 200 random LPs, {} with an "
                            "optimum, {} disagreements, max difference {:.2e} (limit 1e-7), oracle run {:.1f} s",
                            gaps.solves, gaps.worst, compared, disagreements, worst, dt)};
}

bool same_tree(const fs::path& a, const fs::path& b, int& files) {
  bool same = true;
  for (const auto& e : fs::recursive_directory_iterator(a)) {
    if (!e.is_regular_file()) continue;
    ++files;
    const auto other = b / fs::relative(e.path(), a);
    if (!fs::exists(other) || testing::slurp(e.path()) != testing::slurp(other)) same = false;
  }
  return same;
}

Verdict determinism() {
  testing::TempDir dir("acceptance");
  std::ostringstream so, se;
  cli::RunConfig c;
  c.instance_dir = testing::source_path("instances/two_node");
  for (auto n : scenario::kPresetNames) c.scenarios.emplace_back(n);
  c.log = cli::LogLevel::quiet;
  c.out_dir = dir / "run1";
  const int r1 = cli::cmd_run(c, so, se);
  c.out_dir = dir / "run2";
  const int r2 = cli::cmd_run(c, so, se);
  int files = 0;
  const bool runs_same = r1 == 0 && r2 == 0 && same_tree(dir / "run1", dir / "run2", files);

  c.scenarios = {"R2050"};
  c.out_dir = dir / "export";
  const int r3 = cli::cmd_export(c, so, se);
  const bool golden_model = r3 == 0 && testing::slurp(dir / "export/R2050.mps") ==
                                           testing::slurp(testing::source_path("tests/golden/two_node_R2050.mps"));

  lp::LpBuilder b;
  b.set_name("MINX");
  auto x = b.add_column("x", -lp::kInf, lp::kInf, 1.0);
  b.add_row("c", 3.0, lp::kInf, {{x, 1.0}});
  lp::export_standard(b.build(), dir / "minx.mps");
  const bool golden_small =
      testing::slurp(dir / "minx.mps") == testing::slurp(testing::source_path("tests/golden/min_x_ge_3.mps"));

  return {runs_same && golden_model && golden_small,
          fmt::format("two runs of 5 scenarios: {} files {}; two_node R2050 export {} golden; min-x export {} golden",
                      files, runs_same ? "identical" : "DIFFER", golden_model ? "matches" : "DIFFERS from",
                      golden_small ? "matches" : "DIFFERS from")};
}

Verdict scale() {
  SyntheticSpec spec;
  spec.nodes = 5;
  spec.periods = 168;
  spec.h2_block_len = 6;
  spec.seed = 1;
  const auto net = synthetic_instance(spec);
  const auto t0 = Clock::now();
  const ScenarioConfig sc;
  const auto built = model::build(net, sc);
  const auto s = lp::solve(built.problem);
  const double dt = seconds_since(t0);
  gaps.add(s);
  if (s.status == lp::SolveStatus::optimal) {
    smr_log.add(model::extract_solution(built.problem, s, built.handle, net, sc), net);
  }
  return {s.status == lp::SolveStatus::optimal && dt < 60.0,
          fmt::format("{} rows, {} columns, {} nonzeros, {} blocks: {} after {} iterations, objective {:.6e}, "
                      "{:.1f} s (limit 60 s)",
                      built.problem.num_rows(), built.problem.num_cols(), built.problem.matrix.nnz(),
                      net.grid.num_blocks(), lp::to_string(s.status), s.iterations, s.objective, dt)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  // Criteria 5 and 7 summarize the solves made by the others, so they run last.
  const std::vector<Criterion> order{
      {1, "retrofit cost identity", cost_identity},
      {2, "CH4 exclusion", ch4_exclusion},
      {3, "restriction monotonicity", monotonicity},
      {4, "grid enumeration oracle", grid_enumeration},
      {6, "directional findings on two_node", directional},
      {8, "determinism and golden files", determinism},
      {9, "scale smoke test", scale},
      {5, "SMR policy", smr_policy},
      {7, "LP duality and vertex oracle", duality_and_oracle},
  };
  std::vector<std::string> lines(10);
  bool all = true;
  for (const auto& c : order) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all &= v.pass;
    lines[c.id] = fmt::format("criterion {} {}: {} | {}", c.id, v.pass ? "PASS" : "FAIL", c.name, v.detail);
    std::fprintf(stderr, "%s\n", lines[c.id].c_str());
  }
  std::printf("\n");
  for (int i = 1; i <= 9; ++i) std::printf("%s\n", lines[i].c_str());
  return all ? 0 : 1;
}
