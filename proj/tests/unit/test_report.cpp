#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "h2plan/core/csv.hpp"
#include "h2plan/core/instance_io.hpp"
#include "h2plan/core/synthetic.hpp"
#include "h2plan/report/csv_output.hpp"
#include "h2plan/report/report.hpp"
#include "h2plan/scenario/scenario.hpp"

using namespace h2plan;
using namespace h2plan::report;

namespace {

struct Run {
  NetworkModel net;
  ScenarioConfig sc;
  model::PlanningResult result;
  SystemReport report;
};

Run run(const NetworkModel& net, const std::string& name = "R2050") {
  const auto sc = scenario::preset(name);
  auto out = scenario::run_suite(net, {sc});
  REQUIRE(out.size() == 1);
  REQUIRE(out[0].result.has_value());
  Run r{net, sc, *out[0].result, {}};
  r.report = build_report(r.result, net, sc);
  return r;
}

double cost(const SystemReport& r, CostCategory c) { return r.cost[static_cast<std::size_t>(c)]; }

}  // namespace

TEST_CASE("emissions, costs and trade are consistent") {
  for (std::uint64_t seed : {1u, 5u}) {
    for (const auto& name : {"R2050", "NoP2H2"}) {
      SyntheticSpec spec;
      spec.seed = seed;
      const auto r = run(synthetic_instance(spec), name);
      const auto& rep = r.report;
      const double w = r.net.grid.operational_weight;

      double tons = 0.0, smr_tons = 0.0;
      for (std::size_t k = 0; k < r.net.technologies.size(); ++k) {
        const auto& t = r.net.technologies[k];
        const double out = std::accumulate(r.result.techs[k].output.begin(), r.result.techs[k].output.end(), 0.0);
        tons += w * out * t.emission_factor / 1000.0;
        if (is_smr_family(t.tech_class)) smr_tons += w * out * t.emission_factor / 1000.0;
      }
      CHECK(rep.co2_total_t() == doctest::Approx(tons).epsilon(1e-12));
      CHECK(rep.co2_h2_t == doctest::Approx(smr_tons).epsilon(1e-12));
      CHECK(cost(rep, CostCategory::co2) == doctest::Approx(r.net.prices.co2_price * rep.co2_total_t()).epsilon(1e-12));
      CHECK(std::abs(rep.cost_total() - rep.objective) <= 1e-8 * std::abs(rep.objective));
      CHECK(rep.objective == r.result.objective);

      const auto n = rep.nodes.size();
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(rep.trade_electricity[i][i] == 0.0);
        CHECK(rep.trade_h2[i][i] == 0.0);
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(rep.trade_electricity[i][j] == -rep.trade_electricity[j][i]);
          CHECK(rep.trade_h2[i][j] == -rep.trade_h2[j][i]);
        }
      }
    }
  }
}

TEST_CASE("hydrogen supply mix matches production") {
  const auto r = run(synthetic_instance({}), "NoP2H2");
  std::array<double, 4> expect{};
  const double w = r.net.grid.operational_weight;
  for (std::size_t k = 0; k < r.net.technologies.size(); ++k) {
    const auto& t = r.net.technologies[k];
    const double out = w * std::accumulate(r.result.techs[k].output.begin(), r.result.techs[k].output.end(), 0.0);
    switch (t.tech_class) {
      case TechClass::electrolyser: expect[0] += out; break;
      case TechClass::smr: expect[1] += out; break;
      case TechClass::smr_ccs54: expect[2] += out; break;
      case TechClass::smr_ccs89: expect[3] += out; break;
      default: break;
    }
  }
  for (int f = 0; f < 4; ++f) CHECK(r.report.h2_supply[f] == doctest::Approx(expect[f]).epsilon(1e-12));
  CHECK(r.report.gas_consumption_mwh > 0.0);
}

TEST_CASE("all-electrolysis supply has a carbon-free hydrogen sector") {
  const auto r = run(load_instance(testing::source_path("instances/two_node")), "R2050");
  const auto& s = r.report.h2_supply;
  CHECK(s[0] > 0.0);
  CHECK(s[1] == 0.0);
  CHECK(s[2] == 0.0);
  CHECK(s[3] == 0.0);
  CHECK(s[0] == doctest::Approx(r.report.h2_supply_total()));
  CHECK(r.report.co2_h2_t == 0.0);
}

TEST_CASE("zero demand reports only fixed O&M") {
  auto net = synthetic_instance({});
  for (auto& n : net.nodes) {
    std::fill(n.electricity_demand.begin(), n.electricity_demand.end(), 0.0);
    std::fill(n.h2_demand.begin(), n.h2_demand.end(), 0.0);
    n.flexible_loads.clear();
  }
  const auto r = run(net);
  for (std::size_t c = 0; c < r.report.cost.size(); ++c) {
    if (c == static_cast<std::size_t>(CostCategory::fixed_om)) continue;
    CHECK(r.report.cost[c] == 0.0);
  }
  CHECK(cost(r.report, CostCategory::fixed_om) > 0.0);
  CHECK(r.report.co2_total_t() == 0.0);
  CHECK(r.report.h2_supply_total() == 0.0);
  CHECK(r.report.gas_consumption_mwh == 0.0);
  CHECK(r.report.retrofit_share == 0.0);
  for (const auto& row : r.report.trade_electricity)
    for (double v : row) CHECK(v == 0.0);
}

TEST_CASE("full first retrofit counts the whole corridor") {
  const auto r = run(testing::retrofit_corridor());
  CHECK(r.report.retrofit_share == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(r.report.pipelines.size() == 1);
  const auto& p = r.report.pipelines[0];
  CHECK(p.retrofit1_mw == 6000.0);
  CHECK(p.ch4_residual_mw == 0.0);
  CHECK(p.h2_capacity_mw == doctest::Approx(8000.0));
  CHECK(cost(r.report, CostCategory::retrofit_capex) == doctest::Approx(0.8 * 10000.0 * 35000.0));
  // Net hydrogen export from A to B equals B's annual demand.
  CHECK(r.report.trade_h2[0][1] == doctest::Approx(8000.0 * 4.0));
}

TEST_CASE("energy accounting per node closes") {
  const auto r = run(synthetic_instance({}));
  const auto& net = r.net;
  const auto& res = r.result;
  for (std::size_t n = 0; n < net.nodes.size(); ++n) {
    double supplied = 0.0, consumed = 0.0;
    for (std::size_t k = 0; k < net.technologies.size(); ++k) {
      const auto& t = net.technologies[k];
      if (t.node != net.nodes[n].id) continue;
      for (double x : res.techs[k].output) {
        if (t.carrier_out == Carrier::electricity) supplied += x;
        if (t.carrier_in == Carrier::electricity) consumed += x / t.efficiency;
      }
    }
    for (std::size_t k = 0; k < net.storages.size(); ++k) {
      const auto& s = net.storages[k];
      if (s.node != net.nodes[n].id || s.carrier != Carrier::electricity) continue;
      for (double x : res.storages[k].discharge) supplied += x;
      for (double x : res.storages[k].charge) consumed += x;
    }
    std::size_t flex = 0;
    for (std::size_t m = 0; m < net.nodes.size(); ++m)
      for (std::size_t f = 0; f < net.nodes[m].flexible_loads.size(); ++f, ++flex)
        if (m == n)
          for (double x : res.flex_draw[flex]) consumed += x;
    for (double d : net.nodes[n].electricity_demand) consumed += d;
    double imports = 0.0;
    for (std::size_t j = 0; j < net.nodes.size(); ++j) imports += r.report.trade_electricity[j][n];
    imports /= net.grid.operational_weight;
    CHECK(supplied + imports == doctest::Approx(consumed).epsilon(1e-9));
  }
}

TEST_CASE("CSV output round-trips") {
  const auto r = run(synthetic_instance({}), "NoH2Storage");
  testing::TempDir dir("csv");
  const auto files = emit_csv(r.report, dir.path());
  CHECK(files.size() == 11);
  for (const auto& f : files) CHECK(std::filesystem::exists(f));
  CHECK(load_csv(dir.path()) == r.report);

  const auto again = emit_csv(r.report, dir / "again");
  for (std::size_t i = 0; i < files.size(); ++i) CHECK(testing::slurp(files[i]) == testing::slurp(again[i]));
}

TEST_CASE("empty trade matrix gives a header-only file") {
  SystemReport rep;
  rep.scenario = "Empty";
  testing::TempDir dir("csv_empty");
  emit_csv(rep, dir.path());
  const auto t = csv::read(dir / "trade_electricity.csv");
  CHECK(t.header == std::vector<std::string>{"from", "to", "net_mwh"});
  CHECK(t.rows.empty());
  CHECK(load_csv(dir.path()) == rep);
}

TEST_CASE("summary keeps input order") {
  testing::TempDir dir("summary");
  const std::vector<SummaryRow> rows{{"NoP2H2", "optimal", 2.5e9, 1.25e5}, {"R2050", "optimal", 2e9, 0.0},
                                     {"Broken", "infeasible", 0.0, 0.0}};
  write_summary(rows, dir / "summary.csv");
  CHECK(read_summary(dir / "summary.csv") == rows);
  const auto two = std::vector<SummaryRow>(rows.begin(), rows.begin() + 2);
  write_summary(two, dir / "two.csv");
  const auto back = read_summary(dir / "two.csv");
  REQUIRE(back.size() == 2);
  CHECK(back[0].scenario == "NoP2H2");
  CHECK(back[1].scenario == "R2050");
}
