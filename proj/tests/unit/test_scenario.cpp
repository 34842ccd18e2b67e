#include <doctest.h>

#include <fstream>
#include <stdexcept>

#include "fixtures.hpp"
#include "h2plan/core/errors.hpp"
#include "h2plan/core/synthetic.hpp"
#include "h2plan/scenario/scenario.hpp"

using namespace h2plan;
using namespace h2plan::scenario;

namespace {

bool flags_are(const ScenarioConfig& c, bool p2h2, bool storage, bool h2tx, bool etx) {
  return c.allow_p2h2 == p2h2 && c.allow_h2_storage == storage && c.allow_h2_transmission == h2tx &&
         c.allow_e_transmission_expansion == etx;
}

}  // namespace

TEST_CASE("presets follow the variant table") {
  CHECK(flags_are(preset("R2050"), true, true, true, true));
  CHECK(flags_are(preset("NoP2H2"), false, true, true, true));
  CHECK(flags_are(preset("NoH2Storage"), true, false, true, true));
  CHECK(flags_are(preset("NoH2Transmission"), true, true, false, true));
  CHECK(flags_are(preset("NoETransmission"), true, true, true, false));
  CHECK(preset("NoP2H2").name == "NoP2H2");
  CHECK_THROWS_AS(preset("NoX"), std::invalid_argument);
  CHECK_THROWS_AS(preset("r2050"), std::invalid_argument);

  const auto all = all_presets();
  REQUIRE(all.size() == 5);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].name == kPresetNames[i]);
}

TEST_CASE("scenario files") {
  const auto c = parse_scenario_text("# custom\nname = Islands\nallow_h2_transmission = false\n"
                                     "allow_e_transmission_expansion=false\n",
                                     "mem");
  CHECK(c.name == "Islands");
  CHECK(flags_are(c, true, true, false, false));

  CHECK_THROWS_AS(parse_scenario_text("allow_p2h2 = false\n", "mem"), ParseError);
  CHECK_THROWS_AS(parse_scenario_text("name = X\nallow_magic = true\n", "mem"), ParseError);
  CHECK_THROWS_AS(parse_scenario_text("name = X\nallow_p2h2 = maybe\n", "mem"), ParseError);

  testing::TempDir dir("scen");
  {
    std::ofstream f(dir / "s.txt");
    f << "name = NoStore\nallow_h2_storage = false\n";
  }
  const auto r = resolve((dir / "s.txt").string());
  CHECK(r.name == "NoStore");
  CHECK(flags_are(r, true, false, true, true));
  CHECK(flags_are(resolve("NoP2H2"), false, true, true, true));
  CHECK_THROWS(resolve((dir / "missing.txt").string()));
}

TEST_CASE("empty suite gives no outcomes") {
  CHECK(run_suite(synthetic_instance({}), {}).empty());
}

TEST_CASE("suite keeps input order and restriction never helps") {
  const auto net = synthetic_instance({});
  std::vector<ScenarioConfig> list{preset("NoETransmission"), preset("R2050"), preset("NoP2H2"),
                                   preset("NoH2Transmission"), preset("NoH2Storage")};
  const auto out = run_suite(net, list);
  REQUIRE(out.size() == list.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(out[i].config.name == list[i].name);
    REQUIRE(out[i].status == lp::SolveStatus::optimal);
    REQUIRE(out[i].result.has_value());
  }
  const auto* base = find(out, "R2050");
  REQUIRE(base != nullptr);
  CHECK(find(out, "Nope") == nullptr);
  const double r = base->result->objective;
  for (const auto& o : out) CHECK(r <= o.result->objective * (1.0 + 1e-6));

  SUBCASE("flag semantics are exact zeros") {
    const auto& tx = *find(out, "NoH2Transmission")->result;
    for (const auto& p : tx.pipelines) {
      CHECK(p.cap_retrofit1 == 0.0);
      CHECK(p.cap_retrofit2 == 0.0);
      CHECK(p.cap_new == 0.0);
    }
    const auto& p2h2 = *find(out, "NoP2H2")->result;
    for (std::size_t k = 0; k < net.technologies.size(); ++k)
      if (net.technologies[k].tech_class == TechClass::electrolyser) CHECK(p2h2.techs[k].new_capacity == 0.0);
    const auto& st = *find(out, "NoH2Storage")->result;
    for (std::size_t k = 0; k < net.storages.size(); ++k) {
      if (net.storages[k].carrier != Carrier::hydrogen) continue;
      CHECK(st.storages[k].new_energy == 0.0);
      CHECK(st.storages[k].new_power == 0.0);
    }
    const auto& et = *find(out, "NoETransmission")->result;
    for (const auto& c : et.corridors) CHECK(c.new_capacity == 0.0);
  }
}

TEST_CASE("parallel and serial suites agree bit for bit") {
  const auto net = synthetic_instance({});
  const auto list = all_presets();
  SuiteOptions serial;
  serial.parallel = false;
  const auto a = run_suite(net, list, serial);
  const auto b = run_suite(net, list);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].solution.objective == b[i].solution.objective);
    CHECK(a[i].solution.primal == b[i].solution.primal);
    CHECK(a[i].solution.basic == b[i].solution.basic);
  }
}

TEST_CASE("an infeasible scenario does not stop the others") {
  auto net = synthetic_instance({});
  // Without electrolyser investment or SMR headroom the hydrogen demand at
  // node 0 cannot be met.
  for (auto& t : net.technologies)
    if (t.tech_class == TechClass::electrolyser) t.initial_capacity = 0.0;
  for (auto& l : net.pipelines) l.cap_ch4_init = 0.0;
  const auto out = run_suite(net, {preset("NoP2H2"), preset("R2050")});
  REQUIRE(out.size() == 2);
  CHECK(out[0].status == lp::SolveStatus::infeasible);
  CHECK_FALSE(out[0].result.has_value());
  CHECK(out[1].status == lp::SolveStatus::optimal);
}
