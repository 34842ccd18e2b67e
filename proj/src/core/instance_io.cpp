#include "h2plan/core/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "h2plan/core/csv.hpp"
#include "h2plan/core/errors.hpp"
#include "h2plan/core/validate.hpp"

namespace h2plan {

namespace fs = std::filesystem;

namespace {

// €/kW in files, €/MW in memory.
constexpr int kPerKwShift = 3;

struct Row {
  const csv::Table& table;
  std::size_t index;

  const std::string& at(std::string_view col) const { return table.rows[index][table.column(col)]; }
  int line() const { return table.lines[index]; }
  double num(std::string_view col, int shift = 0) const {
    return csv::parse_double(at(col), table.source, line(), shift);
  }
  int integer(std::string_view col) const { return csv::parse_int(at(col), table.source, line()); }
  bool flag(std::string_view col) const { return csv::parse_bool(at(col), table.source, line()); }
  Carrier carrier(std::string_view col) const {
    auto c = parse_carrier(at(col));
    if (!c) throw ParseError(table.source, line(), "unknown carrier '" + at(col) + "'");
    return *c;
  }
};

template <typename F>
void for_rows(const csv::Table& t, F&& f) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) f(Row{t, i});
}

TimeGrid read_grid(const fs::path& path) {
  std::ifstream file(path);
  if (!file) throw ParseError(path.string(), 0, "cannot open file");
  TimeGrid grid;
  bool has_horizon = false, has_step = false, has_block = false;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path.string(), line_no, "expected key = value");
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r\"");
      const auto e = s.find_last_not_of(" \t\r\"");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    const auto src = path.string();
    if (key == "horizon_steps") {
      grid.horizon_steps = csv::parse_int(value, src, line_no);
      has_horizon = true;
    } else if (key == "step_duration") {
      grid.step_duration = csv::parse_double(value, src, line_no);
      has_step = true;
    } else if (key == "h2_block_len") {
      grid.h2_block_len = csv::parse_int(value, src, line_no);
      has_block = true;
    } else if (key == "operational_weight") {
      grid.operational_weight = csv::parse_double(value, src, line_no);
    } else {
      throw ParseError(src, line_no, "unknown key '" + key + "'");
    }
  }
  if (!has_horizon || !has_step || !has_block) {
    throw ParseError(path.string(), 0, "horizon_steps, step_duration and h2_block_len are required");
  }
  return grid;
}

// Wide series file: first column is the period/block counter, then one
// column per entity.
std::vector<std::pair<std::string, std::vector<double>>> read_series(const fs::path& path,
                                                                     std::string_view counter) {
  const auto t = csv::read(path);
  if (t.header.empty() || t.header[0] != counter) {
    throw ParseError(t.source, 1, "first column must be '" + std::string(counter) + "'");
  }
  std::vector<std::pair<std::string, std::vector<double>>> out;
  for (std::size_t c = 1; c < t.header.size(); ++c) out.emplace_back(t.header[c], std::vector<double>{});
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const int idx = csv::parse_int(t.rows[r][0], t.source, t.lines[r]);
    if (idx != static_cast<int>(r)) {
      throw ParseError(t.source, t.lines[r], "expected " + std::string(counter) + " " + std::to_string(r));
    }
    for (std::size_t c = 1; c < t.header.size(); ++c) {
      out[c - 1].second.push_back(csv::parse_double(t.rows[r][c], t.source, t.lines[r]));
    }
  }
  return out;
}

void write_series(const fs::path& path, std::string_view counter,
                  const std::vector<std::string>& names,
                  const std::vector<const std::vector<double>*>& series, std::size_t length) {
  std::vector<std::string> header{std::string(counter)};
  header.insert(header.end(), names.begin(), names.end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < length; ++r) {
    std::vector<std::string> row{std::to_string(r)};
    for (const auto* s : series) row.push_back(r < s->size() ? csv::format_double((*s)[r]) : "0");
    rows.push_back(std::move(row));
  }
  csv::write(path, header, rows);
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

NetworkModel read_instance(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw ParseError(dir.string(), 0, "instance directory does not exist");
  NetworkModel m;
  m.grid = read_grid(dir / "grid.toml");

  for_rows(csv::read(dir / "nodes.csv"), [&](const Row& r) {
    Node n;
    n.id = r.at("id");
    n.allows_co2_storage = r.flag("allows_co2_storage");
    m.nodes.push_back(std::move(n));
  });

  auto node_by_id = [&](const std::string& id, const fs::path& file) -> Node& {
    for (auto& n : m.nodes)
      if (n.id == id) return n;
    throw ParseError(file.string(), 1, "column for unknown node '" + id + "'");
  };
  for (auto& [id, values] : read_series(dir / "demand_electricity.csv", "period")) {
    node_by_id(id, dir / "demand_electricity.csv").electricity_demand = std::move(values);
  }
  for (auto& [id, values] : read_series(dir / "demand_h2.csv", "block")) {
    node_by_id(id, dir / "demand_h2.csv").h2_demand = std::move(values);
  }
  if (fs::exists(dir / "flexible_loads.csv")) {
    for_rows(csv::read(dir / "flexible_loads.csv"), [&](const Row& r) {
      FlexibleLoad f;
      f.total_energy_per_window = r.num("total_energy_mwh");
      f.window_len = r.integer("window_len");
      f.max_draw = r.num("max_draw_mw");
      f.min_draw = r.num("min_draw_mw");
      node_by_id(r.at("node"), dir / "flexible_loads.csv").flexible_loads.push_back(f);
    });
  }

  for_rows(csv::read(dir / "technologies.csv"), [&](const Row& r) {
    Technology t;
    t.id = r.at("id");
    t.node = r.at("node");
    auto cls = parse_tech_class(r.at("class"));
    if (!cls) throw ParseError(r.table.source, r.line(), "unknown technology class '" + r.at("class") + "'");
    t.tech_class = *cls;
    t.carrier_in = r.carrier("carrier_in");
    t.carrier_out = r.carrier("carrier_out");
    t.fuel = r.at("fuel");
    t.capex_annualized = r.num("capex_eur_per_kw_yr", kPerKwShift);
    t.fixed_om = r.num("fixed_om_eur_per_kw_yr", kPerKwShift);
    t.efficiency = r.num("efficiency");
    t.emission_factor = r.num("emission_kg_per_mwh");
    t.ccs_capture_factor = r.num("ccs_capture_kg_per_mwh");
    t.initial_capacity = r.num("initial_capacity_mw");
    t.max_new_capacity = r.at("max_new_capacity_mw").empty() ? kUnbounded : r.num("max_new_capacity_mw");
    t.variable_cost_extra = r.num("variable_cost_eur_per_mwh");
    m.technologies.push_back(std::move(t));
  });
  for (auto& [id, values] : read_series(dir / "profiles.csv", "period")) {
    auto idx = m.technology_index(id);
    if (!idx) throw ParseError((dir / "profiles.csv").string(), 1, "column for unknown technology '" + id + "'");
    m.technologies[*idx].availability = std::move(values);
  }

  for_rows(csv::read(dir / "storages.csv"), [&](const Row& r) {
    Storage s;
    s.id = r.at("id");
    s.node = r.at("node");
    s.carrier = r.carrier("carrier");
    s.charge_eff = r.num("charge_eff");
    s.discharge_eff = r.num("discharge_eff");
    s.energy_capex_annualized = r.num("energy_capex_eur_per_kwh_yr", kPerKwShift);
    s.power_capex_annualized = r.num("power_capex_eur_per_kw_yr", kPerKwShift);
    s.initial_energy_capacity = r.num("initial_energy_mwh");
    s.initial_power_capacity = r.num("initial_power_mw");
    s.investable = r.flag("investable");
    m.storages.push_back(std::move(s));
  });

  for_rows(csv::read(dir / "pipelines.csv"), [&](const Row& r) {
    Pipeline l;
    l.id = r.at("id");
    l.from_node = r.at("from");
    l.to_node = r.at("to");
    l.cap_ch4_init = r.num("cap_ch4_mw");
    l.cap_h2_init = r.num("cap_h2_mw");
    l.eta1 = r.num("eta1");
    l.eta2 = r.num("eta2");
    l.capex_retrofit1 = r.num("capex_retrofit1_eur_per_kw_yr", kPerKwShift);
    l.capex_retrofit2 = r.num("capex_retrofit2_eur_per_kw_yr", kPerKwShift);
    l.capex_new = r.num("capex_new_eur_per_kw_yr", kPerKwShift);
    l.new_buildable = r.flag("new_buildable");
    m.pipelines.push_back(std::move(l));
  });

  for_rows(csv::read(dir / "corridors.csv"), [&](const Row& r) {
    TransmissionCorridor c;
    c.id = r.at("id");
    c.from_node = r.at("from");
    c.to_node = r.at("to");
    c.initial_capacity = r.num("initial_capacity_mw");
    c.capex_annualized = r.num("capex_eur_per_kw_yr", kPerKwShift);
    c.expandable = r.flag("expandable");
    m.corridors.push_back(std::move(c));
  });

  for_rows(csv::read(dir / "prices.csv"), [&](const Row& r) {
    const std::string item = r.at("item");
    const std::string unit = r.at("unit");
    if (item == "co2") {
      if (unit != "EUR/t") throw ParseError(r.table.source, r.line(), "co2 price unit must be EUR/t");
      m.prices.co2_price = r.num("value");
      return;
    }
    double v;
    if (unit == "EUR/MWh") v = r.num("value");
    else if (unit == "EUR/GJ") v = r.num("value") * kGjPerMwh;
    else throw ParseError(r.table.source, r.line(), "unknown price unit '" + unit + "'");
    if (!m.prices.fuel_prices.emplace(item, v).second) {
      throw ParseError(r.table.source, r.line(), "duplicate price for '" + item + "'");
    }
  });
  return m;
}

NetworkModel load_instance(const fs::path& dir) {
  NetworkModel m = read_instance(dir);
  if (auto v = validate_network(m); !v.empty()) throw ValidationError(std::move(v));
  return m;
}

void save_instance(const NetworkModel& m, const fs::path& dir) {
  fs::create_directories(dir);
  {
    std::ofstream grid(dir / "grid.toml", std::ios::binary | std::ios::trunc);
    grid << "horizon_steps = " << m.grid.horizon_steps << "\n"
         << "step_duration = " << csv::format_double(m.grid.step_duration) << "\n"
         << "h2_block_len = " << m.grid.h2_block_len << "\n"
         << "operational_weight = " << csv::format_double(m.grid.operational_weight) << "\n";
    if (!grid) throw std::runtime_error("failed writing grid.toml");
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> names;
  std::vector<const std::vector<double>*> series;

  for (const auto& n : m.nodes) rows.push_back({n.id, fmt_bool(n.allows_co2_storage)});
  csv::write(dir / "nodes.csv", {"id", "allows_co2_storage"}, rows);

  for (const auto& n : m.nodes) {
    names.push_back(n.id);
    series.push_back(&n.electricity_demand);
  }
  write_series(dir / "demand_electricity.csv", "period", names, series,
               static_cast<std::size_t>(m.grid.horizon_steps));
  series.clear();
  for (const auto& n : m.nodes) series.push_back(&n.h2_demand);
  write_series(dir / "demand_h2.csv", "block", names, series,
               static_cast<std::size_t>(m.grid.num_blocks()));

  rows.clear();
  for (const auto& n : m.nodes) {
    for (const auto& f : n.flexible_loads) {
      rows.push_back({n.id, csv::format_double(f.total_energy_per_window), std::to_string(f.window_len),
                      csv::format_double(f.max_draw), csv::format_double(f.min_draw)});
    }
  }
  csv::write(dir / "flexible_loads.csv",
             {"node", "total_energy_mwh", "window_len", "max_draw_mw", "min_draw_mw"}, rows);

  rows.clear();
  names.clear();
  series.clear();
  for (const auto& t : m.technologies) {
    rows.push_back({t.id, t.node, std::string(to_string(t.tech_class)),
                    std::string(to_string(t.carrier_in)), std::string(to_string(t.carrier_out)), t.fuel,
                    csv::format_scaled(t.capex_annualized, -kPerKwShift),
                    csv::format_scaled(t.fixed_om, -kPerKwShift), csv::format_double(t.efficiency),
                    csv::format_double(t.emission_factor), csv::format_double(t.ccs_capture_factor),
                    csv::format_double(t.initial_capacity),
                    std::isinf(t.max_new_capacity) ? "" : csv::format_double(t.max_new_capacity),
                    csv::format_double(t.variable_cost_extra)});
    if (!t.availability.empty()) {
      names.push_back(t.id);
      series.push_back(&t.availability);
    }
  }
  csv::write(dir / "technologies.csv",
             {"id", "node", "class", "carrier_in", "carrier_out", "fuel", "capex_eur_per_kw_yr",
              "fixed_om_eur_per_kw_yr", "efficiency", "emission_kg_per_mwh", "ccs_capture_kg_per_mwh",
              "initial_capacity_mw", "max_new_capacity_mw", "variable_cost_eur_per_mwh"},
             rows);
  write_series(dir / "profiles.csv", "period", names, series,
               series.empty() ? 0 : static_cast<std::size_t>(m.grid.horizon_steps));

  rows.clear();
  for (const auto& s : m.storages) {
    rows.push_back({s.id, s.node, std::string(to_string(s.carrier)), csv::format_double(s.charge_eff),
                    csv::format_double(s.discharge_eff),
                    csv::format_scaled(s.energy_capex_annualized, -kPerKwShift),
                    csv::format_scaled(s.power_capex_annualized, -kPerKwShift),
                    csv::format_double(s.initial_energy_capacity),
                    csv::format_double(s.initial_power_capacity), fmt_bool(s.investable)});
  }
  csv::write(dir / "storages.csv",
             {"id", "node", "carrier", "charge_eff", "discharge_eff", "energy_capex_eur_per_kwh_yr",
              "power_capex_eur_per_kw_yr", "initial_energy_mwh", "initial_power_mw", "investable"},
             rows);

  rows.clear();
  for (const auto& l : m.pipelines) {
    rows.push_back({l.id, l.from_node, l.to_node, csv::format_double(l.cap_ch4_init),
                    csv::format_double(l.cap_h2_init), csv::format_double(l.eta1),
                    csv::format_double(l.eta2), csv::format_scaled(l.capex_retrofit1, -kPerKwShift),
                    csv::format_scaled(l.capex_retrofit2, -kPerKwShift),
                    csv::format_scaled(l.capex_new, -kPerKwShift), fmt_bool(l.new_buildable)});
  }
  csv::write(dir / "pipelines.csv",
             {"id", "from", "to", "cap_ch4_mw", "cap_h2_mw", "eta1", "eta2",
              "capex_retrofit1_eur_per_kw_yr", "capex_retrofit2_eur_per_kw_yr",
              "capex_new_eur_per_kw_yr", "new_buildable"},
             rows);

  rows.clear();
  for (const auto& c : m.corridors) {
    rows.push_back({c.id, c.from_node, c.to_node, csv::format_double(c.initial_capacity),
                    csv::format_scaled(c.capex_annualized, -kPerKwShift), fmt_bool(c.expandable)});
  }
  csv::write(dir / "corridors.csv",
             {"id", "from", "to", "initial_capacity_mw", "capex_eur_per_kw_yr", "expandable"}, rows);

  rows.clear();
  for (const auto& [fuel, price] : m.prices.fuel_prices) {
    rows.push_back({fuel, csv::format_double(price), "EUR/MWh"});
  }
  rows.push_back({"co2", csv::format_double(m.prices.co2_price), "EUR/t"});
  csv::write(dir / "prices.csv", {"item", "value", "unit"}, rows);
}

}  // namespace h2plan
