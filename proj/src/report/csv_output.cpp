#include "h2plan/report/csv_output.hpp"

#include "h2plan/core/csv.hpp"
#include "h2plan/core/errors.hpp"

namespace h2plan::report {

namespace fs = std::filesystem;
using csv::format_double;

namespace {

using Rows = std::vector<std::vector<std::string>>;

void write_trade(const fs::path& path, const std::vector<std::string>& nodes,
                 const std::vector<std::vector<double>>& m) {
  Rows rows;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (i != j) rows.push_back({nodes[i], nodes[j], format_double(m[i][j])});
  csv::write(path, {"from", "to", "net_mwh"}, rows);
}

struct Reader {
  const csv::Table& t;
  std::size_t r;
  const std::string& at(std::string_view c) const { return t.rows[r][t.column(c)]; }
  double num(std::string_view c) const { return csv::parse_double(at(c), t.source, t.lines[r]); }
};

std::size_t name_index(const auto& names, const std::string& name, const csv::Table& t, std::size_t r) {
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return k;
  throw ParseError(t.source, t.lines[r], "unknown entry '" + name + "'");
}

}  // namespace

std::vector<fs::path> emit_csv(const SystemReport& rep, const fs::path& dir) {
  fs::create_directories(dir);
  std::vector<fs::path> files;
  auto out = [&](const char* name) {
    files.push_back(dir / name);
    return files.back();
  };

  Rows rows;
  for (const auto& n : rep.nodes) rows.push_back({n});
  csv::write(out("nodes.csv"), {"node"}, rows);

  rows.clear();
  for (std::size_t k = 0; k < rep.h2_supply.size(); ++k)
    rows.push_back({std::string(kH2FamilyNames[k]), format_double(rep.h2_supply[k])});
  csv::write(out("h2_supply.csv"), {"family", "energy_mwh"}, rows);

  rows.clear();
  for (const auto& c : rep.capacity) {
    rows.push_back({c.technology, c.node, std::string(to_string(c.tech_class)), format_double(c.initial_mw),
                    format_double(c.new_mw), format_double(c.initial_mw + c.new_mw)});
  }
  csv::write(out("capacity.csv"), {"technology", "node", "class", "initial_mw", "new_mw", "total_mw"}, rows);

  csv::write(out("co2_by_sector.csv"), {"sector", "emissions_t"},
             {{"electricity", format_double(rep.co2_electricity_t)}, {"hydrogen", format_double(rep.co2_h2_t)}});

  rows.clear();
  for (std::size_t k = 0; k < rep.cost.size(); ++k)
    rows.push_back({std::string(kCostCategoryNames[k]), format_double(rep.cost[k])});
  csv::write(out("cost_breakdown.csv"), {"category", "cost_eur"}, rows);

  write_trade(out("trade_electricity.csv"), rep.nodes, rep.trade_electricity);
  write_trade(out("trade_h2.csv"), rep.nodes, rep.trade_h2);

  rows.clear();
  for (const auto& s : rep.storage) {
    rows.push_back({s.storage, s.node, std::string(to_string(s.carrier)), format_double(s.new_energy_mwh),
                    format_double(s.new_power_mw)});
  }
  csv::write(out("storage_investment.csv"), {"storage", "node", "carrier", "new_energy_mwh", "new_power_mw"}, rows);

  rows.clear();
  for (const auto& c : rep.corridors)
    rows.push_back({c.corridor, c.from, c.to, format_double(c.initial_mw), format_double(c.new_mw)});
  csv::write(out("corridor_investment.csv"), {"corridor", "from", "to", "initial_mw", "new_mw"}, rows);

  rows.clear();
  for (const auto& p : rep.pipelines) {
    rows.push_back({p.pipeline, p.from, p.to, format_double(p.retrofit1_mw), format_double(p.retrofit2_mw),
                    format_double(p.new_mw), format_double(p.h2_capacity_mw), format_double(p.ch4_residual_mw)});
  }
  csv::write(out("pipeline_investment.csv"),
             {"pipeline", "from", "to", "retrofit1_mw", "retrofit2_mw", "new_mw", "h2_capacity_mw", "ch4_residual_mw"},
             rows);

  csv::write(out("indicators.csv"), {"indicator", "value"},
             {{"scenario", rep.scenario},
              {"objective_eur", format_double(rep.objective)},
              {"retrofit_share", format_double(rep.retrofit_share)},
              {"gas_consumption_mwh", format_double(rep.gas_consumption_mwh)}});
  return files;
}

SystemReport load_csv(const fs::path& dir) {
  SystemReport rep;

  const auto ind = csv::read(dir / "indicators.csv");
  for (std::size_t r = 0; r < ind.rows.size(); ++r) {
    Reader x{ind, r};
    const auto& key = x.at("indicator");
    if (key == "scenario") rep.scenario = x.at("value");
    else if (key == "objective_eur") rep.objective = x.num("value");
    else if (key == "retrofit_share") rep.retrofit_share = x.num("value");
    else if (key == "gas_consumption_mwh") rep.gas_consumption_mwh = x.num("value");
    else throw ParseError(ind.source, ind.lines[r], "unknown indicator '" + key + "'");
  }

  const auto supply = csv::read(dir / "h2_supply.csv");
  for (std::size_t r = 0; r < supply.rows.size(); ++r) {
    Reader x{supply, r};
    rep.h2_supply[name_index(kH2FamilyNames, x.at("family"), supply, r)] = x.num("energy_mwh");
  }

  const auto cap = csv::read(dir / "capacity.csv");
  for (std::size_t r = 0; r < cap.rows.size(); ++r) {
    Reader x{cap, r};
    auto cls = parse_tech_class(x.at("class"));
    if (!cls) throw ParseError(cap.source, cap.lines[r], "unknown class");
    rep.capacity.push_back({x.at("technology"), x.at("node"), *cls, x.num("initial_mw"), x.num("new_mw")});
  }

  const auto co2 = csv::read(dir / "co2_by_sector.csv");
  for (std::size_t r = 0; r < co2.rows.size(); ++r) {
    Reader x{co2, r};
    const double v = x.num("emissions_t");
    if (x.at("sector") == "electricity") rep.co2_electricity_t = v;
    else if (x.at("sector") == "hydrogen") rep.co2_h2_t = v;
    else throw ParseError(co2.source, co2.lines[r], "unknown sector");
  }

  const auto cost = csv::read(dir / "cost_breakdown.csv");
  for (std::size_t r = 0; r < cost.rows.size(); ++r) {
    Reader x{cost, r};
    rep.cost[name_index(kCostCategoryNames, x.at("category"), cost, r)] = x.num("cost_eur");
  }

  const auto nodes = csv::read(dir / "nodes.csv");
  for (const auto& row : nodes.rows) rep.nodes.push_back(row[nodes.column("node")]);
  auto read_trade = [&](const char* name, std::vector<std::vector<double>>& m) {
    const auto t = csv::read(dir / name);
    m.assign(rep.nodes.size(), std::vector<double>(rep.nodes.size(), 0.0));
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      Reader x{t, r};
      m[name_index(rep.nodes, x.at("from"), t, r)][name_index(rep.nodes, x.at("to"), t, r)] = x.num("net_mwh");
    }
  };
  read_trade("trade_electricity.csv", rep.trade_electricity);
  read_trade("trade_h2.csv", rep.trade_h2);

  const auto st = csv::read(dir / "storage_investment.csv");
  for (std::size_t r = 0; r < st.rows.size(); ++r) {
    Reader x{st, r};
    auto carrier = parse_carrier(x.at("carrier"));
    if (!carrier) throw ParseError(st.source, st.lines[r], "unknown carrier");
    rep.storage.push_back({x.at("storage"), x.at("node"), *carrier, x.num("new_energy_mwh"), x.num("new_power_mw")});
  }

  const auto co = csv::read(dir / "corridor_investment.csv");
  for (std::size_t r = 0; r < co.rows.size(); ++r) {
    Reader x{co, r};
    rep.corridors.push_back({x.at("corridor"), x.at("from"), x.at("to"), x.num("initial_mw"), x.num("new_mw")});
  }

  const auto pl = csv::read(dir / "pipeline_investment.csv");
  for (std::size_t r = 0; r < pl.rows.size(); ++r) {
    Reader x{pl, r};
    rep.pipelines.push_back({x.at("pipeline"), x.at("from"), x.at("to"), x.num("retrofit1_mw"),
                             x.num("retrofit2_mw"), x.num("new_mw"), x.num("h2_capacity_mw"),
                             x.num("ch4_residual_mw")});
  }
  return rep;
}

void write_summary(const std::vector<SummaryRow>& rows, const fs::path& path) {
  Rows out;
  for (const auto& r : rows)
    out.push_back({r.scenario, r.status, format_double(r.objective), format_double(r.co2_t)});
  csv::write(path, {"scenario", "status", "objective_eur", "co2_t"}, out);
}

std::vector<SummaryRow> read_summary(const fs::path& path) {
  const auto t = csv::read(path);
  std::vector<SummaryRow> rows;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Reader x{t, r};
    rows.push_back({x.at("scenario"), x.at("status"), x.num("objective_eur"), x.num("co2_t")});
  }
  return rows;
}

}  // namespace h2plan::report
