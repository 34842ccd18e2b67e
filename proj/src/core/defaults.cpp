#include "h2plan/core/defaults.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace h2plan::defaults {

const H2TechSpec& h2_spec(TechClass c) {
  for (const auto& s : kH2Technologies)
    if (s.tech_class == c) return s;
  throw std::invalid_argument("no hydrogen technology data for class " + std::string(to_string(c)));
}

bool allows_co2_storage(std::string_view region) {
  return std::find(kCcsBanned.begin(), kCcsBanned.end(), region) == kCcsBanned.end();
}

double annuity_factor(double rate, int years) {
  if (years <= 0) throw std::invalid_argument("annuity lifetime must be positive");
  if (rate == 0.0) return 1.0 / years;
  return rate / (1.0 - std::pow(1.0 + rate, -years));
}

PriceSet default_prices() {
  PriceSet p;
  for (const auto& f : kFuelPrices) p.fuel_prices.emplace(std::string(f.fuel), f.eur_per_gj * kGjPerMwh);
  p.co2_price = kCo2PriceEurPerTon;
  return p;
}

Technology make_h2_technology(TechClass c, const std::string& id, const std::string& node,
                              double initial_capacity_mw, double rate) {
  const auto& s = h2_spec(c);
  Technology t;
  t.id = id;
  t.node = node;
  t.tech_class = c;
  t.carrier_in = s.carrier_in;
  t.carrier_out = Carrier::hydrogen;
  t.fuel = s.carrier_in == Carrier::gas ? "natural_gas" : "";
  t.capex_annualized = s.capex_eur_per_kw * kMwPerKw * annuity_factor(rate, s.lifetime_years);
  t.fixed_om = s.fixed_om_eur_per_kw_yr * kMwPerKw;
  t.efficiency = s.efficiency;
  t.emission_factor = s.emission_kg_per_mwh;
  t.ccs_capture_factor = s.ccs_kg_per_mwh;
  t.initial_capacity = initial_capacity_mw;
  return t;
}

}  // namespace h2plan::defaults
