#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "h2plan/core/types.hpp"

namespace h2plan::defaults {

/// Techno-economic record of a hydrogen production technology, in the units
/// of the published table (€/kW overnight, €/kW/yr, years).
struct H2TechSpec {
  TechClass tech_class;
  std::string_view label;
  Carrier carrier_in;
  double capex_eur_per_kw;
  double fixed_om_eur_per_kw_yr;
  int lifetime_years;
  double efficiency;
  double emission_kg_per_mwh;
  double ccs_kg_per_mwh;
};

inline constexpr std::array<H2TechSpec, 4> kH2Technologies{{
    {TechClass::smr, "SMR", Carrier::gas, 744, 27, 25, 0.76, 229, 0},
    {TechClass::smr_ccs54, "SMR CCS 54", Carrier::gas, 881, 44, 25, 0.74, 105, 124},
    {TechClass::smr_ccs89, "SMR CCS 89", Carrier::gas, 1330, 62, 25, 0.69, 26, 204},
    {TechClass::electrolyser, "Electrolyser", Carrier::electricity, 600, 20, 30, 0.68, 0, 0},
}};

const H2TechSpec& h2_spec(TechClass c);

struct InitialH2Capacity {
  std::string_view country;
  double electrolyser_mw;
  double smr_mw;
};

inline constexpr std::array<InitialH2Capacity, 21> kInitialH2Capacity{{
    {"GER", 1000, 1900}, {"FRA", 6500, 530}, {"UKI", 5000, 144}, {"SPA", 4000, 554},
    {"NED", 3000, 1144}, {"POR", 2000, 25},  {"AUS", 0, 90},     {"BEL", 0, 783},
    {"SWI", 0, 28},      {"CZE", 0, 141},    {"DEN", 0, 29.5},   {"DEW", 0, 29.5},
    {"FIN", 0, 413},     {"BLK", 0, 523},    {"IRE", 0, 0},      {"ITA", 0, 411},
    {"NOR", 0, 0},       {"SWE", 0, 0},      {"SKO", 0, 115},    {"POL", 0, 0},
    {"BLT", 0, 221},
}};

struct FuelPrice {
  std::string_view fuel;
  double eur_per_gj;
};

inline constexpr std::array<FuelPrice, 7> kFuelPrices{{
    {"oil", 10.63},
    {"biomass", 9.00},
    {"natural_gas", 7.54},
    {"coke_oven_gas", 7.54},
    {"coal", 2.25},
    {"lignite", 1.10},
    {"nuclear", 0.78},
}};

inline constexpr double kCo2PriceEurPerTon = 250.0;
inline constexpr double kSmrDemandShare = 0.5;
inline constexpr double kEta1 = 0.6;
inline constexpr double kEta2 = 0.8;
inline constexpr int kH2BlockHours = 6;
inline constexpr double kDiscountRate = 0.05;

/// Region codes where geological CO2 storage is not allowed. DEW is western
/// Denmark and BLT the Baltic states aggregate.
inline constexpr std::array<std::string_view, 10> kCcsBanned{
    "GER", "AUS", "EST", "LAT", "LIT", "DEN", "DEW", "FIN", "IRE", "BLT"};

bool allows_co2_storage(std::string_view region);

/// Capital recovery factor r / (1 - (1+r)^-n).
double annuity_factor(double rate, int years);

/// Price table converted to €/MWh with the default CO2 price.
PriceSet default_prices();

/// Technology instance built from the table row for `c`, with capex
/// annualized at `rate` and all money in €/MW.
Technology make_h2_technology(TechClass c, const std::string& id, const std::string& node,
                              double initial_capacity_mw, double rate = kDiscountRate);

}  // namespace h2plan::defaults
