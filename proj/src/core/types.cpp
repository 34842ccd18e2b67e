#include "h2plan/core/types.hpp"

#include <array>
#include <utility>

namespace h2plan {

namespace {

constexpr std::array<std::pair<Carrier, std::string_view>, 4> kCarriers{{
    {Carrier::none, "none"},
    {Carrier::gas, "gas"},
    {Carrier::electricity, "electricity"},
    {Carrier::hydrogen, "hydrogen"},
}};

constexpr std::array<std::pair<TechClass, std::string_view>, 7> kClasses{{
    {TechClass::vre, "vre"},
    {TechClass::conventional, "conventional"},
    {TechClass::smr, "smr"},
    {TechClass::smr_ccs54, "smr_ccs54"},
    {TechClass::smr_ccs89, "smr_ccs89"},
    {TechClass::electrolyser, "electrolyser"},
    {TechClass::hydrogen_to_power, "hydrogen_to_power"},
}};

}  // namespace

std::string_view to_string(Carrier c) {
  for (const auto& [k, v] : kCarriers)
    if (k == c) return v;
  return "none";
}

std::string_view to_string(TechClass c) {
  for (const auto& [k, v] : kClasses)
    if (k == c) return v;
  return "conventional";
}

std::optional<Carrier> parse_carrier(std::string_view s) {
  for (const auto& [k, v] : kCarriers)
    if (v == s) return k;
  return std::nullopt;
}

std::optional<TechClass> parse_tech_class(std::string_view s) {
  for (const auto& [k, v] : kClasses)
    if (v == s) return k;
  return std::nullopt;
}

double PriceSet::fuel_price(const std::string& fuel) const {
  if (fuel.empty()) return 0.0;
  auto it = fuel_prices.find(fuel);
  return it == fuel_prices.end() ? 0.0 : it->second;
}

std::optional<std::size_t> NetworkModel::node_index(std::string_view id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> NetworkModel::technology_index(std::string_view id) const {
  for (std::size_t i = 0; i < technologies.size(); ++i)
    if (technologies[i].id == id) return i;
  return std::nullopt;
}

double variable_cost(const Technology& tech, const PriceSet& prices) {
  return prices.fuel_price(tech.fuel) / tech.efficiency +
         prices.co2_price * tech.emission_factor / kKgPerTon + tech.variable_cost_extra;
}

}  // namespace h2plan
