// Copyright 2026 The h2cert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "h2cert/core_types.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "h2cert/errors.hpp"

namespace h2cert {

double ConvertPrice(double aud_per_mwh, double fx_usd_per_aud) {
  if (!std::isfinite(aud_per_mwh) || !std::isfinite(fx_usd_per_aud)) {
    throw ValidationError("price conversion needs finite inputs");
  }
  if (fx_usd_per_aud <= 0.0) {
    throw ValidationError("exchange rate must be positive");
  }
  return aud_per_mwh * fx_usd_per_aud / 1000.0;
}

namespace {

void CheckSeries(const HourlySeries& series, std::string_view name, Unit unit,
                 std::size_t horizon, std::vector<std::string>& errors) {
  if (series.size() != horizon) {
    errors.push_back(std::string(name) + ": length " +
                     std::to_string(series.size()) + ", expected " +
                     std::to_string(horizon));
  }
  if (series.unit() != unit) {
    errors.push_back(std::string(name) + ": unit " +
                     std::string(UnitName(series.unit())) + ", expected " +
                     std::string(UnitName(unit)));
  }
}

void CheckNonNegative(double value, std::string_view name,
                      std::vector<std::string>& errors) {
  if (!std::isfinite(value)) {
    errors.push_back(std::string(name) + ": not a finite number");
  } else if (value < 0.0) {
    errors.push_back(std::string(name) + ": must be >= 0, got " +
                     std::to_string(value));
  }
}

std::string Join(const std::vector<std::string>& errors) {
  std::ostringstream out;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (i) out << "; ";
    out << errors[i];
  }
  return out.str();
}

}  // namespace

std::vector<std::string> ValidateProfile(const GridProfile& profile,
                                         std::size_t horizon) {
  std::vector<std::string> errors;
  CheckSeries(profile.spot_price, "spot_price", Unit::kUsdPerKwh, horizon,
              errors);
  CheckSeries(profile.mef, "mef", Unit::kKgCo2ePerKwh, horizon, errors);
  CheckSeries(profile.aef, "aef", Unit::kKgCo2ePerKwh, horizon, errors);
  CheckNonNegative(profile.ef_location, "ef_location", errors);
  CheckNonNegative(profile.rmf, "rmf", errors);
  if (!std::isfinite(profile.arpp)) {
    errors.push_back("arpp: not a finite number");
  } else if (profile.arpp < 0.0 || profile.arpp > 1.0) {
    errors.push_back("arpp: must lie in [0, 1], got " +
                     std::to_string(profile.arpp));
  }
  return errors;
}

void RequireValidProfile(const GridProfile& profile, std::size_t horizon) {
  const auto errors = ValidateProfile(profile, horizon);
  if (!errors.empty()) {
    throw ValidationError("grid profile '" + profile.zone_id +
                          "': " + Join(errors));
  }
}

std::vector<std::string> ValidateParameters(const PlantParameters& p) {
  std::vector<std::string> errors;
  if (!(p.eta_el > 0.0 && p.eta_el <= 1.0)) {
    errors.push_back("eta_el must lie in (0, 1]");
  }
  if (!(p.hhv_kwh_per_kg > 0.0)) errors.push_back("hhv must be positive");
  if (!(p.load_kg_per_h >= 0.0)) errors.push_back("load must be >= 0");
  if (!(p.interest > 0.0)) errors.push_back("interest must be positive");
  if (p.lifetime_years < 1) errors.push_back("lifetime_years must be >= 1");
  if (!(p.c_ref_wind_kw > 0.0) || !(p.c_ref_pv_kw > 0.0)) {
    errors.push_back("reference capacities must be positive");
  }
  if (!(p.storage_tech_threshold_kg > 0.0)) {
    errors.push_back("storage technology threshold must be positive");
  }
  const double non_negative[] = {
      p.mu_comp1_kwh_per_kg,   p.mu_comp2_pipeline_kwh_per_kg,
      p.mu_comp2_lrc_kwh_per_kg, p.capex_el_usd_per_kw,
      p.capex_wind_usd_per_kw, p.capex_pv_usd_per_kw,
      p.fom_el_usd_per_kw_yr,  p.fom_wind_usd_per_kw_yr,
      p.fom_pv_usd_per_kw_yr,  p.vom_el_usd_per_kg,
      p.ts_fee_usd_per_kwh};
  for (double v : non_negative) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      errors.push_back("costs and compressor energies must be finite and >= 0");
      break;
    }
  }
  return errors;
}

Capacity Capacity::Free(double lower, double upper) {
  if (!std::isfinite(lower) || std::isnan(upper) || lower < 0.0 ||
      lower > upper) {
    throw ValidationError("capacity bounds must satisfy 0 <= lower <= upper");
  }
  return Capacity(lower, upper, false);
}

Capacity Capacity::Fixed(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError("fixed capacity must be finite and >= 0");
  }
  return Capacity(value, value, true);
}

std::string_view GridModeName(GridMode mode) {
  switch (mode) {
    case GridMode::kOffGrid:
      return "OffGrid";
    case GridMode::kSellOnly:
      return "SellOnly";
    case GridMode::kGridBuySell:
      return "GridBuySell";
  }
  return "?";
}

std::string_view TcIntervalName(TcInterval interval) {
  switch (interval) {
    case TcInterval::kHourly:
      return "Hourly";
    case TcInterval::kDaily:
      return "Daily";
    case TcInterval::kMonthly:
      return "Monthly";
    case TcInterval::kYearly:
      return "Yearly";
  }
  return "?";
}

std::optional<GridMode> ParseGridMode(std::string_view name) {
  for (GridMode m :
       {GridMode::kOffGrid, GridMode::kSellOnly, GridMode::kGridBuySell}) {
    if (GridModeName(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<TcInterval> ParseTcInterval(std::string_view name) {
  for (TcInterval i : {TcInterval::kHourly, TcInterval::kDaily,
                       TcInterval::kMonthly, TcInterval::kYearly}) {
    if (TcIntervalName(i) == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> ValidateScenario(const ScenarioSpec& scenario) {
  std::vector<std::string> errors;
  if (scenario.mode == GridMode::kOffGrid) {
    if (scenario.tc_interval) {
      errors.push_back("OffGrid scenario cannot carry a temporal correlation");
    }
    if (std::holds_alternative<Split>(scenario.geo)) {
      errors.push_back("OffGrid scenario cannot use a split geography");
    }
    if (scenario.ei_mef_cap) {
      errors.push_back("OffGrid scenario cannot carry an emission cap");
    }
  }
  if (scenario.ei_mef_cap && !std::isfinite(*scenario.ei_mef_cap)) {
    errors.push_back("emission cap must be finite");
  }
  if (scenario.capex_cap_usd && std::isnan(*scenario.capex_cap_usd)) {
    errors.push_back("CAPEX cap must be a number");
  }
  if (const auto* split = std::get_if<Split>(&scenario.geo)) {
    if (split->sell_zone.empty() || split->buy_zone.empty()) {
      errors.push_back("split geography needs both zones");
    }
  }
  return errors;
}

const std::string& BuyZone(const Geography& geo) {
  if (const auto* split = std::get_if<Split>(&geo)) return split->buy_zone;
  return std::get<CoLocated>(geo).zone;
}

const std::string& SellZone(const Geography& geo) {
  if (const auto* split = std::get_if<Split>(&geo)) return split->sell_zone;
  return std::get<CoLocated>(geo).zone;
}

}  // namespace h2cert
