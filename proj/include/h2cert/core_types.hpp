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

#ifndef H2CERT_CORE_TYPES_HPP_
#define H2CERT_CORE_TYPES_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "h2cert/series.hpp"

namespace h2cert {

inline constexpr double kDefaultFxUsdPerAud = 0.7;

// AUD/MWh -> USD/kWh. Negative prices pass through unchanged in sign.
double ConvertPrice(double aud_per_mwh, double fx_usd_per_aud);

// One bidding zone: hourly spot price and emission factors plus the annual
// accounting factors used by the certificate methods.
struct GridProfile {
  std::string zone_id;
  HourlySeries spot_price;  // USD/kWh
  HourlySeries mef;         // kgCO2e/kWh
  HourlySeries aef;         // kgCO2e/kWh
  double ef_location = 0.0;  // annual scope-2 factor, kgCO2e/kWh
  double arpp = 0.1872;
  double rmf = 0.81;  // kgCO2e/kWh

  std::size_t horizon() const { return spot_price.size(); }
};

// Every invariant violation of `profile` against a horizon of `horizon` hours.
// An empty result means the profile is usable.
std::vector<std::string> ValidateProfile(const GridProfile& profile,
                                         std::size_t horizon);

// Throws ValidationError listing every violation.
void RequireValidProfile(const GridProfile& profile, std::size_t horizon);

// Techno-economic constants. Costs are USD; FOM is per kW-year.
struct PlantParameters {
  double eta_el = 0.70;
  double hhv_kwh_per_kg = 39.4;
  double load_kg_per_h = 180.0;
  double mu_comp1_kwh_per_kg = 0.83;
  double mu_comp2_pipeline_kwh_per_kg = 0.83;
  double mu_comp2_lrc_kwh_per_kg = 1.24;
  double capex_el_usd_per_kw = 1343.3;
  double capex_wind_usd_per_kw = 2126.6;
  double capex_pv_usd_per_kw = 1068.2;
  double fom_el_usd_per_kw_yr = 37.4;
  double fom_wind_usd_per_kw_yr = 17.5;
  double fom_pv_usd_per_kw_yr = 11.9;
  double vom_el_usd_per_kg = 0.02;
  double ts_fee_usd_per_kwh = 0.007;
  double interest = 0.06;
  int lifetime_years = 25;
  double c_ref_wind_kw = 320000.0;
  double c_ref_pv_kw = 1000.0;
  double storage_tech_threshold_kg = 21742.0;

  // Electricity per kg on the electrolyser -> compressor 1 -> load path.
  double DirectPathKwhPerKg() const {
    return hhv_kwh_per_kg / eta_el + mu_comp1_kwh_per_kg;
  }
};

std::vector<std::string> ValidateParameters(const PlantParameters& params);

// Sizing of one component: free within [lower, upper] or pinned.
class Capacity {
 public:
  static Capacity Free(double lower, double upper);
  static Capacity Fixed(double value);

  bool is_fixed() const { return fixed_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  Capacity(double lower, double upper, bool fixed)
      : lower_(lower), upper_(upper), fixed_(fixed) {}

  double lower_;
  double upper_;
  bool fixed_;
};

inline constexpr double kDefaultMaxComponentKw = 50000.0;
inline constexpr double kDefaultMaxStorageKg = 500000.0;

struct CapacitySpec {
  Capacity wind_kw = Capacity::Free(0.0, kDefaultMaxComponentKw);
  Capacity pv_kw = Capacity::Free(0.0, kDefaultMaxComponentKw);
  Capacity electrolyser_kw = Capacity::Free(0.0, kDefaultMaxComponentKw);
  Capacity storage_kg = Capacity::Free(0.0, kDefaultMaxStorageKg);

  friend bool operator==(const CapacitySpec&, const CapacitySpec&) = default;
};

enum class GridMode { kOffGrid, kSellOnly, kGridBuySell };
enum class TcInterval { kHourly, kDaily, kMonthly, kYearly };

std::string_view GridModeName(GridMode mode);
std::string_view TcIntervalName(TcInterval interval);
std::optional<GridMode> ParseGridMode(std::string_view name);
std::optional<TcInterval> ParseTcInterval(std::string_view name);

struct CoLocated {
  std::string zone;
  friend bool operator==(const CoLocated&, const CoLocated&) = default;
};

// Renewables sit in `sell_zone` and export everything there; the plant draws
// all of its electricity from `buy_zone`.
struct Split {
  std::string sell_zone;
  std::string buy_zone;
  friend bool operator==(const Split&, const Split&) = default;
};

using Geography = std::variant<CoLocated, Split>;

struct ScenarioSpec {
  std::string name;
  GridMode mode = GridMode::kGridBuySell;
  std::optional<TcInterval> tc_interval;
  std::optional<double> ei_mef_cap;     // kgCO2e/kgH2
  std::optional<double> capex_cap_usd;  // total (not annualized) CAPEX
  Geography geo = CoLocated{};
  CapacitySpec capacities;
};

std::vector<std::string> ValidateScenario(const ScenarioSpec& scenario);

// Grid data plus the reference renewable output at one site. Reference
// series are the generation of c_ref_wind_kw / c_ref_pv_kw installed.
struct Zone {
  GridProfile grid;
  HourlySeries ref_wind;  // kW
  HourlySeries ref_pv;    // kW
};

using ZoneMap = std::map<std::string, Zone, std::less<>>;

// Zone whose prices and factors apply to grid purchases.
const std::string& BuyZone(const Geography& geo);
// Zone that receives exports and hosts the renewables.
const std::string& SellZone(const Geography& geo);

}  // namespace h2cert

#endif  // H2CERT_CORE_TYPES_HPP_
