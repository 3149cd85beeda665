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

#include "h2cert/config.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "h2cert/errors.hpp"
#include "h2cert/ingest.hpp"
#include "h2cert/policy.hpp"
#include "text_io.hpp"

namespace h2cert {
namespace {

using internal::Json;
using internal::JsonReader;

constexpr std::size_t kDefaultFixtureHorizon = 168;

void ApplyPlantOverrides(const JsonReader& r, PlantParameters& p) {
  const std::pair<const char*, double*> fields[] = {
      {"eta_el", &p.eta_el},
      {"hhv_kwh_per_kg", &p.hhv_kwh_per_kg},
      {"load_kg_per_h", &p.load_kg_per_h},
      {"mu_comp1_kwh_per_kg", &p.mu_comp1_kwh_per_kg},
      {"mu_comp2_pipeline_kwh_per_kg", &p.mu_comp2_pipeline_kwh_per_kg},
      {"mu_comp2_lrc_kwh_per_kg", &p.mu_comp2_lrc_kwh_per_kg},
      {"capex_el_usd_per_kw", &p.capex_el_usd_per_kw},
      {"capex_wind_usd_per_kw", &p.capex_wind_usd_per_kw},
      {"capex_pv_usd_per_kw", &p.capex_pv_usd_per_kw},
      {"fom_el_usd_per_kw_yr", &p.fom_el_usd_per_kw_yr},
      {"fom_wind_usd_per_kw_yr", &p.fom_wind_usd_per_kw_yr},
      {"fom_pv_usd_per_kw_yr", &p.fom_pv_usd_per_kw_yr},
      {"vom_el_usd_per_kg", &p.vom_el_usd_per_kg},
      {"ts_fee_usd_per_kwh", &p.ts_fee_usd_per_kwh},
      {"interest", &p.interest},
      {"c_ref_wind_kw", &p.c_ref_wind_kw},
      {"c_ref_pv_kw", &p.c_ref_pv_kw},
      {"storage_tech_threshold_kg", &p.storage_tech_threshold_kg},
  };
  for (const auto& item : r.object().items()) {
    if (item.key() == "lifetime_years") {
      p.lifetime_years = static_cast<int>(r.Integer("lifetime_years"));
      continue;
    }
    bool known = false;
    for (const auto& [name, slot] : fields) {
      if (item.key() == name) {
        *slot = r.Number(name);
        known = true;
      }
    }
    if (!known) r.Fail(item.key(), "is not a plant parameter");
  }
  if (const auto errors = ValidateParameters(p); !errors.empty()) {
    throw ValidationError(r.source().string() + ": plant: " + errors.front());
  }
}

void ApplySolverSettings(const JsonReader& r, SolverSettings& s) {
  r.Allow({"max_fixed_point_iterations", "unit_cost_tolerance", "seed_storage_kg",
           "max_iterations", "primal_tolerance", "dual_tolerance", "pivot_tolerance",
           "residual_tolerance", "refactor_interval"});
  auto positive_int = [&](const char* key) {
    const long long v = r.Integer(key);
    if (v < 1) r.Fail(key, "must be >= 1");
    return v;
  };
  auto positive = [&](const char* key) {
    const double v = r.Number(key);
    if (!(v > 0.0) || !std::isfinite(v)) r.Fail(key, "must be positive");
    return v;
  };
  if (r.Has("max_fixed_point_iterations")) {
    s.max_fixed_point_iterations = static_cast<int>(positive_int("max_fixed_point_iterations"));
  }
  if (r.Has("unit_cost_tolerance")) s.unit_cost_tolerance = positive("unit_cost_tolerance");
  if (r.Has("seed_storage_kg")) s.seed_storage_kg = positive("seed_storage_kg");
  if (r.Has("max_iterations")) {
    s.simplex.max_iterations = static_cast<std::size_t>(positive_int("max_iterations"));
  }
  if (r.Has("primal_tolerance")) s.simplex.primal_tolerance = positive("primal_tolerance");
  if (r.Has("dual_tolerance")) s.simplex.dual_tolerance = positive("dual_tolerance");
  if (r.Has("pivot_tolerance")) s.simplex.pivot_tolerance = positive("pivot_tolerance");
  if (r.Has("residual_tolerance")) {
    s.simplex.residual_tolerance = positive("residual_tolerance");
  }
  if (r.Has("refactor_interval")) {
    s.simplex.refactor_interval = static_cast<std::size_t>(positive_int("refactor_interval"));
  }
}

Capacity ReadCapacity(const JsonReader& r, const Capacity& fallback) {
  r.Allow({"min", "max", "fixed"});
  try {
    if (r.Has("fixed")) {
      if (r.Has("min") || r.Has("max")) r.Fail("fixed", "excludes min and max");
      return Capacity::Fixed(r.Number("fixed"));
    }
    const double lower = r.Has("min") ? r.Number("min") : fallback.lower();
    const double upper = r.Has("max") ? r.Number("max") : fallback.upper();
    return Capacity::Free(lower, upper);
  } catch (const ValidationError& e) {
    throw ValidationError(r.source().string() + ": " + e.what());
  }
}

CapacitySpec ReadCapacities(const JsonReader& r, CapacitySpec spec) {
  r.Allow({"wind_kw", "pv_kw", "electrolyser_kw", "storage_kg"});
  if (r.Has("wind_kw")) spec.wind_kw = ReadCapacity(r.Child("wind_kw"), spec.wind_kw);
  if (r.Has("pv_kw")) spec.pv_kw = ReadCapacity(r.Child("pv_kw"), spec.pv_kw);
  if (r.Has("electrolyser_kw")) {
    spec.electrolyser_kw = ReadCapacity(r.Child("electrolyser_kw"), spec.electrolyser_kw);
  }
  if (r.Has("storage_kg")) spec.storage_kg = ReadCapacity(r.Child("storage_kg"), spec.storage_kg);
  return spec;
}

ScenarioConfig ReadScenario(const JsonReader& r, const RunConfig& config) {
  r.Allow({"name", "mode", "tc_interval", "ei_mef_cap", "capex_cap", "sell_zone",
           "capacities"});
  ScenarioConfig sc;
  ScenarioSpec& s = sc.spec;
  s.name = r.String("name");
  if (s.name.empty()) r.Fail("name", "must not be empty");
  const auto mode = ParseGridMode(r.String("mode"));
  if (!mode) r.Fail("mode", "must be OffGrid, SellOnly or GridBuySell");
  s.mode = *mode;
  if (r.Has("tc_interval") && !r.IsNull("tc_interval")) {
    s.tc_interval = ParseTcInterval(r.String("tc_interval"));
    if (!s.tc_interval) r.Fail("tc_interval", "must be Hourly, Daily, Monthly or Yearly");
  }
  if (r.Has("ei_mef_cap") && !r.IsNull("ei_mef_cap")) s.ei_mef_cap = r.Number("ei_mef_cap");
  if (r.Has("capex_cap") && !r.IsNull("capex_cap")) {
    const Json& cap = r.At("capex_cap");
    if (cap.is_string() && cap.get<std::string>() == "off-grid") {
      sc.capex_from_off_grid = true;
    } else if (cap.is_number()) {
      s.capex_cap_usd = cap.get<double>();
    } else {
      r.Fail("capex_cap", "must be a number or \"off-grid\"");
    }
  }
  if (r.Has("sell_zone") && !r.IsNull("sell_zone")) {
    s.geo = Split{r.String("sell_zone"), config.plant_zone};
  } else {
    s.geo = CoLocated{config.plant_zone};
  }
  s.capacities = r.Has("capacities") ? ReadCapacities(r.Child("capacities"), config.capacities)
                                     : config.capacities;
  if (sc.capex_from_off_grid && s.mode == GridMode::kOffGrid) {
    r.Fail("capex_cap", "\"off-grid\" needs an on-grid scenario");
  }
  if (const auto errors = ValidateScenario(s); !errors.empty()) {
    throw ValidationError(r.source().string() + ": scenario '" + s.name + "': " +
                          errors.front());
  }
  for (const char* zone : {BuyZone(s.geo).c_str(), SellZone(s.geo).c_str()}) {
    if (!config.zones.contains(std::string_view(zone))) {
      throw ValidationError(r.source().string() + ": scenario '" + s.name +
                            "' references unknown zone '" + zone + "'");
    }
  }
  return sc;
}

void LoadZones(const JsonReader& r, const std::filesystem::path& base_dir,
               RunConfig& config) {
  if (r.object().empty()) r.Fail("", "must list at least one zone");
  for (const auto& item : r.object().items()) {
    const JsonReader z(item.value(), r.source(), "zones." + item.key());
    z.Allow({"profile", "re_profile"});
    ZoneFiles files{base_dir / z.String("profile"), base_dir / z.String("re_profile")};
    for (const auto* f : {&files.profile, &files.re_profile}) {
      if (!std::filesystem::exists(*f)) {
        throw ParseError(f->string(), 0, "file not found (referenced by zone '" +
                                             item.key() + "' in " + r.source().string() + ")");
      }
    }
    std::optional<std::size_t> horizon;
    if (config.horizon > 0) horizon = config.horizon;
    Zone zone;
    zone.grid = LoadGridProfile(files.profile, horizon, config.fx_usd_per_aud);
    if (config.horizon == 0) config.horizon = zone.grid.horizon();
    if (zone.grid.zone_id != item.key()) {
      throw ValidationError(files.profile.string() + ": zone_id '" + zone.grid.zone_id +
                            "' does not match the config key '" + item.key() + "'");
    }
    ReProfile re = LoadReProfile(files.re_profile, config.horizon, config.params);
    zone.ref_wind = std::move(re.ref_wind);
    zone.ref_pv = std::move(re.ref_pv);
    config.zones.emplace(item.key(), std::move(zone));
    config.zone_files.emplace(item.key(), std::move(files));
  }
}

}  // namespace

std::string RunConfig::InputsDescription() const {
  if (fixture) return "fixture:" + std::string(FixtureKindName(*fixture));
  std::string out;
  for (const auto& [name, files] : zone_files) {
    if (!out.empty()) out += ";";
    out += name + "=" + files.profile.generic_string() + "," +
           files.re_profile.generic_string();
  }
  return out;
}

std::vector<ScenarioConfig> StandardScenarios(const std::string& plant_zone,
                                              const CapacitySpec& capacities) {
  auto make = [&](std::string name, GridMode mode, std::optional<TcInterval> tc,
                  std::optional<double> mef_cap) {
    ScenarioConfig c;
    c.spec.name = std::move(name);
    c.spec.mode = mode;
    c.spec.tc_interval = tc;
    c.spec.ei_mef_cap = mef_cap;
    c.spec.geo = CoLocated{plant_zone};
    c.spec.capacities = capacities;
    c.capex_from_off_grid = mode != GridMode::kOffGrid;
    return c;
  };
  return {
      make("OffGrid", GridMode::kOffGrid, std::nullopt, std::nullopt),
      make("SellOnly", GridMode::kSellOnly, std::nullopt, std::nullopt),
      make("Hourly", GridMode::kGridBuySell, TcInterval::kHourly, std::nullopt),
      make("Daily", GridMode::kGridBuySell, TcInterval::kDaily, std::nullopt),
      make("Monthly", GridMode::kGridBuySell, TcInterval::kMonthly, std::nullopt),
      make("Yearly", GridMode::kGridBuySell, TcInterval::kYearly, std::nullopt),
      make("Flexible", GridMode::kGridBuySell, std::nullopt, std::nullopt),
      make("MefCapZero", GridMode::kGridBuySell, std::nullopt, 0.0),
  };
}

const ScenarioConfig* FindScenario(const RunConfig& config, std::string_view name) {
  for (const ScenarioConfig& s : config.scenarios) {
    if (s.spec.name == name) return &s;
  }
  return nullptr;
}

lp::SimplexBackend MakeBackend(const SolverSettings& settings) {
  return lp::SimplexBackend(settings.simplex);
}

OptimizeOptions MakeOptimizeOptions(const SolverSettings& settings,
                                    const lp::LpBackend& backend) {
  OptimizeOptions o;
  o.backend = &backend;
  o.max_fixed_point_iterations = settings.max_fixed_point_iterations;
  o.unit_cost_tolerance = settings.unit_cost_tolerance;
  o.seed_storage_kg = settings.seed_storage_kg;
  return o;
}

RunConfig ParseRunConfig(const std::string& text, const std::filesystem::path& base_dir,
                         const ConfigOverrides& overrides,
                         const std::filesystem::path& source) {
  const Json doc = internal::ParseJsonText(text, source);
  const JsonReader r(doc, source, "config");
  r.Allow({"horizon", "fx_usd_per_aud", "seed", "output_dir", "plant", "solver", "fixture",
           "zones", "plant_zone", "sell_zones", "capacities", "scenarios", "rec_price_aud"});
  RunConfig c;
  c.source = source;

  if (r.Has("horizon")) {
    const long long h = r.Integer("horizon");
    if (h < 1) r.Fail("horizon", "must be >= 1");
    c.horizon = static_cast<std::size_t>(h);
  }
  if (overrides.horizon) c.horizon = *overrides.horizon;
  if (r.Has("fx_usd_per_aud")) c.fx_usd_per_aud = r.Number("fx_usd_per_aud");
  if (overrides.fx_usd_per_aud) c.fx_usd_per_aud = *overrides.fx_usd_per_aud;
  if (!(c.fx_usd_per_aud > 0.0) || !std::isfinite(c.fx_usd_per_aud)) {
    throw ValidationError(source.string() + ": fx_usd_per_aud must be positive");
  }
  if (r.Has("seed")) {
    const Json& seed = r.At("seed");
    if (!seed.is_number_unsigned()) r.Fail("seed", "must be a non-negative integer");
    c.seed = seed.get<std::uint64_t>();
  }
  if (overrides.seed) c.seed = *overrides.seed;
  if (r.Has("output_dir")) c.output_dir = r.String("output_dir");
  if (overrides.output_dir) c.output_dir = *overrides.output_dir;

  if (r.Has("plant")) ApplyPlantOverrides(r.Child("plant"), c.params);
  if (r.Has("solver")) ApplySolverSettings(r.Child("solver"), c.solver);
  if (r.Has("capacities")) c.capacities = ReadCapacities(r.Child("capacities"), c.capacities);

  const bool has_fixture = r.Has("fixture");
  const bool has_zones = r.Has("zones");
  if (has_fixture == has_zones) {
    throw ParseError(source.string(), 0, "exactly one of 'fixture' and 'zones' is required");
  }
  if (has_fixture) {
    c.fixture = ParseFixtureKind(r.String("fixture"));
    if (!c.fixture) {
      r.Fail("fixture", "must be flat, diurnal, two-zone-contrast or random-walk");
    }
    if (c.horizon == 0) c.horizon = kDefaultFixtureHorizon;
    Fixture f = SynthFixture(*c.fixture, c.horizon, c.seed, c.fx_usd_per_aud);
    c.zones = std::move(f.zones);
    c.plant_zone = f.plant_zone;
    if (f.sell_zone != f.plant_zone) c.sell_zones.push_back(f.sell_zone);
  } else {
    LoadZones(r.Child("zones"), base_dir, c);
  }

  if (r.Has("plant_zone")) c.plant_zone = r.String("plant_zone");
  if (c.plant_zone.empty()) {
    if (c.zones.size() != 1) r.Fail("plant_zone", "is required with several zones");
    c.plant_zone = c.zones.begin()->first;
  }
  if (!c.zones.contains(c.plant_zone)) {
    r.Fail("plant_zone", "names unknown zone '" + c.plant_zone + "'");
  }
  if (r.Has("sell_zones")) {
    const Json& list = r.At("sell_zones");
    if (!list.is_array()) r.Fail("sell_zones", "must be a list of zone names");
    c.sell_zones.clear();
    for (const Json& z : list) {
      if (!z.is_string() || !c.zones.contains(z.get<std::string>())) {
        r.Fail("sell_zones", "names an unknown zone");
      }
      c.sell_zones.push_back(z.get<std::string>());
    }
  }
  if (r.Has("rec_price_aud")) {
    const Json& band = r.At("rec_price_aud");
    if (!band.is_array() || band.size() != 2 || !band[0].is_number() || !band[1].is_number() ||
        band[0].get<double>() < 0.0 || band[0].get<double>() > band[1].get<double>()) {
      r.Fail("rec_price_aud", "must be [low, high] with 0 <= low <= high");
    }
    c.rec_price_low_aud = band[0].get<double>();
    c.rec_price_high_aud = band[1].get<double>();
  }

  if (r.Has("scenarios")) {
    const Json& list = r.At("scenarios");
    if (!list.is_array() || list.empty()) r.Fail("scenarios", "must be a non-empty list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const JsonReader s(list[i], source, "scenarios[" + std::to_string(i) + "]");
      ScenarioConfig sc = ReadScenario(s, c);
      if (FindScenario(c, sc.spec.name)) {
        s.Fail("name", "duplicates another scenario");
      }
      c.scenarios.push_back(std::move(sc));
    }
  } else {
    c.scenarios = StandardScenarios(c.plant_zone, c.capacities);
  }
  return c;
}

RunConfig LoadRunConfig(const std::filesystem::path& path, const ConfigOverrides& overrides) {
  const std::string text = internal::ReadTextFile(path);
  return ParseRunConfig(text, path.parent_path(), overrides, path);
}

}  // namespace h2cert
