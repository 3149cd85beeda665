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

#ifndef H2CERT_CONFIG_HPP_
#define H2CERT_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "h2cert/core_types.hpp"
#include "h2cert/economics.hpp"
#include "h2cert/fixtures.hpp"
#include "h2cert/lp_solver.hpp"

namespace h2cert {

// A scenario as configured. `capex_from_off_grid` replaces the CAPEX cap with
// the installed CAPEX of the off-grid optimum, solved first.
struct ScenarioConfig {
  ScenarioSpec spec;
  bool capex_from_off_grid = false;
};

struct SolverSettings {
  int max_fixed_point_iterations = 20;
  double unit_cost_tolerance = 0.01;
  double seed_storage_kg = 1000.0;
  lp::SimplexOptions simplex;
};

struct ZoneFiles {
  std::filesystem::path profile;     // grid profile CSV (sidecar alongside)
  std::filesystem::path re_profile;  // reference generation CSV
};

struct RunConfig {
  std::filesystem::path source;  // config file, empty when built in code
  std::size_t horizon = 0;
  double fx_usd_per_aud = kDefaultFxUsdPerAud;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "out";

  PlantParameters params;
  SolverSettings solver;

  std::optional<FixtureKind> fixture;
  std::map<std::string, ZoneFiles> zone_files;
  ZoneMap zones;
  std::string plant_zone;
  std::vector<std::string> sell_zones;  // default candidates for geo sweeps

  CapacitySpec capacities;
  std::vector<ScenarioConfig> scenarios;
  double rec_price_low_aud = 20.0;
  double rec_price_high_aud = 60.0;

  // Fixture name or the profile paths, for provenance blocks.
  std::string InputsDescription() const;
};

// Command-line values that take precedence over the file.
struct ConfigOverrides {
  std::optional<std::size_t> horizon;
  std::optional<std::uint64_t> seed;
  std::optional<double> fx_usd_per_aud;
  std::optional<std::filesystem::path> output_dir;
};

// Loads a JSON run configuration, resolves profile paths against the config
// file's directory and loads (or synthesizes) every zone. Unknown keys and
// missing files are errors: ParseError for the document, ValidationError for
// inconsistent values.
RunConfig LoadRunConfig(const std::filesystem::path& path,
                        const ConfigOverrides& overrides = {});

// Same, for an in-memory document. Relative paths resolve against `base_dir`.
RunConfig ParseRunConfig(const std::string& text, const std::filesystem::path& base_dir,
                         const ConfigOverrides& overrides = {},
                         const std::filesystem::path& source = "<config>");

// The scenario set of the suite, in dependency order: OffGrid, SellOnly,
// Hourly, Daily, Monthly, Yearly, Flexible, MefCapZero. Every on-grid member
// takes the off-grid CAPEX cap.
std::vector<ScenarioConfig> StandardScenarios(const std::string& plant_zone,
                                              const CapacitySpec& capacities);

const ScenarioConfig* FindScenario(const RunConfig& config, std::string_view name);

lp::SimplexBackend MakeBackend(const SolverSettings& settings);
OptimizeOptions MakeOptimizeOptions(const SolverSettings& settings,
                                    const lp::LpBackend& backend);

}  // namespace h2cert

#endif  // H2CERT_CONFIG_HPP_
