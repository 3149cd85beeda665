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

#ifndef H2CERT_RUNNER_HPP_
#define H2CERT_RUNNER_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "h2cert/certification.hpp"
#include "h2cert/config.hpp"
#include "h2cert/economics.hpp"
#include "h2cert/lp_model.hpp"
#include "h2cert/report.hpp"

namespace h2cert {

struct ScenarioOutcome {
  ScenarioSpec spec;  // as solved, CAPEX cap resolved
  OptimizeResult result;
  std::optional<EmissionsReport> emissions;  // optimal solves only
  ScenarioReport report;
};

struct ReSweepPoint {
  double re_factor = 0.0;
  ScenarioOutcome outcome;
};

struct ReSweep {
  ScenarioOutcome off_grid;
  std::vector<ReSweepPoint> points;  // strictly increasing re_factor
};

struct GeoSweepPoint {
  std::string sell_zone;
  ScenarioOutcome outcome;
};

struct GeoSweep {
  ScenarioOutcome grid_baseline;  // no renewables, plant zone only
  // Baseline LCOH plus certificate purchases covering all imports.
  std::optional<double> rec_band_low_usd_per_kg;
  std::optional<double> rec_band_high_usd_per_kg;
  std::vector<GeoSweepPoint> points;
};

// Called with every LP right before it is solved: scenario name, fixed-point
// iteration, model. May be invoked from several threads at once.
using ModelHook =
    std::function<void(const std::string&, int, const lp::LpModel&)>;

class Runner {
 public:
  explicit Runner(const RunConfig& config);

  void set_model_hook(ModelHook hook) { hook_ = std::move(hook); }
  const RunConfig& config() const { return config_; }

  // Solves one scenario. A scenario that takes the off-grid CAPEX cap needs
  // `off_grid_capex`; without it the off-grid prerequisite is solved first.
  ScenarioOutcome Solve(const ScenarioConfig& scenario,
                        std::optional<double> off_grid_capex = std::nullopt) const;

  // Every configured scenario in order. The off-grid prerequisite runs first;
  // the rest run concurrently.
  std::vector<ScenarioOutcome> Suite() const;

  // Off-grid solve, then `points` evenly spaced RE factors from 0 to 1.5x the
  // off-grid factor with the electrolyser pinned and storage re-optimized.
  ReSweep SweepReFactor(std::size_t points) const;

  // Yearly-correlated split-geography solves, one per sell zone, plus the
  // grid-powered baseline with its certificate cost band.
  GeoSweep SweepGeography(const std::vector<std::string>& sell_zones) const;

  Provenance MakeProvenance(std::vector<std::string> notes = {}) const;

 private:
  ScenarioOutcome Run(const ScenarioSpec& spec) const;
  ScenarioOutcome OffGridPrerequisite() const;

  RunConfig config_;
  lp::SimplexBackend backend_;
  ModelHook hook_;
};

// Output documents. Row order and number formatting are fixed so repeated
// runs produce identical bytes.
nlohmann::ordered_json SuiteJson(const std::vector<ScenarioOutcome>& outcomes,
                                 const Provenance& provenance);
std::string ReSweepCsv(const ReSweep& sweep);
nlohmann::ordered_json ReSweepJson(const ReSweep& sweep, const Provenance& provenance);
std::string GeoSweepCsv(const GeoSweep& sweep);
nlohmann::ordered_json GeoSweepJson(const GeoSweep& sweep, const Provenance& provenance);

// File-name-safe form of a scenario name.
std::string FileStem(std::string_view name);

}  // namespace h2cert

#endif  // H2CERT_RUNNER_HPP_
