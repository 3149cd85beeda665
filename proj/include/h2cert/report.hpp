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

#ifndef H2CERT_REPORT_HPP_
#define H2CERT_REPORT_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "h2cert/certification.hpp"
#include "h2cert/core_types.hpp"
#include "h2cert/economics.hpp"
#include "h2cert/lp_solver.hpp"
#include "h2cert/plant_model.hpp"
#include "json.hpp"

namespace h2cert {

inline constexpr int kReportSchemaVersion = 1;

struct EnergySummary {
  double import_mwh = 0.0;
  double export_mwh = 0.0;
  double curtail_mwh = 0.0;
  std::optional<double> re_capacity_factor;  // absent without RE capacity

  friend bool operator==(const EnergySummary&, const EnergySummary&) = default;
};

// Everything a per-scenario JSON report carries. Costs, energy and emissions
// are present only for optimal solves.
struct ScenarioReport {
  std::string name;
  GridMode mode = GridMode::kGridBuySell;
  std::optional<TcInterval> tc_interval;
  std::optional<double> ei_mef_cap;
  std::optional<double> capex_cap_usd;
  std::string buy_zone;
  std::string sell_zone;
  std::size_t horizon_hours = 0;

  lp::SolveStatus status = lp::SolveStatus::kSolverFailure;
  std::string message;

  bool converged = false;
  int fixed_point_iterations = 0;
  StorageTech storage_tech = StorageTech::kPipeline;
  double storage_unit_cost_usd_per_kg = 0.0;
  double mu_comp2_kwh_per_kg = 0.0;

  std::optional<Capacities> capacities;
  std::optional<EnergySummary> energy;
  std::optional<CostBreakdown> costs;
  std::optional<EmissionsReport> emissions;

  bool optimal() const { return status == lp::SolveStatus::kOptimal; }

  friend bool operator==(const ScenarioReport&, const ScenarioReport&) = default;
};

ScenarioReport BuildScenarioReport(const ScenarioSpec& scenario,
                                   const OptimizeResult& result,
                                   const std::optional<EmissionsReport>& emissions,
                                   std::size_t horizon_hours);

// LCOH split by component in USD/kg. Electrolyser includes VOM.
struct LcohComponents {
  double electrolyser = 0.0;
  double wind = 0.0;
  double pv = 0.0;
  double storage = 0.0;
  double grid = 0.0;
};

LcohComponents LcohByComponent(const CostBreakdown& costs);

nlohmann::ordered_json ToJson(const ScenarioReport& report);
// Throws ParseError when `doc` does not follow the schema.
ScenarioReport ScenarioReportFromJson(const nlohmann::ordered_json& doc,
                                      const std::filesystem::path& source);

void WriteReport(const ScenarioReport& report, const std::filesystem::path& path);
ScenarioReport ReadReport(const std::filesystem::path& path);

// Run metadata embedded in every output document.
struct Provenance {
  std::string backend;
  std::size_t horizon_hours = 0;
  std::uint64_t seed = 0;
  double fx_usd_per_aud = kDefaultFxUsdPerAud;
  std::string inputs;  // fixture name or profile paths
  std::string plant_zone;
  std::vector<std::string> notes;
};

nlohmann::ordered_json ToJson(const Provenance& provenance);

// Canonical text of a JSON document: two-space indent, trailing newline.
std::string DumpJson(const nlohmann::ordered_json& doc);

}  // namespace h2cert

#endif  // H2CERT_REPORT_HPP_
