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

#ifndef H2CERT_ECONOMICS_HPP_
#define H2CERT_ECONOMICS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "h2cert/core_types.hpp"
#include "h2cert/lp_solver.hpp"
#include "h2cert/plant_model.hpp"
#include "h2cert/policy.hpp"
#include "h2cert/series.hpp"

namespace h2cert {

// Capital recovery factor i(1+i)^n / ((1+i)^n - 1). Throws DomainError for
// i <= 0 or n < 1.
double Crf(double interest, int years);

enum class StorageTech { kPipeline, kLrc };

std::string_view StorageTechName(StorageTech tech);
std::optional<StorageTech> ParseStorageTech(std::string_view name);

// Storage compressor energy (kWh/kg) for the technology.
double StorageCompressionEnergy(StorageTech tech,
                                const PlantParameters& params);

// Installed cost per kg of storage capacity from the log-log cost curves.
// Throws DomainError for capacity <= 0.
double StorageUnitCost(double capacity_kg, StorageTech tech);

// Pipeline below the threshold, lined rock cavern at or above it.
StorageTech SelectStorageTech(double capacity_kg, double threshold_kg);

// Σ_t import·(p_buy + ts) - export·p_sell, in USD.
double ElectricityCost(const HourlySeries& import_kw,
                       const HourlySeries& export_kw,
                       const HourlySeries& p_buy, const HourlySeries& p_sell,
                       double ts_fee_usd_per_kwh,
                       std::optional<HourWindow> window = std::nullopt);

struct ComponentCosts {
  double electrolyser = 0.0;
  double wind = 0.0;
  double pv = 0.0;
  double storage = 0.0;

  double total() const { return electrolyser + wind + pv + storage; }

  friend bool operator==(const ComponentCosts&, const ComponentCosts&) = default;
};

// Costs over the modeled horizon. Annual fixed costs (annualized CAPEX, FOM)
// are pro-rated by horizon_fraction = T/8760, so LCOH is comparable across
// horizon lengths. Electrolyser O&M includes the per-kg VOM.
struct CostBreakdown {
  double grid_electricity_usd = 0.0;  // net; negative when sales dominate
  ComponentCosts capex_annualized_usd;
  ComponentCosts om_usd;
  double vom_usd = 0.0;  // part of om_usd.electrolyser
  double capex_total_usd = 0.0;  // installed CAPEX, not annualized
  double annual_h2_kg = 0.0;     // load x horizon
  double horizon_fraction = 1.0;
  double lcoh_usd_per_kg = 0.0;

  double total_usd() const {
    return capex_annualized_usd.total() + om_usd.total() + grid_electricity_usd;
  }

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

CostBreakdown ComputeCosts(const PlantParameters& params,
                           const Dispatch& dispatch, const GridPricing& pricing,
                           double storage_unit_cost);

// Objective in USD over the horizon; minimizing it minimizes LCOH because the
// delivered hydrogen mass is fixed.
lp::LinearExpr BuildCostObjective(const PlantParameters& params,
                                  const PlantVars& vars,
                                  const GridPricing& pricing,
                                  double storage_unit_cost);

struct SolutionReport {
  std::string scenario_name;
  lp::SolveStatus status = lp::SolveStatus::kSolverFailure;
  std::string message;  // set when status is not Optimal
  bool converged = false;
  int fixed_point_iterations = 0;
  StorageTech storage_tech = StorageTech::kPipeline;
  double storage_unit_cost_usd_per_kg = 0.0;
  double mu_comp2_kwh_per_kg = 0.0;
  std::string buy_zone;
  std::string sell_zone;
  Dispatch dispatch;  // empty unless Optimal
  GridPricing pricing;

  bool optimal() const { return status == lp::SolveStatus::kOptimal; }
};

struct OptimizeResult {
  SolutionReport solution;
  CostBreakdown costs;
};

struct OptimizeOptions {
  const lp::LpBackend* backend = nullptr;  // DefaultBackend() when null
  int max_fixed_point_iterations = 20;
  double unit_cost_tolerance = 0.01;  // relative
  double seed_storage_kg = 1000.0;
  // Called with every model right before it is solved.
  std::function<void(const lp::LpModel&, int iteration)> on_model;
};

// Sizes and dispatches the plant for one scenario. The storage unit cost is
// capacity dependent, so the LP is re-solved with the unit cost and
// compressor energy implied by the previous storage size until the cost moves
// by at most `unit_cost_tolerance` and the technology is stable.
// Infeasible/unbounded solves come back as a status with a message; invalid
// inputs throw ValidationError.
OptimizeResult OptimizePlant(const ScenarioSpec& scenario,
                             const PlantParameters& params,
                             const ZoneMap& zones,
                             const OptimizeOptions& options = {});

}  // namespace h2cert

#endif  // H2CERT_ECONOMICS_HPP_
