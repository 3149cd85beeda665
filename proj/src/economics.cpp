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

#include "h2cert/economics.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "h2cert/errors.hpp"

namespace h2cert {

double Crf(double interest, int years) {
  if (!(interest > 0.0) || !std::isfinite(interest)) {
    throw DomainError("capital recovery factor needs interest > 0");
  }
  if (years < 1) throw DomainError("capital recovery factor needs n >= 1");
  const double growth = std::pow(1.0 + interest, years);
  return interest * growth / (growth - 1.0);
}

std::string_view StorageTechName(StorageTech tech) {
  return tech == StorageTech::kPipeline ? "pipeline" : "lrc";
}

std::optional<StorageTech> ParseStorageTech(std::string_view name) {
  if (name == "pipeline") return StorageTech::kPipeline;
  if (name == "lrc") return StorageTech::kLrc;
  return std::nullopt;
}

double StorageCompressionEnergy(StorageTech tech,
                                const PlantParameters& params) {
  return tech == StorageTech::kPipeline ? params.mu_comp2_pipeline_kwh_per_kg
                                        : params.mu_comp2_lrc_kwh_per_kg;
}

double StorageUnitCost(double capacity_kg, StorageTech tech) {
  if (!(capacity_kg > 0.0) || !std::isfinite(capacity_kg)) {
    throw DomainError("storage unit cost needs a positive capacity");
  }
  const double x = std::log10(capacity_kg / 1000.0);
  const double log_cost = tech == StorageTech::kPipeline
                              ? -0.0285 * x + 2.7853
                              : 0.217956 * x * x - 1.575209 * x + 4.463930;
  return std::pow(10.0, log_cost);
}

StorageTech SelectStorageTech(double capacity_kg, double threshold_kg) {
  return capacity_kg < threshold_kg ? StorageTech::kPipeline : StorageTech::kLrc;
}

double ElectricityCost(const HourlySeries& import_kw,
                       const HourlySeries& export_kw,
                       const HourlySeries& p_buy, const HourlySeries& p_sell,
                       double ts_fee_usd_per_kwh,
                       std::optional<HourWindow> window) {
  RequireUnit(p_buy, Unit::kUsdPerKwh, "buy price");
  RequireUnit(p_sell, Unit::kUsdPerKwh, "sell price");
  const double purchases = EnergyWeightedSum(import_kw, p_buy, window);
  const double sales = EnergyWeightedSum(export_kw, p_sell, window);
  const HourWindow w = ResolveWindow(window, import_kw.size());
  return purchases + ts_fee_usd_per_kwh * import_kw.Sum(w) - sales;
}

CostBreakdown ComputeCosts(const PlantParameters& params,
                           const Dispatch& dispatch, const GridPricing& pricing,
                           double storage_unit_cost) {
  CostBreakdown c;
  const std::size_t horizon = dispatch.horizon();
  const double crf = Crf(params.interest, params.lifetime_years);
  const Capacities& cap = dispatch.capacities;
  c.horizon_fraction =
      static_cast<double>(horizon) / static_cast<double>(kHoursPerYear);
  c.annual_h2_kg = params.load_kg_per_h * static_cast<double>(horizon);

  const double f = c.horizon_fraction;
  c.capex_annualized_usd.electrolyser =
      crf * params.capex_el_usd_per_kw * cap.electrolyser_kw * f;
  c.capex_annualized_usd.wind =
      crf * params.capex_wind_usd_per_kw * cap.wind_kw * f;
  c.capex_annualized_usd.pv = crf * params.capex_pv_usd_per_kw * cap.pv_kw * f;
  c.capex_annualized_usd.storage =
      crf * storage_unit_cost * cap.storage_kg * f;

  c.vom_usd = params.vom_el_usd_per_kg * c.annual_h2_kg;
  c.om_usd.electrolyser =
      params.fom_el_usd_per_kw_yr * cap.electrolyser_kw * f + c.vom_usd;
  c.om_usd.wind = params.fom_wind_usd_per_kw_yr * cap.wind_kw * f;
  c.om_usd.pv = params.fom_pv_usd_per_kw_yr * cap.pv_kw * f;
  c.om_usd.storage = 0.0;

  c.grid_electricity_usd =
      ElectricityCost(dispatch.import_kw, dispatch.export_kw, pricing.buy,
                      pricing.sell, params.ts_fee_usd_per_kwh);
  c.capex_total_usd = params.capex_el_usd_per_kw * cap.electrolyser_kw +
                      params.capex_wind_usd_per_kw * cap.wind_kw +
                      params.capex_pv_usd_per_kw * cap.pv_kw +
                      storage_unit_cost * cap.storage_kg;
  c.lcoh_usd_per_kg = c.annual_h2_kg > 0.0
                          ? c.total_usd() / c.annual_h2_kg
                          : std::numeric_limits<double>::quiet_NaN();
  return c;
}

lp::LinearExpr BuildCostObjective(const PlantParameters& params,
                                  const PlantVars& vars,
                                  const GridPricing& pricing,
                                  double storage_unit_cost) {
  RequireUnit(pricing.buy, Unit::kUsdPerKwh, "buy price");
  RequireUnit(pricing.sell, Unit::kUsdPerKwh, "sell price");
  if (pricing.buy.size() != vars.horizon || pricing.sell.size() != vars.horizon) {
    throw ValidationError("price series length does not match the plant model");
  }
  const double crf = Crf(params.interest, params.lifetime_years);
  const double f =
      static_cast<double>(vars.horizon) / static_cast<double>(kHoursPerYear);
  lp::LinearExpr obj;
  obj.AddTerm(vars.c_el, f * (crf * params.capex_el_usd_per_kw +
                              params.fom_el_usd_per_kw_yr));
  obj.AddTerm(vars.c_wind, f * (crf * params.capex_wind_usd_per_kw +
                                params.fom_wind_usd_per_kw_yr));
  obj.AddTerm(vars.c_pv, f * (crf * params.capex_pv_usd_per_kw +
                              params.fom_pv_usd_per_kw_yr));
  obj.AddTerm(vars.c_store, f * crf * storage_unit_cost);
  for (std::size_t t = 0; t < vars.horizon; ++t) {
    obj.AddTerm(vars.import_kw[t], pricing.buy[t] + params.ts_fee_usd_per_kwh);
    obj.AddTerm(vars.export_kw[t], -pricing.sell[t]);
  }
  obj.AddConstant(params.vom_el_usd_per_kg * params.load_kg_per_h *
                  static_cast<double>(vars.horizon));
  return obj;
}

namespace {

const Zone& FindZone(const ZoneMap& zones, const std::string& name,
                     const std::string& scenario) {
  const auto it = zones.find(name);
  if (it == zones.end()) {
    throw ValidationError("scenario '" + scenario + "' references unknown zone '" +
                          name + "'");
  }
  return it->second;
}

struct Iterate {
  SolutionReport solution;
  CostBreakdown costs;
  double design_cost = 0.0;  // total with storage at its own unit cost
};

}  // namespace

OptimizeResult OptimizePlant(const ScenarioSpec& scenario,
                             const PlantParameters& params,
                             const ZoneMap& zones,
                             const OptimizeOptions& options) {
  if (const auto errors = ValidateScenario(scenario); !errors.empty()) {
    throw ValidationError("scenario '" + scenario.name + "': " + errors.front());
  }
  if (const auto errors = ValidateParameters(params); !errors.empty()) {
    throw ValidationError("plant parameters: " + errors.front());
  }
  const lp::LpBackend& backend =
      options.backend ? *options.backend : lp::DefaultBackend();
  const std::string& buy_name = BuyZone(scenario.geo);
  const std::string& sell_name = SellZone(scenario.geo);
  const Zone& buy = FindZone(zones, buy_name, scenario.name);
  const Zone& sell = FindZone(zones, sell_name, scenario.name);
  const std::size_t horizon = buy.grid.horizon();
  RequireValidProfile(buy.grid, horizon);
  RequireValidProfile(sell.grid, horizon);
  const bool split = std::holds_alternative<Split>(scenario.geo);

  const double h2_kg = params.load_kg_per_h * static_cast<double>(horizon);
  const double crf = Crf(params.interest, params.lifetime_years);
  const double f =
      static_cast<double>(horizon) / static_cast<double>(kHoursPerYear);
  const double seed_cost =
      StorageUnitCost(options.seed_storage_kg, StorageTech::kPipeline);

  StorageTech tech = StorageTech::kPipeline;
  double unit_cost = seed_cost;
  std::optional<Iterate> best;

  OptimizeResult failed;
  failed.solution.scenario_name = scenario.name;
  failed.solution.buy_zone = buy_name;
  failed.solution.sell_zone = sell_name;

  for (int iter = 1; iter <= options.max_fixed_point_iterations; ++iter) {
    const double mu2 = StorageCompressionEnergy(tech, params);
    PlantModel pm = BuildPlant(params, sell.ref_wind, sell.ref_pv,
                               scenario.capacities, scenario.mode, mu2, horizon);
    const GridPricing pricing =
        split ? WireTwoGrid(pm.model, pm.vars, sell.grid, buy.grid)
              : CoLocatedPricing(buy.grid);
    if (scenario.tc_interval) {
      ApplyTemporalCorrelation(
          pm.model, pm.vars,
          IntervalPartition::For(*scenario.tc_interval, horizon));
    }
    if (scenario.ei_mef_cap) {
      ApplyEmissionCap(pm.model, pm.vars, buy.grid.mef, sell.grid.mef,
                       *scenario.ei_mef_cap, h2_kg);
    }
    if (scenario.capex_cap_usd) {
      ApplyCapexCap(pm.model, pm.vars, params, unit_cost, *scenario.capex_cap_usd);
    }
    pm.model.SetObjective(BuildCostObjective(params, pm.vars, pricing, unit_cost));
    if (options.on_model) options.on_model(pm.model, iter);

    const lp::LpSolution lp_solution = backend.Solve(pm.model);
    if (!lp_solution.optimal()) {
      failed.solution.status = lp_solution.status;
      failed.solution.fixed_point_iterations = iter;
      failed.solution.message =
          "scenario '" + scenario.name + "': LP " +
          std::string(lp::StatusName(lp_solution.status)) +
          " at fixed-point iteration " + std::to_string(iter) + " (" +
          std::string(StorageTechName(tech)) + " storage)";
      if (!best) return failed;
      best->solution.message = failed.solution.message;
      break;
    }

    Iterate current;
    SolutionReport& s = current.solution;
    s.scenario_name = scenario.name;
    s.status = lp::SolveStatus::kOptimal;
    s.fixed_point_iterations = iter;
    s.storage_tech = tech;
    s.storage_unit_cost_usd_per_kg = unit_cost;
    s.mu_comp2_kwh_per_kg = mu2;
    s.buy_zone = buy_name;
    s.sell_zone = sell_name;
    s.dispatch = ExtractDispatch(pm.vars, lp_solution);
    s.pricing = pricing;
    current.costs = ComputeCosts(params, s.dispatch, pricing, unit_cost);

    const double store_kg = s.dispatch.capacities.storage_kg;
    StorageTech next_tech = StorageTech::kPipeline;
    double next_cost = tech == StorageTech::kPipeline ? unit_cost : seed_cost;
    if (store_kg > 1e-6) {
      next_tech = SelectStorageTech(store_kg, params.storage_tech_threshold_kg);
      next_cost = StorageUnitCost(store_kg, next_tech);
    }
    current.design_cost = current.costs.total_usd() -
                          current.costs.capex_annualized_usd.storage +
                          crf * next_cost * store_kg * f;

    const bool converged =
        next_tech == tech &&
        std::abs(next_cost - unit_cost) <= options.unit_cost_tolerance * unit_cost;
    if (converged) {
      s.converged = true;
      return OptimizeResult{std::move(current.solution), current.costs};
    }
    if (!best || current.design_cost < best->design_cost) best = current;
    tech = next_tech;
    unit_cost = next_cost;
  }

  best->solution.converged = false;
  if (best->solution.message.empty()) {
    best->solution.message = "storage cost fixed point did not converge";
  }
  return OptimizeResult{std::move(best->solution), best->costs};
}

}  // namespace h2cert
