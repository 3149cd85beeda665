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

#include "h2cert/plant_model.hpp"

#include <cmath>
#include <string>

#include "h2cert/errors.hpp"

namespace h2cert {

using lp::LinearExpr;
using lp::Sense;
using lp::VarId;

lp::LinearExpr PlantVars::Generation(std::size_t t) const {
  LinearExpr gen;
  gen.AddTerm(c_wind, wind_per_kw[t]);
  gen.AddTerm(c_pv, pv_per_kw[t]);
  return gen;
}

namespace {

VarId AddCapacity(lp::LpModel& model, const Capacity& cap, const char* name) {
  return model.AddVariable(cap.lower(), cap.upper(), name);
}

std::vector<VarId> AddHourly(lp::LpModel& model, std::size_t horizon,
                             double upper, const std::string& name) {
  std::vector<VarId> vars;
  vars.reserve(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    vars.push_back(
        model.AddVariable(0.0, upper, name + "[" + std::to_string(t) + "]"));
  }
  return vars;
}

}  // namespace

PlantModel BuildPlant(const PlantParameters& params,
                      const HourlySeries& ref_wind, const HourlySeries& ref_pv,
                      const CapacitySpec& capacities, GridMode mode,
                      double mu_comp2_kwh_per_kg, std::size_t horizon) {
  if (const auto errors = ValidateParameters(params); !errors.empty()) {
    throw ValidationError("plant parameters: " + errors.front());
  }
  if (ref_wind.size() != horizon || ref_pv.size() != horizon) {
    throw ValidationError("reference generation has " +
                          std::to_string(ref_wind.size()) + "/" +
                          std::to_string(ref_pv.size()) +
                          " hours, expected " + std::to_string(horizon));
  }
  RequireUnit(ref_wind, Unit::kKw, "wind reference output");
  RequireUnit(ref_pv, Unit::kKw, "PV reference output");
  if (!(mu_comp2_kwh_per_kg >= 0.0)) {
    throw ValidationError("storage compressor energy must be >= 0");
  }

  PlantModel out;
  lp::LpModel& m = out.model;
  PlantVars& v = out.vars;
  v.horizon = horizon;

  v.c_wind = AddCapacity(m, capacities.wind_kw, "c_wind");
  v.c_pv = AddCapacity(m, capacities.pv_kw, "c_pv");
  v.c_el = AddCapacity(m, capacities.electrolyser_kw, "c_el");
  v.c_store = AddCapacity(m, capacities.storage_kg, "c_store");
  v.soc0 = m.AddVariable(0.0, lp::kInfinity, "soc0");

  const bool can_import = mode == GridMode::kGridBuySell;
  const bool can_export = mode != GridMode::kOffGrid;
  v.e_el = AddHourly(m, horizon, lp::kInfinity, "e_el");
  v.e_comp1 = AddHourly(m, horizon, lp::kInfinity, "e_comp1");
  v.e_comp2 = AddHourly(m, horizon, lp::kInfinity, "e_comp2");
  v.export_kw = AddHourly(m, horizon, can_export ? lp::kInfinity : 0.0, "export");
  v.import_kw = AddHourly(m, horizon, can_import ? lp::kInfinity : 0.0, "import");
  v.curtail_kw = AddHourly(m, horizon, lp::kInfinity, "curtail");
  v.h_el = AddHourly(m, horizon, lp::kInfinity, "h_el");
  v.h_comp1 = AddHourly(m, horizon, lp::kInfinity, "h_comp1");
  v.h_comp2 = AddHourly(m, horizon, lp::kInfinity, "h_comp2");
  v.h_from_store = AddHourly(m, horizon, lp::kInfinity, "h_from_store");
  v.soc = AddHourly(m, horizon, lp::kInfinity, "soc");

  v.wind_per_kw.resize(horizon);
  v.pv_per_kw.resize(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    v.wind_per_kw[t] = ref_wind[t] / params.c_ref_wind_kw;
    v.pv_per_kw[t] = ref_pv[t] / params.c_ref_pv_kw;
  }

  const double kg_per_kwh = params.eta_el / params.hhv_kwh_per_kg;
  v.electricity_balance.reserve(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    const std::string h = "[" + std::to_string(t) + "]";

    // Electricity connection point.
    LinearExpr balance;
    balance.AddTerm(v.e_el[t], 1.0)
        .AddTerm(v.e_comp1[t], 1.0)
        .AddTerm(v.e_comp2[t], 1.0)
        .AddTerm(v.export_kw[t], 1.0)
        .AddTerm(v.curtail_kw[t], 1.0)
        .AddTerm(v.import_kw[t], -1.0);
    balance -= v.Generation(t);
    v.electricity_balance.push_back(
        m.AddConstraint(balance, Sense::kEqual, 0.0, "balance" + h));

    LinearExpr curtail(v.curtail_kw[t]);
    curtail -= v.Generation(t);
    m.AddConstraint(curtail, Sense::kLessEqual, 0.0, "curtail_limit" + h);

    // Electrolysis, split, and load.
    m.AddConstraint(LinearExpr(v.h_el[t]) - LinearExpr(v.e_el[t], kg_per_kwh),
                    Sense::kEqual, 0.0, "electrolysis" + h);
    m.AddConstraint(LinearExpr(v.h_el[t]) - LinearExpr(v.h_comp1[t]) -
                        LinearExpr(v.h_comp2[t]),
                    Sense::kEqual, 0.0, "h2_split" + h);
    m.AddConstraint(LinearExpr(v.h_comp1[t]) + LinearExpr(v.h_from_store[t]),
                    Sense::kEqual, params.load_kg_per_h, "load" + h);

    // Compression.
    m.AddConstraint(LinearExpr(v.e_comp1[t]) -
                        LinearExpr(v.h_comp1[t], params.mu_comp1_kwh_per_kg),
                    Sense::kEqual, 0.0, "comp1" + h);
    m.AddConstraint(LinearExpr(v.e_comp2[t]) -
                        LinearExpr(v.h_comp2[t], mu_comp2_kwh_per_kg),
                    Sense::kEqual, 0.0, "comp2" + h);

    // Storage level, recursive form.
    LinearExpr level(v.soc[t]);
    level.AddTerm(t == 0 ? v.soc0 : v.soc[t - 1], -1.0)
        .AddTerm(v.h_comp2[t], -1.0)
        .AddTerm(v.h_from_store[t], 1.0);
    m.AddConstraint(level, Sense::kEqual, 0.0, "storage" + h);

    m.AddConstraint(LinearExpr(v.e_el[t]) - LinearExpr(v.c_el),
                    Sense::kLessEqual, 0.0, "el_cap" + h);
    m.AddConstraint(LinearExpr(v.soc[t]) - LinearExpr(v.c_store),
                    Sense::kLessEqual, 0.0, "store_cap" + h);
  }
  m.AddConstraint(LinearExpr(v.soc0) - LinearExpr(v.c_store),
                  Sense::kLessEqual, 0.0, "store_cap_initial");
  if (horizon > 0) {
    m.AddConstraint(LinearExpr(v.soc[horizon - 1]) - LinearExpr(v.soc0),
                    Sense::kEqual, 0.0, "storage_cyclic");
  }
  return out;
}

namespace {

// Magnitudes at or below this are solver residue.
constexpr double kSnapTolerance = 1e-7;

double Clamp(double x) { return std::abs(x) <= kSnapTolerance ? 0.0 : x; }

HourlySeries Collect(const std::vector<VarId>& vars,
                     const lp::LpSolution& solution, Unit unit) {
  std::vector<double> values(vars.size());
  for (std::size_t t = 0; t < vars.size(); ++t) {
    values[t] = Clamp(solution.value(vars[t]));
  }
  return HourlySeries(std::move(values), unit);
}

}  // namespace

Dispatch ExtractDispatch(const PlantVars& vars,
                         const lp::LpSolution& solution) {
  if (!solution.optimal()) {
    throw ValidationError("cannot extract dispatch from a non-optimal solve");
  }
  Dispatch d;
  d.capacities.wind_kw = Clamp(solution.value(vars.c_wind));
  d.capacities.pv_kw = Clamp(solution.value(vars.c_pv));
  d.capacities.electrolyser_kw = Clamp(solution.value(vars.c_el));
  d.capacities.storage_kg = Clamp(solution.value(vars.c_store));
  d.soc0_kg = Clamp(solution.value(vars.soc0));

  std::vector<double> wind(vars.horizon), pv(vars.horizon);
  for (std::size_t t = 0; t < vars.horizon; ++t) {
    wind[t] = vars.wind_per_kw[t] * d.capacities.wind_kw;
    pv[t] = vars.pv_per_kw[t] * d.capacities.pv_kw;
  }
  d.gen_wind_kw = HourlySeries(std::move(wind), Unit::kKw);
  d.gen_pv_kw = HourlySeries(std::move(pv), Unit::kKw);
  d.e_el_kw = Collect(vars.e_el, solution, Unit::kKw);
  d.e_comp1_kw = Collect(vars.e_comp1, solution, Unit::kKw);
  d.e_comp2_kw = Collect(vars.e_comp2, solution, Unit::kKw);
  d.import_kw = Collect(vars.import_kw, solution, Unit::kKw);
  d.export_kw = Collect(vars.export_kw, solution, Unit::kKw);
  d.curtail_kw = Collect(vars.curtail_kw, solution, Unit::kKw);
  d.h_el_kg = Collect(vars.h_el, solution, Unit::kKgPerH);
  d.h_comp1_kg = Collect(vars.h_comp1, solution, Unit::kKgPerH);
  d.h_comp2_kg = Collect(vars.h_comp2, solution, Unit::kKgPerH);
  d.h_from_store_kg = Collect(vars.h_from_store, solution, Unit::kKgPerH);
  d.soc_kg = Collect(vars.soc, solution, Unit::kKg);
  return d;
}

}  // namespace h2cert
