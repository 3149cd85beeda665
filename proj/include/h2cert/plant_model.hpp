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

#ifndef H2CERT_PLANT_MODEL_HPP_
#define H2CERT_PLANT_MODEL_HPP_

#include <cstddef>
#include <vector>

#include "h2cert/core_types.hpp"
#include "h2cert/lp_model.hpp"
#include "h2cert/lp_solver.hpp"
#include "h2cert/series.hpp"

namespace h2cert {

// Handles to every LP variable of the plant, hour by hour.
struct PlantVars {
  std::size_t horizon = 0;

  std::vector<lp::VarId> e_el;          // electrolyser input, kW
  std::vector<lp::VarId> e_comp1;       // pipeline compressor input, kW
  std::vector<lp::VarId> e_comp2;       // storage compressor input, kW
  std::vector<lp::VarId> export_kw;     // sold to the grid
  std::vector<lp::VarId> import_kw;     // bought from the grid
  std::vector<lp::VarId> curtail_kw;
  std::vector<lp::VarId> h_el;          // kg/h
  std::vector<lp::VarId> h_comp1;       // kg/h to the pipeline
  std::vector<lp::VarId> h_comp2;       // kg/h into storage
  std::vector<lp::VarId> h_from_store;  // kg/h from storage to the load
  std::vector<lp::VarId> soc;           // kg, end of hour

  lp::VarId c_wind;   // kW
  lp::VarId c_pv;     // kW
  lp::VarId c_el;     // kW
  lp::VarId c_store;  // kg
  lp::VarId soc0;     // kg

  // Generation per installed kW in each hour (reference output / reference
  // capacity).
  std::vector<double> wind_per_kw;
  std::vector<double> pv_per_kw;

  std::vector<lp::RowId> electricity_balance;

  // Renewable generation in hour t as a function of the capacity variables.
  lp::LinearExpr Generation(std::size_t t) const;
};

struct PlantModel {
  lp::LpModel model;
  PlantVars vars;
};

// Builds flow balances, conversion, compression, storage dynamics, and
// capacity limits. `mu_comp2_kwh_per_kg` is the storage compressor energy for
// the currently selected storage technology. Curtailment is bounded by the
// renewable output of the hour. No objective is set.
PlantModel BuildPlant(const PlantParameters& params,
                      const HourlySeries& ref_wind, const HourlySeries& ref_pv,
                      const CapacitySpec& capacities, GridMode mode,
                      double mu_comp2_kwh_per_kg, std::size_t horizon);

struct Capacities {
  double wind_kw = 0.0;
  double pv_kw = 0.0;
  double electrolyser_kw = 0.0;
  double storage_kg = 0.0;

  friend bool operator==(const Capacities&, const Capacities&) = default;
};

// Solved hourly operation.
struct Dispatch {
  HourlySeries gen_wind_kw;
  HourlySeries gen_pv_kw;
  HourlySeries e_el_kw;
  HourlySeries e_comp1_kw;
  HourlySeries e_comp2_kw;
  HourlySeries import_kw;
  HourlySeries export_kw;
  HourlySeries curtail_kw;
  HourlySeries h_el_kg;
  HourlySeries h_comp1_kg;
  HourlySeries h_comp2_kg;
  HourlySeries h_from_store_kg;
  HourlySeries soc_kg;
  double soc0_kg = 0.0;
  Capacities capacities;

  std::size_t horizon() const { return e_el_kw.size(); }
};

// Reads the plant's variables out of an Optimal solution. Values within
// 1e-7 of zero (solver residue) are snapped to zero.
Dispatch ExtractDispatch(const PlantVars& vars, const lp::LpSolution& solution);

}  // namespace h2cert

#endif  // H2CERT_PLANT_MODEL_HPP_
