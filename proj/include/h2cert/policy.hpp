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

#ifndef H2CERT_POLICY_HPP_
#define H2CERT_POLICY_HPP_

#include <cstddef>
#include <vector>

#include "h2cert/core_types.hpp"
#include "h2cert/lp_model.hpp"
#include "h2cert/plant_model.hpp"
#include "h2cert/series.hpp"

namespace h2cert {

// Contiguous, ordered intervals covering [0, horizon) exactly.
class IntervalPartition {
 public:
  // Throws ValidationError unless the intervals tile [0, horizon).
  IntervalPartition(std::vector<HourWindow> intervals, std::size_t horizon);

  // Intervals aligned to hour 0. Daily: 24 h blocks. Monthly: calendar months
  // of a non-leap year when horizon is 8760, otherwise 730 h blocks. Yearly:
  // 8760 h blocks. The last block may be shorter.
  static IntervalPartition For(TcInterval interval, std::size_t horizon);

  const std::vector<HourWindow>& intervals() const { return intervals_; }
  std::size_t horizon() const { return horizon_; }

 private:
  std::vector<HourWindow> intervals_;
  std::size_t horizon_;
};

// For every interval: Σ export - Σ import >= 0.
void ApplyTemporalCorrelation(lp::LpModel& model, const PlantVars& vars,
                              const IntervalPartition& partition);

// Σ_t import·mef_buy - export·mef_sell <= cap · h2_kg.
void ApplyEmissionCap(lp::LpModel& model, const PlantVars& vars,
                      const HourlySeries& mef_buy,
                      const HourlySeries& mef_sell, double cap_kg_per_kg,
                      double h2_kg);

// Total installed CAPEX (not annualized) <= cap_usd. An infinite cap adds
// nothing.
void ApplyCapexCap(lp::LpModel& model, const PlantVars& vars,
                   const PlantParameters& params, double storage_unit_cost,
                   double cap_usd);

// Prices seen by grid purchases and sales.
struct GridPricing {
  HourlySeries buy;   // USD/kWh
  HourlySeries sell;  // USD/kWh
};

GridPricing CoLocatedPricing(const GridProfile& zone);

// Removes the direct line between renewables and plant: generation can only
// be exported (or curtailed) into the sell grid, and the electrolyser and
// compressors run on imports from the buy grid. The plant vars must have been
// built with the sell zone's reference generation.
GridPricing WireTwoGrid(lp::LpModel& model, const PlantVars& vars,
                        const GridProfile& sell_zone,
                        const GridProfile& buy_zone);

}  // namespace h2cert

#endif  // H2CERT_POLICY_HPP_
