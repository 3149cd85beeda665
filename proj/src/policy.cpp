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

#include "h2cert/policy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "h2cert/errors.hpp"

namespace h2cert {

using lp::LinearExpr;
using lp::Sense;

IntervalPartition::IntervalPartition(std::vector<HourWindow> intervals,
                                     std::size_t horizon)
    : intervals_(std::move(intervals)), horizon_(horizon) {
  if (intervals_.empty()) throw ValidationError("empty interval partition");
  std::size_t expected = 0;
  for (const HourWindow& w : intervals_) {
    if (w.begin != expected || w.end <= w.begin) {
      throw ValidationError("partition interval [" + std::to_string(w.begin) +
                            ", " + std::to_string(w.end) +
                            ") leaves a gap, overlaps, or is empty");
    }
    expected = w.end;
  }
  if (expected != horizon) {
    throw ValidationError("partition covers " + std::to_string(expected) +
                          " of " + std::to_string(horizon) + " hours");
  }
}

namespace {

std::vector<HourWindow> Blocks(std::size_t horizon, std::size_t length) {
  std::vector<HourWindow> out;
  for (std::size_t start = 0; start < horizon; start += length) {
    out.push_back({start, std::min(horizon, start + length)});
  }
  return out;
}

}  // namespace

IntervalPartition IntervalPartition::For(TcInterval interval,
                                         std::size_t horizon) {
  switch (interval) {
    case TcInterval::kHourly:
      return IntervalPartition(Blocks(horizon, 1), horizon);
    case TcInterval::kDaily:
      return IntervalPartition(Blocks(horizon, 24), horizon);
    case TcInterval::kMonthly: {
      if (horizon != kHoursPerYear) {
        return IntervalPartition(Blocks(horizon, 730), horizon);
      }
      constexpr std::array<std::size_t, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                     31, 31, 30, 31, 30, 31};
      std::vector<HourWindow> months;
      std::size_t start = 0;
      for (std::size_t days : kDays) {
        months.push_back({start, start + 24 * days});
        start += 24 * days;
      }
      return IntervalPartition(std::move(months), horizon);
    }
    case TcInterval::kYearly:
      return IntervalPartition(Blocks(horizon, kHoursPerYear), horizon);
  }
  throw ValidationError("unknown interval");
}

void ApplyTemporalCorrelation(lp::LpModel& model, const PlantVars& vars,
                              const IntervalPartition& partition) {
  if (partition.horizon() != vars.horizon) {
    throw ValidationError("partition horizon does not match the plant model");
  }
  for (const HourWindow& w : partition.intervals()) {
    LinearExpr net;
    for (std::size_t t = w.begin; t < w.end; ++t) {
      net.AddTerm(vars.export_kw[t], 1.0).AddTerm(vars.import_kw[t], -1.0);
    }
    model.AddConstraint(std::move(net), Sense::kGreaterEqual, 0.0,
                        "tc[" + std::to_string(w.begin) + "," +
                            std::to_string(w.end) + ")");
  }
}

void ApplyEmissionCap(lp::LpModel& model, const PlantVars& vars,
                      const HourlySeries& mef_buy,
                      const HourlySeries& mef_sell, double cap_kg_per_kg,
                      double h2_kg) {
  RequireUnit(mef_buy, Unit::kKgCo2ePerKwh, "buy-zone MEF");
  RequireUnit(mef_sell, Unit::kKgCo2ePerKwh, "sell-zone MEF");
  if (mef_buy.size() != vars.horizon || mef_sell.size() != vars.horizon) {
    throw ValidationError("MEF series length does not match the plant model");
  }
  if (!std::isfinite(cap_kg_per_kg) || !std::isfinite(h2_kg)) {
    throw ValidationError("emission cap and hydrogen mass must be finite");
  }
  LinearExpr emissions;
  for (std::size_t t = 0; t < vars.horizon; ++t) {
    emissions.AddTerm(vars.import_kw[t], mef_buy[t])
        .AddTerm(vars.export_kw[t], -mef_sell[t]);
  }
  model.AddConstraint(std::move(emissions), Sense::kLessEqual,
                      cap_kg_per_kg * h2_kg, "emission_cap");
}

void ApplyCapexCap(lp::LpModel& model, const PlantVars& vars,
                   const PlantParameters& params, double storage_unit_cost,
                   double cap_usd) {
  if (std::isnan(cap_usd)) throw ValidationError("CAPEX cap is NaN");
  if (cap_usd == lp::kInfinity) return;
  LinearExpr capex;
  capex.AddTerm(vars.c_el, params.capex_el_usd_per_kw)
      .AddTerm(vars.c_wind, params.capex_wind_usd_per_kw)
      .AddTerm(vars.c_pv, params.capex_pv_usd_per_kw)
      .AddTerm(vars.c_store, storage_unit_cost);
  model.AddConstraint(std::move(capex), Sense::kLessEqual, cap_usd,
                      "capex_cap");
}

GridPricing CoLocatedPricing(const GridProfile& zone) {
  return GridPricing{zone.spot_price, zone.spot_price};
}

GridPricing WireTwoGrid(lp::LpModel& model, const PlantVars& vars,
                        const GridProfile& sell_zone,
                        const GridProfile& buy_zone) {
  if (sell_zone.horizon() != vars.horizon ||
      buy_zone.horizon() != vars.horizon) {
    throw ValidationError("zone horizons do not match the plant model");
  }
  for (std::size_t t = 0; t < vars.horizon; ++t) {
    const std::string h = "[" + std::to_string(t) + "]";
    LinearExpr sell_side;
    sell_side.AddTerm(vars.export_kw[t], 1.0).AddTerm(vars.curtail_kw[t], 1.0);
    sell_side -= vars.Generation(t);
    model.ReplaceConstraint(vars.electricity_balance[t], std::move(sell_side),
                            Sense::kEqual, 0.0);

    LinearExpr buy_side;
    buy_side.AddTerm(vars.e_el[t], 1.0)
        .AddTerm(vars.e_comp1[t], 1.0)
        .AddTerm(vars.e_comp2[t], 1.0)
        .AddTerm(vars.import_kw[t], -1.0);
    model.AddConstraint(std::move(buy_side), Sense::kEqual, 0.0,
                        "buy_balance" + h);
  }
  return GridPricing{buy_zone.spot_price, sell_zone.spot_price};
}

}  // namespace h2cert
