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

#include "h2cert/certification.hpp"

#include <cmath>
#include <string>

#include "h2cert/errors.hpp"

namespace h2cert {
namespace {

void RequireFlows(const HourlySeries& import_kw, const HourlySeries& export_kw) {
  RequireUnit(import_kw, Unit::kKw, "grid import");
  RequireUnit(export_kw, Unit::kKw, "grid export");
  if (import_kw.size() != export_kw.size()) {
    throw ValidationError("import and export series differ in length");
  }
}

}  // namespace

MarketEmissions EmissionsMarket(const HourlySeries& import_kw,
                                const HourlySeries& export_kw, double arpp,
                                double rmf, std::optional<HourWindow> window) {
  RequireFlows(import_kw, export_kw);
  if (!(arpp >= 0.0 && arpp <= 1.0)) throw ValidationError("arpp outside [0, 1]");
  if (!(rmf >= 0.0) || !std::isfinite(rmf)) throw ValidationError("rmf must be >= 0");
  const HourWindow w = ResolveWindow(window, import_kw.size());
  const double raw = (import_kw.Sum(w) * (1.0 - arpp) - export_kw.Sum(w)) * rmf;
  MarketEmissions out;
  if (raw >= 0.0) {
    out.e_market_kg = raw;
  } else {
    out.recs_offset_kg = raw;
  }
  return out;
}

double EmissionsLocation(const HourlySeries& import_kw,
                         const HourlySeries& export_kw, double ef_location,
                         std::optional<HourWindow> window) {
  RequireFlows(import_kw, export_kw);
  if (!(ef_location >= 0.0) || !std::isfinite(ef_location)) {
    throw ValidationError("location factor must be >= 0");
  }
  const HourWindow w = ResolveWindow(window, import_kw.size());
  return (import_kw.Sum(w) - export_kw.Sum(w)) * ef_location;
}

double EmissionsFactorTracked(const HourlySeries& import_kw,
                              const HourlySeries& export_kw,
                              const HourlySeries& ef_buy,
                              const HourlySeries& ef_sell,
                              std::optional<HourWindow> window) {
  RequireFlows(import_kw, export_kw);
  RequireUnit(ef_buy, Unit::kKgCo2ePerKwh, "buy-zone emission factor");
  RequireUnit(ef_sell, Unit::kKgCo2ePerKwh, "sell-zone emission factor");
  return EnergyWeightedSum(import_kw, ef_buy, window) -
         EnergyWeightedSum(export_kw, ef_sell, window);
}

double ReCapacityFactor(const HourlySeries& gen_wind, const HourlySeries& gen_pv,
                        double c_wind_kw, double c_pv_kw) {
  RequireUnit(gen_wind, Unit::kKw, "wind generation");
  RequireUnit(gen_pv, Unit::kKw, "PV generation");
  const double capacity = c_wind_kw + c_pv_kw;
  if (!(capacity > 0.0)) {
    throw DomainError("capacity factor needs positive installed capacity");
  }
  if (gen_wind.size() != gen_pv.size() || gen_wind.empty()) {
    throw ValidationError("generation series must be non-empty and equal length");
  }
  return (gen_wind.Sum() + gen_pv.Sum()) /
         (capacity * static_cast<double>(gen_wind.size()));
}

double Arpp(double e_re, double e_ad, double e_ac, double e_ex) {
  const double denominator = e_ac - e_ex;
  if (!(denominator > 0.0)) {
    throw DomainError("ARPP needs acquisitions greater than exemptions");
  }
  return (e_re + e_ad) / denominator;
}

double Rmf(double emissions_kg, double generation_mwh, double recs_mwh) {
  const double residual_kwh = generation_mwh * 1000.0 - recs_mwh * 1000.0;
  if (!(residual_kwh > 0.0)) {
    throw DomainError("RMF needs generation beyond certificate-claimed output");
  }
  return emissions_kg / residual_kwh;
}

DifferenceMetrics ComputeDifferenceMetrics(const EmissionsReport& r) {
  DifferenceMetrics d;
  if (!(std::abs(r.ei_mef) >= kNegligibleIntensity) || !std::isfinite(r.ei_mef)) return d;
  const double scale = std::abs(r.ei_mef);
  d.d_location = (r.ei_mef - r.ei_location) / scale;
  const double market = r.ei_market > 0.0 ? r.ei_market : r.ei_recs;
  d.d_market = (r.ei_mef - market) / scale;
  return d;
}

AccountingFactors FactorsFor(const GridProfile& buy, const GridProfile& sell) {
  AccountingFactors f;
  f.arpp = buy.arpp;
  f.rmf = buy.rmf;
  f.ef_location = buy.ef_location;
  f.mef_buy = buy.mef;
  f.mef_sell = sell.mef;
  f.aef_buy = buy.aef;
  f.aef_sell = sell.aef;
  return f;
}

EmissionsReport Certify(const HourlySeries& import_kw,
                        const HourlySeries& export_kw,
                        const AccountingFactors& factors, double load_kg_per_h,
                        std::optional<HourWindow> window) {
  RequireFlows(import_kw, export_kw);
  const HourWindow w = ResolveWindow(window, import_kw.size());
  EmissionsReport r;
  r.annual_h2_kg = load_kg_per_h * static_cast<double>(w.end - w.begin);
  if (!(r.annual_h2_kg > 0.0)) {
    throw ValidationError("certification needs a positive hydrogen mass");
  }
  r.recs_generated_mwh = export_kw.Sum(w) / 1000.0;

  const MarketEmissions market =
      EmissionsMarket(import_kw, export_kw, factors.arpp, factors.rmf, w);
  r.e_market_kg = market.e_market_kg;
  r.ei_market = market.e_market_kg / r.annual_h2_kg;
  r.ei_recs = market.recs_offset_kg / r.annual_h2_kg;

  r.e_location_kg = EmissionsLocation(import_kw, export_kw, factors.ef_location, w);
  r.ei_location = r.e_location_kg / r.annual_h2_kg;
  r.e_mef_kg = EmissionsFactorTracked(import_kw, export_kw, factors.mef_buy,
                                      factors.mef_sell, w);
  r.ei_mef = r.e_mef_kg / r.annual_h2_kg;
  r.e_aef_kg = EmissionsFactorTracked(import_kw, export_kw, factors.aef_buy,
                                      factors.aef_sell, w);
  r.ei_aef = r.e_aef_kg / r.annual_h2_kg;

  const DifferenceMetrics d = ComputeDifferenceMetrics(r);
  r.d_market = d.d_market;
  r.d_location = d.d_location;
  return r;
}

}  // namespace h2cert
