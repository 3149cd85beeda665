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

#ifndef H2CERT_CERTIFICATION_HPP_
#define H2CERT_CERTIFICATION_HPP_

#include <optional>

#include "h2cert/core_types.hpp"
#include "h2cert/series.hpp"

namespace h2cert {

// Market-based certificate method over one batch period. Exports earn one
// certificate per MWh, surrendered against residual purchases. A negative
// balance floors the certified emissions at zero; the remainder is reported
// separately as an offset.
struct MarketEmissions {
  double e_market_kg = 0.0;     // >= 0
  double recs_offset_kg = 0.0;  // <= 0
};

MarketEmissions EmissionsMarket(const HourlySeries& import_kw,
                                const HourlySeries& export_kw, double arpp,
                                double rmf,
                                std::optional<HourWindow> window = std::nullopt);

// Location-based method: net purchases times the annual zone factor.
// Negative when exports exceed imports.
double EmissionsLocation(const HourlySeries& import_kw,
                         const HourlySeries& export_kw, double ef_location,
                         std::optional<HourWindow> window = std::nullopt);

// Hour-by-hour tracking with time-varying factors (MEF or AEF): purchases at
// the buy zone's factor, sales at the sell zone's factor.
double EmissionsFactorTracked(const HourlySeries& import_kw,
                              const HourlySeries& export_kw,
                              const HourlySeries& ef_buy,
                              const HourlySeries& ef_sell,
                              std::optional<HourWindow> window = std::nullopt);

// Σ(gen_wind + gen_pv) / ((c_wind + c_pv)·T). DomainError for zero capacity.
double ReCapacityFactor(const HourlySeries& gen_wind, const HourlySeries& gen_pv,
                        double c_wind_kw, double c_pv_kw);

// Applicable renewable power percentage (E_RE + E_ad) / (E_AC - E_ex).
double Arpp(double e_re, double e_ad, double e_ac, double e_ex);

// Residual mix factor in kgCO2e/kWh from emissions (kg), generation sent
// out (MWh), and certificates created (MWh).
double Rmf(double emissions_kg, double generation_mwh, double recs_mwh);

// kgCO2e/kgH2; intensities this small are treated as zero.
inline constexpr double kNegligibleIntensity = 1e-9;

struct EmissionsReport {
  double annual_h2_kg = 0.0;
  double recs_generated_mwh = 0.0;

  double e_market_kg = 0.0;
  double ei_market = 0.0;  // kgCO2e/kgH2, floored at zero
  double ei_recs = 0.0;    // kgCO2e/kgH2, <= 0
  double e_location_kg = 0.0;
  double ei_location = 0.0;
  double e_mef_kg = 0.0;
  double ei_mef = 0.0;
  double e_aef_kg = 0.0;
  double ei_aef = 0.0;

  // Relative gaps to the MEF estimate; absent when |ei_mef| is below
  // kNegligibleIntensity.
  std::optional<double> d_market;
  std::optional<double> d_location;

  friend bool operator==(const EmissionsReport&, const EmissionsReport&) = default;
};

struct DifferenceMetrics {
  std::optional<double> d_market;
  std::optional<double> d_location;
};

// d = (ei_mef - ei_x) / |ei_mef|, using ei_recs in place of ei_market when the
// market floor triggered.
DifferenceMetrics ComputeDifferenceMetrics(const EmissionsReport& report);

// Factors for one accounting run. For co-located plants the buy and sell
// series are the same zone's.
struct AccountingFactors {
  double arpp = 0.1872;
  double rmf = 0.81;
  double ef_location = 0.0;
  HourlySeries mef_buy;
  HourlySeries mef_sell;
  HourlySeries aef_buy;
  HourlySeries aef_sell;
};

AccountingFactors FactorsFor(const GridProfile& buy, const GridProfile& sell);

// All four methods plus the difference metrics over one batch period (the
// whole horizon by default).
EmissionsReport Certify(const HourlySeries& import_kw,
                        const HourlySeries& export_kw,
                        const AccountingFactors& factors, double load_kg_per_h,
                        std::optional<HourWindow> window = std::nullopt);

}  // namespace h2cert

#endif  // H2CERT_CERTIFICATION_HPP_
