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

#include "h2cert/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "h2cert/errors.hpp"

namespace h2cert {

std::string_view UnitName(Unit unit) {
  switch (unit) {
    case Unit::kUsdPerKwh:
      return "USD/kWh";
    case Unit::kKgCo2ePerKwh:
      return "kgCO2e/kWh";
    case Unit::kKw:
      return "kW";
    case Unit::kKgPerH:
      return "kg/h";
    case Unit::kKg:
      return "kg";
    case Unit::kDimensionless:
      return "dimensionless";
  }
  return "?";
}

HourlySeries::HourlySeries(std::vector<double> values, Unit unit,
                           std::size_t start_hour_index)
    : values_(std::move(values)), unit_(unit), start_hour_(start_hour_index) {
  for (std::size_t t = 0; t < values_.size(); ++t) {
    if (!std::isfinite(values_[t])) {
      throw ValidationError("non-finite value at hour " + std::to_string(t) +
                            " in " + std::string(UnitName(unit_)) + " series");
    }
  }
}

HourlySeries HourlySeries::Constant(std::size_t length, double value,
                                    Unit unit) {
  return HourlySeries(std::vector<double>(length, value), unit);
}

double HourlySeries::Sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double HourlySeries::Sum(HourWindow window) const {
  const HourWindow w = ResolveWindow(window, values_.size());
  return std::accumulate(values_.begin() + static_cast<std::ptrdiff_t>(w.begin),
                         values_.begin() + static_cast<std::ptrdiff_t>(w.end),
                         0.0);
}

double HourlySeries::Min() const {
  return values_.empty() ? 0.0
                         : *std::min_element(values_.begin(), values_.end());
}

double HourlySeries::Max() const {
  return values_.empty() ? 0.0
                         : *std::max_element(values_.begin(), values_.end());
}

double HourlySeries::Mean() const {
  return values_.empty() ? 0.0 : Sum() / static_cast<double>(values_.size());
}

HourlySeries HourlySeries::Scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= factor;
  return HourlySeries(std::move(out), unit_, start_hour_);
}

namespace {

void RequireCompatible(const HourlySeries& a, const HourlySeries& b) {
  if (a.unit() != b.unit()) {
    throw UnitMismatch("cannot combine " + std::string(UnitName(a.unit())) +
                       " with " + std::string(UnitName(b.unit())));
  }
  if (a.size() != b.size()) {
    throw ValidationError("series length mismatch: " +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
}

bool IsPerKwh(Unit unit) {
  return unit == Unit::kUsdPerKwh || unit == Unit::kKgCo2ePerKwh;
}

}  // namespace

HourlySeries operator+(const HourlySeries& a, const HourlySeries& b) {
  RequireCompatible(a, b);
  std::vector<double> out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = a[t] + b[t];
  return HourlySeries(std::move(out), a.unit(), a.start_hour_index());
}

HourlySeries operator-(const HourlySeries& a, const HourlySeries& b) {
  RequireCompatible(a, b);
  std::vector<double> out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) out[t] = a[t] - b[t];
  return HourlySeries(std::move(out), a.unit(), a.start_hour_index());
}

double EnergyWeightedSum(const HourlySeries& flow, const HourlySeries& factor,
                         std::optional<HourWindow> window) {
  RequireUnit(flow, Unit::kKw, "energy flow");
  if (!IsPerKwh(factor.unit())) {
    throw UnitMismatch("weighting factor must be per kWh, got " +
                       std::string(UnitName(factor.unit())));
  }
  if (flow.size() != factor.size()) {
    throw ValidationError("series length mismatch: " +
                          std::to_string(flow.size()) + " vs " +
                          std::to_string(factor.size()));
  }
  const HourWindow w = ResolveWindow(window, flow.size());
  double total = 0.0;
  for (std::size_t t = w.begin; t < w.end; ++t) total += flow[t] * factor[t];
  return total;
}

void RequireUnit(const HourlySeries& series, Unit expected,
                 std::string_view what) {
  if (series.unit() != expected) {
    throw UnitMismatch(std::string(what) + ": expected " +
                       std::string(UnitName(expected)) + ", got " +
                       std::string(UnitName(series.unit())));
  }
}

HourWindow ResolveWindow(std::optional<HourWindow> window,
                         std::size_t horizon) {
  if (!window) return HourWindow{0, horizon};
  if (window->begin > window->end || window->end > horizon) {
    throw ValidationError("window [" + std::to_string(window->begin) + ", " +
                          std::to_string(window->end) +
                          ") outside horizon of " + std::to_string(horizon) +
                          " hours");
  }
  return *window;
}

}  // namespace h2cert
