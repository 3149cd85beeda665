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

#ifndef H2CERT_SERIES_HPP_
#define H2CERT_SERIES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace h2cert {

inline constexpr std::size_t kHoursPerYear = 8760;

enum class Unit {
  kUsdPerKwh,
  kKgCo2ePerKwh,
  kKw,
  kKgPerH,
  kKg,  // storage level
  kDimensionless,
};

std::string_view UnitName(Unit unit);

// Half-open range of hours [begin, end) used for sub-horizon accounting.
struct HourWindow {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Fixed-length hourly series with a unit tag. Every entry is finite; the
// constructor throws ValidationError otherwise. One entry covers one hour, so
// a kW value is also the kWh delivered in that step.
class HourlySeries {
 public:
  HourlySeries() = default;
  HourlySeries(std::vector<double> values, Unit unit,
               std::size_t start_hour_index = 0);

  static HourlySeries Constant(std::size_t length, double value, Unit unit);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  Unit unit() const { return unit_; }
  std::size_t start_hour_index() const { return start_hour_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t t) const { return values_[t]; }

  double Sum() const;
  double Sum(HourWindow window) const;
  double Min() const;
  double Max() const;
  double Mean() const;

  HourlySeries Scaled(double factor) const;

  friend bool operator==(const HourlySeries&, const HourlySeries&) = default;

 private:
  std::vector<double> values_;
  Unit unit_ = Unit::kDimensionless;
  std::size_t start_hour_ = 0;
};

// Element-wise sum/difference; throws UnitMismatch for differing tags and
// ValidationError for differing lengths.
HourlySeries operator+(const HourlySeries& a, const HourlySeries& b);
HourlySeries operator-(const HourlySeries& a, const HourlySeries& b);

// Σ_t flow(t)·factor(t) over the window (whole series when absent). `flow`
// must be tagged kW and `factor` a per-kWh unit, so the result is USD or
// kgCO2e.
double EnergyWeightedSum(const HourlySeries& flow, const HourlySeries& factor,
                         std::optional<HourWindow> window = std::nullopt);

// Throws UnitMismatch naming `what` when the tag differs.
void RequireUnit(const HourlySeries& series, Unit expected,
                 std::string_view what);

// Resolves an optional window against a horizon; throws ValidationError when
// it falls outside [0, horizon] or is reversed.
HourWindow ResolveWindow(std::optional<HourWindow> window,
                         std::size_t horizon);

}  // namespace h2cert

#endif  // H2CERT_SERIES_HPP_
