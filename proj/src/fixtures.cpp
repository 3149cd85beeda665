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

#include "h2cert/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "h2cert/errors.hpp"

namespace h2cert {
namespace {

constexpr double kWindRefKw = 320000.0;
constexpr double kPvRefKw = 1000.0;

// Platform-independent draws on top of mt19937_64 (whose output sequence is
// fixed by the standard, unlike the std distributions).
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  double Uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Irwin-Hall approximation of a standard normal.
  double Normal() {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += Uniform();
    return s - 6.0;
  }

 private:
  std::mt19937_64 rng_;
};

double Clamp(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

double SolarShape(std::size_t t) {
  const double h = static_cast<double>(t % 24);
  if (h < 6.0 || h > 18.0) return 0.0;
  return std::sin(std::numbers::pi * (h - 6.0) / 12.0);
}

Zone MakeZone(std::string id, const std::vector<double>& price_aud,
              std::vector<double> mef, std::vector<double> aef,
              std::vector<double> wind, std::vector<double> pv,
              double ef_location, double fx) {
  std::vector<double> price(price_aud.size());
  for (std::size_t t = 0; t < price.size(); ++t) {
    price[t] = ConvertPrice(price_aud[t], fx);
  }
  Zone z;
  z.grid.zone_id = std::move(id);
  z.grid.spot_price = HourlySeries(std::move(price), Unit::kUsdPerKwh);
  z.grid.mef = HourlySeries(std::move(mef), Unit::kKgCo2ePerKwh);
  z.grid.aef = HourlySeries(std::move(aef), Unit::kKgCo2ePerKwh);
  z.grid.ef_location = ef_location;
  z.grid.arpp = 0.1872;
  z.grid.rmf = 0.81;
  z.ref_wind = HourlySeries(std::move(wind), Unit::kKw);
  z.ref_pv = HourlySeries(std::move(pv), Unit::kKw);
  return z;
}

Zone Flat(std::size_t n, double fx) {
  return MakeZone("flat", std::vector<double>(n, 95.0),
                  std::vector<double>(n, 0.5), std::vector<double>(n, 0.71),
                  std::vector<double>(n, 0.35 * kWindRefKw),
                  std::vector<double>(n, 0.25 * kPvRefKw), 0.71, fx);
}

// Diurnal renewables: sinusoidal PV and a wind profile that is stronger at
// night, with seeded noise.
void DiurnalRenewables(std::size_t n, Draws& draws, std::vector<double>& wind,
                       std::vector<double>& pv) {
  wind.resize(n);
  pv.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double h = static_cast<double>(t % 24);
    const double cf = 0.35 + 0.15 * std::cos(2.0 * std::numbers::pi * (h - 3.0) / 24.0) +
                      0.08 * draws.Normal();
    wind[t] = kWindRefKw * Clamp(cf, 0.0, 1.0);
    pv[t] = kPvRefKw * SolarShape(t) * Clamp(0.85 + 0.1 * draws.Normal(), 0.0, 1.0);
  }
}

Zone Diurnal(std::size_t n, Draws& draws, double fx) {
  std::vector<double> wind, pv;
  DiurnalRenewables(n, draws, wind, pv);
  std::vector<double> price(n), mef(n), aef(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double h = static_cast<double>(t % 24);
    const double evening = std::exp(-(h - 19.0) * (h - 19.0) / 4.0);
    price[t] = 70.0 - 55.0 * SolarShape(t) + 150.0 * evening + 8.0 * draws.Normal();
  }
  const auto [lo, hi] = std::minmax_element(price.begin(), price.end());
  const double span = std::max(1.0, *hi - *lo);
  for (std::size_t t = 0; t < n; ++t) {
    const double rel = (price[t] - *lo) / span;
    mef[t] = Clamp(0.95 - 0.8 * rel + 0.05 * draws.Normal(), 0.0, 1.2);
    aef[t] = Clamp(0.78 - 0.3 * SolarShape(t) + 0.02 * draws.Normal(), 0.0, 1.2);
  }
  return MakeZone("diurnal", price, std::move(mef), std::move(aef),
                  std::move(wind), std::move(pv), 0.71, fx);
}

Zone RandomWalk(std::size_t n, Draws& draws, double fx) {
  std::vector<double> price(n), mef(n), aef(n), wind(n), pv(n);
  double p = 80.0, m = 0.55, a = 0.65, w = 0.35;
  for (std::size_t t = 0; t < n; ++t) {
    p += 0.15 * (80.0 - p) + 18.0 * draws.Normal();
    m = Clamp(m + 0.2 * (0.55 - m) + 0.12 * draws.Normal(), 0.0, 1.1);
    a = Clamp(a + 0.1 * (0.65 - a) + 0.04 * draws.Normal(), 0.1, 1.0);
    w = Clamp(w + 0.1 * (0.35 - w) + 0.07 * draws.Normal(), 0.0, 1.0);
    price[t] = p;
    mef[t] = m;
    aef[t] = a;
    wind[t] = kWindRefKw * w;
    pv[t] = kPvRefKw * SolarShape(t) * Clamp(0.7 + 0.25 * draws.Normal(), 0.0, 1.0);
  }
  return MakeZone("random-walk", price, std::move(mef), std::move(aef),
                  std::move(wind), std::move(pv), 0.71, fx);
}

}  // namespace

std::string_view FixtureKindName(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::kFlat:
      return "flat";
    case FixtureKind::kDiurnal:
      return "diurnal";
    case FixtureKind::kTwoZoneContrast:
      return "two-zone-contrast";
    case FixtureKind::kRandomWalk:
      return "random-walk";
  }
  return "?";
}

std::optional<FixtureKind> ParseFixtureKind(std::string_view name) {
  for (FixtureKind k : {FixtureKind::kFlat, FixtureKind::kDiurnal,
                        FixtureKind::kTwoZoneContrast, FixtureKind::kRandomWalk}) {
    if (FixtureKindName(k) == name) return k;
  }
  return std::nullopt;
}

Fixture SynthFixture(FixtureKind kind, std::size_t horizon, std::uint64_t seed,
                     double fx_usd_per_aud) {
  if (horizon == 0) throw ValidationError("fixture horizon must be positive");
  Draws draws(seed);
  Fixture f;
  const auto add = [&f](Zone z) {
    const std::string id = z.grid.zone_id;
    f.zones.emplace(id, std::move(z));
    return id;
  };
  switch (kind) {
    case FixtureKind::kFlat:
      f.plant_zone = add(Flat(horizon, fx_usd_per_aud));
      break;
    case FixtureKind::kDiurnal:
      f.plant_zone = add(Diurnal(horizon, draws, fx_usd_per_aud));
      break;
    case FixtureKind::kRandomWalk:
      f.plant_zone = add(RandomWalk(horizon, draws, fx_usd_per_aud));
      break;
    case FixtureKind::kTwoZoneContrast: {
      // Yearly averages of a coal-heavy mainland zone (buy) and a
      // hydro-dominated island zone (sell).
      std::vector<double> wind, pv;
      DiurnalRenewables(horizon, draws, wind, pv);
      f.plant_zone = add(MakeZone(
          "contrast-buy", std::vector<double>(horizon, 100.0),
          std::vector<double>(horizon, 0.52), std::vector<double>(horizon, 0.63),
          wind, pv, 0.66, fx_usd_per_aud));
      DiurnalRenewables(horizon, draws, wind, pv);
      f.sell_zone = add(MakeZone(
          "contrast-sell", std::vector<double>(horizon, 50.0),
          std::vector<double>(horizon, 0.19), std::vector<double>(horizon, 0.12),
          wind, pv, 0.15, fx_usd_per_aud));
      return f;
    }
  }
  f.sell_zone = f.plant_zone;
  return f;
}

}  // namespace h2cert
