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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "h2cert/certification.hpp"
#include "h2cert/core_types.hpp"
#include "h2cert/errors.hpp"

using namespace h2cert;

namespace {

constexpr double kLoad = 180.0;
// Grid-only direct path: 39.4 / 0.7 + 0.83 kWh per kg at 180 kg/h.
constexpr double kDirectKwhPerKg = 39.4 / 0.7 + 0.83;
constexpr double kGridOnlyKw = kDirectKwhPerKg * kLoad;

HourlySeries Kw(std::vector<double> v) { return HourlySeries(std::move(v), Unit::kKw); }
HourlySeries KwConst(std::size_t n, double v) {
  return HourlySeries::Constant(n, v, Unit::kKw);
}
HourlySeries Ef(std::size_t n, double v) {
  return HourlySeries::Constant(n, v, Unit::kKgCo2ePerKwh);
}

AccountingFactors ConstFactors(std::size_t n, double ef, double mef, double aef) {
  AccountingFactors f;
  f.ef_location = ef;
  f.mef_buy = Ef(n, mef);
  f.mef_sell = Ef(n, mef);
  f.aef_buy = Ef(n, aef);
  f.aef_sell = Ef(n, aef);
  return f;
}

}  // namespace

TEST_CASE("market method: grid-only plant gives 37.6 at default ARPP and RMF") {
  const std::size_t n = 24;
  const auto m = EmissionsMarket(KwConst(n, kGridOnlyKw), KwConst(n, 0.0), 0.1872, 0.81);
  CHECK(m.recs_offset_kg == 0.0);
  CHECK(m.e_market_kg / (kLoad * n) == doctest::Approx(37.60).epsilon(5e-4));
}

TEST_CASE("market method: balanced trade floors at zero and reports the offset") {
  const auto flow = Kw({100, 250, 0, 40});
  const auto m = EmissionsMarket(flow, flow, 0.1872, 0.81);
  CHECK(m.e_market_kg == 0.0);
  CHECK(m.recs_offset_kg < 0.0);
  CHECK(m.recs_offset_kg == doctest::Approx(-0.1872 * 390 * 0.81));
}

TEST_CASE("market method: isolated plant") {
  const auto m = EmissionsMarket(KwConst(5, 0), KwConst(5, 0), 0.1872, 0.81);
  CHECK(m.e_market_kg == 0.0);
  CHECK(m.recs_offset_kg == 0.0);
}

TEST_CASE("market method depends only on the two sums") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 500.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(12), b(12);
    for (auto& x : a) x = u(rng);
    for (auto& x : b) x = u(rng);
    std::vector<double> a2(12, 0.0), b2(12, 0.0);
    double sa = 0, sb = 0;
    for (double x : a) sa += x;
    for (double x : b) sb += x;
    a2[3] = sa;
    b2[9] = sb;
    const auto m1 = EmissionsMarket(Kw(a), Kw(b), 0.3, 0.7);
    const auto m2 = EmissionsMarket(Kw(a2), Kw(b2), 0.3, 0.7);
    CHECK(m1.e_market_kg == doctest::Approx(m2.e_market_kg).epsilon(1e-12));
    CHECK(m1.recs_offset_kg == doctest::Approx(m2.recs_offset_kg).epsilon(1e-12));
    const double raw = (sa * 0.7 - sb) * 0.7;
    CHECK(m1.e_market_kg + m1.recs_offset_kg == doctest::Approx(raw).epsilon(1e-12));
  }
}

TEST_CASE("market method rejects bad parameters") {
  CHECK_THROWS_AS(EmissionsMarket(KwConst(2, 1), KwConst(2, 0), 1.5, 0.8), ValidationError);
  CHECK_THROWS_AS(EmissionsMarket(KwConst(2, 1), KwConst(2, 0), 0.2, -0.1), ValidationError);
}

TEST_CASE("location method examples") {
  const std::size_t n = 48;
  const double h2 = kLoad * n;
  CHECK(EmissionsLocation(KwConst(n, kGridOnlyKw), KwConst(n, 0), 0.71) / h2 ==
        doctest::Approx(40.55).epsilon(5e-4));
  CHECK(EmissionsLocation(KwConst(n, kGridOnlyKw), KwConst(n, 0), 0.15) / h2 ==
        doctest::Approx(8.57).epsilon(5e-4));
  CHECK(EmissionsLocation(KwConst(1, 0), KwConst(1, 1000), 0.5) == doctest::Approx(-500.0));
  CHECK_THROWS_AS(EmissionsLocation(KwConst(1, 0), KwConst(1, 0), -0.1), ValidationError);
}

TEST_CASE("factor-tracked method examples") {
  const std::size_t n = 24;
  const auto flow = KwConst(n, 123.0);
  CHECK(EmissionsFactorTracked(flow, flow, Ef(n, 0.4), Ef(n, 0.4)) == doctest::Approx(0.0));
  CHECK(EmissionsFactorTracked(KwConst(n, kGridOnlyKw), KwConst(n, 0), Ef(n, 0.5),
                               Ef(n, 0.5)) /
            (kLoad * n) ==
        doctest::Approx(28.5579).epsilon(1e-4));

  // Yearly-balanced trade across zones still emits.
  std::vector<double> imp(n, 0.0), exp(n, 0.0);
  for (std::size_t t = 0; t < n; ++t) (t < 12 ? imp : exp)[t] = 500.0;
  const double e = EmissionsFactorTracked(Kw(imp), Kw(exp), Ef(n, 0.52), Ef(n, 0.19));
  CHECK(e == doctest::Approx(6000.0 * 0.33));
  CHECK(EmissionsMarket(Kw(imp), Kw(exp), 0.0, 0.81).e_market_kg == 0.0);
}

TEST_CASE("factor-tracked method with time-varying factors") {
  const auto imp = Kw({10, 0, 5});
  const auto exp = Kw({0, 4, 1});
  const HourlySeries buy({0.5, 0.6, 0.7}, Unit::kKgCo2ePerKwh);
  const HourlySeries sell({0.1, 0.2, 0.3}, Unit::kKgCo2ePerKwh);
  CHECK(EmissionsFactorTracked(imp, exp, buy, sell) ==
        doctest::Approx(10 * 0.5 + 5 * 0.7 - 4 * 0.2 - 1 * 0.3));
  CHECK(EmissionsFactorTracked(imp, exp, buy, sell, HourWindow{1, 3}) ==
        doctest::Approx(5 * 0.7 - 4 * 0.2 - 1 * 0.3));
  CHECK_THROWS_AS(EmissionsFactorTracked(imp, exp, buy, KwConst(3, 0)), UnitMismatch);
}

TEST_CASE("constant AEF equal to the location factor matches the location method") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  std::vector<double> a(30), b(30);
  for (auto& x : a) x = u(rng);
  for (auto& x : b) x = u(rng);
  const double loc = EmissionsLocation(Kw(a), Kw(b), 0.66);
  const double aef = EmissionsFactorTracked(Kw(a), Kw(b), Ef(30, 0.66), Ef(30, 0.66));
  CHECK(aef == doctest::Approx(loc).epsilon(1e-12));
}

TEST_CASE("capacity factor") {
  CHECK(ReCapacityFactor(KwConst(10, 60), KwConst(10, 40), 60, 40) == doctest::Approx(1.0));
  CHECK(ReCapacityFactor(KwConst(10, 0), KwConst(10, 0), 60, 40) == 0.0);
  CHECK(ReCapacityFactor(KwConst(10, 30), KwConst(10, 20), 60, 40) == doctest::Approx(0.5));
  CHECK_THROWS_AS(ReCapacityFactor(KwConst(3, 0), KwConst(3, 0), 0, 0), DomainError);
}

TEST_CASE("ARPP calculator") {
  CHECK(Arpp(10, 0, 100, 0) == doctest::Approx(0.10));
  CHECK(Arpp(15.0, 3.72, 105.0, 5.0) == doctest::Approx(0.1872));
  CHECK(Arpp(0, 0, 100, 0) == 0.0);
  CHECK_THROWS_AS(Arpp(1, 0, 50, 50), DomainError);
}

TEST_CASE("RMF calculator") {
  CHECK(Rmf(810000, 1000, 0) == doctest::Approx(0.81));
  CHECK_THROWS_AS(Rmf(1, 1000, 1000), DomainError);
  CHECK(Rmf(0, 50, 0) == 0.0);
}

TEST_CASE("difference metrics") {
  EmissionsReport r;
  r.ei_mef = 27.61;
  r.ei_location = 40.55;
  r.ei_market = 37.6;
  auto d = ComputeDifferenceMetrics(r);
  REQUIRE(d.d_location.has_value());
  CHECK(*d.d_location == doctest::Approx(-0.469).epsilon(2e-3));
  CHECK(*d.d_market == doctest::Approx(-0.36).epsilon(1e-2));

  r.ei_location = r.ei_mef;
  CHECK(*ComputeDifferenceMetrics(r).d_location == 0.0);

  // Floor triggered: the REC remainder stands in for the market figure.
  r.ei_mef = -13.62;
  r.ei_market = 0.0;
  r.ei_recs = -26.02;
  d = ComputeDifferenceMetrics(r);
  CHECK(*d.d_market == doctest::Approx(0.91).epsilon(1e-2));

  r.ei_mef = 0.0;
  d = ComputeDifferenceMetrics(r);
  CHECK_FALSE(d.d_market.has_value());
  CHECK_FALSE(d.d_location.has_value());

  r.ei_mef = -1.6e-14;
  CHECK_FALSE(ComputeDifferenceMetrics(r).d_market.has_value());
  r.ei_mef = 2.0 * kNegligibleIntensity;
  CHECK(ComputeDifferenceMetrics(r).d_market.has_value());
}

TEST_CASE("Certify: grid-only plant") {
  const std::size_t n = 24;
  const auto rep = Certify(KwConst(n, kGridOnlyKw), KwConst(n, 0),
                           ConstFactors(n, 0.71, 0.4835, 0.71), kLoad);
  CHECK(rep.annual_h2_kg == doctest::Approx(kLoad * n));
  CHECK(rep.ei_market == doctest::Approx(37.60).epsilon(5e-4));
  CHECK(rep.ei_recs == 0.0);
  CHECK(rep.ei_location == doctest::Approx(40.55).epsilon(5e-4));
  CHECK(rep.ei_aef == doctest::Approx(rep.ei_location).epsilon(1e-12));
  CHECK(rep.ei_mef == doctest::Approx(kDirectKwhPerKg * 0.4835));
  CHECK(rep.recs_generated_mwh == 0.0);
  REQUIRE(rep.d_location.has_value());
}

TEST_CASE("Certify: invariants on random flows") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 20000.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 48;
    std::vector<double> a(n), b(n);
    for (auto& x : a) x = u(rng) * (trial % 3 == 0 ? 0.2 : 1.0);
    for (auto& x : b) x = u(rng) * (trial % 3 == 1 ? 0.2 : 1.0);
    const auto rep = Certify(Kw(a), Kw(b), ConstFactors(n, 0.66, 0.5, 0.6), kLoad);
    CHECK(rep.ei_market >= 0.0);
    CHECK(rep.ei_recs <= 0.0);
    const int cases = (rep.ei_market > 0) + (rep.ei_recs < 0) +
                      (rep.ei_market == 0 && rep.ei_recs == 0);
    CHECK(cases == 1);
    double sb = 0;
    for (double x : b) sb += x;
    CHECK(rep.recs_generated_mwh == doctest::Approx(sb / 1000.0).epsilon(1e-14));
    CHECK(rep.ei_location == doctest::Approx(rep.e_location_kg / rep.annual_h2_kg));
    CHECK(rep.ei_mef == doctest::Approx(rep.e_mef_kg / rep.annual_h2_kg));
  }
}

TEST_CASE("Certify: isolated plant is zero under every method") {
  const auto rep = Certify(KwConst(10, 0), KwConst(10, 0), ConstFactors(10, 0.7, 0.5, 0.6), kLoad);
  CHECK(rep.ei_market == 0.0);
  CHECK(rep.ei_recs == 0.0);
  CHECK(rep.ei_location == 0.0);
  CHECK(rep.ei_mef == 0.0);
  CHECK(rep.ei_aef == 0.0);
  CHECK_FALSE(rep.d_market.has_value());
}

TEST_CASE("Certify: sub-range batch period") {
  const auto rep = Certify(Kw({100, 0, 0, 0}), Kw({0, 0, 0, 100}),
                           ConstFactors(4, 0.5, 0.5, 0.5), 1.0, HourWindow{0, 2});
  CHECK(rep.annual_h2_kg == 2.0);
  CHECK(rep.e_location_kg == doctest::Approx(50.0));
  CHECK(rep.recs_generated_mwh == 0.0);
}

TEST_CASE("FactorsFor pairs buy-side and sell-side series") {
  GridProfile buy, sell;
  buy.zone_id = "B";
  buy.mef = Ef(3, 0.52);
  buy.aef = Ef(3, 0.63);
  buy.ef_location = 0.66;
  sell.zone_id = "S";
  sell.mef = Ef(3, 0.19);
  sell.aef = Ef(3, 0.12);
  sell.ef_location = 0.15;
  const auto f = FactorsFor(buy, sell);
  CHECK(f.ef_location == 0.66);
  CHECK(f.mef_buy[0] == 0.52);
  CHECK(f.mef_sell[0] == 0.19);
  CHECK(f.aef_sell[0] == 0.12);
}
