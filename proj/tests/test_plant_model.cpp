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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "h2cert/core_types.hpp"
#include "h2cert/economics.hpp"
#include "h2cert/errors.hpp"
#include "h2cert/fixtures.hpp"
#include "h2cert/lp_solver.hpp"
#include "h2cert/plant_model.hpp"
#include "h2cert/policy.hpp"
#include "solution_checks.hpp"

using namespace h2cert;

namespace {

constexpr double kMuPipe = 0.83;

CapacitySpec NoRenewables() {
  CapacitySpec caps;
  caps.wind_kw = Capacity::Fixed(0.0);
  caps.pv_kw = Capacity::Fixed(0.0);
  return caps;
}

struct Solved {
  PlantModel plant;
  lp::LpSolution solution;
};

Solved SolveWithCosts(const PlantParameters& p, const Zone& zone,
                      const CapacitySpec& caps, GridMode mode, std::size_t n) {
  Solved s{BuildPlant(p, zone.ref_wind, zone.ref_pv, caps, mode, kMuPipe, n), {}};
  s.plant.model.SetObjective(
      BuildCostObjective(p, s.plant.vars, CoLocatedPricing(zone.grid), 609.9));
  s.solution = lp::DefaultBackend().Solve(s.plant.model);
  return s;
}

const Zone& OnlyZone(const Fixture& f) { return f.zones.at(f.plant_zone); }

}  // namespace

TEST_CASE("1000 kW into the electrolyser yields 17.766 kg") {
  PlantParameters p;
  p.load_kg_per_h = 1000.0 * 0.7 / 39.4;
  const Fixture f = SynthFixture(FixtureKind::kFlat, 1, 1);
  auto s = SolveWithCosts(p, OnlyZone(f), NoRenewables(), GridMode::kGridBuySell, 1);
  REQUIRE(s.solution.optimal());
  const Dispatch d = ExtractDispatch(s.plant.vars, s.solution);
  CHECK(d.e_el_kw[0] == doctest::Approx(1000.0).epsilon(1e-9));
  CHECK(d.h_el_kg[0] == doctest::Approx(17.766).epsilon(1e-4));
}

TEST_CASE("grid-only plant on a flat price meets the load through the pipeline") {
  PlantParameters p;
  const std::size_t n = 24;
  const Fixture f = SynthFixture(FixtureKind::kFlat, n, 1);
  auto s = SolveWithCosts(p, OnlyZone(f), NoRenewables(), GridMode::kGridBuySell, n);
  REQUIRE(s.solution.optimal());
  const Dispatch d = ExtractDispatch(s.plant.vars, s.solution);
  for (std::size_t t = 0; t < n; ++t) {
    CHECK(d.h_comp1_kg[t] == doctest::Approx(180.0));
    CHECK(d.h_from_store_kg[t] == doctest::Approx(0.0));
    CHECK(d.import_kw[t] == doctest::Approx(10280.8).epsilon(1e-5));
    CHECK(d.export_kw[t] == doctest::Approx(0.0));
  }
  CHECK(d.capacities.storage_kg == doctest::Approx(0.0));
  CHECK(testing::CheckConservation(d, p, kMuPipe).Worst() <= 1e-6);
}

TEST_CASE("off-grid plant without renewables is infeasible") {
  PlantParameters p;
  const Fixture f = SynthFixture(FixtureKind::kFlat, 12, 1);
  auto s = SolveWithCosts(p, OnlyZone(f), NoRenewables(), GridMode::kOffGrid, 12);
  CHECK(s.solution.status == lp::SolveStatus::kInfeasible);
}

TEST_CASE("grid modes pin the exchange bounds") {
  PlantParameters p;
  const Fixture f = SynthFixture(FixtureKind::kFlat, 4, 1);
  const Zone& z = OnlyZone(f);
  const auto off = BuildPlant(p, z.ref_wind, z.ref_pv, {}, GridMode::kOffGrid, kMuPipe, 4);
  const auto sell = BuildPlant(p, z.ref_wind, z.ref_pv, {}, GridMode::kSellOnly, kMuPipe, 4);
  const auto both = BuildPlant(p, z.ref_wind, z.ref_pv, {}, GridMode::kGridBuySell, kMuPipe, 4);
  for (std::size_t t = 0; t < 4; ++t) {
    CHECK(off.model.variable(off.vars.import_kw[t]).upper == 0.0);
    CHECK(off.model.variable(off.vars.export_kw[t]).upper == 0.0);
    CHECK(sell.model.variable(sell.vars.import_kw[t]).upper == 0.0);
    CHECK(sell.model.variable(sell.vars.export_kw[t]).upper > 1e30);
    CHECK(both.model.variable(both.vars.import_kw[t]).upper > 1e30);
  }
  for (int j = 0; j < both.model.num_variables(); ++j) {
    CHECK(both.model.variable(lp::VarId{j}).lower >= 0.0);
  }
}

TEST_CASE("BuildPlant rejects mismatched inputs") {
  PlantParameters p;
  const Fixture f = SynthFixture(FixtureKind::kFlat, 10, 1);
  const Zone& z = OnlyZone(f);
  CHECK_THROWS_AS(BuildPlant(p, z.ref_wind, z.ref_pv, {}, GridMode::kOffGrid, kMuPipe, 11),
                  ValidationError);
  CHECK_THROWS_AS(BuildPlant(p, z.grid.mef, z.ref_pv, {}, GridMode::kOffGrid, kMuPipe, 10),
                  UnitMismatch);
  p.eta_el = 0.0;
  CHECK_THROWS_AS(BuildPlant(p, z.ref_wind, z.ref_pv, {}, GridMode::kOffGrid, kMuPipe, 10),
                  ValidationError);
}

TEST_CASE("conservation and no simultaneous trade on optimized fixtures") {
  PlantParameters p;
  const std::size_t n = 48;
  for (auto kind : {FixtureKind::kFlat, FixtureKind::kDiurnal, FixtureKind::kRandomWalk}) {
    const Fixture f = SynthFixture(kind, n, 5);
    for (auto mode : {GridMode::kOffGrid, GridMode::kSellOnly, GridMode::kGridBuySell}) {
      CAPTURE(FixtureKindName(kind));
      CAPTURE(GridModeName(mode));
      auto s = SolveWithCosts(p, OnlyZone(f), {}, mode, n);
      REQUIRE(s.solution.optimal());
      const Dispatch d = ExtractDispatch(s.plant.vars, s.solution);
      const auto r = testing::CheckConservation(d, p, kMuPipe);
      CHECK(r.electricity_balance <= 1e-6);
      CHECK(r.mass_balance <= 1e-6);
      CHECK(r.soc_bounds <= 1e-6);
      CHECK(r.cyclic_gap <= 1e-6);
      CHECK(r.Worst() <= 1e-6);
      for (std::size_t t = 0; t < n; ++t) {
        CHECK(std::min(d.import_kw[t], d.export_kw[t]) <= 1e-6);
      }
    }
  }
}

TEST_CASE("relaxing the grid mode never raises the optimum") {
  PlantParameters p;
  const std::size_t n = 48;
  for (auto kind : {FixtureKind::kFlat, FixtureKind::kDiurnal, FixtureKind::kRandomWalk}) {
    const Fixture f = SynthFixture(kind, n, 9);
    double prev = INFINITY;
    for (auto mode : {GridMode::kOffGrid, GridMode::kSellOnly, GridMode::kGridBuySell}) {
      auto s = SolveWithCosts(p, OnlyZone(f), {}, mode, n);
      REQUIRE(s.solution.optimal());
      CHECK(s.solution.objective_value <= prev * (1 + 1e-9));
      prev = s.solution.objective_value;
    }
  }
}

TEST_CASE("ExtractDispatch scales reference generation by installed capacity") {
  PlantParameters p;
  const std::size_t n = 24;
  const Fixture f = SynthFixture(FixtureKind::kDiurnal, n, 2);
  const Zone& z = OnlyZone(f);
  auto s = SolveWithCosts(p, z, {}, GridMode::kOffGrid, n);
  REQUIRE(s.solution.optimal());
  const Dispatch d = ExtractDispatch(s.plant.vars, s.solution);
  for (std::size_t t = 0; t < n; ++t) {
    CHECK(d.gen_pv_kw[t] ==
          doctest::Approx(z.ref_pv[t] / p.c_ref_pv_kw * d.capacities.pv_kw));
    CHECK(d.gen_wind_kw[t] ==
          doctest::Approx(z.ref_wind[t] / p.c_ref_wind_kw * d.capacities.wind_kw));
  }
  CHECK(d.soc_kg.unit() == Unit::kKg);
  CHECK(d.h_el_kg.unit() == Unit::kKgPerH);
}
