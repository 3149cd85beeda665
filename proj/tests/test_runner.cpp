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

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "h2cert/config.hpp"
#include "h2cert/report.hpp"
#include "h2cert/runner.hpp"
#include "json.hpp"
#include "temp_dir.hpp"

using namespace h2cert;
using h2cert::testing::ReadText;
using h2cert::testing::TempDir;
using h2cert::testing::WriteText;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "h2cert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::size_t CountLines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

bool Contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

RunConfig FixtureConfig(const std::string& fixture, std::size_t horizon) {
  return ParseRunConfig(R"({"fixture": ")" + fixture + R"(", "horizon": )" +
                            std::to_string(horizon) + "}",
                        ".", {}, "test.json");
}

}  // namespace

TEST_CASE("runner solves a single scenario and its report round-trips") {
  const RunConfig config = FixtureConfig("diurnal", 48);
  Runner runner(config);
  std::map<std::string, int> hook_calls;
  runner.set_model_hook([&](const std::string& name, int, const lp::LpModel&) {
    ++hook_calls[name];
  });
  const ScenarioOutcome o = runner.Solve(*FindScenario(config, "Yearly"));
  REQUIRE(o.report.optimal());
  CHECK(hook_calls.size() == 2);
  CHECK(hook_calls["OffGrid"] >= 1);
  CHECK(hook_calls["Yearly"] == o.report.fixed_point_iterations);
  CHECK(o.spec.capex_cap_usd.has_value());
  REQUIRE(o.emissions.has_value());
  CHECK(o.report.emissions == o.emissions);
  CHECK(o.report.horizon_hours == 48);

  TempDir dir("runner");
  WriteReport(o.report, dir / "r.json");
  const ScenarioReport back = ReadReport(dir / "r.json");
  CHECK(back == o.report);
  CHECK(DumpJson(ToJson(back)) == ReadText(dir / "r.json"));
}

TEST_CASE("on-grid scenarios are skipped when the off-grid prerequisite fails") {
  RunConfig config = FixtureConfig("flat", 24);
  for (Capacity* c : {&config.capacities.wind_kw, &config.capacities.pv_kw,
                      &config.capacities.electrolyser_kw, &config.capacities.storage_kg}) {
    *c = Capacity::Fixed(0.0);
  }
  config.scenarios = StandardScenarios(config.plant_zone, config.capacities);
  Runner runner(config);
  const std::vector<ScenarioOutcome> outcomes = runner.Suite();
  REQUIRE(outcomes.size() == 8);
  CHECK(outcomes[0].report.status == lp::SolveStatus::kInfeasible);
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    CHECK(outcomes[i].report.status == lp::SolveStatus::kInfeasible);
    CHECK(Contains(outcomes[i].report.message, "CAPEX cap unavailable"));
    CHECK_FALSE(outcomes[i].report.costs.has_value());
  }
}

TEST_CASE("RE sweep has one row per point") {
  const RunConfig config = FixtureConfig("flat", 24);
  Runner runner(config);
  const ReSweep sweep = runner.SweepReFactor(4);
  REQUIRE(sweep.points.size() == 4);
  CHECK(sweep.points.front().re_factor == 0.0);
  for (std::size_t i = 1; i < sweep.points.size(); ++i) {
    CHECK(sweep.points[i].re_factor > sweep.points[i - 1].re_factor);
  }
  const auto& zero = sweep.points.front().outcome;
  REQUIRE(zero.report.optimal());
  REQUIRE(zero.report.capacities.has_value());
  CHECK(zero.report.capacities->wind_kw == 0.0);
  CHECK(zero.report.capacities->pv_kw == 0.0);
  const std::string csv = ReSweepCsv(sweep);
  CHECK(CountLines(csv) == 5);
  CHECK(csv.rfind("re_factor,", 0) == 0);
  CHECK_THROWS(runner.SweepReFactor(1));
}

TEST_CASE("geo sweep on the contrast fixture certifies zero market emissions") {
  const RunConfig config = FixtureConfig("two-zone-contrast", 48);
  Runner runner(config);
  const GeoSweep sweep = runner.SweepGeography(config.sell_zones);
  REQUIRE(sweep.points.size() == 1);
  const ScenarioReport& split = sweep.points[0].outcome.report;
  REQUIRE(split.optimal());
  REQUIRE(split.emissions.has_value());
  CHECK(split.emissions->ei_market <= 0.0);
  CHECK(split.emissions->ei_mef > 0.0);
  REQUIRE(sweep.rec_band_low_usd_per_kg.has_value());
  CHECK(*sweep.rec_band_low_usd_per_kg <= *sweep.rec_band_high_usd_per_kg);
  CHECK(CountLines(GeoSweepCsv(sweep)) == 3);
}

TEST_CASE("cli solve writes the report and dispatch") {
  TempDir dir("cli");
  WriteText(dir / "c.json", R"({"fixture": "flat", "horizon": 24})");
  const auto out = (dir / "out").string();
  const CliResult r = RunCli({"--out", out, "solve", "--config", (dir / "c.json").string(),
                              "--scenario", "Flexible"});
  CHECK(r.code == cli::kExitOk);
  CHECK(Contains(r.out, "Flexible"));
  CHECK(std::filesystem::exists(dir / "out" / "Flexible.json"));
  CHECK(CountLines(ReadText(dir / "out" / "Flexible_dispatch.csv")) == 25);
}

TEST_CASE("cli exit codes") {
  TempDir dir("cli");
  const auto out = (dir / "out").string();

  SUBCASE("infeasible") {
    WriteText(dir / "c.json", R"({"fixture": "flat", "horizon": 24, "capacities": {
        "wind_kw": {"fixed": 0}, "pv_kw": {"fixed": 0}, "electrolyser_kw": {"fixed": 0},
        "storage_kg": {"fixed": 0}}})");
    const CliResult r = RunCli({"--out", out, "solve", "--config",
                                (dir / "c.json").string(), "--scenario", "OffGrid"});
    CHECK(r.code == cli::kExitInfeasible);
    CHECK(std::filesystem::exists(dir / "out" / "OffGrid.json"));
    CHECK_FALSE(std::filesystem::exists(dir / "out" / "OffGrid_dispatch.csv"));
  }
  SUBCASE("missing profile") {
    WriteText(dir / "c.json",
              R"({"zones": {"z": {"profile": "gone.csv", "re_profile": "re.csv"}}})");
    const CliResult r = RunCli({"solve", "--config", (dir / "c.json").string(),
                                "--scenario", "OffGrid"});
    CHECK(r.code == cli::kExitInputError);
    CHECK(Contains(r.err, "gone.csv"));
  }
  SUBCASE("missing config") {
    const CliResult r = RunCli({"suite", "--config", (dir / "nothing.json").string()});
    CHECK(r.code == cli::kExitInputError);
    CHECK(Contains(r.err, "nothing.json"));
  }
  SUBCASE("unknown scenario") {
    WriteText(dir / "c.json", R"({"fixture": "flat", "horizon": 24})");
    const CliResult r = RunCli({"solve", "--config", (dir / "c.json").string(),
                                "--scenario", "Weekly"});
    CHECK(r.code == cli::kExitInputError);
    CHECK(Contains(r.err, "Weekly"));
  }
  SUBCASE("bad arguments") {
    CHECK(RunCli({"solve"}).code == cli::kExitInputError);
    CHECK(RunCli({"frobnicate"}).code == cli::kExitInputError);
    CHECK(RunCli({"--help"}).code == cli::kExitOk);
  }
}

TEST_CASE("cli synth output feeds a file-based suite") {
  TempDir dir("cli");
  const auto data = (dir / "data").string();
  REQUIRE(RunCli({"--horizon", "24", "--seed", "3", "synth", "--kind", "random-walk",
                  "--dir", data}).code == cli::kExitOk);
  const auto out = (dir / "out").string();
  const auto config = (dir / "data" / "config.json").string();
  const CliResult r = RunCli({"--out", out, "suite", "--config", config});
  REQUIRE(r.code == cli::kExitOk);
  const auto doc = nlohmann::ordered_json::parse(ReadText(dir / "out" / "suite.json"));
  CHECK(doc["kind"] == "suite");
  CHECK(doc["table"].size() == 8);
  CHECK(doc["provenance"]["horizon_hours"] == 24);
  for (const char* stem : {"OffGrid", "SellOnly", "Hourly", "Daily", "Monthly", "Yearly",
                           "Flexible", "MefCapZero"}) {
    CAPTURE(stem);
    CHECK(std::filesystem::exists(dir / "out" / (std::string(stem) + ".json")));
  }
  const std::string first = ReadText(dir / "out" / "suite.json");
  REQUIRE(RunCli({"--out", out, "suite", "--config", config}).code == cli::kExitOk);
  CHECK(ReadText(dir / "out" / "suite.json") == first);
}

TEST_CASE("cli sweeps and LP export") {
  TempDir dir("cli");
  WriteText(dir / "c.json", R"({"fixture": "two-zone-contrast", "horizon": 24})");
  const auto out = (dir / "out").string();
  const auto cfg = (dir / "c.json").string();
  CHECK(RunCli({"--out", out, "sweep-re", "--config", cfg, "--points", "3"}).code ==
        cli::kExitOk);
  CHECK(CountLines(ReadText(dir / "out" / "sweep_re.csv")) == 4);
  CHECK(RunCli({"--out", out, "sweep-geo", "--config", cfg}).code == cli::kExitOk);
  CHECK(std::filesystem::exists(dir / "out" / "sweep_geo.json"));
  CHECK(RunCli({"--out", out, "sweep-geo", "--config", cfg, "--sell-zones", "atlantis"})
            .code == cli::kExitInputError);
  CHECK(RunCli({"--out", out, "--export-lp", "solve", "--config", cfg, "--scenario",
                "OffGrid"}).code == cli::kExitOk);
  CHECK(std::filesystem::exists(dir / "out" / "lp" / "OffGrid_iter1.mps"));
}

TEST_CASE("constant-valued fixture solves the aggregate correlation windows") {
  // Phase 1 ends here with a rounding-level residual on a zero bound.
  const RunConfig config = ParseRunConfig(R"({"fixture": "flat", "horizon": 168, "seed": 7})",
                                          ".", {}, "test.json");
  Runner runner(config);
  const ScenarioOutcome daily = runner.Solve(*FindScenario(config, "Daily"));
  const ScenarioOutcome monthly = runner.Solve(*FindScenario(config, "Monthly"));
  REQUIRE(daily.report.optimal());
  REQUIRE(monthly.report.optimal());
  CHECK(monthly.report.costs->lcoh_usd_per_kg <=
        daily.report.costs->lcoh_usd_per_kg * (1.0 + 1e-9));
}
