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

#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "h2cert/config.hpp"
#include "h2cert/errors.hpp"
#include "h2cert/fixtures.hpp"
#include "h2cert/ingest.hpp"
#include "h2cert/report.hpp"
#include "h2cert/runner.hpp"

namespace h2cert::cli {
namespace {

namespace fs = std::filesystem;

struct GlobalFlags {
  std::optional<std::string> out;
  std::optional<std::size_t> horizon;
  std::optional<std::uint64_t> seed;
  std::optional<double> fx;
  bool export_lp = false;
};

int ExitCodeFor(lp::SolveStatus status) {
  switch (status) {
    case lp::SolveStatus::kOptimal:
      return kExitOk;
    case lp::SolveStatus::kInfeasible:
      return kExitInfeasible;
    case lp::SolveStatus::kUnbounded:
      return kExitUnbounded;
    case lp::SolveStatus::kSolverFailure:
      return kExitSolverFailure;
  }
  return kExitSolverFailure;
}

RunConfig Load(const std::string& path, const GlobalFlags& g) {
  ConfigOverrides o;
  o.horizon = g.horizon;
  o.seed = g.seed;
  o.fx_usd_per_aud = g.fx;
  if (g.out) o.output_dir = *g.out;
  return LoadRunConfig(path, o);
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string SummaryLine(const ScenarioReport& r) {
  std::string line = r.name + ": " + std::string(lp::StatusName(r.status));
  if (r.costs) line += "  LCOH " + Fixed(r.costs->lcoh_usd_per_kg, 4) + " USD/kg";
  if (r.emissions) {
    line += "  EI_Market " + Fixed(r.emissions->ei_market, 3) + "  EI_MEF " +
            Fixed(r.emissions->ei_mef, 3) + " kgCO2e/kgH2";
  }
  return line;
}

// MPS export of every LP, one file per scenario and fixed-point iteration.
void AttachExport(Runner& runner, const fs::path& dir, std::ostream& out) {
  auto mutex = std::make_shared<std::mutex>();
  runner.set_model_hook([dir, mutex, &out](const std::string& name, int iteration,
                                          const lp::LpModel& model) {
    std::ostringstream text;
    const std::string stem = FileStem(name) + "_iter" + std::to_string(iteration);
    lp::WriteMps(model, text, stem);
    const fs::path path = dir / "lp" / (stem + ".mps");
    WriteFileAtomic(path, text.str());
    std::lock_guard lock(*mutex);
    out << "wrote " << path.generic_string() << "\n";
  });
}

void WriteScenarioFiles(const ScenarioOutcome& o, const fs::path& dir) {
  const std::string stem = FileStem(o.spec.name);
  WriteReport(o.report, dir / (stem + ".json"));
  if (o.result.solution.optimal()) {
    WriteDispatchCsv(o.result.solution.dispatch, dir / (stem + "_dispatch.csv"));
  }
}

int CmdSolve(const std::string& config_path, const std::string& name, const GlobalFlags& g,
             std::ostream& out, std::ostream& err) {
  const RunConfig config = Load(config_path, g);
  const ScenarioConfig* scenario = FindScenario(config, name);
  if (!scenario) {
    err << "error: " << config_path << ": no scenario named '" << name << "'\n";
    return kExitInputError;
  }
  Runner runner(config);
  if (g.export_lp) AttachExport(runner, config.output_dir, out);
  const ScenarioOutcome o = runner.Solve(*scenario);
  WriteScenarioFiles(o, config.output_dir);
  out << SummaryLine(o.report) << "\n";
  if (!o.report.message.empty()) err << o.report.message << "\n";
  return ExitCodeFor(o.report.status);
}

int CmdSuite(const std::string& config_path, const GlobalFlags& g, std::ostream& out,
             std::ostream& err) {
  const RunConfig config = Load(config_path, g);
  Runner runner(config);
  if (g.export_lp) AttachExport(runner, config.output_dir, out);
  const std::vector<ScenarioOutcome> outcomes = runner.Suite();
  for (const ScenarioOutcome& o : outcomes) {
    WriteScenarioFiles(o, config.output_dir);
    out << SummaryLine(o.report) << "\n";
    if (!o.report.message.empty()) err << o.report.message << "\n";
  }
  const fs::path path = config.output_dir / "suite.json";
  WriteFileAtomic(path, DumpJson(SuiteJson(outcomes, runner.MakeProvenance())));
  out << "wrote " << path.generic_string() << "\n";
  return kExitOk;
}

int CmdSweepRe(const std::string& config_path, std::size_t points, const GlobalFlags& g,
               std::ostream& out, std::ostream& err) {
  const RunConfig config = Load(config_path, g);
  Runner runner(config);
  if (g.export_lp) AttachExport(runner, config.output_dir, out);
  const ReSweep sweep = runner.SweepReFactor(points);
  if (!sweep.off_grid.report.optimal()) {
    err << "error: off-grid reference solve ended "
        << lp::StatusName(sweep.off_grid.report.status) << "; " << sweep.off_grid.report.message
        << "\n";
    return ExitCodeFor(sweep.off_grid.report.status);
  }
  WriteFileAtomic(config.output_dir / "sweep_re.csv", ReSweepCsv(sweep));
  WriteFileAtomic(config.output_dir / "sweep_re.json",
                  DumpJson(ReSweepJson(sweep, runner.MakeProvenance())));
  for (const ReSweepPoint& p : sweep.points) out << SummaryLine(p.outcome.report) << "\n";
  out << "wrote " << (config.output_dir / "sweep_re.csv").generic_string() << "\n";
  return kExitOk;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int CmdSweepGeo(const std::string& config_path, const std::string& zones, const GlobalFlags& g,
                std::ostream& out, std::ostream&) {
  const RunConfig config = Load(config_path, g);
  std::vector<std::string> sell = zones.empty() ? config.sell_zones : SplitList(zones);
  if (sell.empty()) throw ValidationError("no sell zones given and none in the config");
  Runner runner(config);
  if (g.export_lp) AttachExport(runner, config.output_dir, out);
  const GeoSweep sweep = runner.SweepGeography(sell);
  WriteFileAtomic(config.output_dir / "sweep_geo.csv", GeoSweepCsv(sweep));
  WriteFileAtomic(config.output_dir / "sweep_geo.json",
                  DumpJson(GeoSweepJson(sweep, runner.MakeProvenance())));
  out << SummaryLine(sweep.grid_baseline.report) << "\n";
  for (const GeoSweepPoint& p : sweep.points) out << SummaryLine(p.outcome.report) << "\n";
  out << "wrote " << (config.output_dir / "sweep_geo.csv").generic_string() << "\n";
  return kExitOk;
}

int CmdSynth(const std::string& kind_name, const std::string& dir, const GlobalFlags& g,
             std::ostream& out) {
  const auto kind = ParseFixtureKind(kind_name);
  if (!kind) throw ValidationError("unknown fixture kind '" + kind_name + "'");
  const std::size_t horizon = g.horizon.value_or(168);
  const std::uint64_t seed = g.seed.value_or(1);
  const double fx = g.fx.value_or(kDefaultFxUsdPerAud);
  const Fixture f = SynthFixture(*kind, horizon, seed, fx);
  const fs::path root(dir);
  nlohmann::ordered_json zones = nlohmann::ordered_json::object();
  for (const auto& [name, zone] : f.zones) {
    const std::string stem = FileStem(name);
    WriteGridProfile(zone.grid, root / (stem + ".csv"), fx);
    WriteReProfile(ReProfile{zone.ref_wind, zone.ref_pv}, root / (stem + "_re.csv"));
    zones[name] = {{"profile", stem + ".csv"}, {"re_profile", stem + "_re.csv"}};
  }
  nlohmann::ordered_json config = {{"horizon", horizon},
                                   {"fx_usd_per_aud", fx},
                                   {"seed", seed},
                                   {"zones", zones},
                                   {"plant_zone", f.plant_zone}};
  if (f.sell_zone != f.plant_zone) config["sell_zones"] = {f.sell_zone};
  WriteFileAtomic(root / "config.json", DumpJson(config));
  out << "wrote " << (root / "config.json").generic_string() << "\n";
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hydrogen plant sizing and emissions certification"};
  app.name("h2cert");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--out", g.out, "Output directory (overrides the config)");
  app.add_option("--horizon", g.horizon, "Horizon in hours")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for synthetic fixtures");
  app.add_option("--fx", g.fx, "USD per AUD")->check(CLI::PositiveNumber);
  app.add_flag("--export-lp", g.export_lp, "Write every LP as free MPS under <out>/lp");

  std::string config_path;
  std::string scenario;
  std::size_t points = 11;
  std::string sell_zones;
  std::string kind = "diurnal";
  std::string dir;

  auto* solve = app.add_subcommand("solve", "Solve one scenario");
  solve->add_option("--config", config_path, "Run configuration (JSON)")->required();
  solve->add_option("--scenario", scenario, "Scenario name")->required();

  auto* suite = app.add_subcommand("suite", "Solve every configured scenario");
  suite->add_option("--config", config_path, "Run configuration (JSON)")->required();

  auto* sweep_re = app.add_subcommand("sweep-re", "Sweep the RE factor at fixed electrolyser");
  sweep_re->add_option("--config", config_path, "Run configuration (JSON)")->required();
  sweep_re->add_option("--points", points, "Number of sweep points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));

  auto* sweep_geo = app.add_subcommand("sweep-geo", "Sweep the renewable sell zone");
  sweep_geo->add_option("--config", config_path, "Run configuration (JSON)")->required();
  sweep_geo->add_option("--sell-zones", sell_zones, "Comma-separated zone names");

  auto* synth = app.add_subcommand("synth", "Write a synthetic fixture as profile files");
  synth->add_option("--kind", kind, "flat, diurnal, two-zone-contrast or random-walk");
  synth->add_option("--dir", dir, "Destination directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (solve->parsed()) return CmdSolve(config_path, scenario, g, out, err);
    if (suite->parsed()) return CmdSuite(config_path, g, out, err);
    if (sweep_re->parsed()) return CmdSweepRe(config_path, points, g, out, err);
    if (sweep_geo->parsed()) return CmdSweepGeo(config_path, sell_zones, g, out, err);
    if (synth->parsed()) return CmdSynth(kind, dir, g, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  return kExitInputError;
}

}  // namespace h2cert::cli
