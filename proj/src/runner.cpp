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

#include "h2cert/runner.hpp"

#include <cmath>
#include <future>
#include <string>
#include <utility>

#include "h2cert/errors.hpp"
#include "h2cert/ingest.hpp"

namespace h2cert {
namespace {

using Json = nlohmann::ordered_json;

Json NumberOrNull(std::optional<double> v) {
  return v && std::isfinite(*v) ? Json(*v) : Json(nullptr);
}

std::string Cell(std::optional<double> v) { return v ? FormatDouble(*v) : std::string(); }

ScenarioOutcome NotRun(const ScenarioSpec& spec, lp::SolveStatus status, std::string message,
                       std::size_t horizon) {
  ScenarioOutcome out;
  out.spec = spec;
  out.result.solution.scenario_name = spec.name;
  out.result.solution.status = status;
  out.result.solution.message = std::move(message);
  out.result.solution.buy_zone = BuyZone(spec.geo);
  out.result.solution.sell_zone = SellZone(spec.geo);
  out.report = BuildScenarioReport(spec, out.result, std::nullopt, horizon);
  return out;
}

// Emission intensities and LCOH columns shared by the sweep CSVs.
struct Metrics {
  std::optional<double> lcoh, ei_market, ei_recs, ei_location, ei_mef, ei_aef, d_market,
      d_location;
};

Metrics MetricsOf(const ScenarioOutcome& o) {
  Metrics m;
  if (o.report.costs) m.lcoh = o.report.costs->lcoh_usd_per_kg;
  if (const auto& e = o.report.emissions) {
    m.ei_market = e->ei_market;
    m.ei_recs = e->ei_recs;
    m.ei_location = e->ei_location;
    m.ei_mef = e->ei_mef;
    m.ei_aef = e->ei_aef;
    m.d_market = e->d_market;
    m.d_location = e->d_location;
  }
  return m;
}

constexpr const char* kReSweepNotes[] = {
    "electrolyser capacity fixed at the off-grid optimum",
    "wind:PV split follows the off-grid optimum",
    "storage capacity re-optimized at every sweep point",
    "operation in GridBuySell mode without temporal correlation or CAPEX cap",
};

constexpr const char* kGeoSweepNotes[] = {
    "renewables sell into the sell zone; the plant buys from the plant zone",
    "yearly temporal correlation on every split-geography point",
    "no CAPEX cap",
    "certificate band: baseline LCOH plus imported MWh times the certificate price",
};

}  // namespace

std::string FileStem(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    out += safe ? c : '_';
  }
  return out.empty() ? "scenario" : out;
}

Runner::Runner(const RunConfig& config)
    : config_(config), backend_(MakeBackend(config.solver)) {}

ScenarioOutcome Runner::Run(const ScenarioSpec& spec) const {
  OptimizeOptions options = MakeOptimizeOptions(config_.solver, backend_);
  if (hook_) {
    options.on_model = [this, &spec](const lp::LpModel& model, int iteration) {
      hook_(spec.name, iteration, model);
    };
  }
  ScenarioOutcome out;
  out.spec = spec;
  out.result = OptimizePlant(spec, config_.params, config_.zones, options);
  if (out.result.solution.optimal()) {
    const Zone& buy = config_.zones.find(BuyZone(spec.geo))->second;
    const Zone& sell = config_.zones.find(SellZone(spec.geo))->second;
    const Dispatch& d = out.result.solution.dispatch;
    out.emissions = Certify(d.import_kw, d.export_kw, FactorsFor(buy.grid, sell.grid),
                            config_.params.load_kg_per_h);
  }
  out.report = BuildScenarioReport(spec, out.result, out.emissions, config_.horizon);
  return out;
}

ScenarioOutcome Runner::OffGridPrerequisite() const {
  for (const ScenarioConfig& s : config_.scenarios) {
    if (s.spec.mode == GridMode::kOffGrid) return Run(s.spec);
  }
  return Run(StandardScenarios(config_.plant_zone, config_.capacities).front().spec);
}

ScenarioOutcome Runner::Solve(const ScenarioConfig& scenario,
                              std::optional<double> off_grid_capex) const {
  ScenarioSpec spec = scenario.spec;
  if (scenario.capex_from_off_grid) {
    if (!off_grid_capex) {
      const ScenarioOutcome off = OffGridPrerequisite();
      if (!off.result.solution.optimal()) {
        return NotRun(spec, off.result.solution.status,
                      "scenario '" + spec.name +
                          "': CAPEX cap unavailable, off-grid prerequisite ended " +
                          std::string(lp::StatusName(off.result.solution.status)),
                      config_.horizon);
      }
      off_grid_capex = off.result.costs.capex_total_usd;
    }
    spec.capex_cap_usd = *off_grid_capex;
  }
  return Run(spec);
}

std::vector<ScenarioOutcome> Runner::Suite() const {
  const auto& scenarios = config_.scenarios;
  std::vector<std::optional<ScenarioOutcome>> results(scenarios.size());

  bool needs_cap = false;
  std::optional<std::size_t> off_index;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    needs_cap = needs_cap || scenarios[i].capex_from_off_grid;
    if (!off_index && scenarios[i].spec.mode == GridMode::kOffGrid) off_index = i;
  }
  std::optional<ScenarioOutcome> prerequisite;
  if (off_index) {
    results[*off_index] = Run(scenarios[*off_index].spec);
    prerequisite = results[*off_index];
  } else if (needs_cap) {
    prerequisite = OffGridPrerequisite();
  }
  std::optional<double> cap;
  if (prerequisite && prerequisite->result.solution.optimal()) {
    cap = prerequisite->result.costs.capex_total_usd;
  }

  std::vector<std::pair<std::size_t, std::future<ScenarioOutcome>>> pending;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    if (results[i]) continue;
    const ScenarioConfig& sc = scenarios[i];
    if (sc.capex_from_off_grid && !cap) {
      results[i] = NotRun(sc.spec, prerequisite->result.solution.status,
                          "scenario '" + sc.spec.name +
                              "': CAPEX cap unavailable, off-grid prerequisite ended " +
                              std::string(lp::StatusName(prerequisite->result.solution.status)),
                          config_.horizon);
      continue;
    }
    pending.emplace_back(i, std::async(std::launch::async, [this, &sc, cap] {
                           return Solve(sc, cap);
                         }));
  }
  for (auto& [i, future] : pending) results[i] = future.get();

  std::vector<ScenarioOutcome> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

ReSweep Runner::SweepReFactor(std::size_t points) const {
  if (points < 2) throw ValidationError("an RE-factor sweep needs at least 2 points");
  ReSweep sweep;
  sweep.off_grid = OffGridPrerequisite();
  if (!sweep.off_grid.result.solution.optimal()) return sweep;

  const Capacities& c = sweep.off_grid.result.solution.dispatch.capacities;
  const double re_total = c.wind_kw + c.pv_kw;
  if (!(c.electrolyser_kw > 0.0) || !(re_total > 0.0)) {
    throw DomainError("off-grid optimum has no electrolyser or no renewables");
  }
  const double wind_share = c.wind_kw / re_total;
  const double r_max = 1.5 * re_total / c.electrolyser_kw;

  std::vector<std::future<ScenarioOutcome>> pending;
  for (std::size_t k = 0; k < points; ++k) {
    const double r = r_max * static_cast<double>(k) / static_cast<double>(points - 1);
    ScenarioSpec spec;
    spec.name = "re_factor=" + FormatDouble(r);
    spec.mode = GridMode::kGridBuySell;
    spec.geo = CoLocated{config_.plant_zone};
    spec.capacities = config_.capacities;
    spec.capacities.electrolyser_kw = Capacity::Fixed(c.electrolyser_kw);
    const double re_kw = r * c.electrolyser_kw;
    spec.capacities.wind_kw = Capacity::Fixed(re_kw * wind_share);
    spec.capacities.pv_kw = Capacity::Fixed(re_kw * (1.0 - wind_share));
    sweep.points.push_back(ReSweepPoint{r, {}});
    pending.push_back(std::async(std::launch::async, [this, spec] { return Run(spec); }));
  }
  for (std::size_t k = 0; k < points; ++k) sweep.points[k].outcome = pending[k].get();
  return sweep;
}

GeoSweep Runner::SweepGeography(const std::vector<std::string>& sell_zones) const {
  if (sell_zones.empty()) throw ValidationError("a geographic sweep needs sell zones");
  for (const std::string& z : sell_zones) {
    if (!config_.zones.contains(z)) throw ValidationError("unknown sell zone '" + z + "'");
  }
  GeoSweep sweep;
  ScenarioSpec base;
  base.name = "GridBaseline";
  base.mode = GridMode::kGridBuySell;
  base.geo = CoLocated{config_.plant_zone};
  base.capacities = config_.capacities;
  base.capacities.wind_kw = Capacity::Fixed(0.0);
  base.capacities.pv_kw = Capacity::Fixed(0.0);

  std::vector<std::future<ScenarioOutcome>> pending;
  pending.push_back(std::async(std::launch::async, [this, base] { return Run(base); }));
  for (const std::string& zone : sell_zones) {
    ScenarioSpec spec;
    spec.name = "Split:" + zone;
    spec.mode = GridMode::kGridBuySell;
    spec.tc_interval = TcInterval::kYearly;
    spec.geo = Split{zone, config_.plant_zone};
    spec.capacities = config_.capacities;
    pending.push_back(std::async(std::launch::async, [this, spec] { return Run(spec); }));
  }
  sweep.grid_baseline = pending[0].get();
  for (std::size_t k = 0; k < sell_zones.size(); ++k) {
    sweep.points.push_back(GeoSweepPoint{sell_zones[k], pending[k + 1].get()});
  }

  const ScenarioReport& b = sweep.grid_baseline.report;
  if (b.optimal() && b.costs && b.energy) {
    const double per_aud = b.energy->import_mwh * config_.fx_usd_per_aud / b.costs->annual_h2_kg;
    sweep.rec_band_low_usd_per_kg = b.costs->lcoh_usd_per_kg + per_aud * config_.rec_price_low_aud;
    sweep.rec_band_high_usd_per_kg =
        b.costs->lcoh_usd_per_kg + per_aud * config_.rec_price_high_aud;
  }
  return sweep;
}

Provenance Runner::MakeProvenance(std::vector<std::string> notes) const {
  Provenance p;
  p.backend = std::string(backend_.name());
  p.horizon_hours = config_.horizon;
  p.seed = config_.seed;
  p.fx_usd_per_aud = config_.fx_usd_per_aud;
  p.inputs = config_.InputsDescription();
  p.plant_zone = config_.plant_zone;
  p.notes = std::move(notes);
  return p;
}

nlohmann::ordered_json SuiteJson(const std::vector<ScenarioOutcome>& outcomes,
                                 const Provenance& provenance) {
  Json table = Json::array();
  Json reports = Json::array();
  for (const ScenarioOutcome& o : outcomes) {
    const ScenarioReport& r = o.report;
    Json row = {{"scenario", r.name}, {"status", lp::StatusName(r.status)}};
    if (r.costs) {
      const LcohComponents c = LcohByComponent(*r.costs);
      row["lcoh_usd_per_kg"] = r.costs->lcoh_usd_per_kg;
      row["lcoh_breakdown_usd_per_kg"] = {{"electrolyser", c.electrolyser},
                                          {"wind", c.wind},
                                          {"pv", c.pv},
                                          {"storage", c.storage},
                                          {"grid", c.grid}};
    } else {
      row["lcoh_usd_per_kg"] = nullptr;
      row["lcoh_breakdown_usd_per_kg"] = nullptr;
    }
    row["ei_market"] = r.emissions ? Json(r.emissions->ei_market) : Json(nullptr);
    row["ei_mef"] = r.emissions ? Json(r.emissions->ei_mef) : Json(nullptr);
    table.push_back(std::move(row));
    reports.push_back(ToJson(r));
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "suite"},
          {"provenance", ToJson(provenance)},
          {"table", std::move(table)},
          {"scenarios", std::move(reports)}};
}

std::string ReSweepCsv(const ReSweep& sweep) {
  std::string out =
      "re_factor,status,wind_kw,pv_kw,electrolyser_kw,storage_kg,lcoh_usd_per_kg,ei_market,"
      "ei_recs,ei_location,ei_mef,ei_aef,d_market,d_location,re_capacity_factor\n";
  for (const ReSweepPoint& p : sweep.points) {
    const ScenarioReport& r = p.outcome.report;
    const Metrics m = MetricsOf(p.outcome);
    std::optional<double> w, pv, el, st, cf;
    if (r.capacities) {
      w = r.capacities->wind_kw;
      pv = r.capacities->pv_kw;
      el = r.capacities->electrolyser_kw;
      st = r.capacities->storage_kg;
    }
    if (r.energy) cf = r.energy->re_capacity_factor;
    out += FormatDouble(p.re_factor) + ',' + std::string(lp::StatusName(r.status));
    for (const auto& v : {w, pv, el, st, m.lcoh, m.ei_market, m.ei_recs, m.ei_location,
                          m.ei_mef, m.ei_aef, m.d_market, m.d_location, cf}) {
      out += ',' + Cell(v);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json ReSweepJson(const ReSweep& sweep, const Provenance& provenance) {
  Provenance p = provenance;
  p.notes.insert(p.notes.end(), std::begin(kReSweepNotes), std::end(kReSweepNotes));
  Json points = Json::array();
  for (const ReSweepPoint& pt : sweep.points) {
    points.push_back({{"re_factor", pt.re_factor}, {"report", ToJson(pt.outcome.report)}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "sweep-re"},
          {"provenance", ToJson(p)},
          {"off_grid", ToJson(sweep.off_grid.report)},
          {"points", std::move(points)}};
}

std::string GeoSweepCsv(const GeoSweep& sweep) {
  std::string out =
      "case,sell_zone,status,lcoh_usd_per_kg,lcoh_rec_low_usd_per_kg,lcoh_rec_high_usd_per_kg,"
      "import_mwh,export_mwh,ei_market,ei_recs,ei_location,ei_mef,ei_aef\n";
  auto row = [&](const std::string& kind, const ScenarioOutcome& o,
                 std::optional<double> low, std::optional<double> high) {
    const ScenarioReport& r = o.report;
    const Metrics m = MetricsOf(o);
    std::optional<double> imp, exp;
    if (r.energy) {
      imp = r.energy->import_mwh;
      exp = r.energy->export_mwh;
    }
    out += kind + ',' + r.sell_zone + ',' + std::string(lp::StatusName(r.status));
    for (const auto& v : {m.lcoh, low, high, imp, exp, m.ei_market, m.ei_recs, m.ei_location,
                          m.ei_mef, m.ei_aef}) {
      out += ',' + Cell(v);
    }
    out += '\n';
  };
  row("grid-baseline", sweep.grid_baseline, sweep.rec_band_low_usd_per_kg,
      sweep.rec_band_high_usd_per_kg);
  for (const GeoSweepPoint& p : sweep.points) row("split", p.outcome, std::nullopt, std::nullopt);
  return out;
}

nlohmann::ordered_json GeoSweepJson(const GeoSweep& sweep, const Provenance& provenance) {
  Provenance p = provenance;
  p.notes.insert(p.notes.end(), std::begin(kGeoSweepNotes), std::end(kGeoSweepNotes));
  Json points = Json::array();
  for (const GeoSweepPoint& pt : sweep.points) {
    points.push_back({{"sell_zone", pt.sell_zone}, {"report", ToJson(pt.outcome.report)}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "sweep-geo"},
          {"provenance", ToJson(p)},
          {"grid_baseline",
           {{"report", ToJson(sweep.grid_baseline.report)},
            {"lcoh_rec_low_usd_per_kg", NumberOrNull(sweep.rec_band_low_usd_per_kg)},
            {"lcoh_rec_high_usd_per_kg", NumberOrNull(sweep.rec_band_high_usd_per_kg)}}},
          {"points", std::move(points)}};
}

}  // namespace h2cert
