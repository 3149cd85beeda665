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

#include "h2cert/report.hpp"

#include <cmath>
#include <string>

#include "h2cert/errors.hpp"
#include "h2cert/ingest.hpp"
#include "text_io.hpp"

namespace h2cert {
namespace {

using json = nlohmann::ordered_json;
using Reader = internal::JsonReader;

json Optional(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? json(*v) : json(nullptr);
}

json ToJson(const ComponentCosts& c) {
  return {{"electrolyser", c.electrolyser},
          {"wind", c.wind},
          {"pv", c.pv},
          {"storage", c.storage}};
}

ComponentCosts ReadComponents(const Reader& r) {
  r.Allow({"electrolyser", "wind", "pv", "storage"});
  return ComponentCosts{r.Number("electrolyser"), r.Number("wind"), r.Number("pv"),
                        r.Number("storage")};
}

}  // namespace

LcohComponents LcohByComponent(const CostBreakdown& c) {
  LcohComponents out;
  if (!(c.annual_h2_kg > 0.0)) return out;
  const double h2 = c.annual_h2_kg;
  out.electrolyser = (c.capex_annualized_usd.electrolyser + c.om_usd.electrolyser) / h2;
  out.wind = (c.capex_annualized_usd.wind + c.om_usd.wind) / h2;
  out.pv = (c.capex_annualized_usd.pv + c.om_usd.pv) / h2;
  out.storage = (c.capex_annualized_usd.storage + c.om_usd.storage) / h2;
  out.grid = c.grid_electricity_usd / h2;
  return out;
}

ScenarioReport BuildScenarioReport(const ScenarioSpec& scenario,
                                   const OptimizeResult& result,
                                   const std::optional<EmissionsReport>& emissions,
                                   std::size_t horizon_hours) {
  const SolutionReport& s = result.solution;
  ScenarioReport r;
  r.name = scenario.name;
  r.mode = scenario.mode;
  r.tc_interval = scenario.tc_interval;
  r.ei_mef_cap = scenario.ei_mef_cap;
  if (scenario.capex_cap_usd && std::isfinite(*scenario.capex_cap_usd)) {
    r.capex_cap_usd = scenario.capex_cap_usd;
  }
  r.buy_zone = std::string(BuyZone(scenario.geo));
  r.sell_zone = std::string(SellZone(scenario.geo));
  r.status = s.status;
  r.message = s.message;
  r.converged = s.converged;
  r.fixed_point_iterations = s.fixed_point_iterations;
  r.storage_tech = s.storage_tech;
  r.storage_unit_cost_usd_per_kg = s.storage_unit_cost_usd_per_kg;
  r.mu_comp2_kwh_per_kg = s.mu_comp2_kwh_per_kg;
  r.horizon_hours = horizon_hours;
  if (!s.optimal()) return r;

  const Dispatch& d = s.dispatch;
  r.capacities = d.capacities;
  EnergySummary e;
  e.import_mwh = d.import_kw.Sum() / 1000.0;
  e.export_mwh = d.export_kw.Sum() / 1000.0;
  e.curtail_mwh = d.curtail_kw.Sum() / 1000.0;
  if (d.capacities.wind_kw + d.capacities.pv_kw > 0.0) {
    e.re_capacity_factor = ReCapacityFactor(d.gen_wind_kw, d.gen_pv_kw,
                                            d.capacities.wind_kw, d.capacities.pv_kw);
  }
  r.energy = e;
  r.costs = result.costs;
  r.emissions = emissions;
  return r;
}

nlohmann::ordered_json ToJson(const ScenarioReport& r) {
  json scenario = {
      {"name", r.name},
      {"mode", GridModeName(r.mode)},
      {"tc_interval", r.tc_interval ? json(TcIntervalName(*r.tc_interval)) : json(nullptr)},
      {"ei_mef_cap_kgco2e_per_kg", Optional(r.ei_mef_cap)},
      {"capex_cap_usd", Optional(r.capex_cap_usd)},
      {"buy_zone", r.buy_zone},
      {"sell_zone", r.sell_zone}};
  json fixed_point = {{"converged", r.converged},
                      {"iterations", r.fixed_point_iterations},
                      {"storage_tech", StorageTechName(r.storage_tech)},
                      {"storage_unit_cost_usd_per_kg", r.storage_unit_cost_usd_per_kg},
                      {"mu_comp2_kwh_per_kg", r.mu_comp2_kwh_per_kg}};
  json doc = {{"schema_version", kReportSchemaVersion},
              {"scenario", scenario},
              {"status", StatusName(r.status)},
              {"message", r.message},
              {"horizon_hours", r.horizon_hours},
              {"fixed_point", fixed_point}};

  if (r.capacities) {
    doc["capacities"] = {{"wind_kw", r.capacities->wind_kw},
                         {"pv_kw", r.capacities->pv_kw},
                         {"electrolyser_kw", r.capacities->electrolyser_kw},
                         {"storage_kg", r.capacities->storage_kg}};
  } else {
    doc["capacities"] = nullptr;
  }
  if (r.energy) {
    doc["energy"] = {{"import_mwh", r.energy->import_mwh},
                     {"export_mwh", r.energy->export_mwh},
                     {"curtail_mwh", r.energy->curtail_mwh},
                     {"re_capacity_factor", Optional(r.energy->re_capacity_factor)}};
  } else {
    doc["energy"] = nullptr;
  }
  if (r.costs) {
    const CostBreakdown& c = *r.costs;
    const LcohComponents per_kg = LcohByComponent(c);
    doc["costs"] = {
        {"lcoh_usd_per_kg", c.lcoh_usd_per_kg},
        {"annual_h2_kg", c.annual_h2_kg},
        {"horizon_fraction", c.horizon_fraction},
        {"grid_electricity_usd", c.grid_electricity_usd},
        {"capex_total_usd", c.capex_total_usd},
        {"vom_usd", c.vom_usd},
        {"capex_annualized_usd", ToJson(c.capex_annualized_usd)},
        {"om_usd", ToJson(c.om_usd)},
        {"lcoh_breakdown_usd_per_kg",
         {{"electrolyser", per_kg.electrolyser},
          {"wind", per_kg.wind},
          {"pv", per_kg.pv},
          {"storage", per_kg.storage},
          {"grid", per_kg.grid}}}};
  } else {
    doc["costs"] = nullptr;
  }
  if (r.emissions) {
    const EmissionsReport& e = *r.emissions;
    doc["emissions"] = {{"annual_h2_kg", e.annual_h2_kg},
                        {"recs_generated_mwh", e.recs_generated_mwh},
                        {"e_market_kg", e.e_market_kg},
                        {"ei_market", e.ei_market},
                        {"ei_recs", e.ei_recs},
                        {"e_location_kg", e.e_location_kg},
                        {"ei_location", e.ei_location},
                        {"e_mef_kg", e.e_mef_kg},
                        {"ei_mef", e.ei_mef},
                        {"e_aef_kg", e.e_aef_kg},
                        {"ei_aef", e.ei_aef},
                        {"d_market", Optional(e.d_market)},
                        {"d_location", Optional(e.d_location)}};
  } else {
    doc["emissions"] = nullptr;
  }
  return doc;
}

ScenarioReport ScenarioReportFromJson(const nlohmann::ordered_json& doc,
                                      const std::filesystem::path& source) {
  const Reader root(doc, source, "report");
  root.Allow({"schema_version", "scenario", "status", "message", "horizon_hours",
              "fixed_point", "capacities", "energy", "costs", "emissions"});
  if (root.Integer("schema_version") != kReportSchemaVersion) {
    root.Fail("schema_version", "is not supported");
  }
  ScenarioReport r;
  {
    const Reader s = root.Child("scenario");
    s.Allow({"name", "mode", "tc_interval", "ei_mef_cap_kgco2e_per_kg", "capex_cap_usd",
             "buy_zone", "sell_zone"});
    r.name = s.String("name");
    const auto mode = ParseGridMode(s.String("mode"));
    if (!mode) s.Fail("mode", "is not a grid mode");
    r.mode = *mode;
    if (!s.IsNull("tc_interval")) {
      r.tc_interval = ParseTcInterval(s.String("tc_interval"));
      if (!r.tc_interval) s.Fail("tc_interval", "is not an interval");
    }
    r.ei_mef_cap = s.OptionalNumber("ei_mef_cap_kgco2e_per_kg");
    r.capex_cap_usd = s.OptionalNumber("capex_cap_usd");
    r.buy_zone = s.String("buy_zone");
    r.sell_zone = s.String("sell_zone");
  }
  const auto status = lp::ParseStatus(root.String("status"));
  if (!status) root.Fail("status", "is not a solve status");
  r.status = *status;
  r.message = root.String("message");
  const long long horizon = root.Integer("horizon_hours");
  if (horizon < 0) root.Fail("horizon_hours", "must be >= 0");
  r.horizon_hours = static_cast<std::size_t>(horizon);
  {
    const Reader f = root.Child("fixed_point");
    f.Allow({"converged", "iterations", "storage_tech", "storage_unit_cost_usd_per_kg",
             "mu_comp2_kwh_per_kg"});
    r.converged = f.Bool("converged");
    r.fixed_point_iterations = static_cast<int>(f.Integer("iterations"));
    const auto tech = ParseStorageTech(f.String("storage_tech"));
    if (!tech) f.Fail("storage_tech", "is not a storage technology");
    r.storage_tech = *tech;
    r.storage_unit_cost_usd_per_kg = f.Number("storage_unit_cost_usd_per_kg");
    r.mu_comp2_kwh_per_kg = f.Number("mu_comp2_kwh_per_kg");
  }
  if (!root.IsNull("capacities")) {
    const Reader c = root.Child("capacities");
    c.Allow({"wind_kw", "pv_kw", "electrolyser_kw", "storage_kg"});
    r.capacities = Capacities{c.Number("wind_kw"), c.Number("pv_kw"),
                              c.Number("electrolyser_kw"), c.Number("storage_kg")};
  }
  if (!root.IsNull("energy")) {
    const Reader e = root.Child("energy");
    e.Allow({"import_mwh", "export_mwh", "curtail_mwh", "re_capacity_factor"});
    r.energy = EnergySummary{e.Number("import_mwh"), e.Number("export_mwh"),
                             e.Number("curtail_mwh"), e.OptionalNumber("re_capacity_factor")};
  }
  if (!root.IsNull("costs")) {
    const Reader c = root.Child("costs");
    c.Allow({"lcoh_usd_per_kg", "annual_h2_kg", "horizon_fraction", "grid_electricity_usd",
             "capex_total_usd", "vom_usd", "capex_annualized_usd", "om_usd",
             "lcoh_breakdown_usd_per_kg"});
    CostBreakdown b;
    b.lcoh_usd_per_kg = c.Number("lcoh_usd_per_kg");
    b.annual_h2_kg = c.Number("annual_h2_kg");
    b.horizon_fraction = c.Number("horizon_fraction");
    b.grid_electricity_usd = c.Number("grid_electricity_usd");
    b.capex_total_usd = c.Number("capex_total_usd");
    b.vom_usd = c.Number("vom_usd");
    b.capex_annualized_usd = ReadComponents(c.Child("capex_annualized_usd"));
    b.om_usd = ReadComponents(c.Child("om_usd"));
    r.costs = b;
  }
  if (!root.IsNull("emissions")) {
    const Reader e = root.Child("emissions");
    e.Allow({"annual_h2_kg", "recs_generated_mwh", "e_market_kg", "ei_market", "ei_recs",
             "e_location_kg", "ei_location", "e_mef_kg", "ei_mef", "e_aef_kg", "ei_aef",
             "d_market", "d_location"});
    EmissionsReport m;
    m.annual_h2_kg = e.Number("annual_h2_kg");
    m.recs_generated_mwh = e.Number("recs_generated_mwh");
    m.e_market_kg = e.Number("e_market_kg");
    m.ei_market = e.Number("ei_market");
    m.ei_recs = e.Number("ei_recs");
    m.e_location_kg = e.Number("e_location_kg");
    m.ei_location = e.Number("ei_location");
    m.e_mef_kg = e.Number("e_mef_kg");
    m.ei_mef = e.Number("ei_mef");
    m.e_aef_kg = e.Number("e_aef_kg");
    m.ei_aef = e.Number("ei_aef");
    m.d_market = e.OptionalNumber("d_market");
    m.d_location = e.OptionalNumber("d_location");
    r.emissions = m;
  }
  return r;
}

std::string DumpJson(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

void WriteReport(const ScenarioReport& report, const std::filesystem::path& path) {
  WriteFileAtomic(path, DumpJson(ToJson(report)));
}

ScenarioReport ReadReport(const std::filesystem::path& path) {
  const std::string text = internal::ReadTextFile(path);
  return ScenarioReportFromJson(internal::ParseJsonText(text, path), path);
}

nlohmann::ordered_json ToJson(const Provenance& p) {
  return {{"tool", "h2cert"},
          {"backend", p.backend},
          {"horizon_hours", p.horizon_hours},
          {"seed", p.seed},
          {"fx_usd_per_aud", p.fx_usd_per_aud},
          {"inputs", p.inputs},
          {"plant_zone", p.plant_zone},
          {"notes", p.notes}};
}

}  // namespace h2cert
