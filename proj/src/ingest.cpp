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

#include "h2cert/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <system_error>
#include <vector>

#include "h2cert/errors.hpp"
#include "json.hpp"
#include "text_io.hpp"

namespace h2cert {
namespace {

using internal::CsvTable;
using json = nlohmann::ordered_json;

// Hour column must count 0, 1, 2, ... down the file.
void CheckHours(const CsvTable& table) {
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    const auto& row = table.rows()[i];
    if (table.Integer(row, 0) != static_cast<long long>(i)) {
      throw ParseError(table.path().string(), row.line,
                       "hour column must be " + std::to_string(i));
    }
  }
}

void CheckRowCount(const CsvTable& table, std::optional<std::size_t> horizon) {
  if (horizon && table.rows().size() != *horizon) {
    throw ParseError(table.path().string(), 0,
                     "has " + std::to_string(table.rows().size()) +
                         " data rows, expected " + std::to_string(*horizon));
  }
  if (table.rows().empty()) {
    throw ParseError(table.path().string(), 0, "no data rows");
  }
}

double SidecarNumber(const json& meta, const char* key,
                     const std::filesystem::path& path) {
  const auto it = meta.find(key);
  if (it == meta.end()) {
    throw ParseError(path.string(), 0, std::string("missing key '") + key + "'");
  }
  if (!it->is_number()) {
    throw ParseError(path.string(), 0, std::string("'") + key + "' must be a number");
  }
  return it->get<double>();
}

// AUD/MWh value that converts to exactly `usd` at `fx`, or the closest one.
double InvertPrice(double usd, double fx) {
  const double guess = usd * 1000.0 / fx;
  if (ConvertPrice(guess, fx) == usd) return guess;
  double up = guess;
  double down = guess;
  for (int step = 0; step < 64; ++step) {
    up = std::nextafter(up, std::numeric_limits<double>::infinity());
    if (ConvertPrice(up, fx) == usd) return up;
    down = std::nextafter(down, -std::numeric_limits<double>::infinity());
    if (ConvertPrice(down, fx) == usd) return down;
  }
  return guess;
}

}  // namespace

std::string FormatDouble(double value) {
  if (value == 0.0) value = 0.0;  // Drops the sign of negative zero.
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw ValidationError("cannot format number");
  return std::string(buffer, end);
}

void WriteFileAtomic(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError(path.parent_path().string() + ": cannot create directory: " +
                    ec.message());
    }
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path.string() + ": cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError(path.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError(path.string() + ": cannot replace file: " + ec.message());
}

std::filesystem::path SidecarPath(const std::filesystem::path& csv) {
  std::filesystem::path out = csv;
  out.replace_extension(".meta.json");
  return out;
}

GridProfile LoadGridProfile(const std::filesystem::path& csv,
                            std::optional<std::size_t> horizon,
                            double fx_usd_per_aud) {
  if (!(fx_usd_per_aud > 0.0) || !std::isfinite(fx_usd_per_aud)) {
    throw ValidationError("exchange rate must be positive");
  }
  const CsvTable table(internal::ReadTextFile(csv), csv,
                       {"hour", "spot_price_aud_per_mwh", "mef_kgco2e_per_kwh",
                        "aef_kgco2e_per_kwh"});
  CheckRowCount(table, horizon);
  CheckHours(table);
  const std::size_t n = table.rows().size();
  std::vector<double> price(n), mef(n), aef(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = table.rows()[i];
    price[i] = ConvertPrice(table.Number(row, 1), fx_usd_per_aud);
    mef[i] = table.Number(row, 2);
    aef[i] = table.Number(row, 3);
  }

  const std::filesystem::path meta_path = SidecarPath(csv);
  const json meta = internal::ParseJsonText(internal::ReadTextFile(meta_path), meta_path);
  internal::RejectUnknownKeys(meta, {"zone_id", "ef_location", "arpp", "rmf"},
                              meta_path, "profile metadata");
  GridProfile p;
  const auto zone = meta.find("zone_id");
  if (zone == meta.end() || !zone->is_string() || zone->get<std::string>().empty()) {
    throw ParseError(meta_path.string(), 0, "'zone_id' must be a non-empty string");
  }
  p.zone_id = zone->get<std::string>();
  p.ef_location = SidecarNumber(meta, "ef_location", meta_path);
  if (meta.contains("arpp")) p.arpp = SidecarNumber(meta, "arpp", meta_path);
  if (meta.contains("rmf")) p.rmf = SidecarNumber(meta, "rmf", meta_path);
  p.spot_price = HourlySeries(std::move(price), Unit::kUsdPerKwh);
  p.mef = HourlySeries(std::move(mef), Unit::kKgCo2ePerKwh);
  p.aef = HourlySeries(std::move(aef), Unit::kKgCo2ePerKwh);

  if (const auto errors = ValidateProfile(p, n); !errors.empty()) {
    throw ValidationError(csv.string() + ": " + errors.front());
  }
  return p;
}

void WriteGridProfile(const GridProfile& profile, const std::filesystem::path& csv,
                      double fx_usd_per_aud) {
  RequireValidProfile(profile, profile.horizon());
  std::string out(kGridProfileHeader);
  out += '\n';
  for (std::size_t t = 0; t < profile.horizon(); ++t) {
    out += std::to_string(t) + ',' +
           FormatDouble(InvertPrice(profile.spot_price[t], fx_usd_per_aud)) + ',' +
           FormatDouble(profile.mef[t]) + ',' + FormatDouble(profile.aef[t]) + '\n';
  }
  json meta = {{"zone_id", profile.zone_id},
               {"ef_location", profile.ef_location},
               {"arpp", profile.arpp},
               {"rmf", profile.rmf}};
  WriteFileAtomic(csv, out);
  WriteFileAtomic(SidecarPath(csv), meta.dump(2) + "\n");
}

ReProfile LoadReProfile(const std::filesystem::path& csv,
                        std::optional<std::size_t> horizon,
                        const PlantParameters& params) {
  const CsvTable table(internal::ReadTextFile(csv), csv,
                       {"hour", "wind_ref_kw", "pv_ref_kw"});
  CheckRowCount(table, horizon);
  CheckHours(table);
  const std::size_t n = table.rows().size();
  std::vector<double> wind(n), pv(n);
  auto check = [&](const internal::CsvRow& row, double v, double cap, const char* what) {
    if (v < 0.0 || v > cap) {
      throw ValidationError(csv.string() + ":" + std::to_string(row.line) + ": " + what +
                            " " + FormatDouble(v) + " kW outside [0, " + FormatDouble(cap) +
                            "] kW, the reference capacity");
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = table.rows()[i];
    wind[i] = table.Number(row, 1);
    pv[i] = table.Number(row, 2);
    check(row, wind[i], params.c_ref_wind_kw, "wind_ref_kw");
    check(row, pv[i], params.c_ref_pv_kw, "pv_ref_kw");
  }
  return ReProfile{HourlySeries(std::move(wind), Unit::kKw),
                   HourlySeries(std::move(pv), Unit::kKw)};
}

void WriteReProfile(const ReProfile& profile, const std::filesystem::path& csv) {
  RequireUnit(profile.ref_wind, Unit::kKw, "wind reference output");
  RequireUnit(profile.ref_pv, Unit::kKw, "PV reference output");
  if (profile.ref_wind.size() != profile.ref_pv.size()) {
    throw ValidationError("wind and PV reference series differ in length");
  }
  std::string out(kReProfileHeader);
  out += '\n';
  for (std::size_t t = 0; t < profile.ref_wind.size(); ++t) {
    out += std::to_string(t) + ',' + FormatDouble(profile.ref_wind[t]) + ',' +
           FormatDouble(profile.ref_pv[t]) + '\n';
  }
  WriteFileAtomic(csv, out);
}

std::string DispatchCsv(const Dispatch& d) {
  std::string out(kDispatchHeader);
  out += '\n';
  for (std::size_t t = 0; t < d.horizon(); ++t) {
    out += std::to_string(t);
    for (const HourlySeries* s :
         {&d.gen_wind_kw, &d.gen_pv_kw, &d.e_el_kw, &d.e_comp1_kw, &d.e_comp2_kw,
          &d.import_kw, &d.export_kw, &d.curtail_kw, &d.h_comp1_kg, &d.h_comp2_kg,
          &d.h_from_store_kg, &d.soc_kg}) {
      out += ',';
      out += FormatDouble((*s)[t]);
    }
    out += '\n';
  }
  return out;
}

void WriteDispatchCsv(const Dispatch& dispatch, const std::filesystem::path& csv) {
  WriteFileAtomic(csv, DispatchCsv(dispatch));
}

}  // namespace h2cert
