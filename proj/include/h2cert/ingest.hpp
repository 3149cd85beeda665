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

#ifndef H2CERT_INGEST_HPP_
#define H2CERT_INGEST_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "h2cert/core_types.hpp"
#include "h2cert/plant_model.hpp"
#include "h2cert/series.hpp"

namespace h2cert {

// Grid profile CSV columns, in file order.
inline constexpr std::string_view kGridProfileHeader =
    "hour,spot_price_aud_per_mwh,mef_kgco2e_per_kwh,aef_kgco2e_per_kwh";
inline constexpr std::string_view kReProfileHeader = "hour,wind_ref_kw,pv_ref_kw";
inline constexpr std::string_view kDispatchHeader =
    "hour,gen_wind_kw,gen_pv_kw,e_el_kw,e_comp1_kw,e_comp2_kw,import_kw,"
    "export_kw,curtail_kw,h_comp1_kg,h_comp2_kg,h_from_store_kg,soc_kg";

// Metadata for `zone.csv` lives in `zone.meta.json` next to it:
//   {"zone_id": "...", "ef_location": 0.71, "arpp": 0.1872, "rmf": 0.81}
// arpp and rmf are optional.
std::filesystem::path SidecarPath(const std::filesystem::path& csv);

// Reads a grid profile and its sidecar. Prices are converted from AUD/MWh to
// USD/kWh at `fx`. When `horizon` is set the row count must match it.
// Throws ParseError (path and 1-based line) for malformed content and
// ValidationError for well-formed but invalid profiles.
GridProfile LoadGridProfile(const std::filesystem::path& csv,
                            std::optional<std::size_t> horizon,
                            double fx_usd_per_aud = kDefaultFxUsdPerAud);

// Writes the CSV and its sidecar. Prices are written in AUD/MWh chosen so
// that loading at the same `fx` reproduces them bit for bit.
void WriteGridProfile(const GridProfile& profile,
                      const std::filesystem::path& csv,
                      double fx_usd_per_aud = kDefaultFxUsdPerAud);

struct ReProfile {
  HourlySeries ref_wind;  // kW
  HourlySeries ref_pv;    // kW
};

// Reads reference generation. Values must lie within [0, reference
// capacity] from `params`; violations throw ValidationError.
ReProfile LoadReProfile(const std::filesystem::path& csv,
                        std::optional<std::size_t> horizon,
                        const PlantParameters& params = {});

void WriteReProfile(const ReProfile& profile, const std::filesystem::path& csv);

std::string DispatchCsv(const Dispatch& dispatch);
void WriteDispatchCsv(const Dispatch& dispatch, const std::filesystem::path& csv);

// Writes through a temporary file and a rename, creating parent directories.
// Throws IoError.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view content);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatDouble(double value);

}  // namespace h2cert

#endif  // H2CERT_INGEST_HPP_
