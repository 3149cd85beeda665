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

#ifndef H2CERT_FIXTURES_HPP_
#define H2CERT_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "h2cert/core_types.hpp"

namespace h2cert {

enum class FixtureKind { kFlat, kDiurnal, kTwoZoneContrast, kRandomWalk };

std::string_view FixtureKindName(FixtureKind kind);
std::optional<FixtureKind> ParseFixtureKind(std::string_view name);

// Synthetic zones for tests and demos.
struct Fixture {
  ZoneMap zones;
  std::string plant_zone;  // where the electrolyser sits
  std::string sell_zone;   // equals plant_zone unless the fixture has two
};

// Deterministic in (kind, horizon, seed) on every platform.
//  flat:              constant price (95 AUD/MWh), MEF 0.5, AEF 0.71, RE.
//  diurnal:           sinusoidal PV, evening price peak, MEF falling when the
//                     price peaks, AEF dipping at midday.
//  two-zone-contrast: buy zone MEF 0.52, sell zone MEF 0.19 (constants).
//  random-walk:       mean-reverting random walks for every series.
Fixture SynthFixture(FixtureKind kind, std::size_t horizon, std::uint64_t seed,
                     double fx_usd_per_aud = kDefaultFxUsdPerAud);

}  // namespace h2cert

#endif  // H2CERT_FIXTURES_HPP_
