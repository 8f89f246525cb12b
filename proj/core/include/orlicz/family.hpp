// Copyright 2026 The orlicz-lab Authors
//
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

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/radial.hpp"

namespace orlicz {

enum class FamilyKind {
  kGaussians,          // random center / width / amplitude
  kBumps,              // compactly supported smooth bumps
  kBandlimitedRandom,  // random spectrum inside |xi| <= cutoff
  kRadialGaussians,    // radial shell profiles exp(-((r-c)/w)^2)
};

FamilyKind parse_family_kind(std::string_view name);
std::string_view family_kind_name(FamilyKind k);

// Deterministic test family: a fixed seed reproduces the members bit for
// bit, and the underlying draws do not depend on N so refined grids sample
// the same functions. Members must decay below 1e-8 at the box boundary or
// they are rejected and redrawn (rejection budget 100 per member).
// `cutoff` is the spectral radius for kBandlimitedRandom (required there,
// ignored elsewhere).
std::vector<Field> make_family(FamilyKind kind, int size, std::uint64_t seed, const Grid& grid,
                               double cutoff = 0.0);

// The radial profiles behind kRadialGaussians (shells with log-spaced
// centers), for suites that need the profile itself.
std::vector<RadialProfile> make_radial_family(int size, std::uint64_t seed, const Grid& grid);

}  // namespace orlicz
