// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "eonplan/scenario.hpp"

namespace eonplan {

// Deterministic random scenario for property tests: an 8-node ring over a
// shuffled node order (so every demand has a link-disjoint route pair) plus
// a few chords, carrying two to four step-aligned demands of up to
// 400 Gb/s. The same seed always yields the same scenario.
Scenario random_scenario(uint64_t seed);

}  // namespace eonplan
