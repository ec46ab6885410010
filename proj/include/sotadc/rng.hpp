/* Copyright 2026 The sotadc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SOTADC_RNG_HPP
#define SOTADC_RNG_HPP

#include <cstdint>

namespace sotadc::rng {

// Counter-based generation: every draw is a pure function of its coordinates
// (seed, trial, device, tag, attempt), so Monte-Carlo results do not depend
// on execution order or thread count.

/// Variable tags keep the draw streams of distinct quantities disjoint.
enum class Tag : std::uint64_t { Threshold = 1, MirrorGain = 2 };

/// SplitMix64 finalizer (Stafford mix 13): full-avalanche 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// Avalanche-combine the draw coordinates into one 64-bit value.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t trial,
                           std::uint64_t device, std::uint64_t tag,
                           std::uint64_t attempt);

/// Map 64 random bits onto (0, 1]. Never returns 0, so log() is safe.
double to_unit(std::uint64_t bits);

/// Standard normal deviate for the given coordinates (Box-Muller).
double standard_normal(std::uint64_t seed, std::uint64_t trial,
                       std::uint64_t device, Tag tag, std::uint64_t attempt);

/// N(mean, sigma) deviate; sigma == 0 returns mean exactly.
double normal(std::uint64_t seed, std::uint64_t trial, std::uint64_t device,
              Tag tag, std::uint64_t attempt, double mean, double sigma);

} // namespace sotadc::rng

#endif
