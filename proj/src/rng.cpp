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

#include "sotadc/rng.hpp"

#include <cmath>
#include <numbers>

namespace sotadc::rng {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
} // namespace

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t trial,
                           std::uint64_t device, std::uint64_t tag,
                           std::uint64_t attempt) {
    // Fold each coordinate through a full avalanche so structured counters
    // (0, 1, 2, ...) cannot leak into the output.
    std::uint64_t h = mix64(seed + kGolden);
    h = mix64(h ^ (trial + kGolden));
    h = mix64(h ^ (device + kGolden));
    h = mix64(h ^ (tag + kGolden));
    h = mix64(h ^ (attempt + kGolden));
    return h;
}

double to_unit(std::uint64_t bits) {
    // Top 53 bits, shifted into (0, 1]: the +1 keeps log() finite.
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

double standard_normal(std::uint64_t seed, std::uint64_t trial,
                       std::uint64_t device, Tag tag, std::uint64_t attempt) {
    const std::uint64_t t = static_cast<std::uint64_t>(tag);
    const double u1 = to_unit(counter_hash(seed, trial, device, t, 2 * attempt));
    const double u2 =
        to_unit(counter_hash(seed, trial, device, t, 2 * attempt + 1));
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double normal(std::uint64_t seed, std::uint64_t trial, std::uint64_t device,
              Tag tag, std::uint64_t attempt, double mean, double sigma) {
    if (sigma == 0.0) {
        return mean;
    }
    return mean + sigma * standard_normal(seed, trial, device, tag, attempt);
}

} // namespace sotadc::rng
