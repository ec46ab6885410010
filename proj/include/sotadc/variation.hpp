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

#ifndef SOTADC_VARIATION_HPP
#define SOTADC_VARIATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sotadc/adc.hpp"

namespace sotadc {

/// Gaussian process-variation model of a bank: per-device threshold
/// distributions plus a mirror-gain mismatch common to the input block.
struct VariationSpec {
    std::vector<double> means;  // A, strictly ascending
    std::vector<double> sigmas; // A, >= 0, one per device
    double mirror_gain_sigma = 0.01;
    int trials = 300;
    std::uint64_t seed = 0;

    // Sampled thresholds must stay physical: draws at or below the floor are
    // redrawn (deterministically, by bumping the attempt counter) up to
    // max_redraws times, then the trial errors out.
    double threshold_floor = 0.0; // A
    int max_redraws = 100;

    void validate() const;
    int device_count() const { return static_cast<int>(means.size()); }
};

struct DeviceMcStats {
    double mean = 0.0;  // A
    double sigma = 0.0; // A (population estimator over trials)
};

/// Fixed-width histogram; bin width from the Freedman-Diaconis rule.
struct Histogram {
    double lo = 0.0;        // A, left edge of first bin
    double bin_width = 0.0; // A
    std::vector<int> counts;
};

struct McReport {
    std::vector<DeviceMcStats> stats; // effective thresholds, per device
    std::vector<Histogram> histograms;
    std::vector<std::vector<bool>> overlap; // +-k sigma interval intersection
    double k_sigma = 2.0;
    int effective_bits = 0;
    std::vector<int> clean_devices; // 1-based ids of the usable subset
    int trials_run = 0;
};

/// How interval overlap disqualifies devices when estimating resolution.
/// MaxDisjointSubset: usable devices are the largest subset whose intervals
/// are pairwise disjoint (a device may be dropped to rescue its neighbors).
/// AdjacentOnly: a device is usable iff disjoint from its two neighbors.
enum class OverlapRule { MaxDisjointSubset, AdjacentOnly };

struct Resolution {
    int bits = 0;
    std::vector<int> clean_devices; // 1-based, ascending
};

/// Bank instance for one Monte-Carlo trial. Every draw is a pure function of
/// (spec.seed, trial, device, variable), so any subset of trials can be
/// generated in any order or on any thread with identical results.
AdcBank sample_bank(const VariationSpec& spec, int trial);

/// Run the full Monte-Carlo study and aggregate effective-threshold
/// statistics. Deterministic and bit-identical for any `threads` >= 1.
McReport run_mc(const VariationSpec& spec, double k_sigma = 2.0,
                int threads = 1,
                OverlapRule rule = OverlapRule::MaxDisjointSubset);

/// Resolution supportable by thresholds distributed N(mean_k, sigma_k): the
/// largest m such that 2^m - 1 usable thresholds exist whose [mean - k sigma,
/// mean + k sigma] intervals are pairwise disjoint.
Resolution effective_resolution(std::span<const double> means,
                                std::span<const double> sigmas, double k,
                                OverlapRule rule = OverlapRule::MaxDisjointSubset);

} // namespace sotadc

#endif
