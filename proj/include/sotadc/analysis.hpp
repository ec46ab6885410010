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

#ifndef SOTADC_ANALYSIS_HPP
#define SOTADC_ANALYSIS_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sotadc/adc.hpp"

namespace sotadc {

enum class FitMode { ThroughOrigin, Affine };

struct FitResult {
    double j_sot_crit = 0.0;           // A/m^2, slope / t_hm
    double slope = 0.0;                // A/m
    double intercept = 0.0;            // A, exactly 0 in through-origin mode
    double r_squared = 0.0;            // against the mean baseline
    double r_squared_uncentered = 0.0; // against the zero baseline
    FitMode mode = FitMode::ThroughOrigin;
};

/// Least-squares fit of switching current versus strip width; the critical
/// current density is the fitted slope divided by the strip thickness.
/// `points` are (width m, current A) pairs. Throws NumericError when the fit
/// is singular (all widths identical), DomainError for bad arguments.
FitResult fit_critical_density(
    std::span<const std::pair<double, double>> points, double t_hm,
    FitMode mode = FitMode::ThroughOrigin);

/// Transition levels from a monotone transfer sweep: T(k) is the midpoint
/// between the last input below code k and the first input at or above it.
/// Throws MissingCodeError (naming the code) when some code in 1..levels
/// never appears.
std::vector<double> extract_transitions(std::span<const SweepPoint> sweep,
                                        int levels);

enum class LsbConvention { EndPoint, BestStraightLine };

struct NonlinearityReport {
    double lsb = 0.0;                  // A
    std::vector<double> transitions;   // A, 2^n - 1 levels
    std::vector<double> dnl;           // LSB units; last entry defined 0
    std::vector<double> inl;           // LSB units
    double max_abs_dnl = 0.0;          // LSB
    double max_abs_inl = 0.0;          // LSB
    double max_abs_dnl_current = 0.0;  // A, same maximum in absolute current
    LsbConvention convention = LsbConvention::EndPoint;
};

/// Static DNL/INL from strictly ascending transition levels.
///
/// End-point convention: LSB = (T(n) - T(1)) / (n - 1), the ideal line pins
/// the first and last transitions, so INL(1) = INL(n) = 0 and the DNL sum
/// telescopes to zero. BestStraightLine instead takes the least-squares line
/// through (k, T(k)). An explicit `full_scale` overrides the LSB with
/// full_scale / 2^bits while keeping the ideal line anchored at T(1).
NonlinearityReport
compute_dnl_inl(std::span<const double> transitions,
                std::optional<double> full_scale = std::nullopt,
                LsbConvention convention = LsbConvention::EndPoint);

struct SweepConfig {
    double i_start = 0.0; // A
    double i_stop = 0.0;  // A
    int steps = 0;
};

/// transfer_sweep + extract_transitions + compute_dnl_inl in one call.
NonlinearityReport nonlinearity_of_bank(AdcBank& bank,
                                        const SweepConfig& config);

} // namespace sotadc

#endif
