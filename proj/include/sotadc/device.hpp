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

#ifndef SOTADC_DEVICE_HPP
#define SOTADC_DEVICE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sotadc {

namespace constants {
// CODATA exact values.
inline constexpr double kElectronCharge = 1.602176634e-19; // C
inline constexpr double kReducedPlanck = 1.054571817e-34;  // J*s
} // namespace constants

/// Magnetic state of the free layer. P is low resistance (logic '0'),
/// AP is high resistance (logic '1').
enum class DeviceState : std::uint8_t { P = 0, AP = 1 };

/// Behavioral parameters of one three-terminal SOT-MTJ comparator.
///
/// The junction pillar sits mid-line on a heavy-metal strip of width `w_hm`
/// and thickness `t_hm`; `r_hm` is the full strip resistance between its two
/// end terminals. Switching is a quasi-static threshold automaton: a strip
/// current above `i_crit_p` (> 0) drives P -> AP, below `i_crit_ap` (< 0)
/// drives AP -> P, anything in between leaves the state unchanged.
struct MtjDevice {
    int id = 0;
    double w_hm = 0.0;      // m
    double t_hm = 0.0;      // m
    double r_hm = 0.0;      // ohm, full line between the strip terminals
    double r_p = 0.0;       // ohm, junction in P
    double r_ap = 0.0;      // ohm, junction in AP
    double i_crit_p = 0.0;  // A, P -> AP threshold (positive)
    double i_crit_ap = 0.0; // A, AP -> P threshold (negative)

    // Optional spin-transport parameters; when present they must be
    // consistent with the thresholds (checked by validate()).
    std::optional<double> j_sot_crit; // A/m^2, critical charge current density
    std::optional<double> theta;      // spin Hall angle
    std::optional<double> j_s_crit;   // A/m^2, critical spin current density

    /// Throws DomainError when any invariant is violated.
    void validate() const;

    double switching_window() const { return i_crit_p - i_crit_ap; }
};

/// Critical charge current of a strip cross-section: j * t * w.
/// Throws DomainError for negative or non-finite arguments.
double critical_current(double j_sot_crit, double t_hm, double w_hm);

/// Critical charge current density from spin-transport parameters:
/// 2 e j_s_crit / (hbar * theta). Throws DomainError when theta == 0.
double j_from_spin_params(double theta, double j_s_crit);

/// One quasi-static step of the threshold automaton. Equality at a threshold
/// does not switch.
DeviceState apply_current(const MtjDevice& device, DeviceState state,
                          double i_sot);

/// Junction resistance for the given state.
double junction_resistance(const MtjDevice& device, DeviceState state);

/// Drive the device along a current sequence starting from AP (field-
/// initialized) and record the sensed resistance r_mtj + r_hm/2 at each
/// point. Returns (current, resistance) pairs, one per input current.
std::vector<std::pair<double, double>>
sweep_ri_loop(const MtjDevice& device, std::span<const double> currents);

/// Build a device whose thresholds follow the critical-current law for the
/// given density and geometry, with a symmetric reset threshold.
MtjDevice device_from_density(int id, double j_sot_crit, double t_hm,
                              double w_hm, double r_hm, double r_p,
                              double r_ap);

} // namespace sotadc

#endif
