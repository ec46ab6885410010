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

#include "sotadc/device.hpp"

#include <cmath>
#include <string>

#include "sotadc/errors.hpp"

namespace sotadc {

namespace {

constexpr double kPpm = 1e-6;

bool within_rel(double actual, double expected, double tol) {
    const double scale = std::fmax(std::fabs(actual), std::fabs(expected));
    if (scale == 0.0) {
        return true;
    }
    return std::fabs(actual - expected) <= tol * scale;
}

} // namespace

void MtjDevice::validate() const {
    const auto fail = [this](const std::string& what) {
        throw DomainError("device " + std::to_string(id) + ": " + what);
    };
    if (!(w_hm > 0.0) || !std::isfinite(w_hm)) {
        fail("w_hm must be positive and finite");
    }
    if (!(t_hm > 0.0) || !std::isfinite(t_hm)) {
        fail("t_hm must be positive and finite");
    }
    if (!(r_hm > 0.0) || !std::isfinite(r_hm)) {
        fail("r_hm must be positive and finite");
    }
    if (!(r_p > 0.0) || !std::isfinite(r_p)) {
        fail("r_p must be positive and finite");
    }
    if (!(r_ap > r_p) || !std::isfinite(r_ap)) {
        fail("r_ap must exceed r_p");
    }
    if (!(i_crit_p > 0.0) || !std::isfinite(i_crit_p)) {
        fail("i_crit_p must be positive");
    }
    if (!(i_crit_ap < 0.0) || !std::isfinite(i_crit_ap)) {
        fail("i_crit_ap must be negative");
    }
    if (theta.has_value() && j_s_crit.has_value()) {
        const double derived = j_from_spin_params(*theta, *j_s_crit);
        if (j_sot_crit.has_value() && !within_rel(*j_sot_crit, derived, kPpm)) {
            fail("j_sot_crit inconsistent with theta and j_s_crit");
        }
    }
    if (j_sot_crit.has_value()) {
        const double expected = *j_sot_crit * t_hm * w_hm;
        if (!within_rel(i_crit_p, expected, kPpm)) {
            fail("i_crit_p inconsistent with j_sot_crit * t_hm * w_hm");
        }
    }
}

double critical_current(double j_sot_crit, double t_hm, double w_hm) {
    if (!std::isfinite(j_sot_crit) || !std::isfinite(t_hm) ||
        !std::isfinite(w_hm)) {
        throw DomainError("critical_current: non-finite argument");
    }
    if (j_sot_crit < 0.0 || t_hm < 0.0 || w_hm < 0.0) {
        throw DomainError("critical_current: negative argument");
    }
    return j_sot_crit * t_hm * w_hm;
}

double j_from_spin_params(double theta, double j_s_crit) {
    if (!std::isfinite(theta) || !std::isfinite(j_s_crit)) {
        throw DomainError("j_from_spin_params: non-finite argument");
    }
    if (theta == 0.0) {
        throw DomainError("j_from_spin_params: theta must be nonzero");
    }
    return 2.0 * constants::kElectronCharge * j_s_crit /
           (constants::kReducedPlanck * theta);
}

DeviceState apply_current(const MtjDevice& device, DeviceState state,
                          double i_sot) {
    // Strict inequalities: a current exactly at a threshold does not switch.
    if (state == DeviceState::P && i_sot > device.i_crit_p) {
        return DeviceState::AP;
    }
    if (state == DeviceState::AP && i_sot < device.i_crit_ap) {
        return DeviceState::P;
    }
    return state;
}

double junction_resistance(const MtjDevice& device, DeviceState state) {
    return state == DeviceState::P ? device.r_p : device.r_ap;
}

std::vector<std::pair<double, double>>
sweep_ri_loop(const MtjDevice& device, std::span<const double> currents) {
    std::vector<std::pair<double, double>> loop;
    loop.reserve(currents.size());
    DeviceState state = DeviceState::AP; // field-initialized
    for (double i : currents) {
        state = apply_current(device, state, i);
        loop.emplace_back(i, junction_resistance(device, state) +
                                 device.r_hm / 2.0);
    }
    return loop;
}

MtjDevice device_from_density(int id, double j_sot_crit, double t_hm,
                              double w_hm, double r_hm, double r_p,
                              double r_ap) {
    MtjDevice device;
    device.id = id;
    device.w_hm = w_hm;
    device.t_hm = t_hm;
    device.r_hm = r_hm;
    device.r_p = r_p;
    device.r_ap = r_ap;
    device.i_crit_p = critical_current(j_sot_crit, t_hm, w_hm);
    device.i_crit_ap = -device.i_crit_p;
    device.j_sot_crit = j_sot_crit;
    device.validate();
    return device;
}

} // namespace sotadc
