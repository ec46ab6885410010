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

#include "sotadc/adc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sotadc/errors.hpp"

namespace sotadc {

namespace {

// Placeholder resistances for banks built from bare thresholds; conversion
// behavior depends only on thresholds and gains.
constexpr double kDefaultRp = 300.0;
constexpr double kDefaultRap = 400.0;
constexpr double kDefaultRhm = 100.0;

int bits_for_device_count(std::size_t count) {
    // Accept exactly 2^n - 1 devices.
    int n = 0;
    std::size_t c = count + 1;
    while (c > 1) {
        if (c % 2 != 0) {
            throw DomainError("adc bank: device count " +
                              std::to_string(count) +
                              " is not 2^n - 1 for any n");
        }
        c /= 2;
        ++n;
    }
    if (n == 0) {
        throw DomainError("adc bank: need at least one device");
    }
    return n;
}

std::vector<MtjDevice> devices_from_thresholds(
    const std::vector<double>& thresholds) {
    std::vector<MtjDevice> devices;
    devices.reserve(thresholds.size());
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        MtjDevice device;
        device.id = static_cast<int>(i) + 1;
        device.w_hm = 0.6e-6 * static_cast<double>(i + 1);
        device.t_hm = 15e-9;
        device.r_hm = kDefaultRhm;
        device.r_p = kDefaultRp;
        device.r_ap = kDefaultRap;
        device.i_crit_p = thresholds[i];
        device.i_crit_ap = -thresholds[i];
        device.validate();
        devices.push_back(device);
    }
    return devices;
}

} // namespace

int ThermometerCode::ones_count() const {
    return static_cast<int>(std::count(bits.begin(), bits.end(), true));
}

bool ThermometerCode::is_proper() const {
    bool seen_zero = false;
    for (bool bit : bits) {
        if (!bit) {
            seen_zero = true;
        } else if (seen_zero) {
            return false;
        }
    }
    return true;
}

std::pair<int, bool> encode_t2b(const ThermometerCode& code) {
    return {code.ones_count(), !code.is_proper()};
}

AdcBank::AdcBank(std::vector<MtjDevice> devices, TopologyKind topology,
                 std::vector<double> mirror_gains)
    : devices_(std::move(devices)), topology_(topology),
      mirror_gains_(std::move(mirror_gains)),
      states_(devices_.size(), DeviceState::P) {
    n_bits_ = bits_for_device_count(devices_.size());
    if (mirror_gains_.empty()) {
        mirror_gains_.assign(devices_.size(), 1.0);
    }
    if (mirror_gains_.size() != devices_.size()) {
        throw DomainError("adc bank: one mirror gain per device required");
    }
    for (double gain : mirror_gains_) {
        if (!(gain > 0.0) || !std::isfinite(gain)) {
            throw DomainError("adc bank: mirror gains must be positive");
        }
    }
    for (const MtjDevice& device : devices_) {
        device.validate();
    }
}

AdcBank AdcBank::from_devices(std::vector<MtjDevice> devices,
                              TopologyKind topology) {
    for (std::size_t i = 1; i < devices.size(); ++i) {
        if (!(devices[i - 1].i_crit_p < devices[i].i_crit_p)) {
            throw DomainError(
                "adc bank: nominal thresholds must ascend strictly "
                "(device " +
                std::to_string(devices[i].id) + ")");
        }
    }
    return AdcBank(std::move(devices), topology, {});
}

AdcBank AdcBank::from_thresholds(const std::vector<double>& thresholds) {
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
        if (!(thresholds[i - 1] < thresholds[i])) {
            throw DomainError(
                "adc bank: thresholds must ascend strictly at position " +
                std::to_string(i + 1));
        }
    }
    return AdcBank(devices_from_thresholds(thresholds),
                   TopologyKind::Parallel, {});
}

AdcBank AdcBank::sampled(const std::vector<double>& thresholds,
                         std::vector<double> mirror_gains) {
    return AdcBank(devices_from_thresholds(thresholds),
                   TopologyKind::Parallel, std::move(mirror_gains));
}

double AdcBank::effective_threshold(int index) const {
    if (index < 1 || index > device_count()) {
        throw RangeError("adc bank: device index " + std::to_string(index) +
                         " outside 1.." + std::to_string(device_count()));
    }
    const std::size_t i = static_cast<std::size_t>(index - 1);
    return devices_[i].i_crit_p / mirror_gains_[i];
}

void AdcBank::reset() {
    // Equivalent to a reset current below every i_crit_ap (or the
    // initialization field): the post-state is all-P either way.
    std::fill(states_.begin(), states_.end(), DeviceState::P);
    armed_ = true;
}

ConversionResult AdcBank::convert(double i_in) {
    if (!armed_) {
        throw StateError("convert: bank must be reset before each conversion");
    }
    if (!(i_in >= 0.0) || !std::isfinite(i_in)) {
        throw DomainError("convert: input current must be non-negative");
    }
    armed_ = false;

    ConversionResult result;
    result.input = i_in;
    result.thermometer.bits.resize(devices_.size());
    for (std::size_t i = 0; i < devices_.size(); ++i) {
        states_[i] =
            apply_current(devices_[i], states_[i], i_in * mirror_gains_[i]);
        result.thermometer.bits[i] = states_[i] == DeviceState::AP;
    }
    const auto [binary, bubble] = encode_t2b(result.thermometer);
    result.binary = binary;
    result.bubble_flag = bubble;
    return result;
}

std::vector<SweepPoint> transfer_sweep(AdcBank& bank, double i_start,
                                       double i_stop, int steps) {
    if (!(i_start < i_stop)) {
        throw DomainError("transfer_sweep: i_start must be below i_stop");
    }
    if (steps < 2) {
        throw DomainError("transfer_sweep: need at least 2 steps");
    }
    std::vector<SweepPoint> sweep;
    sweep.reserve(static_cast<std::size_t>(steps));
    const double span = i_stop - i_start;
    for (int k = 0; k < steps; ++k) {
        const double i_in =
            i_start + span * static_cast<double>(k) /
                          static_cast<double>(steps - 1);
        bank.reset();
        const ConversionResult result = bank.convert(i_in);
        sweep.push_back({i_in, result.binary, result.bubble_flag});
    }
    return sweep;
}

} // namespace sotadc
