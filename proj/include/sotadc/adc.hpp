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

#ifndef SOTADC_ADC_HPP
#define SOTADC_ADC_HPP

#include <utility>
#include <vector>

#include "sotadc/device.hpp"
#include "sotadc/readout.hpp"

namespace sotadc {

/// Comparator-bank output pattern: bit k is true iff device k+1 is in AP.
/// A code is proper when it is a prefix of ones (no bubbles).
struct ThermometerCode {
    std::vector<bool> bits;

    int ones_count() const;
    bool is_proper() const;
};

/// Ones-count decode. Returns (binary value, bubble flag); the flag is set
/// when the code is not a prefix of ones. Counting ones instead of finding
/// the highest set bit keeps a single out-of-order comparator from shifting
/// the output by more than one code.
std::pair<int, bool> encode_t2b(const ThermometerCode& code);

struct ConversionResult {
    double input = 0.0; // A
    ThermometerCode thermometer;
    int binary = 0;
    bool bubble_flag = false;
};

struct SweepPoint {
    double i_in = 0.0; // A
    int code = 0;
    bool bubble = false;
};

/// An n-bit converter: 2^n - 1 threshold devices plus an input mirror model.
///
/// Conversion is a two-phase state machine. reset() puts every device in P
/// and arms the bank; convert() is destructive (it switches devices) and
/// therefore rejected until the next reset().
class AdcBank {
  public:
    /// Bank from fully characterized devices. Requires 2^n - 1 devices with
    /// strictly ascending switching thresholds. Mirror gains default to 1.
    static AdcBank from_devices(std::vector<MtjDevice> devices,
                                TopologyKind topology = TopologyKind::Parallel);

    /// Ideal bank with the given strictly ascending thresholds (amperes) and
    /// placeholder resistances.
    static AdcBank from_thresholds(const std::vector<double>& thresholds);

    /// Monte-Carlo bank: perturbed thresholds and mirror gains. Threshold
    /// ordering is deliberately not enforced; disorder is the object of
    /// study.
    static AdcBank sampled(const std::vector<double>& thresholds,
                           std::vector<double> mirror_gains);

    int n_bits() const { return n_bits_; }
    int device_count() const { return static_cast<int>(devices_.size()); }
    const std::vector<MtjDevice>& devices() const { return devices_; }
    TopologyKind topology() const { return topology_; }
    const std::vector<double>& mirror_gains() const { return mirror_gains_; }
    const std::vector<DeviceState>& states() const { return states_; }
    bool armed() const { return armed_; }

    /// Input current at which device k (1-based) switches: i_crit_p / gain.
    double effective_threshold(int index) const;

    /// Drive every device back to P and arm the next conversion.
    void reset();

    /// Compare the mirrored input against every device threshold. Throws
    /// StateError if the bank is not freshly reset, DomainError for a
    /// negative input.
    ConversionResult convert(double i_in);

  private:
    AdcBank(std::vector<MtjDevice> devices, TopologyKind topology,
            std::vector<double> mirror_gains);

    std::vector<MtjDevice> devices_;
    TopologyKind topology_;
    std::vector<double> mirror_gains_;
    std::vector<DeviceState> states_;
    int n_bits_ = 0;
    bool armed_ = false;
};

/// Static transfer characteristic: reset-convert at `steps` equally spaced
/// inputs spanning [i_start, i_stop] inclusive.
std::vector<SweepPoint> transfer_sweep(AdcBank& bank, double i_start,
                                       double i_stop, int steps);

} // namespace sotadc

#endif
