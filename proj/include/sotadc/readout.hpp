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

#ifndef SOTADC_READOUT_HPP
#define SOTADC_READOUT_HPP

#include <span>
#include <vector>

#include "sotadc/device.hpp"

namespace sotadc {

enum class TopologyKind { Serial, Parallel };

/// End of the serial heavy-metal chain tied to ground during sensing.
/// Device 1 sits nearest T2, device n nearest T3.
enum class GroundTerminal { T2, T3 };

/// Readout wiring of a device bank.
///
/// Parallel: every device has its own strip, both ends accessible; the sense
/// current sees the junction plus half its own strip.
/// Serial: strips are chained end to end; the sense current of device i also
/// traverses the full strips between i and the grounded end.
class Topology {
  public:
    static Topology serial(std::vector<MtjDevice> devices,
                           GroundTerminal ground = GroundTerminal::T2);
    static Topology parallel(std::vector<MtjDevice> devices);

    TopologyKind kind() const { return kind_; }
    GroundTerminal ground() const { return ground_; }
    int device_count() const { return static_cast<int>(devices_.size()); }
    const std::vector<MtjDevice>& devices() const { return devices_; }

    /// 1-based lookup; throws RangeError for an invalid id.
    const MtjDevice& device(int id) const;

  private:
    Topology(TopologyKind kind, std::vector<MtjDevice> devices,
             GroundTerminal ground);

    TopologyKind kind_;
    std::vector<MtjDevice> devices_;
    GroundTerminal ground_;
};

/// Sense-current amplitude; must be positive and below every switching
/// threshold so that reading never disturbs the stored states.
struct SenseSpec {
    double i_sens = 100e-6; // A

    void validate(std::span<const MtjDevice> devices) const;
};

/// Resistance seen by the sense current from the top terminal of device
/// `index` to ground, for the given bank states.
double sensed_resistance(const Topology& topology, int index,
                         std::span<const DeviceState> states);

/// Effective magnetoresistance of one readout position:
/// (r_ap - r_p) / sensed_resistance with every device in P.
double readout_mr(const Topology& topology, int index);

struct TopologyComparisonRow {
    int index = 0;
    double mr_serial = 0.0;
    double mr_parallel = 0.0;
    double min_resistance_serial = 0.0;   // ohm, all-P sensed resistance
    double min_resistance_parallel = 0.0; // ohm
};

struct TopologyComparison {
    std::vector<TopologyComparisonRow> rows;
    double serial_mr_spread = 0.0; // (max - min) / max over serial positions
};

/// Per-position MR and minimum sensed resistance for both wirings of the
/// same device set.
TopologyComparison compare_topologies(const std::vector<MtjDevice>& devices);

} // namespace sotadc

#endif
