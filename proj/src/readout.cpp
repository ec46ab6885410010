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

#include "sotadc/readout.hpp"

#include <algorithm>
#include <string>

#include "sotadc/errors.hpp"

namespace sotadc {

namespace {

void validate_device_set(const std::vector<MtjDevice>& devices) {
    if (devices.empty()) {
        throw DomainError("topology: device list must be non-empty");
    }
    for (std::size_t i = 0; i < devices.size(); ++i) {
        devices[i].validate();
        // Ids must be 1..n in order so that position in the chain and id
        // coincide.
        if (devices[i].id != static_cast<int>(i) + 1) {
            throw DomainError("topology: device ids must be consecutive "
                              "starting at 1, got id " +
                              std::to_string(devices[i].id) + " at position " +
                              std::to_string(i + 1));
        }
    }
}

} // namespace

Topology::Topology(TopologyKind kind, std::vector<MtjDevice> devices,
                   GroundTerminal ground)
    : kind_(kind), devices_(std::move(devices)), ground_(ground) {
    validate_device_set(devices_);
}

Topology Topology::serial(std::vector<MtjDevice> devices,
                          GroundTerminal ground) {
    return Topology(TopologyKind::Serial, std::move(devices), ground);
}

Topology Topology::parallel(std::vector<MtjDevice> devices) {
    return Topology(TopologyKind::Parallel, std::move(devices),
                    GroundTerminal::T2);
}

const MtjDevice& Topology::device(int id) const {
    if (id < 1 || id > device_count()) {
        throw RangeError("topology: device index " + std::to_string(id) +
                         " outside 1.." + std::to_string(device_count()));
    }
    return devices_[static_cast<std::size_t>(id - 1)];
}

void SenseSpec::validate(std::span<const MtjDevice> devices) const {
    if (!(i_sens > 0.0)) {
        throw DomainError("sense current must be positive");
    }
    for (const MtjDevice& device : devices) {
        if (i_sens >= device.i_crit_p) {
            throw DomainError("sense current " + std::to_string(i_sens) +
                              " A would switch device " +
                              std::to_string(device.id));
        }
    }
}

double sensed_resistance(const Topology& topology, int index,
                         std::span<const DeviceState> states) {
    const MtjDevice& sensed = topology.device(index);
    if (states.size() != static_cast<std::size_t>(topology.device_count())) {
        throw RangeError("sensed_resistance: state vector length mismatch");
    }
    const DeviceState state = states[static_cast<std::size_t>(index - 1)];

    // The pillar taps the strip mid-line, so the sensed device always
    // contributes half its own segment.
    double r = junction_resistance(sensed, state) + sensed.r_hm / 2.0;
    if (topology.kind() == TopologyKind::Parallel) {
        return r;
    }

    // Serial: add the full segments chained between the sensed device and
    // the grounded end. Other junctions hang off the chain and carry no
    // sense current.
    if (topology.ground() == GroundTerminal::T2) {
        for (int k = 1; k < index; ++k) {
            r += topology.device(k).r_hm;
        }
    } else {
        for (int k = index + 1; k <= topology.device_count(); ++k) {
            r += topology.device(k).r_hm;
        }
    }
    return r;
}

double readout_mr(const Topology& topology, int index) {
    const MtjDevice& device = topology.device(index);
    const std::vector<DeviceState> all_p(
        static_cast<std::size_t>(topology.device_count()), DeviceState::P);
    return (device.r_ap - device.r_p) /
           sensed_resistance(topology, index, all_p);
}

TopologyComparison compare_topologies(const std::vector<MtjDevice>& devices) {
    const Topology serial = Topology::serial(devices);
    const Topology parallel = Topology::parallel(devices);
    const std::vector<DeviceState> all_p(devices.size(), DeviceState::P);

    TopologyComparison out;
    out.rows.reserve(devices.size());
    for (int index = 1; index <= static_cast<int>(devices.size()); ++index) {
        TopologyComparisonRow row;
        row.index = index;
        row.mr_serial = readout_mr(serial, index);
        row.mr_parallel = readout_mr(parallel, index);
        row.min_resistance_serial = sensed_resistance(serial, index, all_p);
        row.min_resistance_parallel =
            sensed_resistance(parallel, index, all_p);
        out.rows.push_back(row);
    }

    const auto [lo, hi] = std::minmax_element(
        out.rows.begin(), out.rows.end(),
        [](const auto& a, const auto& b) { return a.mr_serial < b.mr_serial; });
    out.serial_mr_spread =
        hi->mr_serial > 0.0 ? (hi->mr_serial - lo->mr_serial) / hi->mr_serial
                            : 0.0;
    return out;
}

} // namespace sotadc
