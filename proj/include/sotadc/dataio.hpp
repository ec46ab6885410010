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

#ifndef SOTADC_DATAIO_HPP
#define SOTADC_DATAIO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "sotadc/analysis.hpp"
#include "sotadc/device.hpp"
#include "sotadc/readout.hpp"
#include "sotadc/variation.hpp"

namespace sotadc::io {

/// Read the device parameter CSV
/// (`id,w_hm_um,t_hm_nm,r_hm_ohm,r_p_ohm,r_ap_ohm,i_crit_p_ma,i_crit_ap_ma`),
/// convert to SI, and validate every row. With `paper_admission`, rows whose
/// switching resistance change is below 68 ohm or whose sensed
/// magnetoresistance is below 20% are rejected the way out-of-spec samples
/// were screened on the bench.
std::vector<MtjDevice> ingest_devices(const std::filesystem::path& path,
                                      bool paper_admission = false);

/// `device_id,mean_ma,sigma_ma` threshold-distribution table, SI on return.
struct MeansTable {
    std::vector<int> ids;
    std::vector<double> means;  // A
    std::vector<double> sigmas; // A
};
MeansTable read_means_csv(const std::filesystem::path& path);

/// `w_hm_um,i_crit_ma` fit input, converted to (m, A) pairs.
std::vector<std::pair<double, double>>
read_fit_csv(const std::filesystem::path& path);

// ---- Serializers. All return full file contents so callers can stage and
// ---- promote outputs atomically.

std::string comparison_csv(const TopologyComparison& comparison);
std::string sweep_csv(const std::vector<SweepPoint>& sweep);
std::string ri_loop_csv(const std::vector<std::pair<double, double>>& loop);
std::string nonlinearity_csv(const NonlinearityReport& report);
std::string nonlinearity_json(const NonlinearityReport& report);
std::string fit_json(const FitResult& fit);
std::string mc_report_json(const McReport& report);
std::string histogram_csv(const Histogram& histogram);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::filesystem::path& path);

/// Write `content` next to `path` and rename into place.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

} // namespace sotadc::io

#endif
