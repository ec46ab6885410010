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

#ifndef SOTADC_UNITS_HPP
#define SOTADC_UNITS_HPP

namespace sotadc::units {

// All internal quantities are SI (amperes, ohms, meters). File interfaces use
// the bench-friendly units named in their column headers (mA, um, nm); these
// helpers convert at that boundary only.

inline constexpr double ma_to_a(double ma) { return ma * 1e-3; }
inline constexpr double a_to_ma(double a) { return a * 1e3; }
inline constexpr double ua_to_a(double ua) { return ua * 1e-6; }
inline constexpr double um_to_m(double um) { return um * 1e-6; }
inline constexpr double m_to_um(double m) { return m * 1e6; }
inline constexpr double nm_to_m(double nm) { return nm * 1e-9; }
inline constexpr double m_to_nm(double m) { return m * 1e9; }

} // namespace sotadc::units

#endif
