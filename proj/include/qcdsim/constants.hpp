/* Copyright 2026 The qcdsim authors
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

#pragma once

namespace qcd {
namespace constants {

// Working units: energy in eV, length in nm, mass in units of m0,
// charge in units of e, field in V/nm.

inline constexpr double hbar_c = 197.3269804;          // eV nm
inline constexpr double m0_c2 = 510998.95000;          // eV
inline constexpr double kinetic = hbar_c * hbar_c / (2.0 * m0_c2);  // hbar^2/(2 m0), eV nm^2
inline constexpr double k_boltzmann = 8.617333262e-5;  // eV/K
inline constexpr double elementary_charge = 1.602176634e-19;  // C
// vacuum permittivity in e/(V nm): eps0[C/(V m)] / e * 1e-9
inline constexpr double eps0 = 8.8541878128e-12 / elementary_charge * 1e-9;
inline constexpr double coulomb = 1.4399645478425668;  // e^2/(4 pi eps0), eV nm
inline constexpr double bohr_radius = 0.052917721054;  // nm
// C/m^2 -> e/nm^2
inline constexpr double coulomb_per_m2_to_e_per_nm2 = 1e-18 / elementary_charge;

}  // namespace constants
}  // namespace qcd
