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

#include <string>

namespace qcd {

/// Physical constants of Al{x}Ga{1-x}N at one composition.
///
/// Units: effective_mass in m0, dielectric dimensionless, energies in eV,
/// varshni_a in eV/K, varshni_b in K, polarization and piezoelectric
/// constants in C/m^2, elastic constants in GPa, a_lattice in nm.
struct MaterialParams {
  double x = 0.0;
  double effective_mass = 0.0;
  double dielectric = 0.0;
  double eg0 = 0.0;
  double varshni_a = 0.0;
  double varshni_b = 0.0;
  double p_sp = 0.0;
  double e31 = 0.0;
  double e33 = 0.0;
  double c13 = 0.0;
  double c33 = 0.0;
  double a_lattice = 0.0;
};

/// Binary endpoint constants plus the bandgap bowing parameter.
/// Defaults are reconstructed from the standard III-nitride compilations;
/// every value can be overridden through a materials file.
struct BinaryTable {
  MaterialParams gan;
  MaterialParams aln;
  double bowing_alpha = 0.7;  // eV

  /// Varshni gap E_g(x,T) with linear alloy interpolation of a, b and
  /// quadratic bowing of E_g(x,0).
  double bandgap(double x, double temperature) const;

  /// Conduction-band offset 0.765 [E_g(x,T) - E_g(GaN,T)] relative to GaN.
  double conduction_offset(double x, double temperature) const;

  /// Linear interpolation of every non-bandgap constant.
  MaterialParams interpolate(double x) const;
};

/// Built-in default table.
BinaryTable default_materials();

/// Parse a key/value materials file; keys look like "gan.effective_mass".
/// Unknown keys raise std::runtime_error naming the offending line.
BinaryTable load_materials(const std::string& path);

}  // namespace qcd
