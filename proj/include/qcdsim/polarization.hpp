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

#include <vector>

#include "qcdsim/structure.hpp"

namespace qcd {

/// Alloy combination rule for the polarization constants.  Vegard is the
/// standard linear rule; paper_literal drops the x factor on the AlN term,
/// P(x) = P_AlN + (1-x) P_GaN, kept for comparison runs.
enum class AlloyPolarizationRule { vegard, paper_literal };

/// Per-layer fields and sheet charges of a stack under zero total bias.
struct FieldProfile {
  std::vector<double> fields;         // V/nm, one per layer
  std::vector<double> polarizations;  // C/m^2, one per layer
  std::vector<double> sheet_charges;  // C/m^2 at boundaries z_1 ... z_n
};

/// Total (spontaneous + piezoelectric) polarization of a pseudomorphic
/// layer strained to the given in-plane lattice constant.  C/m^2.
double layer_polarization(const Layer& layer, double substrate_lattice,
                          const BinaryTable& table,
                          AlloyPolarizationRule rule = AlloyPolarizationRule::vegard);

/// Internal fields from displacement continuity across interior boundaries
/// plus the zero-total-voltage condition.  Cladding polarization is used for
/// the sheet charges at the outermost boundaries.
FieldProfile internal_fields(const LayerStack& stack,
                             const std::vector<double>& polarizations_c_m2,
                             double cladding_polarization_c_m2);

/// sigma_p = P^(p+1) - P^(p) for an ordered polarization list that includes
/// both cladding values; returns one sheet charge per interior boundary of
/// that list.
std::vector<double> sheet_charges(const std::vector<double>& polarizations);

}  // namespace qcd
