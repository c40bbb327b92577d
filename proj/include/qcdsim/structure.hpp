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
#include <vector>

#include "qcdsim/materials.hpp"

namespace qcd {

struct Layer {
  double x = 0.0;          // Al fraction
  double thickness = 0.0;  // nm
  std::string role;        // "barrier" | "well", informational
};

/// Plane multilayer stack with semi-infinite cladding on both sides.
/// Boundaries z[0] = 0 ... z[n] follow from the layer thicknesses.
/// Profile lookups use half-open intervals [z_{p-1}, z_p): a probe at an
/// exact boundary belongs to the right-hand region.
class LayerStack {
 public:
  LayerStack(std::vector<Layer> layers, double cladding_x,
             BinaryTable table = default_materials());

  const std::vector<Layer>& layers() const { return layers_; }
  const std::vector<double>& boundaries() const { return z_; }
  double total_thickness() const { return z_.back(); }
  double cladding_x() const { return cladding_x_; }
  const BinaryTable& table() const { return table_; }

  /// Region index at z: -1 for the left cladding, layers().size() for the
  /// right cladding, else the layer index.
  int region(double z) const;

  double mass_profile(double z) const;        // m0 units
  double dielectric_profile(double z) const;  // relative permittivity

  MaterialParams material(int region_index) const;  // claddings allowed

 private:
  std::vector<Layer> layers_;
  std::vector<double> z_;
  double cladding_x_;
  BinaryTable table_;
  std::vector<double> masses_;       // per layer
  std::vector<double> dielectrics_;  // per layer
  double clad_mass_;
  double clad_eps_;
};

/// The seven-layer stack of the studied cascade with the inner two-barrier
/// block positioned by d: input well width d, output well width
/// (d1 + d3) - d, with the 2.60 nm total well budget held fixed.  Layers
/// thinner than 0.01 nm are elided and same-composition neighbours merged.
LayerStack paper_stack(double d, double temperature_unused = 300.0,
                       BinaryTable table = default_materials());

/// Total well budget of the paper geometry, d1 + d3 in nm.
inline constexpr double paper_well_budget = 2.60;

}  // namespace qcd
