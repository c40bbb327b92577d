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

#include "qcdsim/structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcd {

LayerStack::LayerStack(std::vector<Layer> layers, double cladding_x,
                       BinaryTable table)
    : layers_(std::move(layers)), cladding_x_(cladding_x), table_(table) {
  if (layers_.empty()) throw std::invalid_argument("LayerStack: no layers");
  z_.reserve(layers_.size() + 1);
  z_.push_back(0.0);
  for (const Layer& l : layers_) {
    if (!(l.thickness > 0.0))
      throw std::invalid_argument("LayerStack: nonpositive layer thickness");
    z_.push_back(z_.back() + l.thickness);
  }
  masses_.reserve(layers_.size());
  dielectrics_.reserve(layers_.size());
  for (const Layer& l : layers_) {
    MaterialParams m = table_.interpolate(l.x);
    masses_.push_back(m.effective_mass);
    dielectrics_.push_back(m.dielectric);
  }
  MaterialParams c = table_.interpolate(cladding_x_);
  clad_mass_ = c.effective_mass;
  clad_eps_ = c.dielectric;
}

int LayerStack::region(double z) const {
  if (z < 0.0) return -1;
  if (z >= z_.back()) return int(layers_.size());
  // half-open [z_{p-1}, z_p): boundary belongs to the right region
  auto it = std::upper_bound(z_.begin(), z_.end(), z);
  return int(it - z_.begin()) - 1;
}

double LayerStack::mass_profile(double z) const {
  int r = region(z);
  if (r < 0 || r >= int(layers_.size())) return clad_mass_;
  return masses_[r];
}

double LayerStack::dielectric_profile(double z) const {
  int r = region(z);
  if (r < 0 || r >= int(layers_.size())) return clad_eps_;
  return dielectrics_[r];
}

MaterialParams LayerStack::material(int region_index) const {
  if (region_index < 0 || region_index >= int(layers_.size()))
    return table_.interpolate(cladding_x_);
  return table_.interpolate(layers_[region_index].x);
}

LayerStack paper_stack(double d, double /*temperature_unused*/,
                       BinaryTable table) {
  if (d < 0.0 || d > paper_well_budget)
    throw std::domain_error("paper_stack: d outside [0, d1+d3]");
  const double barrier = 1.04;
  const double alloy_x = 0.25;
  std::vector<Layer> raw = {
      {1.0, barrier, "barrier"},
      {0.0, d, "well"},
      {1.0, barrier, "barrier"},
      {alloy_x, barrier, "well"},
      {1.0, barrier, "barrier"},
      {alloy_x, paper_well_budget - d, "well"},
      {1.0, barrier, "barrier"},
  };
  // drop vanishing layers, merge same-composition neighbours
  std::vector<Layer> merged;
  for (const Layer& l : raw) {
    if (l.thickness < 0.01) continue;
    if (!merged.empty() && merged.back().x == l.x) {
      merged.back().thickness += l.thickness;
    } else {
      merged.push_back(l);
    }
  }
  return LayerStack(std::move(merged), 1.0, table);
}

}  // namespace qcd
