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

#include "qcdsim/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "qcdsim/constants.hpp"

namespace qcd {

SamplingGrid make_grid(const LayerStack& stack, int partitions, int oversample,
                       double pad, double pad_step) {
  if (partitions < 1) throw std::invalid_argument("make_grid: partitions < 1");
  if (oversample < 1) throw std::invalid_argument("make_grid: oversample < 1");
  SamplingGrid g;
  g.partitions = partitions;
  std::vector<double> pts;
  // left pad
  int npad = int(std::ceil(pad / pad_step));
  for (int i = npad; i >= 1; --i) pts.push_back(-i * pad_step);
  g.interior_begin = int(pts.size());
  const auto& zb = stack.boundaries();
  for (size_t p = 0; p + 1 < zb.size(); ++p) {
    double w = (zb[p + 1] - zb[p]) / partitions;
    for (int l = 0; l < partitions; ++l) {
      double znode = zb[p] + l * w;
      g.node_index.push_back(int(pts.size()));
      g.layer_of_node.push_back(int(p));
      for (int j = 0; j < oversample; ++j) pts.push_back(znode + j * w / oversample);
    }
  }
  g.node_index.push_back(int(pts.size()));
  g.layer_of_node.push_back(int(zb.size()) - 2);
  pts.push_back(zb.back());
  g.interior_end = int(pts.size()) - 1;
  // right pad
  for (int i = 1; i <= npad; ++i) pts.push_back(zb.back() + i * pad_step);
  g.z = Eigen::Map<Eigen::ArrayXd>(pts.data(), long(pts.size()));
  return g;
}

Eigen::ArrayXd offset_component(const LayerStack& stack, double temperature,
                                const SamplingGrid& grid) {
  const auto& tab = stack.table();
  double clad = tab.conduction_offset(stack.cladding_x(), temperature);
  std::vector<double> per_layer;
  per_layer.reserve(stack.layers().size());
  for (const Layer& l : stack.layers())
    per_layer.push_back(tab.conduction_offset(l.x, temperature));
  Eigen::ArrayXd out(grid.z.size());
  for (long i = 0; i < grid.z.size(); ++i) {
    int r = stack.region(grid.z[i]);
    out[i] = (r < 0 || r >= int(per_layer.size())) ? clad : per_layer[r];
  }
  return out;
}

Eigen::ArrayXd field_component(const FieldProfile& fields,
                               const LayerStack& stack,
                               const SamplingGrid& grid) {
  const auto& zb = stack.boundaries();
  const size_t n = stack.layers().size();
  if (fields.fields.size() != n)
    throw std::invalid_argument("field_component: field/layer count mismatch");
  std::vector<double> vnode(n + 1, 0.0);
  for (size_t p = 0; p < n; ++p)
    vnode[p + 1] = vnode[p] + fields.fields[p] * (zb[p + 1] - zb[p]);
  Eigen::ArrayXd out(grid.z.size());
  for (long i = 0; i < grid.z.size(); ++i) {
    double z = grid.z[i];
    int r = stack.region(z);
    if (r < 0)
      out[i] = 0.0;
    else if (r >= int(n))
      out[i] = vnode[n];
    else
      out[i] = vnode[r] + fields.fields[r] * (z - zb[r]);
  }
  return out;
}

Eigen::ArrayXd field_component_literal(const FieldProfile& fields,
                                       const LayerStack& stack,
                                       const SamplingGrid& grid) {
  const auto& zb = stack.boundaries();
  const size_t n = stack.layers().size();
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(grid.z.size());
  for (long i = 0; i < grid.z.size(); ++i) {
    double z = grid.z[i];
    int r = stack.region(z);
    if (r < 0 || r >= int(n)) continue;
    double fprev = (r == 0) ? 0.0 : fields.fields[r - 1];
    double sign = (r % 2 == 0) ? 1.0 : -1.0;  // (-1)^(p-1), p = r+1
    out[i] = sign * (fields.fields[r] * z - fprev * zb[r]);
  }
  return out;
}

Eigen::ArrayXd xc_component(const Eigen::ArrayXd& n, const LayerStack& stack,
                            const SamplingGrid& grid) {
  using namespace constants;
  if (n.size() != grid.z.size())
    throw std::invalid_argument("xc_component: density/grid size mismatch");
  static const double pref = std::cbrt(9.0 / (4.0 * M_PI * M_PI));
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(grid.z.size());
  for (long i = 0; i < grid.z.size(); ++i) {
    double ni = n[i];
    if (!(ni > 1e-14)) continue;  // r_s -> infinity limit
    double z = grid.z[i];
    double ab = bohr_radius * stack.dielectric_profile(z) / stack.mass_profile(z);
    double rs = std::pow(4.0 * M_PI * ab * ab * ab * ni / 3.0, -1.0 / 3.0);
    double bracket = 1.0 + 0.6213 * rs / 21.0 * std::log1p(21.0 / rs);
    out[i] = -pref * bracket * coulomb /
             (stack.dielectric_profile(z) * ab * rs);
  }
  return out;
}

PiecewiseLinearPotential linearize(const PotentialComponents& components,
                                   const LayerStack& stack, int partitions) {
  if (partitions != components.grid.partitions)
    throw std::invalid_argument("linearize: partitions mismatch with grid");
  const SamplingGrid& g = components.grid;
  Eigen::ArrayXd total = components.total();

  PiecewiseLinearPotential plp;
  plp.partitions = partitions;
  const int nn = int(g.node_index.size());
  plp.nodes.resize(nn);
  plp.values.resize(nn);
  plp.eff_fields.resize(nn - 1);
  plp.masses.resize(nn - 1);
  for (int i = 0; i < nn; ++i) {
    plp.nodes[i] = g.z[g.node_index[i]];
    plp.values[i] = total[g.node_index[i]];
  }
  for (int i = 0; i + 1 < nn; ++i) {
    bool crosses_layer = g.layer_of_node[i] != g.layer_of_node[i + 1] ||
                         i + 2 == nn;
    if (!crosses_layer) {
      plp.eff_fields[i] = (plp.values[i + 1] - plp.values[i]) /
                          (plp.nodes[i + 1] - plp.nodes[i]);
    } else {
      // the band edge steps at the layer boundary: take the secant up to the
      // last sample inside this sub-segment (the left limit), not across the
      // discontinuity
      int j0 = g.node_index[i];
      int j1 = g.node_index[i + 1] - 1;  // last oversampled point in-layer
      if (j1 <= j0) j1 = j0 + 1;
      plp.eff_fields[i] = (total[j1] - total[j0]) / (g.z[j1] - g.z[j0]);
    }
    plp.masses[i] = stack.material(g.layer_of_node[i]).effective_mass;
  }
  plp.u_left = total[0];
  plp.u_right = total[total.size() - 1];
  plp.cladding_mass = stack.mass_profile(-1.0);
  return plp;
}

}  // namespace qcd
