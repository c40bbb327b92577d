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

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qcdsim/polarization.hpp"
#include "qcdsim/structure.hpp"

namespace qcd {

/// Sampling grid tied to a stack: the interior points are the linearization
/// nodes (partitions per layer) refined by an oversampling factor, so the
/// nodes are exact grid points; pads extend into both claddings.
struct SamplingGrid {
  Eigen::ArrayXd z;
  std::vector<int> node_index;     // indices of z_{p_l} within z
  std::vector<int> layer_of_node;  // physical layer left of each node gap
  int interior_begin = 0;          // first index with z >= 0
  int interior_end = 0;            // first index with z >= total thickness
  int partitions = 0;
};

SamplingGrid make_grid(const LayerStack& stack, int partitions,
                       int oversample = 4, double pad = 4.0,
                       double pad_step = 0.02);

/// The four effective-potential components sampled on a grid.
struct PotentialComponents {
  SamplingGrid grid;
  Eigen::ArrayXd delta_ec;
  Eigen::ArrayXd v_e;
  Eigen::ArrayXd v_h;
  Eigen::ArrayXd v_hl;
  std::string method_tag = "full";  // full | no_xc | field_only

  Eigen::ArrayXd total() const {
    if (method_tag == "field_only") return delta_ec + v_e;
    if (method_tag == "no_xc") return delta_ec + v_e + v_h;
    return delta_ec + v_e + v_h + v_hl;
  }
};

/// Piecewise-linear approximant consumed by the Airy solver.
struct PiecewiseLinearPotential {
  Eigen::ArrayXd nodes;       // z_{p_l}, strictly increasing, nodes[0] = 0
  Eigen::ArrayXd values;      // eV at nodes
  Eigen::ArrayXd eff_fields;  // V/nm per sub-segment (secant slope / e)
  Eigen::ArrayXd masses;      // m0 units per sub-segment
  double u_left = 0.0;        // cladding potential, z < 0
  double u_right = 0.0;       // cladding potential, z > nodes.tail
  double cladding_mass = 0.0;
  int partitions = 0;

  int segment_count() const { return int(eff_fields.size()); }
};

Eigen::ArrayXd offset_component(const LayerStack& stack, double temperature,
                                const SamplingGrid& grid);

/// Continuous integral of the signed piecewise-constant field; zero at z=0
/// and (through the voltage-sum condition) at the far boundary.
Eigen::ArrayXd field_component(const FieldProfile& fields,
                               const LayerStack& stack,
                               const SamplingGrid& grid);

/// Literal evaluation of the printed alternating-sign expression, kept for
/// comparison; discontinuous at layer boundaries.
Eigen::ArrayXd field_component_literal(const FieldProfile& fields,
                                       const LayerStack& stack,
                                       const SamplingGrid& grid);

/// Hedin-Lundquist exchange-correlation potential for a carrier density
/// n (nm^-3) sampled on the grid; zero where n vanishes.
Eigen::ArrayXd xc_component(const Eigen::ArrayXd& n, const LayerStack& stack,
                            const SamplingGrid& grid);

PiecewiseLinearPotential linearize(const PotentialComponents& components,
                                   const LayerStack& stack, int partitions);

}  // namespace qcd
