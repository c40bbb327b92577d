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

#include "qcdsim/poisson.hpp"
#include "qcdsim/polarization.hpp"
#include "qcdsim/potential.hpp"

namespace qcd {

struct SCFConfig {
  double tolerance = 1e-6;
  int max_iterations = 60;
  double mixing = 0.5;             // density mixing weight; 1.0 = plain
  std::string method = "full";     // full | no_xc | field_only
  int partitions = 16;             // linearization sub-segments per layer
  bool sheets_in_hartree = false;  // add the printed sigma ramps to V_H
  bool check_hartree_oracle = false;
  double scan_step = 1e-3;         // eV, bound-state sign scan
};

struct SCFResult {
  std::vector<StationaryState> states;
  PotentialComponents potential;
  PiecewiseLinearPotential linearized;
  double fermi_level = 0.0;
  std::vector<double> occupancies;     // ln(1+exp((EF-E_n)/kT))
  std::vector<double> delta_history;
  bool converged = false;
  int iterations_used = 0;
  Eigen::ArrayXd density;              // nm^-3 on potential.grid
  Eigen::ArrayXd ionized;              // nm^-3 on potential.grid
  double hartree_oracle_max_diff = 0.0;
  std::vector<double> sheet_z;         // sheets passed to V_H (paper mode)
  std::vector<double> sheet_sigma_e;
};

/// Relative density change, max over the points where the previous density
/// exceeds 1e-12 of its own maximum; 0 when the previous density vanishes.
double convergence_delta(const Eigen::ArrayXd& n_prev,
                         const Eigen::ArrayXd& n_curr);

/// Self-consistent iteration: solve bound states on the linearized
/// potential, fill subbands from charge neutrality, rebuild the Hartree and
/// exchange-correlation components, repeat until the density settles.
/// Non-convergence is reported through the result flag, not an exception.
SCFResult run_scf(const LayerStack& stack, const FieldProfile& fields,
                  const ChargeModel& charge, const SCFConfig& config);

}  // namespace qcd
