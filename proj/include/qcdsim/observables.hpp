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
#include <functional>
#include <string>
#include <vector>

#include "qcdsim/scf.hpp"

namespace qcd {

/// Transition energies and oscillator strengths between the bound states.
/// f is antisymmetric with zero diagonal; signed values are stored, the
/// design criteria compare magnitudes.
struct TransitionTable {
  std::vector<double> energies;  // eV
  Eigen::MatrixXd omega;         // E_n - E_n', eV
  Eigen::MatrixXd f;             // dimensionless
};

/// Mass-weighted per-layer dipole formula: [2(E_n - E_n')/hbar^2] *
/// sum_p m_p |integral_p z psi_n psi_n' dz|^2 with adaptive per-segment
/// quadrature (1e-10 relative).
double oscillator_strength(const StationaryState& n, const StationaryState& np,
                           const LayerStack& stack);

TransitionTable transition_table(const std::vector<StationaryState>& states,
                                 const LayerStack& stack);

/// Detected transition energy Omega_13 = E_3 - E_1; throws
/// std::runtime_error when fewer than three bound states exist.
double detection_energy(const TransitionTable& table);

/// Design conditions on |f|: (a) f_13 largest among f_1n', (b) f_13 larger
/// than the sum of the other f_1n', n' = 2..5.
struct DesignCriteria {
  bool cond_325 = false;
  bool cond_326 = false;
};
DesignCriteria design_criteria(const TransitionTable& table);

struct ScanRow {
  double d = 0.0;            // nm
  std::vector<double> energies;  // eV, up to 5 reported
  double f12 = 0.0, f13 = 0.0, f14 = 0.0, f15 = 0.0;
  bool cond_325 = false;
  bool cond_326 = false;
  bool converged = false;
  int bound_count = 0;
  std::string error;
};

using StackFactory = std::function<LayerStack(double d)>;
using FieldFactory = std::function<FieldProfile(const LayerStack&)>;

/// Full-SCF sweep of the inner-block position d; rows are computed
/// independently (jobs > 1 runs them on a thread pool) and returned in
/// ascending d order regardless of scheduling.
std::vector<ScanRow> geometry_scan(double d_min, double d_max, double step,
                                   const StackFactory& make_stack,
                                   const FieldFactory& make_fields,
                                   const ChargeModel& charge,
                                   const SCFConfig& config, int jobs = 1);

}  // namespace qcd
