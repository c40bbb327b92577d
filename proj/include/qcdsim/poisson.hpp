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
#include <vector>

#include "qcdsim/schrodinger.hpp"
#include "qcdsim/structure.hpp"

namespace qcd {

/// Donor reference level: either tracking the local band edge minus the
/// binding energy, or a fixed user-supplied value.
enum class DonorReference { local_band_edge, fixed };

struct ChargeModel {
  double n_d = 0.0;                 // donor concentration, nm^-3
  std::vector<int> doped_layers;    // 0-based physical layer indices
  double degeneracy = 2.0;
  DonorReference reference = DonorReference::local_band_edge;
  double donor_binding = 0.025;     // eV below the band edge (local mode)
  double fixed_level = 0.0;         // eV (fixed mode)
  double temperature = 300.0;       // K
};

/// n(z) = m(z) kT/(pi hbar^2) sum_n |psi_n(z)|^2 ln(1 + exp((EF-E_n)/kT)),
/// sampled on the grid.  nm^-3.
Eigen::ArrayXd electron_density(const std::vector<StationaryState>& states,
                                double fermi_level, double temperature,
                                const LayerStack& stack,
                                const SamplingGrid& grid);

/// Ionized-donor fraction at one point: N_D / (1 + g exp((EF - E_ref)/kT)).
double ionized_donors(double fermi_level, const ChargeModel& model,
                      double reference_level);

/// Volume charge on the grid plus symbolic sheet entries.
struct ChargeDensity {
  Eigen::ArrayXd volume;             // e/nm^3 on the grid (N_D+ - n)
  std::vector<double> sheet_z;       // nm
  std::vector<double> sheet_sigma;   // e/nm^2
};

ChargeDensity total_charge_density(const ChargeModel& model,
                                   const Eigen::ArrayXd& ionized_profile,
                                   const Eigen::ArrayXd& n,
                                   const std::vector<double>& sheet_z,
                                   const std::vector<double>& sheet_sigma_e,
                                   const SamplingGrid& grid);

struct HartreeSolution {
  Eigen::ArrayXd v_h;              // eV on the grid, zero outside the stack
  std::vector<double> c1, c2;      // linear-term coefficients per sub-segment
  double max_matching_residual = 0.0;
};

/// Closed-form Hartree potential on the linearized layout: per-sub-segment
/// quadratic donor terms plus Airy-bilinear electron terms, glued by
/// continuity and dielectric flux conditions with V_H(0) = V_H(z_n) = 0.
/// Sheets (if any) enter through the flux jumps: the epsilon-weighted slope
/// jump at a sheet equals -sigma.
HartreeSolution hartree_closed_form(
    const PiecewiseLinearPotential& plp, const LayerStack& stack,
    const std::vector<StationaryState>& states,
    const std::vector<double>& occupancies,
    const std::vector<double>& donor_per_segment,
    const std::vector<double>& sheet_z, const std::vector<double>& sheet_sigma_e,
    const SamplingGrid& grid, double temperature);

/// Tridiagonal finite-difference solve of d/dz[eps eps0 dV/dz] = rho with
/// V(0) = V(L) = 0; sheets become single-cell densities -sigma/h.
/// rho is (N_D+ - n) in e/nm^3 on a uniform grid covering [0, L].
Eigen::ArrayXd fd_poisson_oracle(const Eigen::ArrayXd& z,
                                 const Eigen::ArrayXd& rho,
                                 const Eigen::ArrayXd& eps,
                                 const std::vector<double>& sheet_z,
                                 const std::vector<double>& sheet_sigma_e);

}  // namespace qcd
