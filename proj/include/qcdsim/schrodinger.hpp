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

#include "qcdsim/potential.hpp"

namespace qcd {

/// One linear-potential interval: V(z) = v0 + field (z - z0) for z in [z0, z1].
struct SegmentSpec {
  double z0 = 0.0;
  double z1 = 0.0;
  double v0 = 0.0;     // eV
  double field = 0.0;  // eV/nm (e times the electric field)
  double mass = 0.0;   // m0
};

/// Local solution basis on one segment.  Airy pair for tilted segments,
/// exponential/trigonometric pair for effectively flat ones; the flat-limit
/// threshold keeps the Airy argument from degenerating.
struct SegmentBasis {
  enum class Kind { airy, exp_flat, trig_flat, linear_flat };
  Kind kind = Kind::airy;
  double z0 = 0.0;
  double mass = 0.0;
  double zeta0 = 0.0;  // airy: zeta(z) = zeta0 + beta (z - z0)
  double beta = 0.0;   // airy: signed slope, sign(field) * (m e|F| / K)^(1/3)
  double kappa = 0.0;  // flat: decay or wave number
};

/// Basis values at one point with per-function log scales: the actual
/// basis functions are u_i exp(l_i), derivatives du_i exp(l_i).
struct BasisValues {
  double u1 = 0.0, u2 = 0.0;
  double du1 = 0.0, du2 = 0.0;
  double l1 = 0.0, l2 = 0.0;
};

inline constexpr double flat_field_threshold = 1e-6;  // V/nm

SegmentBasis make_basis(const SegmentSpec& seg, double energy);
BasisValues eval_basis(const SegmentBasis& basis, double z);

/// Coefficient map across one boundary with explicit exponent bookkeeping:
/// the full matrix is diag(exp(row_log)) * core * diag(exp(col_log)).
struct TransferStep {
  Eigen::Matrix2d core;
  Eigen::Vector2d row_log;
  Eigen::Vector2d col_log;

  Eigen::Matrix2d dense() const;
};

/// Maps (A,B) of the left segment onto the right segment enforcing
/// continuity of the wave function and of (1/m) psi' at z.
/// Throws std::runtime_error if the right basis is singular there.
TransferStep transfer_step(double energy, const SegmentSpec& left,
                           const SegmentSpec& right, double z);

/// Per-segment coefficients of an assembled bound state.
struct SegmentSolution {
  SegmentBasis basis;
  double z0 = 0.0, z1 = 0.0;
  double a = 0.0, b = 0.0;    // mantissas
  double la = 0.0, lb = 0.0;  // log scales
};

struct StationaryState {
  double energy = 0.0;  // eV
  std::vector<SegmentSolution> segments;  // claddings first/last
  std::vector<double> localization;       // probability per physical layer
  double norm_residual = 0.0;  // |closed-form norm - 1| after normalization
  int nodes = 0;               // interior sign changes

  double psi(double z) const;
  double dpsi(double z) const;  // analytic derivative from the segment basis
  Eigen::ArrayXd psi_on(const Eigen::ArrayXd& z) const;
};

struct BoundStateOptions {
  double scan_step = 1e-3;    // eV
  double refine_tol = 1e-12;  // eV
  double window_margin = 1e-3;
};

/// Normalized residual of the decaying-solution continuation: the relative
/// amplitude of the growing exponential in the right cladding.  Zero at
/// bound states; kept O(1) by per-step renormalization.
double dispersion_residual(double energy, const PiecewiseLinearPotential& plp);

/// All bound states in (min V + margin, min cladding - margin), sign-scan
/// plus bisection, normalized per the closed-form Airy integrals with
/// quadrature fallback.
std::vector<StationaryState> bound_states(const PiecewiseLinearPotential& plp,
                                          const BoundStateOptions& opts = {});

/// Mass-weighted three-point finite-difference Hamiltonian eigenvalues
/// (independent verification oracle).  Dirichlet boundaries padded into the
/// cladding; returns eigenvalues below the cladding edge.
std::vector<double> fd_oracle(const PiecewiseLinearPotential& plp,
                              double grid_step = 0.0025, double pad = 4.0);

}  // namespace qcd
