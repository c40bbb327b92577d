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

#include "qcdsim/scf.hpp"

#include <algorithm>
#include <cmath>

#include "qcdsim/constants.hpp"

namespace qcd {

using constants::k_boltzmann;
using constants::kinetic;

namespace {

double trapezoid(const Eigen::ArrayXd& z, const Eigen::ArrayXd& f) {
  double acc = 0.0;
  for (long i = 0; i + 1 < z.size(); ++i)
    acc += 0.5 * (f[i] + f[i + 1]) * (z[i + 1] - z[i]);
  return acc;
}

Eigen::ArrayXd occupancy_all(const std::vector<StationaryState>& states,
                             double ef, double kt) {
  Eigen::ArrayXd occ(long(states.size()));
  for (size_t n = 0; n < states.size(); ++n) {
    double x = (ef - states[n].energy) / kt;
    occ[long(n)] = (x > 500.0) ? x : std::log1p(std::exp(x));
  }
  return occ;
}

struct DopedMask {
  Eigen::ArrayXd mask;  // 1 inside doped layers
};

DopedMask doped_mask(const LayerStack& stack, const ChargeModel& charge,
                     const SamplingGrid& grid) {
  DopedMask d;
  d.mask = Eigen::ArrayXd::Zero(grid.z.size());
  const auto& zb = stack.boundaries();
  for (int L : charge.doped_layers) {
    if (L < 0 || L >= int(stack.layers().size())) continue;
    for (long i = 0; i < grid.z.size(); ++i)
      if (grid.z[i] >= zb[L] && grid.z[i] < zb[L + 1]) d.mask[i] = 1.0;
  }
  return d;
}

Eigen::ArrayXd ionized_profile(const ChargeModel& charge, double ef,
                               const Eigen::ArrayXd& total_potential,
                               const Eigen::ArrayXd& mask) {
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(total_potential.size());
  double kt = k_boltzmann * charge.temperature;
  for (long i = 0; i < out.size(); ++i) {
    if (mask[i] == 0.0) continue;
    double ref = (charge.reference == DonorReference::local_band_edge)
                     ? total_potential[i] - charge.donor_binding
                     : charge.fixed_level;
    double x = (ef - ref) / kt;
    out[i] = (x > 500.0) ? 0.0
                         : charge.n_d / (1.0 + charge.degeneracy * std::exp(x));
  }
  return out;
}

double solve_fermi(const std::vector<StationaryState>& states,
                   const ChargeModel& charge, const LayerStack& stack,
                   const SamplingGrid& grid,
                   const Eigen::ArrayXd& total_potential,
                   const Eigen::ArrayXd& mask) {
  double kt = k_boltzmann * charge.temperature;
  if (charge.n_d <= 0.0 || charge.doped_layers.empty() || states.empty()) {
    double e0 = states.empty() ? 0.0 : states.front().energy;
    return e0 - 2000.0 * kt;  // effectively empty structure
  }
  double lo = states.front().energy - 3.0;
  double hi = std::max(total_potential.maxCoeff(), states.back().energy) + 1.0;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    Eigen::ArrayXd n = electron_density(states, mid, charge.temperature, stack, grid);
    double ns = trapezoid(grid.z, n);
    Eigen::ArrayXd nd = ionized_profile(charge, mid, total_potential, mask);
    double target = trapezoid(grid.z, nd);
    if (ns < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double convergence_delta(const Eigen::ArrayXd& n_prev,
                         const Eigen::ArrayXd& n_curr) {
  double peak = n_prev.maxCoeff();
  if (!(peak > 0.0)) return 0.0;
  double thresh = 1e-12 * peak;
  double delta = 0.0;
  for (long i = 0; i < n_prev.size(); ++i) {
    if (n_prev[i] < thresh) continue;
    delta = std::max(delta, std::abs(n_curr[i] - n_prev[i]) / n_prev[i]);
  }
  return delta;
}

SCFResult run_scf(const LayerStack& stack, const FieldProfile& fields,
                  const ChargeModel& charge, const SCFConfig& config) {
  SCFResult res;
  const double kt = k_boltzmann * charge.temperature;
  SamplingGrid grid = make_grid(stack, config.partitions);

  PotentialComponents comp;
  comp.grid = grid;
  comp.method_tag = config.method;
  comp.delta_ec = offset_component(stack, charge.temperature, grid);
  comp.v_e = field_component(fields, stack, grid);
  comp.v_h = Eigen::ArrayXd::Zero(grid.z.size());
  comp.v_hl = Eigen::ArrayXd::Zero(grid.z.size());

  // sheets enter V_H only in the printed-equation mode
  if (config.sheets_in_hartree) {
    const auto& zb = stack.boundaries();
    for (size_t p = 0; p < fields.sheet_charges.size(); ++p) {
      res.sheet_z.push_back(zb[p + 1]);  // boundaries z_1 ... z_n
      res.sheet_sigma_e.push_back(fields.sheet_charges[p] *
                                  constants::coulomb_per_m2_to_e_per_nm2);
    }
  }

  DopedMask doped = doped_mask(stack, charge, grid);
  BoundStateOptions bopts;
  bopts.scan_step = config.scan_step;

  Eigen::ArrayXd n_raw_prev;
  Eigen::ArrayXd n_mix;
  bool have_prev = false;

  const int max_iter = (config.method == "field_only") ? 1 : config.max_iterations;
  for (int iter = 0; iter < max_iter; ++iter) {
    res.linearized = linearize(comp, stack, config.partitions);
    res.states = bound_states(res.linearized, bopts);
    Eigen::ArrayXd total = comp.total();
    res.fermi_level =
        solve_fermi(res.states, charge, stack, grid, total, doped.mask);
    Eigen::ArrayXd occ = occupancy_all(res.states, res.fermi_level, kt);
    res.occupancies.assign(occ.data(), occ.data() + occ.size());
    Eigen::ArrayXd n_raw = electron_density(res.states, res.fermi_level,
                                            charge.temperature, stack, grid);
    res.density = n_raw;
    res.ionized = ionized_profile(charge, res.fermi_level, total, doped.mask);
    res.iterations_used = iter + 1;

    if (config.method == "field_only") {
      res.converged = true;
      break;
    }

    if (have_prev) {
      double delta = convergence_delta(n_raw_prev, n_raw);
      res.delta_history.push_back(delta);
      if (delta <= config.tolerance) {
        res.converged = true;
        break;
      }
    }
    n_mix = have_prev ? Eigen::ArrayXd((1.0 - config.mixing) * n_mix +
                                       config.mixing * n_raw)
                      : n_raw;
    n_raw_prev = n_raw;
    have_prev = true;

    // donors per linearization segment, evaluated at segment midpoints
    const int ns = res.linearized.segment_count();
    std::vector<double> donor_seg(ns, 0.0);
    for (int s = 0; s < ns; ++s) {
      double zm = 0.5 * (res.linearized.nodes[s] + res.linearized.nodes[s + 1]);
      int region = stack.region(zm);
      bool is_doped =
          std::find(charge.doped_layers.begin(), charge.doped_layers.end(),
                    region) != charge.doped_layers.end();
      if (!is_doped) continue;
      double vtot = res.linearized.values[s] +
                    res.linearized.eff_fields[s] * (zm - res.linearized.nodes[s]);
      double ref = (charge.reference == DonorReference::local_band_edge)
                       ? vtot - charge.donor_binding
                       : charge.fixed_level;
      double x = (res.fermi_level - ref) / kt;
      donor_seg[s] = (x > 500.0)
                         ? 0.0
                         : charge.n_d / (1.0 + charge.degeneracy * std::exp(x));
    }

    HartreeSolution hs = hartree_closed_form(
        res.linearized, stack, res.states, res.occupancies, donor_seg,
        res.sheet_z, res.sheet_sigma_e, grid, charge.temperature);

    if (config.check_hartree_oracle) {
      // compare against the finite-difference solve on a fine uniform grid
      double zlo = 0.0, zhi = stack.total_thickness();
      long nfd = long(std::ceil((zhi - zlo) / 0.0025)) + 1;
      Eigen::ArrayXd zf = Eigen::ArrayXd::LinSpaced(nfd, zlo, zhi);
      Eigen::ArrayXd rho(nfd), epsf(nfd);
      int seg = 0;
      for (long i = 0; i < nfd; ++i) {
        double z = zf[i];
        epsf[i] = stack.dielectric_profile(z);
        while (seg + 1 < ns && z >= res.linearized.nodes[seg + 1]) ++seg;
        double nv = 0.0;
        double n0 = stack.mass_profile(z) * kt / (2.0 * M_PI * kinetic);
        for (size_t n = 0; n < res.states.size(); ++n) {
          double p = res.states[n].psi(z);
          nv += res.occupancies[n] * n0 * p * p;
        }
        rho[i] = donor_seg[seg] - nv;
      }
      Eigen::ArrayXd vfd =
          fd_poisson_oracle(zf, rho, epsf, res.sheet_z, res.sheet_sigma_e);
      double scale = std::max(vfd.abs().maxCoeff(), 1e-30);
      double diff = 0.0;
      // closed form sampled on its own grid; interpolate onto zf
      auto interp = [&](double z) -> double {
        const Eigen::ArrayXd& gz = grid.z;
        long lo = 0, hi = gz.size() - 1;
        while (lo + 1 < hi) {
          long mid = (lo + hi) / 2;
          if (gz[mid] <= z)
            lo = mid;
          else
            hi = mid;
        }
        double t = (z - gz[lo]) / (gz[hi] - gz[lo]);
        return (1.0 - t) * hs.v_h[lo] + t * hs.v_h[hi];
      };
      for (long i = 0; i < nfd; ++i)
        diff = std::max(diff, std::abs(interp(zf[i]) - vfd[i]) / scale);
      res.hartree_oracle_max_diff = std::max(res.hartree_oracle_max_diff, diff);
    }

    double w = (iter == 0) ? 1.0 : config.mixing;
    comp.v_h = (1.0 - w) * comp.v_h + w * hs.v_h;
    if (config.method == "full") {
      Eigen::ArrayXd vhl_new = xc_component(n_mix, stack, grid);
      comp.v_hl = vhl_new;
    }
  }

  res.potential = comp;
  return res;
}

}  // namespace qcd
