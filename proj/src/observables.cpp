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

#include "qcdsim/observables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qcdsim/constants.hpp"

namespace qcd {

namespace {

// adaptive Simpson with absolute tolerance scaled by the running estimate
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double tol,
                        int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double err = left + right - whole;
  if (depth <= 0 || std::abs(err) < 15.0 * tol)
    return left + right + err / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_simpson(f, a, b, fa, fm, fb, tol, 24);
}

}  // namespace

double oscillator_strength(const StationaryState& n, const StationaryState& np,
                           const LayerStack& stack) {
  const auto& zb = stack.boundaries();
  double sum = 0.0;
  for (size_t p = 0; p + 1 < zb.size(); ++p) {
    auto integrand = [&](double z) { return z * n.psi(z) * np.psi(z); };
    // scale tolerance by the layer extent and typical |z psi psi'|
    double scale = std::max(1e-12, std::abs(zb[p + 1]));
    double ip = integrate(integrand, zb[p], zb[p + 1], 1e-10 * scale);
    double mass = stack.material(int(p)).effective_mass;
    sum += mass * ip * ip;
  }
  return (n.energy - np.energy) / constants::kinetic * sum;
}

TransitionTable transition_table(const std::vector<StationaryState>& states,
                                 const LayerStack& stack) {
  TransitionTable t;
  const int nb = int(states.size());
  t.energies.resize(nb);
  for (int i = 0; i < nb; ++i) t.energies[i] = states[i].energy;
  t.omega = Eigen::MatrixXd::Zero(nb, nb);
  t.f = Eigen::MatrixXd::Zero(nb, nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) t.omega(i, j) = t.energies[i] - t.energies[j];
  for (int i = 0; i < nb; ++i) {
    for (int j = i + 1; j < nb; ++j) {
      double fij = oscillator_strength(states[i], states[j], stack);
      t.f(i, j) = fij;
      t.f(j, i) = -fij;
    }
  }
  return t;
}

double detection_energy(const TransitionTable& table) {
  if (table.energies.size() < 3)
    throw std::runtime_error("detection_energy: fewer than three bound states");
  return table.energies[2] - table.energies[0];
}

DesignCriteria design_criteria(const TransitionTable& table) {
  DesignCriteria c;
  if (table.energies.size() < 5) return c;
  double f13 = std::abs(table.f(0, 2));
  double others = 0.0;
  bool dominant = true;
  for (int np : {1, 3, 4}) {
    double v = std::abs(table.f(0, np));
    others += v;
    if (f13 <= v) dominant = false;
  }
  c.cond_325 = dominant && f13 > 0.0;
  c.cond_326 = f13 > others && f13 > 0.0;
  return c;
}

std::vector<ScanRow> geometry_scan(double d_min, double d_max, double step,
                                   const StackFactory& make_stack,
                                   const FieldFactory& make_fields,
                                   const ChargeModel& charge,
                                   const SCFConfig& config, int jobs) {
  if (!(step > 0.0)) throw std::invalid_argument("geometry_scan: step <= 0");
  std::vector<double> ds;
  for (double d = d_min; d <= d_max + 1e-12; d += step) ds.push_back(d);
  if (ds.empty()) ds.push_back(d_min);
  std::vector<ScanRow> rows(ds.size());

  auto work = [&](size_t i) {
    ScanRow& row = rows[i];
    row.d = ds[i];
    try {
      LayerStack stack = make_stack(ds[i]);
      FieldProfile fields = make_fields(stack);
      SCFResult r = run_scf(stack, fields, charge, config);
      row.converged = r.converged;
      row.bound_count = int(r.states.size());
      TransitionTable t = transition_table(r.states, stack);
      for (size_t n = 0; n < r.states.size() && n < 5; ++n)
        row.energies.push_back(r.states[n].energy);
      if (r.states.size() >= 2) row.f12 = t.f(0, 1);
      if (r.states.size() >= 3) row.f13 = t.f(0, 2);
      if (r.states.size() >= 4) row.f14 = t.f(0, 3);
      if (r.states.size() >= 5) row.f15 = t.f(0, 4);
      DesignCriteria c = design_criteria(t);
      row.cond_325 = c.cond_325;
      row.cond_326 = c.cond_326;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  if (jobs <= 1) {
    for (size_t i = 0; i < ds.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= ds.size()) return;
        work(i);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace qcd
