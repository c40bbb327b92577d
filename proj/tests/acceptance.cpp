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

// Acceptance suite: one pass/fail line per criterion, at the stated
// tolerances.  The process exit code is the number of failed criteria.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qcdsim/airy.hpp"
#include "qcdsim/config.hpp"
#include "qcdsim/constants.hpp"
#include "qcdsim/observables.hpp"

using namespace qcd;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s  --  %s\n", pass ? "PASS" : "FAIL", idx,
              name, detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

RunConfig paper_config() {
  RunConfig cfg = parse_config(QCDSIM_CONFIG_DIR "/paper.cfg");
  resolve(cfg);
  return cfg;
}

double wall_seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct Lcg {
  unsigned long long s;
  explicit Lcg(unsigned long long seed) : s(seed) {}
  double uniform(double lo, double hi) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return lo + (hi - lo) * double(s >> 11) / 9007199254740992.0;
  }
};

PiecewiseLinearPotential random_plp(Lcg& rng) {
  int nseg = 3 + int(rng.uniform(0.0, 5.0));
  PiecewiseLinearPotential plp;
  plp.nodes.resize(nseg + 1);
  plp.values.resize(nseg + 1);
  plp.eff_fields.resize(nseg);
  plp.masses.resize(nseg);
  plp.nodes[0] = 0.0;
  plp.values[0] = rng.uniform(0.2, 1.2);
  for (int i = 0; i < nseg; ++i) {
    plp.nodes[i + 1] = plp.nodes[i] + rng.uniform(0.4, 1.6);
    plp.values[i + 1] = rng.uniform(0.0, 1.4);
    plp.eff_fields[i] =
        (plp.values[i + 1] - plp.values[i]) / (plp.nodes[i + 1] - plp.nodes[i]);
    plp.masses[i] = rng.uniform(0.15, 0.4);
  }
  plp.u_left = plp.u_right = 2.0;
  plp.cladding_mass = rng.uniform(0.2, 0.4);
  plp.partitions = 1;
  return plp;
}

}  // namespace

int main() {
  RunConfig cfg = paper_config();
  LayerStack stack = build_stack(cfg);
  FieldProfile fields = build_fields(cfg, stack);
  ChargeModel charge = build_charge(cfg);

  // ---- criterion 1: full method spectrum -------------------------------
  SCFConfig scf_full = build_scf(cfg);
  scf_full.check_hartree_oracle = true;
  auto t0 = std::chrono::steady_clock::now();
  SCFResult full = run_scf(stack, fields, charge, scf_full);
  double t_full = wall_seconds(t0);
  TransitionTable table_full = transition_table(full.states, stack);
  {
    bool ok = full.converged && full.states.size() >= 3;
    double e1 = 1e3 * full.states[0].energy;
    double e3 = 1e3 * full.states[2].energy;
    double om = 1e3 * detection_energy(table_full);
    bool in_e1 = std::abs(e1 - 43.9) <= 15.0;
    bool in_e3 = std::abs(e3 - 826.4) <= 30.0;
    bool in_om3 = std::abs(om - 782.5) <= 0.03 * 782.5;
    bool in_om1 = std::abs(om - 782.5) <= 0.01 * 782.5;
    bool in_t = t_full <= 60.0;
    report(1, "full-method spectrum", ok && in_e1 && in_e3 && in_om3 && in_t,
           fmt("E1 = %.1f meV (43.9+-15: %s), E3 = %.1f meV (826.4+-30: %s), "
               "Omega13 = %.1f meV (782.5+-3%%: %s; +-1%% tuned tier: %s), "
               "runtime %.1f s (<=60: %s)",
               e1, in_e1 ? "yes" : "no", e3, in_e3 ? "yes" : "no", om,
               in_om3 ? "yes" : "no", in_om1 ? "yes" : "no", t_full,
               in_t ? "yes" : "no"));
  }

  // ---- criterion 2: field-only method ----------------------------------
  SCFConfig scf_fo = build_scf(cfg);
  scf_fo.method = "field_only";
  SCFResult fo = run_scf(stack, fields, charge, scf_fo);
  TransitionTable table_fo = transition_table(fo.states, stack);
  {
    double e1 = 1e3 * fo.states[0].energy;
    double om = 1e3 * detection_energy(table_fo);
    bool in_e1 = std::abs(e1 - (-104.8)) <= 10.0;
    bool in_om = std::abs(om - 907.0) <= 20.0;
    report(2, "field-only method", in_e1 && in_om,
           fmt("E1 = %.1f meV (-104.8+-10: %s), Omega13 = %.1f meV "
               "(907.0+-20: %s)",
               e1, in_e1 ? "yes" : "no", om, in_om ? "yes" : "no"));
  }

  // ---- criterion 3: oscillator strengths at d = 1.56 -------------------
  {
    bool enough = full.states.size() >= 5;
    double f12 = enough ? std::abs(table_full.f(0, 1)) : 0.0;
    double f13 = enough ? std::abs(table_full.f(0, 2)) : 0.0;
    double f14 = enough ? std::abs(table_full.f(0, 3)) : 0.0;
    double f15 = enough ? std::abs(table_full.f(0, 4)) : 0.0;
    bool in_f13 = std::abs(f13 - 0.782) <= 0.08;
    bool order = f13 > f12 && f12 > f15 && f15 > f14;
    bool sum = f13 > f12 + f14 + f15;
    report(3, "oscillator strengths", enough && in_f13 && order && sum,
           fmt("f13 = %.3f (0.782+-0.08: %s), f12 = %.3f, f14 = %.3f, "
               "f15 = %.3f, ordering f13>f12>f15>f14: %s, sum condition: %s",
               f13, in_f13 ? "yes" : "no", f12, f14, f15, order ? "yes" : "no",
               sum ? "yes" : "no"));
  }

  // ---- criterion 4: convergence ----------------------------------------
  {
    SCFConfig plain = build_scf(cfg);
    plain.mixing = 1.0;
    SCFResult r = run_scf(stack, fields, charge, plain);
    bool conv = r.converged && int(r.delta_history.size()) <= 30 &&
                r.delta_history.back() <= 1e-6;
    SCFConfig fixed = plain;
    fixed.tolerance = 0.0;
    fixed.max_iterations = 26;
    SCFResult rf = run_scf(stack, fields, charge, fixed);
    bool have = rf.delta_history.size() >= 25;
    double d10 = have ? rf.delta_history[9] : 0.0;
    double d25 = have ? rf.delta_history[24] : 0.0;
    bool sat = have && (d25 <= d10 || (d25 <= 1e-6 && d10 <= 1e-6));
    report(4, "convergence", conv && sat,
           fmt("delta <= 1e-6 after %zu iterations at mixing 1.0 (<=30: %s); "
               "delta(10) = %.2e, delta(25) = %.2e (saturated: %s)",
               r.delta_history.size(), conv ? "yes" : "no", d10, d25,
               sat ? "yes" : "no"));
  }

  // ---- criterion 6: oracle equivalence ----------------------------------
  {
    bool ok = true;
    std::string why;
    // (a) single square well
    PiecewiseLinearPotential sq;
    sq.nodes = Eigen::ArrayXd::LinSpaced(2, 0.0, 4.0);
    sq.values = Eigen::ArrayXd::Zero(2);
    sq.eff_fields = Eigen::ArrayXd::Zero(1);
    sq.masses = Eigen::ArrayXd::Constant(1, 0.2);
    sq.u_left = sq.u_right = 0.3;
    sq.cladding_mass = 0.32;
    sq.partitions = 1;
    auto tm = bound_states(sq);
    auto fd = fd_oracle(sq, 0.0005, 8.0);
    double worst = 0.0;
    if (tm.size() != fd.size()) ok = false;
    for (size_t i = 0; i < tm.size() && i < fd.size(); ++i)
      worst = std::max(worst, std::abs(tm[i].energy - fd[i]));
    why += fmt("square well %.3f meV", 1e3 * worst);
    ok = ok && worst <= 0.5e-3;

    // (b) frozen converged potential
    PiecewiseLinearPotential frozen = full.linearized;
    auto tm2 = bound_states(frozen);
    auto fd2 = fd_oracle(frozen, 0.0005, 6.0);
    double worst2 = 0.0;
    bool count2 = tm2.size() == fd2.size();
    for (size_t i = 0; i < tm2.size() && i < fd2.size(); ++i)
      worst2 = std::max(worst2, std::abs(tm2[i].energy - fd2[i]));
    why += fmt("; converged potential %.3f meV (%zu/%zu states)", 1e3 * worst2,
               tm2.size(), fd2.size());
    ok = ok && count2 && worst2 <= 0.5e-3;

    // (c) randomized piecewise-linear potentials
    Lcg rng(99);
    double worst3 = 0.0;
    int nstates = 0;
    bool counts = true;
    for (int trial = 0; trial < 20; ++trial) {
      PiecewiseLinearPotential plp = random_plp(rng);
      auto tmr = bound_states(plp);
      auto fdr = fd_oracle(plp, 0.0005, 12.0);
      counts = counts && tmr.size() == fdr.size();
      for (size_t i = 0; i < tmr.size() && i < fdr.size(); ++i) {
        worst3 = std::max(worst3, std::abs(tmr[i].energy - fdr[i]));
        ++nstates;
      }
    }
    why += fmt("; %d randomized states %.3f meV", nstates, 1e3 * worst3);
    ok = ok && counts && worst3 <= 0.5e-3;

    // Hartree closed form vs tridiagonal solve, every SCF iteration
    why += fmt("; V_H vs oracle %.2e of max|V_H|", full.hartree_oracle_max_diff);
    ok = ok && full.hartree_oracle_max_diff <= 1e-3;
    report(6, "oracle equivalence (<=0.5 meV; V_H <=1e-3)", ok, why);
  }

  // ---- criterion 7: invariant suite -------------------------------------
  {
    bool ok = true;
    std::string why;
    // voltage sum and displacement continuity
    double vsum = 0.0, vscale = 0.0;
    for (size_t i = 0; i < fields.fields.size(); ++i) {
      vsum += fields.fields[i] * stack.layers()[i].thickness;
      vscale += std::abs(fields.fields[i]) * stack.layers()[i].thickness;
    }
    bool volt = std::abs(vsum) <= 1e-12 * vscale;
    double dmax = 0.0, dref = 0.0;
    std::vector<double> disp(fields.fields.size());
    for (size_t i = 0; i < fields.fields.size(); ++i) {
      disp[i] = constants::eps0 * stack.material(int(i)).dielectric *
                    fields.fields[i] +
                fields.polarizations[i] * constants::coulomb_per_m2_to_e_per_nm2;
      dref = std::max(dref, std::abs(disp[i]));
    }
    for (size_t i = 0; i + 1 < disp.size(); ++i)
      dmax = std::max(dmax, std::abs(disp[i + 1] - disp[i]));
    bool cont = dmax <= 1e-12 * dref;
    ok = ok && volt && cont;
    why += fmt("sum F d = %.1e rel (%s); D jump = %.1e rel (%s)",
               std::abs(vsum) / vscale, volt ? "ok" : "BAD", dmax / dref,
               cont ? "ok" : "BAD");

    // normalization
    double nworst = 0.0;
    for (const auto& st : full.states) nworst = std::max(nworst, st.norm_residual);
    for (const auto& st : fo.states) nworst = std::max(nworst, st.norm_residual);
    ok = ok && nworst <= 1e-8;
    why += fmt("; norm resid %.1e (%s)", nworst, nworst <= 1e-8 ? "ok" : "BAD");

    // f antisymmetry, exact
    bool anti = true;
    for (int i = 0; i < table_full.f.rows(); ++i)
      for (int j = 0; j < table_full.f.cols(); ++j)
        if (table_full.f(i, j) != -table_full.f(j, i)) anti = false;
    ok = ok && anti;
    why += fmt("; f antisymmetry %s", anti ? "exact" : "BAD");

    // Airy Wronskian
    Lcg rng(7);
    double wworst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      double x = rng.uniform(-25.0, 25.0);
      AiryScaled s = airy_scaled(x);
      double w = s.quad.ai * s.quad.bip - s.quad.aip * s.quad.bi;
      wworst = std::max(wworst, std::abs(w * M_PI - 1.0));
    }
    ok = ok && wworst <= 1e-10;
    why += fmt("; Wronskian %.1e (%s)", wworst, wworst <= 1e-10 ? "ok" : "BAD");

    // Hartree boundary values
    double vhl = std::abs(full.potential.v_h[full.potential.grid.interior_begin]);
    double vhr = std::abs(full.potential.v_h[full.potential.grid.interior_end]);
    bool vhz = vhl <= 1e-12 && vhr <= 1e-12;
    ok = ok && vhz;
    why += fmt("; V_H ends %.1e/%.1e eV (%s)", vhl, vhr, vhz ? "ok" : "BAD");

    // N-doubling on the frozen converged potential: the 16-partition grid
    // with 4x oversampling carries exactly the 32-partition node set
    SamplingGrid g32 = make_grid(stack, 32, 2);
    PotentialComponents c32 = full.potential;
    c32.grid = g32;
    PiecewiseLinearPotential p32 = linearize(c32, stack, 32);
    auto e16 = bound_states(full.linearized);
    auto e32 = bound_states(p32);
    double nshift = 0.0;
    bool ncount = e16.size() == e32.size();
    for (size_t i = 0; i < e16.size() && i < e32.size(); ++i)
      nshift = std::max(nshift, std::abs(e16[i].energy - e32[i].energy));
    bool ndb = ncount && nshift <= 1e-6;
    ok = ok && ndb;
    why += fmt("; N-doubling shift %.2e eV (%s)", nshift, ndb ? "ok" : "BAD");
    report(7, "invariant suite", ok, why);
  }

  // ---- criterion 8: bound-state count ------------------------------------
  {
    size_t n = full.states.size();
    report(8, "five bound states below the cladding", n == 5,
           fmt("found %zu bound states", n));
  }

  // ---- criterion 5: geometry scan (last: the long one) -------------------
  {
    auto ts = std::chrono::steady_clock::now();
    SCFConfig sconf = build_scf(cfg);
    auto rows = geometry_scan(
        0.6, 1.8, 0.01, [&](double d) { return build_stack_at(cfg, d); },
        [&](const LayerStack& s) { return build_fields(cfg, s); }, charge,
        sconf, 4);
    double t_scan = wall_seconds(ts);
    // longest contiguous interval where both conditions hold
    double best_lo = 0.0, best_hi = -1.0, cur_lo = 0.0;
    bool in_run = false;
    for (const ScanRow& r : rows) {
      bool both = r.cond_325 && r.cond_326 && r.error.empty();
      if (both && !in_run) {
        in_run = true;
        cur_lo = r.d;
      }
      if ((!both || &r == &rows.back()) && in_run) {
        double hi = both ? r.d : r.d - 0.01;
        if (hi - cur_lo > best_hi - best_lo) {
          best_lo = cur_lo;
          best_hi = hi;
        }
        in_run = false;
      }
    }
    bool found = best_hi >= best_lo;
    bool endpoints = found && std::abs(best_lo - 1.38) <= 0.1 &&
                     std::abs(best_hi - 1.69) <= 0.1;
    bool fails_in_I = false;
    for (const ScanRow& r : rows)
      if (r.d >= 0.65 && r.d <= 0.91 && !r.cond_326) fails_in_I = true;
    bool in_time = t_scan <= 1800.0;
    report(5, "geometry scan", endpoints && fails_in_I && in_time,
           fmt("both-true interval %s (target [1.38, 1.69] +-0.1: %s); "
               "condition 3.26 fails inside [0.65, 0.91]: %s; "
               "runtime %.0f s on 4 jobs (<=1800: %s)",
               found ? fmt("[%.2f, %.2f]", best_lo, best_hi).c_str() : "none",
               endpoints ? "yes" : "no", fails_in_I ? "yes" : "no", t_scan,
               in_time ? "yes" : "no"));
  }

  std::printf("acceptance: %d of 8 criteria failed\n", g_failures);
  return g_failures;
}
