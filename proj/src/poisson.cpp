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

#include "qcdsim/poisson.hpp"

#include <cmath>
#include <stdexcept>

#include "qcdsim/airy.hpp"
#include "qcdsim/constants.hpp"

namespace qcd {

using constants::eps0;
using constants::k_boltzmann;
using constants::kinetic;

Eigen::ArrayXd electron_density(const std::vector<StationaryState>& states,
                                double fermi_level, double temperature,
                                const LayerStack& stack,
                                const SamplingGrid& grid) {
  Eigen::ArrayXd n = Eigen::ArrayXd::Zero(grid.z.size());
  double kt = k_boltzmann * temperature;
  for (const StationaryState& st : states) {
    double x = (fermi_level - st.energy) / kt;
    double occ = (x > 500.0) ? x : std::log1p(std::exp(x));
    if (occ < 1e-300) continue;
    Eigen::ArrayXd psi = st.psi_on(grid.z);
    n += occ * psi.square();
  }
  for (long i = 0; i < grid.z.size(); ++i) {
    double n0 = stack.mass_profile(grid.z[i]) * kt / (2.0 * M_PI * kinetic);
    n[i] *= n0;
  }
  return n;
}

double ionized_donors(double fermi_level, const ChargeModel& model,
                      double reference_level) {
  double kt = k_boltzmann * model.temperature;
  double x = (fermi_level - reference_level) / kt;
  if (x > 500.0) return 0.0;
  return model.n_d / (1.0 + model.degeneracy * std::exp(x));
}

ChargeDensity total_charge_density(const ChargeModel& model,
                                   const Eigen::ArrayXd& ionized_profile,
                                   const Eigen::ArrayXd& n,
                                   const std::vector<double>& sheet_z,
                                   const std::vector<double>& sheet_sigma_e,
                                   const SamplingGrid& grid) {
  (void)model;
  if (ionized_profile.size() != n.size() || n.size() != grid.z.size())
    throw std::invalid_argument("total_charge_density: size mismatch");
  ChargeDensity rho;
  rho.volume = ionized_profile - n;
  rho.sheet_z = sheet_z;
  rho.sheet_sigma = sheet_sigma_e;
  return rho;
}

namespace {

// Raw single and double z-antiderivatives of psi^2 on one sub-segment.
struct PsiSquareAntider {
  const SegmentSolution& s;

  // first = antiderivative (nm^-1 * nm), second = double antiderivative
  void eval(double z, double* first, double* second) const {
    const SegmentBasis& b = s.basis;
    double d = z - b.z0;
    switch (b.kind) {
      case SegmentBasis::Kind::airy: {
        double zeta = b.zeta0 + b.beta * d;
        AiryScaled sc = airy_scaled(zeta);
        const AiryQuad& q = sc.quad;
        double xi = sc.exponent;
        double ea = (s.a != 0.0) ? std::exp(2.0 * (s.la - xi)) : 0.0;
        double eb = (s.b != 0.0) ? std::exp(2.0 * (s.lb + xi)) : 0.0;
        double ec = (s.a != 0.0 && s.b != 0.0) ? std::exp(s.la + s.lb) : 0.0;
        double aa = s.a * s.a * ea;
        double bb = s.b * s.b * eb;
        double ab2 = 2.0 * s.a * s.b * ec;
        double v_aa = zeta * q.ai * q.ai - q.aip * q.aip;
        double v_bb = zeta * q.bi * q.bi - q.bip * q.bip;
        double v_ab = zeta * q.ai * q.bi - q.aip * q.bip;
        double w_aa = (2.0 * zeta * zeta * q.ai * q.ai - q.ai * q.aip -
                       2.0 * zeta * q.aip * q.aip) / 3.0;
        double w_bb = (2.0 * zeta * zeta * q.bi * q.bi - q.bi * q.bip -
                       2.0 * zeta * q.bip * q.bip) / 3.0;
        double w_ab = (4.0 * zeta * zeta * q.ai * q.bi - q.ai * q.bip -
                       q.aip * q.bi - 4.0 * zeta * q.aip * q.bip) / 6.0;
        *first = (aa * v_aa + bb * v_bb + ab2 * v_ab) / b.beta;
        *second = (aa * w_aa + bb * w_bb + ab2 * w_ab) / (b.beta * b.beta);
        break;
      }
      case SegmentBasis::Kind::exp_flat: {
        double k = b.kappa;
        double ca2 = (s.a != 0.0) ? s.a * s.a * std::exp(2.0 * (s.la - k * d)) : 0.0;
        double cb2 = (s.b != 0.0) ? s.b * s.b * std::exp(2.0 * (s.lb + k * d)) : 0.0;
        double cab = (s.a != 0.0 && s.b != 0.0)
                         ? 2.0 * s.a * s.b * std::exp(s.la + s.lb)
                         : 0.0;
        *first = -ca2 / (2.0 * k) + cab * d + cb2 / (2.0 * k);
        *second = ca2 / (4.0 * k * k) + cab * d * d / 2.0 + cb2 / (4.0 * k * k);
        break;
      }
      case SegmentBasis::Kind::trig_flat: {
        double k = b.kappa;
        double ca = (s.a != 0.0) ? s.a * std::exp(s.la) : 0.0;
        double cb = (s.b != 0.0) ? s.b * std::exp(s.lb) : 0.0;
        double s2 = std::sin(2.0 * k * d), c2 = std::cos(2.0 * k * d);
        *first = ca * ca * (0.5 * d + s2 / (4.0 * k)) +
                 cb * cb * (0.5 * d - s2 / (4.0 * k)) +
                 ca * cb * (1.0 - c2) / (2.0 * k);
        *second = ca * ca * (0.25 * d * d - c2 / (8.0 * k * k)) +
                  cb * cb * (0.25 * d * d + c2 / (8.0 * k * k)) +
                  ca * cb * (0.5 * d / k - s2 / (4.0 * k * k));
        break;
      }
      case SegmentBasis::Kind::linear_flat: {
        double ca = (s.a != 0.0) ? s.a * std::exp(s.la) : 0.0;
        double cb = (s.b != 0.0) ? s.b * std::exp(s.lb) : 0.0;
        *first = ca * ca * d + ca * cb * d * d + cb * cb * d * d * d / 3.0;
        *second = ca * ca * d * d / 2.0 + ca * cb * d * d * d / 3.0 +
                  cb * cb * d * d * d * d / 12.0;
        break;
      }
    }
  }
};

// Particular solution on one sub-segment, anchored so that value and slope
// vanish at the left node.
struct Particular {
  double z0 = 0.0;
  double c_don = 0.0;  // N_D+/(eps eps0), coefficient of (z-z0)^2/2
  // electron part: -(n0/(eps eps0)) sum occ_n Q_n(z)
  struct StateTerm {
    PsiSquareAntider ant;
    double weight;    // n0 occ / (eps eps0)
    double w0, v0;    // raw antiderivatives at z0
  };
  std::vector<StateTerm> terms;

  double value(double z) const {
    double d = z - z0;
    double out = 0.5 * c_don * d * d;
    for (const StateTerm& t : terms) {
      double first, second;
      t.ant.eval(z, &first, &second);
      out -= t.weight * (second - t.w0 - t.v0 * d);
    }
    return out;
  }
  double slope(double z) const {
    double d = z - z0;
    double out = c_don * d;
    for (const StateTerm& t : terms) {
      double first, second;
      t.ant.eval(z, &first, &second);
      out -= t.weight * (first - t.v0);
    }
    return out;
  }
};

}  // namespace

HartreeSolution hartree_closed_form(
    const PiecewiseLinearPotential& plp, const LayerStack& stack,
    const std::vector<StationaryState>& states,
    const std::vector<double>& occupancies,
    const std::vector<double>& donor_per_segment,
    const std::vector<double>& sheet_z,
    const std::vector<double>& sheet_sigma_e, const SamplingGrid& grid,
    double temperature) {
  const int ns = plp.segment_count();
  if (int(donor_per_segment.size()) != ns)
    throw std::invalid_argument("hartree_closed_form: donor list size mismatch");
  if (states.size() != occupancies.size())
    throw std::invalid_argument("hartree_closed_form: occupancy size mismatch");
  const double kt = k_boltzmann * temperature;

  // eps per segment and particular solutions
  std::vector<Particular> part(ns);
  std::vector<double> eps_seg(ns);
  for (int s = 0; s < ns; ++s) {
    double zm = 0.5 * (plp.nodes[s] + plp.nodes[s + 1]);
    eps_seg[s] = stack.dielectric_profile(zm);
    double ce = 1.0 / (eps_seg[s] * eps0);
    Particular& p = part[s];
    p.z0 = plp.nodes[s];
    p.c_don = donor_per_segment[s] * ce;
    for (size_t n = 0; n < states.size(); ++n) {
      if (occupancies[n] <= 0.0) continue;
      const SegmentSolution& seg = states[n].segments[size_t(s) + 1];
      Particular::StateTerm t{PsiSquareAntider{seg}, 0.0, 0.0, 0.0};
      double n0 = plp.masses[s] * kt / (2.0 * M_PI * kinetic);  // nm^-2
      t.weight = occupancies[n] * n0 * ce;
      t.ant.eval(p.z0, &t.v0, &t.w0);
      p.terms.push_back(t);
    }
  }

  auto sheet_at = [&](double z) -> double {
    for (size_t i = 0; i < sheet_z.size(); ++i)
      if (std::abs(sheet_z[i] - z) < 1e-9) return sheet_sigma_e[i];
    return 0.0;
  };

  // sweep with C1_0 as the shooting parameter
  auto sweep = [&](double c10, std::vector<double>* c1v,
                   std::vector<double>* c2v) -> double {
    std::vector<double>& c1 = *c1v;
    std::vector<double>& c2 = *c2v;
    c1.assign(ns, 0.0);
    c2.assign(ns, 0.0);
    c1[0] = c10;
    c2[0] = 0.0;
    for (int s = 0; s + 1 < ns; ++s) {
      double zb = plp.nodes[s + 1];
      double val = part[s].value(zb) + c1[s] * (zb - plp.nodes[s]) + c2[s];
      double slope = part[s].slope(zb) + c1[s];
      double jump = -sheet_at(zb);  // eps-weighted slope jump equals -sigma
      c2[s + 1] = val;
      c1[s + 1] = (eps_seg[s] * eps0 * slope + jump) / (eps_seg[s + 1] * eps0);
    }
    double zend = plp.nodes[ns];
    return part[ns - 1].value(zend) + c1[ns - 1] * (zend - plp.nodes[ns - 1]) +
           c2[ns - 1];
  };

  std::vector<double> c1a, c2a, c1b, c2b;
  double r0 = sweep(0.0, &c1a, &c2a);
  double r1 = sweep(1.0, &c1b, &c2b);
  if (!(std::isfinite(r0) && std::isfinite(r1)) || r1 == r0)
    throw std::runtime_error("hartree_closed_form: singular matching system");
  double c10 = -r0 / (r1 - r0);

  HartreeSolution sol;
  sol.c1.assign(ns, 0.0);
  sol.c2.assign(ns, 0.0);
  double rfin = sweep(c10, &sol.c1, &sol.c2);
  (void)rfin;

  // matching residuals (continuity and flux) for the invariant check
  double maxres = std::abs(rfin);
  for (int s = 0; s + 1 < ns; ++s) {
    double zb = plp.nodes[s + 1];
    double vl = part[s].value(zb) + sol.c1[s] * (zb - plp.nodes[s]) + sol.c2[s];
    double vr = sol.c2[s + 1];
    double sl = eps_seg[s] * eps0 * (part[s].slope(zb) + sol.c1[s]);
    double sr = eps_seg[s + 1] * eps0 * sol.c1[s + 1];
    double scale = std::max({1e-12, std::abs(sl), std::abs(sr)});
    maxres = std::max(maxres, std::abs(vl - vr));
    maxres = std::max(maxres, std::abs(sr - sl + sheet_at(zb)) / scale);
  }
  sol.max_matching_residual = maxres;

  sol.v_h = Eigen::ArrayXd::Zero(grid.z.size());
  double zlo = plp.nodes[0], zhi = plp.nodes[ns];
  int s = 0;
  for (long i = 0; i < grid.z.size(); ++i) {
    double z = grid.z[i];
    if (z < zlo || z > zhi) continue;
    while (s + 1 < ns && z >= plp.nodes[s + 1]) ++s;
    sol.v_h[i] = part[s].value(z) + sol.c1[s] * (z - plp.nodes[s]) + sol.c2[s];
  }
  return sol;
}

Eigen::ArrayXd fd_poisson_oracle(const Eigen::ArrayXd& z,
                                 const Eigen::ArrayXd& rho,
                                 const Eigen::ArrayXd& eps,
                                 const std::vector<double>& sheet_z,
                                 const std::vector<double>& sheet_sigma_e) {
  const long n = z.size();
  if (rho.size() != n || eps.size() != n)
    throw std::invalid_argument("fd_poisson_oracle: size mismatch");
  if (n < 3) throw std::invalid_argument("fd_poisson_oracle: grid too small");
  double h = z[1] - z[0];

  Eigen::ArrayXd source = rho;
  for (size_t k = 0; k < sheet_z.size(); ++k) {
    long idx = long(std::lround((sheet_z[k] - z[0]) / h));
    idx = std::max(1L, std::min(n - 2, idx));
    source[idx] += -sheet_sigma_e[k] / h;
  }

  // d/dz[eps eps0 dV/dz] = source, V(0) = V(end) = 0, Thomas algorithm
  long m = n - 2;
  Eigen::ArrayXd a(m), b(m), c(m), d(m);
  for (long i = 0; i < m; ++i) {
    double el = 0.5 * (eps[i] + eps[i + 1]) * eps0 / (h * h);
    double er = 0.5 * (eps[i + 1] + eps[i + 2]) * eps0 / (h * h);
    a[i] = el;
    c[i] = er;
    b[i] = -(el + er);
    d[i] = source[i + 1];
  }
  for (long i = 1; i < m; ++i) {
    double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  Eigen::ArrayXd v = Eigen::ArrayXd::Zero(n);
  v[m] = d[m - 1] / b[m - 1];
  for (long i = m - 2; i >= 0; --i) v[i + 1] = (d[i] - c[i] * v[i + 2]) / b[i];
  return v;
}

}  // namespace qcd
