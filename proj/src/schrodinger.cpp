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

#include "qcdsim/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcdsim/airy.hpp"
#include "qcdsim/constants.hpp"

namespace qcd {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
using constants::kinetic;

// 20-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
const double kGl20X[10] = {
    0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
    0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
    0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
    0.9931285991850949};
const double kGl20W[10] = {
    0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
    0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
    0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
    0.0176140071391521};

struct LogVal {
  double m = 0.0;  // signed mantissa
  double l = kNegInf;

  double value() const { return m * std::exp(l); }
};

LogVal log_add(const LogVal& x, const LogVal& y) {
  if (x.m == 0.0 || x.l == kNegInf) return y;
  if (y.m == 0.0 || y.l == kNegInf) return x;
  if (x.l >= y.l) {
    double m = x.m + y.m * std::exp(y.l - x.l);
    return {m, x.l};
  }
  double m = y.m + x.m * std::exp(x.l - y.l);
  return {m, y.l};
}

LogVal normalize(LogVal v) {
  if (v.m == 0.0) return {0.0, kNegInf};
  double a = std::abs(v.m);
  return {v.m / a, v.l + std::log(a)};
}

}  // namespace

SegmentBasis make_basis(const SegmentSpec& seg, double energy) {
  SegmentBasis b;
  b.z0 = seg.z0;
  b.mass = seg.mass;
  if (std::abs(seg.field) >= flat_field_threshold) {
    b.kind = SegmentBasis::Kind::airy;
    double af = std::abs(seg.field);
    double mag = std::cbrt(seg.mass * af / kinetic);
    b.beta = (seg.field > 0.0 ? mag : -mag);
    b.zeta0 = (seg.v0 - energy) * mag / af;
    return b;
  }
  double mid = seg.v0 + 0.5 * seg.field * (seg.z1 - seg.z0);
  double delta = mid - energy;
  if (std::abs(delta) < 1e-12) {
    b.kind = SegmentBasis::Kind::linear_flat;
    b.kappa = 0.0;
  } else if (delta > 0.0) {
    b.kind = SegmentBasis::Kind::exp_flat;
    b.kappa = std::sqrt(seg.mass * delta / kinetic);
  } else {
    b.kind = SegmentBasis::Kind::trig_flat;
    b.kappa = std::sqrt(-seg.mass * delta / kinetic);
  }
  return b;
}

BasisValues eval_basis(const SegmentBasis& basis, double z) {
  BasisValues v;
  double d = z - basis.z0;
  switch (basis.kind) {
    case SegmentBasis::Kind::airy: {
      double zeta = basis.zeta0 + basis.beta * d;
      AiryScaled s = airy_scaled(zeta);
      v.u1 = s.quad.ai;
      v.du1 = basis.beta * s.quad.aip;
      v.l1 = -s.exponent;
      v.u2 = s.quad.bi;
      v.du2 = basis.beta * s.quad.bip;
      v.l2 = s.exponent;
      break;
    }
    case SegmentBasis::Kind::exp_flat:
      v.u1 = 1.0;
      v.du1 = -basis.kappa;
      v.l1 = -basis.kappa * d;
      v.u2 = 1.0;
      v.du2 = basis.kappa;
      v.l2 = basis.kappa * d;
      break;
    case SegmentBasis::Kind::trig_flat:
      v.u1 = std::cos(basis.kappa * d);
      v.du1 = -basis.kappa * std::sin(basis.kappa * d);
      v.u2 = std::sin(basis.kappa * d);
      v.du2 = basis.kappa * std::cos(basis.kappa * d);
      break;
    case SegmentBasis::Kind::linear_flat:
      v.u1 = 1.0;
      v.du1 = 0.0;
      v.u2 = d;
      v.du2 = 1.0;
      break;
  }
  return v;
}

Eigen::Matrix2d TransferStep::dense() const {
  Eigen::Matrix2d out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = std::exp(row_log[i] + col_log[j]) * core(i, j);
  return out;
}

namespace {

TransferStep step_from_bases(const SegmentBasis& bl, const SegmentBasis& br,
                             double z) {
  BasisValues L = eval_basis(bl, z);
  BasisValues R = eval_basis(br, z);
  double det = (R.u1 * R.du2 - R.du1 * R.u2) / br.mass;
  if (det == 0.0 || !std::isfinite(det))
    throw std::runtime_error("transfer_step: singular right-segment basis");
  Eigen::Matrix2d nl, inv;
  nl << L.u1, L.u2, L.du1 / bl.mass, L.du2 / bl.mass;
  inv << R.du2 / br.mass, -R.u2, -R.du1 / br.mass, R.u1;
  TransferStep t;
  t.core = inv * nl / det;
  t.row_log << -R.l1, -R.l2;
  t.col_log << L.l1, L.l2;
  return t;
}

struct Coeff2 {
  double a = 0.0, b = 0.0;
  double la = kNegInf, lb = kNegInf;
};

Coeff2 apply_step(const TransferStep& t, const Coeff2& v) {
  double c0 = v.la + t.col_log[0];
  double c1 = v.lb + t.col_log[1];
  double mu = std::max(v.a != 0.0 ? c0 : kNegInf, v.b != 0.0 ? c1 : kNegInf);
  double x0 = (v.a != 0.0) ? v.a * std::exp(c0 - mu) : 0.0;
  double x1 = (v.b != 0.0) ? v.b * std::exp(c1 - mu) : 0.0;
  double w0 = t.core(0, 0) * x0 + t.core(0, 1) * x1;
  double w1 = t.core(1, 0) * x0 + t.core(1, 1) * x1;
  Coeff2 r;
  if (w0 != 0.0) {
    r.a = (w0 > 0) ? 1.0 : -1.0;
    r.la = mu + t.row_log[0] + std::log(std::abs(w0));
  }
  if (w1 != 0.0) {
    r.b = (w1 > 0) ? 1.0 : -1.0;
    r.lb = mu + t.row_log[1] + std::log(std::abs(w1));
  }
  return r;
}

struct Chain {
  std::vector<SegmentSpec> specs;  // cladding, interior segments, cladding
  std::vector<double> joints;     // boundary positions between consecutive specs
};

Chain build_chain(const PiecewiseLinearPotential& plp) {
  Chain c;
  const int ns = plp.segment_count();
  double z0 = plp.nodes[0], zn = plp.nodes[ns];
  // claddings anchored at their structure edge so the analytic tail
  // integrals b^2/(2 kappa) read off the edge amplitude directly
  c.specs.push_back({z0, z0, plp.u_left, 0.0, plp.cladding_mass});
  c.joints.push_back(z0);
  for (int i = 0; i < ns; ++i) {
    c.specs.push_back({plp.nodes[i], plp.nodes[i + 1], plp.values[i],
                       plp.eff_fields[i], plp.masses[i]});
    c.joints.push_back(plp.nodes[i + 1]);
  }
  c.specs.push_back({zn, zn + 10.0, plp.u_right, 0.0, plp.cladding_mass});
  return c;
}

}  // namespace

TransferStep transfer_step(double energy, const SegmentSpec& left,
                           const SegmentSpec& right, double z) {
  return step_from_bases(make_basis(left, energy), make_basis(right, energy), z);
}

double dispersion_residual(double energy, const PiecewiseLinearPotential& plp) {
  Chain c = build_chain(plp);
  std::vector<SegmentBasis> bases;
  bases.reserve(c.specs.size());
  for (const auto& s : c.specs) bases.push_back(make_basis(s, energy));
  Coeff2 v;
  v.b = 1.0;
  v.lb = 0.0;  // left cladding: growing-toward-structure exponential only
  for (size_t j = 0; j < c.joints.size(); ++j) {
    TransferStep t = step_from_bases(bases[j], bases[j + 1], c.joints[j]);
    v = apply_step(t, v);
  }
  // right cladding: u2 grows toward +infinity; its relative amplitude
  if (v.b == 0.0) return 0.0;
  if (v.a == 0.0) return (v.b > 0) ? 1.0 : -1.0;
  double r = v.b / (1.0 + std::exp(v.la - v.lb));
  return r;
}

namespace {

// Antiderivative combinations used for closed-form normalization.
// For the Airy basis, d/dzeta of (zeta Ai^2 - Ai'^2) = Ai^2, etc.
struct SquareIntegrand {
  const SegmentSolution& s;

  // integral of psi^2 over [s.z0, s.z1] as a LogVal
  LogVal closed_form(bool* ill) const {
    *ill = false;
    const SegmentBasis& b = s.basis;
    double w = s.z1 - s.z0;
    switch (b.kind) {
      case SegmentBasis::Kind::airy: {
        LogVal fa = antider_at(s.z0);
        LogVal fb = antider_at(s.z1);
        LogVal diff = log_add(fb, {-fa.m, fa.l});
        double big = std::max(fa.l + std::log(std::abs(fa.m) + 1e-300),
                              fb.l + std::log(std::abs(fb.m) + 1e-300));
        LogVal out = normalize({diff.m / b.beta, diff.l});
        if (out.m == 0.0 || out.l - big < std::log(1e-8)) *ill = true;
        return out;
      }
      case SegmentBasis::Kind::exp_flat: {
        double k = b.kappa;
        LogVal t1{s.a * s.a * (1.0 - std::exp(-2.0 * k * w)) / (2.0 * k),
                  2.0 * s.la};
        LogVal t2{2.0 * s.a * s.b * w, s.la + s.lb};
        LogVal t3{s.b * s.b * (std::exp(2.0 * k * w) > 1e300
                                   ? 0.0
                                   : (std::exp(2.0 * k * w) - 1.0)) /
                      (2.0 * k),
                  2.0 * s.lb};
        if (t3.m == 0.0 && s.b != 0.0) {
          // fold the huge factor into the log instead
          t3 = {s.b * s.b / (2.0 * k), 2.0 * s.lb + 2.0 * k * w};
        }
        return normalize(log_add(log_add(t1, t2), t3));
      }
      case SegmentBasis::Kind::trig_flat: {
        double k = b.kappa;
        double s2 = std::sin(2.0 * k * w), c2 = std::cos(2.0 * k * w);
        LogVal t1{s.a * s.a * (0.5 * w + s2 / (4.0 * k)), 2.0 * s.la};
        LogVal t2{s.b * s.b * (0.5 * w - s2 / (4.0 * k)), 2.0 * s.lb};
        LogVal t3{s.a * s.b * (1.0 - c2) / (2.0 * k), s.la + s.lb};
        return normalize(log_add(log_add(t1, t2), t3));
      }
      case SegmentBasis::Kind::linear_flat: {
        LogVal t1{s.a * s.a * w, 2.0 * s.la};
        LogVal t2{s.a * s.b * w * w, s.la + s.lb};
        LogVal t3{s.b * s.b * w * w * w / 3.0, 2.0 * s.lb};
        return normalize(log_add(log_add(t1, t2), t3));
      }
    }
    return {};
  }

  LogVal antider_at(double z) const {
    const SegmentBasis& b = s.basis;
    double zeta = b.zeta0 + b.beta * (z - b.z0);
    AiryScaled sc = airy_scaled(zeta);
    const AiryQuad& q = sc.quad;
    double xi = sc.exponent;
    // zeta Ai^2 - Ai'^2 carries exp(-2 xi); Bi part exp(+2 xi); cross O(1)
    LogVal ta{s.a * s.a * (zeta * q.ai * q.ai - q.aip * q.aip),
              2.0 * s.la - 2.0 * xi};
    LogVal tb{s.b * s.b * (zeta * q.bi * q.bi - q.bip * q.bip),
              2.0 * s.lb + 2.0 * xi};
    LogVal tc{2.0 * s.a * s.b * (zeta * q.ai * q.bi - q.aip * q.bip),
              s.la + s.lb};
    return log_add(log_add(ta, tb), tc);
  }

  // 20-point Gauss-Legendre on the segment, in a locally shifted scale
  LogVal quadrature() const {
    double shift = std::max(std::max(s.la + eval_basis(s.basis, s.z0).l1,
                                     s.lb + eval_basis(s.basis, s.z0).l2),
                            std::max(s.la + eval_basis(s.basis, s.z1).l1,
                                     s.lb + eval_basis(s.basis, s.z1).l2));
    double mid = 0.5 * (s.z0 + s.z1), half = 0.5 * (s.z1 - s.z0);
    double acc = 0.0;
    for (int i = 0; i < 10; ++i) {
      for (double sgn : {-1.0, 1.0}) {
        double z = mid + sgn * half * kGl20X[i];
        BasisValues bv = eval_basis(s.basis, z);
        double psi = s.a * bv.u1 * std::exp(s.la + bv.l1 - shift) +
                     s.b * bv.u2 * std::exp(s.lb + bv.l2 - shift);
        acc += kGl20W[i] * psi * psi;
      }
    }
    return normalize({acc * half, 2.0 * shift});
  }
};

LogVal segment_norm(const SegmentSolution& s) {
  SquareIntegrand in{s};
  bool ill = false;
  LogVal cf = in.closed_form(&ill);
  if (ill || cf.m < 0.0) return in.quadrature();
  return cf;
}

StationaryState assemble_state(double energy,
                               const PiecewiseLinearPotential& plp) {
  Chain c = build_chain(plp);
  const size_t nspec = c.specs.size();
  StationaryState st;
  st.energy = energy;
  st.segments.resize(nspec);

  std::vector<SegmentBasis> bases(nspec);
  for (size_t j = 0; j < nspec; ++j) bases[j] = make_basis(c.specs[j], energy);

  // left-to-right sweep: decaying left-cladding solution
  std::vector<Coeff2> fwd(nspec);
  {
    Coeff2 v;
    v.b = 1.0;
    v.lb = 0.0;
    for (size_t j = 0; j < nspec; ++j) {
      fwd[j] = v;
      if (j + 1 < nspec)
        v = apply_step(step_from_bases(bases[j], bases[j + 1], c.joints[j]), v);
    }
  }
  // right-to-left sweep: decaying right-cladding solution
  std::vector<Coeff2> bwd(nspec);
  {
    Coeff2 v;
    v.a = 1.0;
    v.la = 0.0;
    for (size_t j = nspec; j-- > 0;) {
      bwd[j] = v;
      if (j > 0)
        v = apply_step(step_from_bases(bases[j], bases[j - 1], c.joints[j - 1]), v);
    }
  }

  // amplitude of the forward solution at segment midpoints; both sweeps are
  // numerically reliable up to (and a bit past) the state's main lobe, so we
  // join them where the forward amplitude peaks
  auto log_amp = [&](const Coeff2& v, const SegmentBasis& b, double z) {
    BasisValues bv = eval_basis(b, z);
    LogVal t1{v.a * bv.u1, v.la + bv.l1};
    LogVal t2{v.b * bv.u2, v.lb + bv.l2};
    LogVal s = log_add(t1, t2);
    return (s.m == 0.0) ? kNegInf : s.l + std::log(std::abs(s.m));
  };
  size_t peak = 1;
  double best = kNegInf;
  for (size_t j = 1; j + 1 < nspec; ++j) {
    double zm = 0.5 * (c.specs[j].z0 + c.specs[j].z1);
    double a = log_amp(fwd[j], bases[j], zm);
    if (a > best) {
      best = a;
      peak = j;
    }
  }
  // scale the backward solution to match the forward one inside the peak
  // segment; probe a few points so a node of the state cannot be picked
  double zj = 0.5 * (c.specs[peak].z0 + c.specs[peak].z1);
  {
    double best_amp = kNegInf;
    for (double frac : {0.2, 0.35, 0.5, 0.65, 0.8}) {
      double zc = c.specs[peak].z0 +
                  frac * (c.specs[peak].z1 - c.specs[peak].z0);
      double a = log_amp(fwd[peak], bases[peak], zc);
      if (a > best_amp) {
        best_amp = a;
        zj = zc;
      }
    }
  }
  BasisValues bv = eval_basis(bases[peak], zj);
  LogVal psi_f = log_add(LogVal{fwd[peak].a * bv.u1, fwd[peak].la + bv.l1},
                         LogVal{fwd[peak].b * bv.u2, fwd[peak].lb + bv.l2});
  LogVal psi_b = log_add(LogVal{bwd[peak].a * bv.u1, bwd[peak].la + bv.l1},
                         LogVal{bwd[peak].b * bv.u2, bwd[peak].lb + bv.l2});
  psi_f = normalize(psi_f);
  psi_b = normalize(psi_b);
  double scale_log = (psi_b.m == 0.0) ? 0.0 : psi_f.l - psi_b.l;
  double scale_sign = (psi_f.m * psi_b.m < 0.0) ? -1.0 : 1.0;

  for (size_t j = 0; j < nspec; ++j) {
    SegmentSolution& out = st.segments[j];
    out.basis = bases[j];
    out.z0 = c.specs[j].z0;
    out.z1 = c.specs[j].z1;
    const Coeff2& v = (j <= peak) ? fwd[j] : bwd[j];
    out.a = v.a;
    out.la = v.la;
    out.b = v.b;
    out.lb = v.lb;
    if (j > peak) {
      out.a *= scale_sign;
      out.b *= scale_sign;
      out.la += scale_log;
      out.lb += scale_log;
    }
  }
  // the claddings keep only their decaying exponentials
  st.segments.front().a = 0.0;
  st.segments.front().la = kNegInf;
  st.segments.back().b = 0.0;
  st.segments.back().lb = kNegInf;

  // normalization: cladding tails are analytic, interior per segment
  std::vector<LogVal> parts;
  {
    const SegmentSolution& left = st.segments.front();
    parts.push_back(
        normalize({left.b * left.b / (2.0 * left.basis.kappa), 2.0 * left.lb}));
    const SegmentSolution& right = st.segments.back();
    parts.push_back(normalize(
        {right.a * right.a / (2.0 * right.basis.kappa), 2.0 * right.la}));
  }
  for (size_t j = 1; j + 1 < nspec; ++j) parts.push_back(segment_norm(st.segments[j]));
  LogVal total{0.0, kNegInf};
  for (const LogVal& p : parts) total = log_add(total, p);
  total = normalize(total);
  double shift = -0.5 * total.l;  // total.m == 1 for a positive integral
  for (SegmentSolution& s : st.segments) {
    s.la += shift;
    s.lb += shift;
  }

  // localization per physical layer (segments grouped by the partition count)
  int nlayers = plp.segment_count() / plp.partitions;
  st.localization.assign(nlayers, 0.0);
  for (size_t j = 1; j + 1 < nspec; ++j) {
    LogVal p = segment_norm(st.segments[j]);
    int layer = int(j - 1) / plp.partitions;
    st.localization[layer] += p.value();
  }
  // verify the enforced contract
  LogVal check{0.0, kNegInf};
  const SegmentSolution& left = st.segments.front();
  const SegmentSolution& right = st.segments.back();
  check = log_add(check, normalize({left.b * left.b / (2.0 * left.basis.kappa),
                                    2.0 * left.lb}));
  check = log_add(check, normalize({right.a * right.a /
                                        (2.0 * right.basis.kappa),
                                    2.0 * right.la}));
  for (size_t j = 1; j + 1 < nspec; ++j)
    check = log_add(check, segment_norm(st.segments[j]));
  st.norm_residual = std::abs(check.value() - 1.0);

  // interior node count on a fine sampling; ignore the noise-level tails
  double zlo = plp.nodes[0] - 1.0, zhi = plp.nodes[plp.segment_count()] + 1.0;
  const int nsamp = 4000;
  Eigen::ArrayXd samples(nsamp + 1);
  for (int i = 0; i <= nsamp; ++i)
    samples[i] = st.psi(zlo + (zhi - zlo) * i / nsamp);
  double floor_psi = 1e-5 * samples.abs().maxCoeff();
  int nodes = 0;
  double prev = 0.0;
  for (int i = 0; i <= nsamp; ++i) {
    double cur = samples[i];
    if (std::abs(cur) < floor_psi) continue;
    if (prev != 0.0 && (prev < 0) != (cur < 0)) ++nodes;
    prev = cur;
  }
  st.nodes = nodes;
  return st;
}

}  // namespace

namespace {

const SegmentSolution* locate(const std::vector<SegmentSolution>& segments,
                              double z) {
  if (z >= segments.back().z0) return &segments.back();
  if (z < segments.front().z1) return &segments.front();
  size_t lo = 1, hi = segments.size() - 2;
  while (lo < hi) {
    size_t mid = (lo + hi + 1) / 2;
    if (segments[mid].z0 <= z)
      lo = mid;
    else
      hi = mid - 1;
  }
  return &segments[lo];
}

}  // namespace

double StationaryState::psi(double z) const {
  const SegmentSolution* seg = locate(segments, z);
  BasisValues bv = eval_basis(seg->basis, z);
  double t1 = (seg->a != 0.0) ? seg->a * bv.u1 * std::exp(seg->la + bv.l1) : 0.0;
  double t2 = (seg->b != 0.0) ? seg->b * bv.u2 * std::exp(seg->lb + bv.l2) : 0.0;
  return t1 + t2;
}

double StationaryState::dpsi(double z) const {
  const SegmentSolution* seg = locate(segments, z);
  BasisValues bv = eval_basis(seg->basis, z);
  double t1 = (seg->a != 0.0) ? seg->a * bv.du1 * std::exp(seg->la + bv.l1) : 0.0;
  double t2 = (seg->b != 0.0) ? seg->b * bv.du2 * std::exp(seg->lb + bv.l2) : 0.0;
  return t1 + t2;
}

Eigen::ArrayXd StationaryState::psi_on(const Eigen::ArrayXd& z) const {
  Eigen::ArrayXd out(z.size());
  for (long i = 0; i < z.size(); ++i) out[i] = psi(z[i]);
  return out;
}

std::vector<StationaryState> bound_states(const PiecewiseLinearPotential& plp,
                                          const BoundStateOptions& opts) {
  double vmin = plp.values[0];
  for (int s = 0; s < plp.segment_count(); ++s) {
    double w = plp.nodes[s + 1] - plp.nodes[s];
    vmin = std::min(vmin, plp.values[s] + std::min(0.0, plp.eff_fields[s] * w));
  }
  double emin = vmin + opts.window_margin;
  double emax = std::min(plp.u_left, plp.u_right) - opts.window_margin;
  std::vector<StationaryState> states;
  if (emax <= emin) return states;

  double e_prev = emin;
  double r_prev = dispersion_residual(e_prev, plp);
  long nsteps = long(std::ceil((emax - emin) / opts.scan_step));
  for (long i = 1; i <= nsteps; ++i) {
    double e = std::min(emin + i * opts.scan_step, emax);
    double r = dispersion_residual(e, plp);
    if (r == 0.0) {
      states.push_back(assemble_state(e, plp));
      e_prev = e;
      r_prev = r;
      continue;
    }
    if (r_prev != 0.0 && (r_prev < 0) != (r < 0)) {
      double lo = e_prev, hi = e, rlo = r_prev;
      while (hi - lo > opts.refine_tol) {
        double mid = 0.5 * (lo + hi);
        double rm = dispersion_residual(mid, plp);
        if (rm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((rm < 0) == (rlo < 0)) {
          lo = mid;
          rlo = rm;
        } else {
          hi = mid;
        }
      }
      states.push_back(assemble_state(0.5 * (lo + hi), plp));
    }
    e_prev = e;
    r_prev = r;
  }
  return states;
}

std::vector<double> fd_oracle(const PiecewiseLinearPotential& plp,
                              double grid_step, double pad) {
  const int ns = plp.segment_count();
  double z0 = plp.nodes[0], zn = plp.nodes[ns];
  long n = long(std::ceil((zn - z0 + 2.0 * pad) / grid_step)) + 1;
  double h = (zn - z0 + 2.0 * pad) / double(n - 1);

  auto value_at = [&](double z) -> double {
    if (z < z0) return plp.u_left;
    if (z >= zn) return plp.u_right;
    // locate segment
    int lo = 0, hi = ns - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (plp.nodes[mid] <= z)
        lo = mid;
      else
        hi = mid - 1;
    }
    return plp.values[lo] + plp.eff_fields[lo] * (z - plp.nodes[lo]);
  };
  auto mass_at = [&](double z) -> double {
    if (z < z0 || z >= zn) return plp.cladding_mass;
    int lo = 0, hi = ns - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (plp.nodes[mid] <= z)
        lo = mid;
      else
        hi = mid - 1;
    }
    return plp.masses[lo];
  };

  Eigen::ArrayXd diag(n), off(n - 1);
  for (long i = 0; i < n; ++i) {
    double z = z0 - pad + i * h;
    diag[i] = value_at(z);
  }
  for (long i = 0; i + 1 < n; ++i) {
    double zm = z0 - pad + (i + 0.5) * h;
    off[i] = -kinetic / (mass_at(zm) * h * h);
  }
  for (long i = 0; i < n; ++i) {
    double left = (i > 0) ? -off[i - 1] : kinetic / (mass_at(z0 - pad - 0.5 * h) * h * h);
    double right = (i + 1 < n) ? -off[i] : kinetic / (mass_at(zn + pad + 0.5 * h) * h * h);
    diag[i] += left + right;
  }

  double cap = std::min(plp.u_left, plp.u_right) - 1e-3;
  auto count_below = [&](double x) -> long {
    long cnt = 0;
    double q = diag[0] - x;
    if (q < 0) ++cnt;
    for (long i = 1; i < n; ++i) {
      double denom = (q == 0.0) ? 1e-300 : q;
      q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
      if (q < 0) ++cnt;
    }
    return cnt;
  };

  double lo_all = diag.minCoeff() - 2.0 * off.abs().maxCoeff() - 1.0;
  long k = count_below(cap);
  std::vector<double> evals;
  evals.reserve(size_t(k));
  for (long j = 0; j < k; ++j) {
    double lo = lo_all, hi = cap;
    while (hi - lo > 1e-10) {
      double mid = 0.5 * (lo + hi);
      if (count_below(mid) >= j + 1)
        hi = mid;
      else
        lo = mid;
    }
    evals.push_back(0.5 * (lo + hi));
  }
  return evals;
}

}  // namespace qcd
