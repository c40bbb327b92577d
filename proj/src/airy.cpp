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

#include "qcdsim/airy.hpp"

#include <cmath>
#include <stdexcept>

namespace qcd {
namespace {

// Compensated double-double arithmetic.  The Maclaurin series for Ai at
// moderate positive x cancels like exp(2*zeta); plain doubles lose all
// digits near x ~ 8, double-double keeps the seam at 10.5 / -14 accurate
// to ~1e-13.
struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline Dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd dd_add(const Dd& a, const Dd& b) {
  Dd s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return quick_two_sum(s.hi, lo);
}

inline Dd dd_mul(const Dd& a, const Dd& b) {
  Dd p = two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, lo);
}

inline Dd dd_mul(const Dd& a, double b) {
  Dd p = two_prod(a.hi, b);
  double lo = p.lo + a.lo * b;
  return quick_two_sum(p.hi, lo);
}

inline Dd dd_div(const Dd& a, double b) {
  double q1 = a.hi / b;
  Dd p = two_prod(q1, b);
  double r = ((a.hi - p.hi) - p.lo) + a.lo;
  double q2 = r / b;
  return quick_two_sum(q1, q2);
}

constexpr Dd kAi0{0.3550280538878172, 2.05233632436212e-17};    // Ai(0)
constexpr Dd kAip0{0.2588194037928068, -2.522243111610832e-17}; // -Ai'(0)
constexpr Dd kSqrt3{1.7320508075688772, 1.0035084221806903e-16};

constexpr double kSeamPos = 10.5;
constexpr double kSeamNeg = -14.0;

struct SeriesQuad {
  Dd f, g, fp, gp;  // f, g and their derivatives
};

// Maclaurin series of the standard pair f'' = x f (f(0)=1) and g (g(0)=0,
// g'(0)=1), summed in double-double.
SeriesQuad maclaurin_fg(double x) {
  Dd x2 = two_prod(x, x);
  Dd x3 = dd_mul(x2, x);
  Dd tf{1.0, 0.0};
  Dd tg{x, 0.0};
  Dd tfp{0.0, 0.0};  // f' first term enters at k=1
  Dd tgp{1.0, 0.0};
  SeriesQuad s{tf, tg, tfp, tgp};
  Dd tfp_prev{0.5, 0.0};  // f'_1 = x^2/2, seeded below
  // k = 1 terms
  Dd f1 = dd_div(dd_mul(tf, x3), 6.0);           // x^3/6
  Dd g1 = dd_div(dd_mul(tg, x3), 12.0);          // x^4/12
  Dd fp1 = dd_div(x2, 2.0);                      // x^2/2
  Dd gp1 = dd_div(x3, 3.0);                      // x^3/3
  tf = f1; tg = g1; tfp = fp1; tgp = gp1;
  for (int k = 1; k < 400; ++k) {
    s.f = dd_add(s.f, tf);
    s.g = dd_add(s.g, tg);
    s.fp = dd_add(s.fp, tfp);
    s.gp = dd_add(s.gp, tgp);
    double scale = std::abs(s.f.hi) + std::abs(s.g.hi) + 1.0;
    if (std::abs(tf.hi) + std::abs(tg.hi) + std::abs(tfp.hi) + std::abs(tgp.hi)
        < 1e-35 * scale) {
      break;
    }
    int k1 = k + 1;
    tf = dd_div(dd_mul(tf, x3), double(3 * k1) * double(3 * k1 - 1));
    tg = dd_div(dd_mul(tg, x3), double(3 * k1) * double(3 * k1 + 1));
    tfp = dd_div(dd_mul(tfp, x3), double(3 * k1 - 1) * double(3 * k1 - 3));
    tgp = dd_div(dd_mul(tgp, x3), double(3 * k1) * double(3 * k1 - 2));
  }
  (void)tfp_prev;
  return s;
}

AiryQuad airy_series(double x) {
  SeriesQuad s = maclaurin_fg(x);
  Dd c1f = dd_mul(s.f, kAi0);
  Dd c2g = dd_mul(s.g, kAip0);
  Dd c1fp = dd_mul(s.fp, kAi0);
  Dd c2gp = dd_mul(s.gp, kAip0);
  Dd ai = dd_add(c1f, dd_mul(c2g, -1.0));
  Dd aip = dd_add(c1fp, dd_mul(c2gp, -1.0));
  Dd bi = dd_mul(dd_add(c1f, c2g), kSqrt3);
  Dd bip = dd_mul(dd_add(c1fp, c2gp), kSqrt3);
  return {ai.hi + ai.lo, bi.hi + bi.lo, aip.hi + aip.lo, bip.hi + bip.lo};
}

// u_k, v_k coefficients of the large-|x| expansions (DLMF 9.7).
constexpr int kAsymTerms = 40;

struct AsymSums {
  double su = 0.0, sv = 0.0;    // sum (-1)^k u_k/xi^k, same with v_k
  double pu = 0.0, pv = 0.0;    // sum u_k/xi^k, same with v_k
  double su_e = 0.0, sv_e = 0.0, qu = 0.0, qv = 0.0;  // even/odd splits
  double pu_o = 0.0, pv_o = 0.0;
};

// Accumulates the asymptotic sums; terms are truncated once they stop
// decreasing or fall below 1e-18.
AsymSums asym_sums(double xi) {
  AsymSums r;
  double u = 1.0, v = 1.0;
  double invxi = 1.0 / xi;
  double pw = 1.0;
  double prev = 1e300;
  for (int k = 0; k < kAsymTerms; ++k) {
    double tu = u * pw;
    double tv = v * pw;
    double mag = std::abs(tu);
    if (mag > prev) break;
    prev = mag;
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    r.su += sgn * tu;
    r.sv += sgn * tv;
    r.pu += tu;
    r.pv += tv;
    if (k % 2 == 0) {
      double s2 = (k % 4 == 0) ? 1.0 : -1.0;  // (-1)^(k/2)
      r.su_e += s2 * tu;
      r.sv_e += s2 * tv;
    } else {
      double s2 = (k % 4 == 1) ? 1.0 : -1.0;  // (-1)^((k-1)/2)
      r.qu += s2 * tu;
      r.qv += s2 * tv;
    }
    if (mag < 1e-18) break;
    double kk = double(k);
    double num = (6.0 * kk + 1.0) * (6.0 * kk + 3.0) * (6.0 * kk + 5.0);
    double den = 216.0 * (kk + 1.0) * (2.0 * kk + 1.0);
    u *= num / den;
    v = -u * (6.0 * kk + 7.0) / (6.0 * kk + 5.0);  // v_k = u_k (6k+1)/(1-6k)
    pw *= invxi;
  }
  return r;
}

constexpr double kInvSqrtPi = 0.5641895835477563;

// Scaled asymptotics for x >= seam: returns values with exp(±xi) removed.
AiryQuad airy_asym_pos_scaled(double x, double xi) {
  AsymSums s = asym_sums(xi);
  double r4 = std::pow(x, 0.25);
  AiryQuad q;
  q.ai = 0.5 * kInvSqrtPi / r4 * s.su;
  q.aip = -0.5 * kInvSqrtPi * r4 * s.sv;
  q.bi = kInvSqrtPi / r4 * s.pu;
  q.bip = kInvSqrtPi * r4 * s.pv;
  return q;
}

// Oscillatory asymptotics for x <= -seam (DLMF 9.7.9-9.7.12).
AiryQuad airy_asym_neg(double x) {
  double y = -x;
  double xi = (2.0 / 3.0) * y * std::sqrt(y);
  AsymSums s = asym_sums(xi);
  double r4 = std::pow(y, 0.25);
  double c = std::cos(xi - 0.25 * M_PI);
  double sn = std::sin(xi - 0.25 * M_PI);
  AiryQuad q;
  q.ai = kInvSqrtPi / r4 * (c * s.su_e + sn * s.qu);
  q.bi = kInvSqrtPi / r4 * (-sn * s.su_e + c * s.qu);
  q.aip = kInvSqrtPi * r4 * (sn * s.sv_e - c * s.qv);
  q.bip = kInvSqrtPi * r4 * (c * s.sv_e + sn * s.qv);
  return q;
}

}  // namespace

AiryScaled airy_scaled(double x) {
  AiryScaled out;
  if (x <= 0.0) {
    out.exponent = 0.0;
    out.quad = (x < kSeamNeg) ? airy_asym_neg(x) : airy_series(x);
    return out;
  }
  double xi = (2.0 / 3.0) * x * std::sqrt(x);
  out.exponent = xi;
  if (x < kSeamPos) {
    AiryQuad q = airy_series(x);
    double ep = std::exp(xi);
    out.quad = {q.ai * ep, q.bi / ep, q.aip * ep, q.bip / ep};
  } else {
    out.quad = airy_asym_pos_scaled(x, xi);
  }
  return out;
}

AiryQuad airy_quad(double x) {
  AiryScaled s = airy_scaled(x);
  if (s.exponent == 0.0) return s.quad;
  if (s.exponent > 700.0) {
    throw std::overflow_error("airy_quad: unscaled Bi overflows double range");
  }
  double em = std::exp(-s.exponent);
  double ep = std::exp(s.exponent);
  return {s.quad.ai * em, s.quad.bi * ep, s.quad.aip * em, s.quad.bip * ep};
}

}  // namespace qcd
