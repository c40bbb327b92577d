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

namespace qcd {

/// Values of Ai, Bi, Ai', Bi' at one argument.
struct AiryQuad {
  double ai = 0.0;
  double bi = 0.0;
  double aip = 0.0;
  double bip = 0.0;
};

/// AiryQuad with the dominant exponential factor split off.
///
/// For x > 0 the stored values satisfy
///   Ai(x)  = quad.ai  * exp(-exponent),   Bi(x)  = quad.bi  * exp(+exponent),
///   Ai'(x) = quad.aip * exp(-exponent),   Bi'(x) = quad.bip * exp(+exponent)
/// with exponent = (2/3) x^(3/2).  For x <= 0 exponent is 0 and the values
/// are the plain function values.
struct AiryScaled {
  AiryQuad quad;
  double exponent = 0.0;
};

/// Scaled Airy pair; never overflows for finite arguments.
AiryScaled airy_scaled(double x);

/// Unscaled Airy pair.  Throws std::overflow_error if exp(exponent) is not
/// representable in double (|x| beyond roughly 104).
AiryQuad airy_quad(double x);

}  // namespace qcd
