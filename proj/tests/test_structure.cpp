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

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qcdsim/structure.hpp"

using namespace qcd;
using doctest::Approx;

TEST_CASE("paper stack at the experimental configuration") {
  LayerStack s = paper_stack(1.56);
  REQUIRE(s.layers().size() == 7);
  CHECK(s.layers()[1].x == 0.0);
  CHECK(s.layers()[1].thickness == Approx(1.56));
  CHECK(s.layers()[5].thickness == Approx(1.04));
  CHECK(s.total_thickness() == Approx(7.80).epsilon(1e-14));
  const auto& zb = s.boundaries();
  REQUIRE(zb.size() == 8);
  CHECK(zb[0] == 0.0);
  for (size_t i = 0; i + 1 < zb.size(); ++i) {
    CHECK(zb[i + 1] > zb[i]);
    CHECK(zb[i + 1] - zb[i] == Approx(s.layers()[i].thickness));
  }
}

TEST_CASE("profiles are piecewise constant with right-continuous boundaries") {
  LayerStack s = paper_stack(1.56);
  BinaryTable t = default_materials();
  const auto& zb = s.boundaries();

  // cladding on both sides
  CHECK(s.mass_profile(-0.5) == Approx(t.aln.effective_mass));
  CHECK(s.dielectric_profile(zb.back() + 1.0) == Approx(t.aln.dielectric));
  // GaN well interior
  CHECK(s.mass_profile(0.5 * (zb[1] + zb[2])) == Approx(t.gan.effective_mass));
  // alloy well region 4
  CHECK(s.dielectric_profile(0.5 * (zb[3] + zb[4])) ==
        Approx(t.interpolate(0.25).dielectric));
  // boundary probes take the right-hand region
  CHECK(s.mass_profile(zb[1]) == Approx(t.gan.effective_mass));
  CHECK(s.dielectric_profile(zb[3]) == Approx(t.interpolate(0.25).dielectric));
  CHECK(s.mass_profile(zb.back()) == Approx(t.aln.effective_mass));

  // no discontinuities away from the boundaries
  for (size_t p = 0; p < s.layers().size(); ++p) {
    double lo = zb[p] + 1e-6, hi = zb[p + 1] - 1e-6;
    CHECK(s.mass_profile(lo) == Approx(s.mass_profile(hi)));
    CHECK(s.dielectric_profile(lo) == Approx(s.dielectric_profile(hi)));
  }
}

TEST_CASE("scan endpoint collapses the first well into a merged stack") {
  LayerStack s = paper_stack(0.0);
  // AlN + AlN merge at the front: AlN(2.08) alloy(1.04) AlN(1.04)
  // alloy(2.60) AlN(1.04)
  REQUIRE(s.layers().size() == 5);
  CHECK(s.layers()[0].x == 1.0);
  CHECK(s.layers()[0].thickness == Approx(2.08));
  CHECK(s.layers()[3].thickness == Approx(2.60));
  CHECK(s.total_thickness() == Approx(7.80).epsilon(1e-12));
}

TEST_CASE("total thickness is conserved across the scan range") {
  for (double d = 0.0; d <= paper_well_budget + 1e-12; d += 0.13) {
    LayerStack s = paper_stack(d);
    CHECK(s.total_thickness() == Approx(7.80).epsilon(1e-12));
  }
}

TEST_CASE("domain and validity errors") {
  CHECK_THROWS_AS((void)paper_stack(-0.1), std::domain_error);
  CHECK_THROWS_AS((void)paper_stack(2.7), std::domain_error);
  CHECK_THROWS_AS(LayerStack({{0.0, 0.0, ""}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LayerStack({}, 1.0), std::invalid_argument);
}
