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

#include <algorithm>
#include <cmath>

#include "qcdsim/constants.hpp"
#include "qcdsim/polarization.hpp"

using namespace qcd;
using doctest::Approx;

namespace {

const BinaryTable kTable = default_materials();

std::vector<double> paper_polarizations(const LayerStack& s, double a_sub) {
  std::vector<double> p;
  for (const Layer& l : s.layers())
    p.push_back(layer_polarization(l, a_sub, kTable));
  return p;
}

void check_field_invariants(const LayerStack& s, const FieldProfile& fp) {
  // voltage sum
  double vsum = 0.0, scale = 0.0;
  for (size_t i = 0; i < fp.fields.size(); ++i) {
    vsum += fp.fields[i] * s.layers()[i].thickness;
    scale += std::abs(fp.fields[i]) * s.layers()[i].thickness;
  }
  CHECK(std::abs(vsum) <= 1e-12 * std::max(scale, 1e-30));
  // displacement continuity across interior boundaries
  std::vector<double> d(fp.fields.size());
  for (size_t i = 0; i < fp.fields.size(); ++i) {
    double eps = s.material(int(i)).dielectric;
    d[i] = constants::eps0 * eps * fp.fields[i] +
           fp.polarizations[i] * constants::coulomb_per_m2_to_e_per_nm2;
  }
  for (size_t i = 0; i + 1 < d.size(); ++i)
    CHECK(std::abs(d[i + 1] - d[i]) <= 1e-12 * std::max(std::abs(d[i]), 1e-30));
}

}  // namespace

TEST_CASE("unstrained layer carries only the spontaneous part") {
  Layer aln{1.0, 1.0, "barrier"};
  CHECK(layer_polarization(aln, kTable.aln.a_lattice, kTable) ==
        Approx(kTable.aln.p_sp).epsilon(1e-14));
  // zero mismatch at any composition kills the piezoelectric part
  Layer alloy{0.3, 1.0, "well"};
  double a_match = kTable.interpolate(0.3).a_lattice;
  CHECK(layer_polarization(alloy, a_match, kTable) ==
        Approx(kTable.interpolate(0.3).p_sp).epsilon(1e-14));
}

TEST_CASE("GaN on AlN: hand evaluation of the biaxial strain formula") {
  Layer gan{0.0, 1.0, "well"};
  double p = layer_polarization(gan, kTable.aln.a_lattice, kTable);
  // strain = (a_AlN - a_GaN)/a_GaN, P_pz = 2 strain (e31 - e33 c13/c33)
  CHECK(p == Approx(-0.0027093116885775967).epsilon(1e-10));
}

TEST_CASE("literal printed alloy rule differs from Vegard") {
  Layer alloy{0.25, 1.0, "well"};
  double a_sub = kTable.aln.a_lattice;
  double vegard = layer_polarization(alloy, a_sub, kTable);
  double literal = layer_polarization(alloy, a_sub, kTable,
                                      AlloyPolarizationRule::paper_literal);
  double p_aln = kTable.aln.p_sp;
  double p_gan = layer_polarization({0.0, 1.0, ""}, a_sub, kTable);
  CHECK(literal == Approx(p_aln + 0.75 * p_gan).epsilon(1e-12));
  CHECK(std::abs(literal - vegard) > 0.01);  // materially different rule
}

TEST_CASE("equal polarizations produce zero fields") {
  LayerStack s = paper_stack(1.56);
  std::vector<double> p(7, -0.05);
  FieldProfile fp = internal_fields(s, p, -0.05);
  for (double f : fp.fields) CHECK(std::abs(f) < 1e-15);
  for (double sig : fp.sheet_charges) CHECK(std::abs(sig) < 1e-15);
}

TEST_CASE("two-layer antisymmetric case") {
  LayerStack s({{1.0, 2.0, ""}, {1.0, 2.0, ""}}, 1.0);
  FieldProfile fp = internal_fields(s, {0.05, -0.05}, kTable.aln.p_sp);
  CHECK(fp.fields[0] == Approx(-fp.fields[1]).epsilon(1e-12));
  // direct evaluation: D = 0, F = -P/(eps0 eps)
  double expect = -0.05 * constants::coulomb_per_m2_to_e_per_nm2 /
                  (constants::eps0 * kTable.aln.dielectric);
  CHECK(fp.fields[0] == Approx(expect).epsilon(1e-12));
  check_field_invariants(s, fp);
}

TEST_CASE("paper stack satisfies both defining conditions") {
  LayerStack s = paper_stack(1.56);
  FieldProfile fp = internal_fields(s, paper_polarizations(s, kTable.aln.a_lattice),
                                    kTable.aln.p_sp);
  check_field_invariants(s, fp);
}

TEST_CASE("fields are linear in the polarization vector") {
  LayerStack s = paper_stack(1.56);
  auto p = paper_polarizations(s, kTable.aln.a_lattice);
  FieldProfile f1 = internal_fields(s, p, kTable.aln.p_sp);
  std::vector<double> p3 = p;
  for (double& v : p3) v *= 3.0;
  FieldProfile f3 = internal_fields(s, p3, 3.0 * kTable.aln.p_sp);
  for (size_t i = 0; i < f1.fields.size(); ++i)
    CHECK(f3.fields[i] == Approx(3.0 * f1.fields[i]).epsilon(1e-12));
}

TEST_CASE("permuting identical layers leaves the field multiset unchanged") {
  LayerStack s1({{1.0, 1.0, ""}, {0.0, 2.0, ""}, {0.5, 1.5, ""}}, 1.0);
  LayerStack s2({{0.5, 1.5, ""}, {0.0, 2.0, ""}, {1.0, 1.0, ""}}, 1.0);
  double a_sub = kTable.aln.a_lattice;
  auto pol = [&](const LayerStack& s) {
    std::vector<double> p;
    for (const Layer& l : s.layers())
      p.push_back(layer_polarization(l, a_sub, kTable));
    return p;
  };
  auto f1 = internal_fields(s1, pol(s1), kTable.aln.p_sp).fields;
  auto f2 = internal_fields(s2, pol(s2), kTable.aln.p_sp).fields;
  std::sort(f1.begin(), f1.end());
  std::sort(f2.begin(), f2.end());
  for (size_t i = 0; i < f1.size(); ++i)
    CHECK(f1[i] == Approx(f2[i]).epsilon(1e-12));
}

TEST_CASE("sheet charges") {
  // definition and telescoping
  std::vector<double> p{-0.081, -0.001, -0.081};
  auto sig = sheet_charges(p);
  REQUIRE(sig.size() == 2);
  CHECK(sig[0] == Approx(0.080));
  CHECK(sig[1] == Approx(-0.080));
  CHECK(sig[0] + sig[1] == Approx(p.back() - p.front()).epsilon(1e-14));
  // identical adjacent media
  CHECK(sheet_charges({-0.05, -0.05})[0] == 0.0);
  CHECK_THROWS_AS(sheet_charges({1.0}), std::invalid_argument);
}
