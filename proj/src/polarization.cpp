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

#include "qcdsim/polarization.hpp"

#include <stdexcept>

#include "qcdsim/constants.hpp"

namespace qcd {

namespace {

double piezo(const MaterialParams& m, double a_sub) {
  double strain = (a_sub - m.a_lattice) / m.a_lattice;
  return 2.0 * strain * (m.e31 - m.e33 * m.c13 / m.c33);
}

}  // namespace

double layer_polarization(const Layer& layer, double substrate_lattice,
                          const BinaryTable& table, AlloyPolarizationRule rule) {
  if (layer.x < 0.0 || layer.x > 1.0)
    throw std::domain_error("layer_polarization: x outside [0,1]");
  if (!(substrate_lattice > 0.0))
    throw std::domain_error("layer_polarization: nonpositive substrate lattice");
  if (rule == AlloyPolarizationRule::vegard) {
    MaterialParams m = table.interpolate(layer.x);
    return m.p_sp + piezo(m, substrate_lattice);
  }
  // literal printed rule: P(x) = P_AlN + (1-x) P_GaN with binary values
  double p_aln = table.aln.p_sp + piezo(table.aln, substrate_lattice);
  double p_gan = table.gan.p_sp + piezo(table.gan, substrate_lattice);
  return p_aln + (1.0 - layer.x) * p_gan;
}

FieldProfile internal_fields(const LayerStack& stack,
                             const std::vector<double>& polarizations,
                             double cladding_polarization) {
  const auto& layers = stack.layers();
  const size_t n = layers.size();
  if (polarizations.size() != n)
    throw std::invalid_argument("internal_fields: one polarization per layer required");

  FieldProfile fp;
  fp.polarizations = polarizations;

  // eps0 eps_p F_p + P_p = D (interior continuity), sum F_p d_p = 0
  double num = 0.0, den = 0.0;
  for (size_t p = 0; p < n; ++p) {
    double eps = stack.material(int(p)).dielectric;
    double d = layers[p].thickness;
    num += polarizations[p] * constants::coulomb_per_m2_to_e_per_nm2 * d / eps;
    den += d / eps;
  }
  double dconst = num / den;  // e/nm^2
  fp.fields.resize(n);
  for (size_t p = 0; p < n; ++p) {
    double eps = stack.material(int(p)).dielectric;
    double pe = polarizations[p] * constants::coulomb_per_m2_to_e_per_nm2;
    fp.fields[p] = (dconst - pe) / (constants::eps0 * eps);  // V/nm
  }

  std::vector<double> with_clad = polarizations;
  with_clad.insert(with_clad.begin(), cladding_polarization);
  with_clad.push_back(cladding_polarization);
  auto all_sheets = sheet_charges(with_clad);  // boundaries z_0 ... z_n
  fp.sheet_charges.assign(all_sheets.begin() + 1, all_sheets.end());
  return fp;
}

std::vector<double> sheet_charges(const std::vector<double>& polarizations) {
  if (polarizations.size() < 2)
    throw std::invalid_argument("sheet_charges: need at least two media");
  std::vector<double> sigma(polarizations.size() - 1);
  for (size_t p = 0; p + 1 < polarizations.size(); ++p)
    sigma[p] = polarizations[p + 1] - polarizations[p];
  return sigma;
}

}  // namespace qcd
