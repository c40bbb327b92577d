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

#include "qcdsim/materials.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qcd {

double BinaryTable::bandgap(double x, double temperature) const {
  if (x < 0.0 || x > 1.0) throw std::domain_error("bandgap: x outside [0,1]");
  if (temperature < 0.0) throw std::domain_error("bandgap: negative temperature");
  double eg0x = x * aln.eg0 + (1.0 - x) * gan.eg0 + bowing_alpha * x * (1.0 - x);
  double a = x * aln.varshni_a + (1.0 - x) * gan.varshni_a;
  double b = x * aln.varshni_b + (1.0 - x) * gan.varshni_b;
  return eg0x - a * temperature * temperature / (b + temperature);
}

double BinaryTable::conduction_offset(double x, double temperature) const {
  return 0.765 * (bandgap(x, temperature) - bandgap(0.0, temperature));
}

MaterialParams BinaryTable::interpolate(double x) const {
  if (x < 0.0 || x > 1.0) throw std::domain_error("interpolate: x outside [0,1]");
  auto mix = [x](double g, double a) { return x * a + (1.0 - x) * g; };
  MaterialParams m;
  m.x = x;
  m.effective_mass = mix(gan.effective_mass, aln.effective_mass);
  m.dielectric = mix(gan.dielectric, aln.dielectric);
  m.eg0 = x * aln.eg0 + (1.0 - x) * gan.eg0 + bowing_alpha * x * (1.0 - x);
  m.varshni_a = mix(gan.varshni_a, aln.varshni_a);
  m.varshni_b = mix(gan.varshni_b, aln.varshni_b);
  m.p_sp = mix(gan.p_sp, aln.p_sp);
  m.e31 = mix(gan.e31, aln.e31);
  m.e33 = mix(gan.e33, aln.e33);
  m.c13 = mix(gan.c13, aln.c13);
  m.c33 = mix(gan.c33, aln.c33);
  m.a_lattice = mix(gan.a_lattice, aln.a_lattice);
  return m;
}

BinaryTable default_materials() {
  // Bandgaps, Varshni parameters and bowing are the printed values; masses,
  // dielectric constants, polarization, piezoelectric and elastic constants
  // are reconstructed from the standard III-nitride compilations and can be
  // overridden via a materials file (see data/materials.dat).
  BinaryTable t;
  t.gan = {0.0, 0.20, 9.7, 3.510, 0.909e-3, 830.0,
           -0.029, -0.35, 0.73, 106.0, 398.0, 0.3189};
  t.aln = {1.0, 0.32, 8.5, 6.250, 1.799e-3, 1462.0,
           -0.081, -0.50, 1.46, 108.0, 373.0, 0.3112};
  t.bowing_alpha = 0.7;
  return t;
}

namespace {

std::map<std::string, double*> field_map(BinaryTable& t) {
  auto add = [](std::map<std::string, double*>& m, const std::string& pre,
                MaterialParams& p) {
    m[pre + ".effective_mass"] = &p.effective_mass;
    m[pre + ".dielectric"] = &p.dielectric;
    m[pre + ".eg0"] = &p.eg0;
    m[pre + ".varshni_a"] = &p.varshni_a;
    m[pre + ".varshni_b"] = &p.varshni_b;
    m[pre + ".p_sp"] = &p.p_sp;
    m[pre + ".e31"] = &p.e31;
    m[pre + ".e33"] = &p.e33;
    m[pre + ".c13"] = &p.c13;
    m[pre + ".c33"] = &p.c33;
    m[pre + ".a_lattice"] = &p.a_lattice;
  };
  std::map<std::string, double*> m;
  add(m, "gan", t.gan);
  add(m, "aln", t.aln);
  m["bowing_alpha"] = &t.bowing_alpha;
  return m;
}

}  // namespace

BinaryTable load_materials(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open materials file: " + path);
  BinaryTable t = default_materials();
  auto fields = field_map(t);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key, eq;
    double value;
    if (!(ls >> key)) continue;
    if (!(ls >> eq >> value) || eq != "=") {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
    }
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown materials key '" + key + "'");
    }
    *it->second = value;
  }
  return t;
}

}  // namespace qcd
