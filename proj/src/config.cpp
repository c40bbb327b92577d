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

#include "qcdsim/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcd {

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

double to_double(const std::string& v, const std::string& key, int lineno) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return d;
  } catch (...) {
    throw std::runtime_error("config line " + std::to_string(lineno) +
                             ": field '" + key + "' is not a number: " + v);
  }
}

int to_int(const std::string& v, const std::string& key, int lineno) {
  double d = to_double(v, key, lineno);
  int i = int(d);
  if (double(i) != d)
    throw std::runtime_error("config line " + std::to_string(lineno) +
                             ": field '" + key + "' is not an integer: " + v);
  return i;
}

}  // namespace

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::istringstream probe(line);
      std::string word;
      if (probe >> word)
        throw std::runtime_error("config line " + std::to_string(lineno) +
                                 ": expected 'key = value'");
      continue;
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    if (key.empty())
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": missing key");

    if (key == "stack") cfg.stack_kind = value;
    else if (key == "d_nm") cfg.d = to_double(value, key, lineno);
    else if (key == "layer") {
      std::istringstream ls(value);
      Layer l;
      if (!(ls >> l.x >> l.thickness))
        throw std::runtime_error("config line " + std::to_string(lineno) +
                                 ": layer needs '<x> <thickness_nm>'");
      std::string role;
      if (ls >> role) l.role = role;
      cfg.layers.push_back(l);
    }
    else if (key == "cladding_x") cfg.cladding_x = to_double(value, key, lineno);
    else if (key == "temperature") cfg.temperature = to_double(value, key, lineno);
    else if (key == "method") cfg.method = value;
    else if (key == "partitions") cfg.partitions = to_int(value, key, lineno);
    else if (key == "tolerance") cfg.tolerance = to_double(value, key, lineno);
    else if (key == "max_iterations") cfg.max_iterations = to_int(value, key, lineno);
    else if (key == "mixing") cfg.mixing = to_double(value, key, lineno);
    else if (key == "scan_step_mev") cfg.scan_step_mev = to_double(value, key, lineno);
    else if (key == "nd_cm3") cfg.nd_cm3 = to_double(value, key, lineno);
    else if (key == "doped_layers") {
      cfg.doped_layers.clear();
      for (const std::string& v : split_list(value))
        cfg.doped_layers.push_back(to_int(v, key, lineno) - 1);
    }
    else if (key == "donor_binding_ev") cfg.donor_binding = to_double(value, key, lineno);
    else if (key == "donor_reference") cfg.donor_reference = value;
    else if (key == "donor_level_ev") cfg.donor_level = to_double(value, key, lineno);
    else if (key == "substrate") cfg.substrate = value;
    else if (key == "alloy_polarization_rule") cfg.alloy_rule = value;
    else if (key == "sheet_charges_in_hartree") cfg.sheet_mode = value;
    else if (key == "polarization_override") {
      cfg.polarization_override.clear();
      for (const std::string& v : split_list(value))
        cfg.polarization_override.push_back(to_double(v, key, lineno));
    }
    else if (key == "materials") cfg.materials_path = value;
    else if (key == "output_dir") cfg.output_dir = value;
    else
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": unknown field '" + key + "'");
  }
  return cfg;
}

void resolve(RunConfig& cfg) {
  const char* env = std::getenv("QCDSIM_MATERIALS");
  std::string path = cfg.materials_path;
  if (env && *env) path = env;
  cfg.table = path.empty() ? default_materials() : load_materials(path);
  cfg.materials_path = path;

  if (cfg.method != "full" && cfg.method != "no_xc" && cfg.method != "field_only")
    throw std::runtime_error("config field 'method' must be full|no_xc|field_only");
  if (cfg.stack_kind != "paper" && cfg.stack_kind != "custom")
    throw std::runtime_error("config field 'stack' must be paper|custom");
  if (cfg.stack_kind == "custom" && cfg.layers.empty())
    throw std::runtime_error("config: custom stack requires layer lines");
  if (!(cfg.mixing > 0.0 && cfg.mixing <= 1.0))
    throw std::runtime_error("config field 'mixing' must be in (0,1]");
  if (!(cfg.tolerance > 0.0))
    throw std::runtime_error("config field 'tolerance' must be positive");
  if (cfg.partitions < 1)
    throw std::runtime_error("config field 'partitions' must be >= 1");
  if (cfg.donor_reference != "local" && cfg.donor_reference != "fixed")
    throw std::runtime_error("config field 'donor_reference' must be local|fixed");
  if (cfg.sheet_mode != "none" && cfg.sheet_mode != "paper")
    throw std::runtime_error(
        "config field 'sheet_charges_in_hartree' must be none|paper");
  if (cfg.alloy_rule != "vegard" && cfg.alloy_rule != "paper_literal")
    throw std::runtime_error(
        "config field 'alloy_polarization_rule' must be vegard|paper_literal");
  if (cfg.stack_kind == "paper" && (cfg.d < 0.0 || cfg.d > paper_well_budget))
    throw std::runtime_error("config field 'd_nm' outside [0, 2.60]");
}

LayerStack build_stack(const RunConfig& cfg) { return build_stack_at(cfg, cfg.d); }

LayerStack build_stack_at(const RunConfig& cfg, double d) {
  if (cfg.stack_kind == "paper")
    return paper_stack(d, cfg.temperature, cfg.table);
  return LayerStack(cfg.layers, cfg.cladding_x, cfg.table);
}

FieldProfile build_fields(const RunConfig& cfg, const LayerStack& stack) {
  double a_sub;
  if (cfg.substrate == "aln") a_sub = cfg.table.aln.a_lattice;
  else if (cfg.substrate == "gan") a_sub = cfg.table.gan.a_lattice;
  else a_sub = std::stod(cfg.substrate);

  AlloyPolarizationRule rule = (cfg.alloy_rule == "vegard")
                                   ? AlloyPolarizationRule::vegard
                                   : AlloyPolarizationRule::paper_literal;
  std::vector<double> pol;
  const auto& layers = stack.layers();
  if (!cfg.polarization_override.empty()) {
    if (cfg.polarization_override.size() != layers.size())
      throw std::runtime_error(
          "polarization_override must list one value per layer (" +
          std::to_string(layers.size()) + " layers)");
    pol = cfg.polarization_override;
  } else {
    for (const Layer& l : layers)
      pol.push_back(layer_polarization(l, a_sub, cfg.table, rule));
  }
  Layer clad{cfg.cladding_x, 1.0, "cladding"};
  double pol_clad = layer_polarization(clad, a_sub, cfg.table, rule);
  return internal_fields(stack, pol, pol_clad);
}

ChargeModel build_charge(const RunConfig& cfg) {
  ChargeModel m;
  m.n_d = cfg.nd_cm3 / 1e21;  // cm^-3 -> nm^-3
  m.doped_layers = cfg.doped_layers;
  m.degeneracy = 2.0;
  m.reference = (cfg.donor_reference == "local") ? DonorReference::local_band_edge
                                                 : DonorReference::fixed;
  m.donor_binding = cfg.donor_binding;
  m.fixed_level = cfg.donor_level;
  m.temperature = cfg.temperature;
  return m;
}

SCFConfig build_scf(const RunConfig& cfg) {
  SCFConfig s;
  s.tolerance = cfg.tolerance;
  s.max_iterations = cfg.max_iterations;
  s.mixing = cfg.mixing;
  s.method = cfg.method;
  s.partitions = cfg.partitions;
  s.sheets_in_hartree = (cfg.sheet_mode == "paper");
  s.scan_step = cfg.scan_step_mev * 1e-3;
  return s;
}

std::string dump_config(const RunConfig& cfg) {
  std::ostringstream os;
  os.setf(std::ios::fmtflags(0), std::ios::floatfield);
  os.precision(12);
  os << "stack = " << cfg.stack_kind << "\n";
  os << "d_nm = " << cfg.d << "\n";
  for (const Layer& l : cfg.layers)
    os << "layer = " << l.x << " " << l.thickness
       << (l.role.empty() ? "" : " " + l.role) << "\n";
  os << "cladding_x = " << cfg.cladding_x << "\n";
  os << "temperature = " << cfg.temperature << "\n";
  os << "method = " << cfg.method << "\n";
  os << "partitions = " << cfg.partitions << "\n";
  os << "tolerance = " << cfg.tolerance << "\n";
  os << "max_iterations = " << cfg.max_iterations << "\n";
  os << "mixing = " << cfg.mixing << "\n";
  os << "scan_step_mev = " << cfg.scan_step_mev << "\n";
  os << "nd_cm3 = " << cfg.nd_cm3 << "\n";
  os << "doped_layers = ";
  for (size_t i = 0; i < cfg.doped_layers.size(); ++i)
    os << (i ? "," : "") << cfg.doped_layers[i] + 1;
  os << "\n";
  os << "donor_binding_ev = " << cfg.donor_binding << "\n";
  os << "donor_reference = " << cfg.donor_reference << "\n";
  os << "donor_level_ev = " << cfg.donor_level << "\n";
  os << "substrate = " << cfg.substrate << "\n";
  os << "alloy_polarization_rule = " << cfg.alloy_rule << "\n";
  os << "sheet_charges_in_hartree = " << cfg.sheet_mode << "\n";
  if (!cfg.polarization_override.empty()) {
    os << "polarization_override = ";
    for (size_t i = 0; i < cfg.polarization_override.size(); ++i)
      os << (i ? "," : "") << cfg.polarization_override[i];
    os << "\n";
  }
  os << "materials = " << (cfg.materials_path.empty() ? "<builtin>" : cfg.materials_path)
     << "\n";
  os << "output_dir = " << cfg.output_dir << "\n";
  return os.str();
}

}  // namespace qcd
