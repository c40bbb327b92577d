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

#include <optional>
#include <string>
#include <vector>

#include "qcdsim/polarization.hpp"
#include "qcdsim/scf.hpp"
#include "qcdsim/structure.hpp"

namespace qcd {

/// Run configuration parsed from a key = value file; command-line flags
/// override individual fields after parsing.
struct RunConfig {
  std::string stack_kind = "paper";  // paper | custom
  double d = 1.56;                   // nm, paper-stack active-well width
  std::vector<Layer> layers;         // custom stack
  double cladding_x = 1.0;
  double temperature = 300.0;        // K

  std::string method = "full";
  int partitions = 16;
  double tolerance = 1e-6;
  int max_iterations = 60;
  double mixing = 0.5;
  double scan_step_mev = 1.0;

  double nd_cm3 = 0.0;
  std::vector<int> doped_layers;     // 1-based in the file, stored 0-based
  double donor_binding = 0.025;      // eV
  std::string donor_reference = "local";  // local | fixed
  double donor_level = 0.0;          // eV, fixed mode

  std::string substrate = "aln";     // aln | gan | numeric lattice (nm)
  std::string alloy_rule = "vegard"; // vegard | paper_literal
  std::string sheet_mode = "none";   // none | paper
  std::vector<double> polarization_override;  // C/m^2 per layer

  std::string materials_path;        // empty = builtin table
  std::string output_dir = ".";

  // resolved at build time
  BinaryTable table;
};

RunConfig parse_config(const std::string& path);

/// Applies the materials file (config value, QCDSIM_MATERIALS env var, or
/// builtin defaults) and validates fields; throws std::runtime_error with
/// the offending field name.
void resolve(RunConfig& cfg);

LayerStack build_stack(const RunConfig& cfg);
LayerStack build_stack_at(const RunConfig& cfg, double d);
FieldProfile build_fields(const RunConfig& cfg, const LayerStack& stack);
ChargeModel build_charge(const RunConfig& cfg);
SCFConfig build_scf(const RunConfig& cfg);

/// Key = value dump of every resolved field, for provenance in result files.
std::string dump_config(const RunConfig& cfg);

}  // namespace qcd
