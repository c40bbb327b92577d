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

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qcdsim/config.hpp"
#include "qcdsim/observables.hpp"

namespace fs = std::filesystem;
using namespace qcd;

namespace {

struct Overrides {
  std::string method, materials, output_dir, sheet_mode;
  double nd_cm3 = -1.0, mixing = -1.0, tolerance = -1.0, d = -1.0;
  double temperature = -1.0;
  int max_iterations = -1, partitions = -1;
  std::string doped_layers;
};

void add_common(CLI::App* cmd, std::string* config_path, Overrides* ov) {
  cmd->add_option("config", *config_path, "run configuration file")->required();
  cmd->add_option("--method", ov->method, "full|no_xc|field_only");
  cmd->add_option("--materials", ov->materials, "materials file override");
  cmd->add_option("--output-dir", ov->output_dir, "output directory");
  cmd->add_option("--nd-cm3", ov->nd_cm3, "donor concentration, cm^-3");
  cmd->add_option("--doped-layers", ov->doped_layers, "1-based layer list, e.g. 1,7");
  cmd->add_option("--mixing", ov->mixing, "density mixing weight (0,1]");
  cmd->add_option("--tolerance", ov->tolerance, "SCF delta target");
  cmd->add_option("--max-iterations", ov->max_iterations, "SCF iteration cap");
  cmd->add_option("--partitions", ov->partitions, "linearization segments per layer");
  cmd->add_option("--d", ov->d, "paper-stack active well width, nm");
  cmd->add_option("--temperature", ov->temperature, "lattice temperature, K");
  cmd->add_option("--sheet-mode", ov->sheet_mode, "none|paper");
}

RunConfig load(const std::string& path, const Overrides& ov) {
  RunConfig cfg = parse_config(path);
  if (!ov.method.empty()) cfg.method = ov.method;
  if (!ov.materials.empty()) cfg.materials_path = ov.materials;
  if (!ov.output_dir.empty()) cfg.output_dir = ov.output_dir;
  if (!ov.sheet_mode.empty()) cfg.sheet_mode = ov.sheet_mode;
  if (ov.nd_cm3 >= 0.0) cfg.nd_cm3 = ov.nd_cm3;
  if (ov.mixing > 0.0) cfg.mixing = ov.mixing;
  if (ov.tolerance > 0.0) cfg.tolerance = ov.tolerance;
  if (ov.d >= 0.0) cfg.d = ov.d;
  if (ov.temperature > 0.0) cfg.temperature = ov.temperature;
  if (ov.max_iterations > 0) cfg.max_iterations = ov.max_iterations;
  if (ov.partitions > 0) cfg.partitions = ov.partitions;
  if (!ov.doped_layers.empty()) {
    cfg.doped_layers.clear();
    std::string cur;
    for (char c : ov.doped_layers + ",") {
      if (c == ',') {
        if (!cur.empty()) cfg.doped_layers.push_back(std::stoi(cur) - 1);
        cur.clear();
      } else {
        cur += c;
      }
    }
  }
  resolve(cfg);
  return cfg;
}

void write_profile_csv(const std::string& path, const PotentialComponents& comp) {
  std::ofstream out(path);
  out << "z_nm,delta_ec_eV,v_e_eV,v_h_eV,v_hl_eV,total_eV\n";
  Eigen::ArrayXd total = comp.total();
  char buf[256];
  for (long i = 0; i < comp.grid.z.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6f,%.9f,%.9f,%.9f,%.9f,%.9f\n",
                  comp.grid.z[i], comp.delta_ec[i], comp.v_e[i], comp.v_h[i],
                  comp.v_hl[i], total[i]);
    out << buf;
  }
}

void write_wavefunctions_csv(const std::string& path, const SCFResult& res) {
  std::ofstream out(path);
  out << "z_nm";
  for (size_t n = 0; n < res.states.size(); ++n) out << ",psi_" << n + 1;
  out << "\n";
  char buf[64];
  for (long i = 0; i < res.potential.grid.z.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6f", res.potential.grid.z[i]);
    out << buf;
    for (const auto& st : res.states) {
      std::snprintf(buf, sizeof buf, ",%.9e", st.psi(res.potential.grid.z[i]));
      out << buf;
    }
    out << "\n";
  }
}

void write_delta_csv(const std::string& path, const SCFResult& res) {
  std::ofstream out(path);
  out << "iteration,delta\n";
  char buf[64];
  for (size_t i = 0; i < res.delta_history.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.9e\n", i + 1, res.delta_history[i]);
    out << buf;
  }
}

void write_results(const std::string& path, const RunConfig& cfg,
                   const SCFResult& res, const TransitionTable& table) {
  std::ofstream out(path);
  char buf[128];
  out << "converged: " << (res.converged ? "yes" : "no") << "\n";
  out << "iterations: " << res.iterations_used << "\n";
  out << "bound_states: " << res.states.size() << "\n";
  out << "energies_mev:";
  for (double e : table.energies) {
    std::snprintf(buf, sizeof buf, " %.4f", 1e3 * e);
    out << buf;
  }
  out << "\n";
  if (table.energies.size() >= 3) {
    std::snprintf(buf, sizeof buf, "omega13_mev: %.4f\n",
                  1e3 * detection_energy(table));
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "fermi_level_mev: %.4f\n", 1e3 * res.fermi_level);
  out << buf;
  out << "occupancies:";
  for (double o : res.occupancies) {
    std::snprintf(buf, sizeof buf, " %.6e", o);
    out << buf;
  }
  out << "\n";
  for (int i = 0; i < table.f.rows(); ++i) {
    out << "f_" << i + 1 << ":";
    for (int j = 0; j < table.f.cols(); ++j) {
      std::snprintf(buf, sizeof buf, " %.6f", table.f(i, j));
      out << buf;
    }
    out << "\n";
  }
  DesignCriteria c = design_criteria(table);
  out << "cond_325: " << (c.cond_325 ? "true" : "false") << "\n";
  out << "cond_326: " << (c.cond_326 ? "true" : "false") << "\n";
  out << "delta_history:";
  for (double d : res.delta_history) {
    std::snprintf(buf, sizeof buf, " %.6e", d);
    out << buf;
  }
  out << "\n";
  out << "\n[resolved-config]\n" << dump_config(cfg);
}

int cmd_solve(const std::string& config_path, const Overrides& ov) {
  RunConfig cfg = load(config_path, ov);
  fs::create_directories(cfg.output_dir);
  LayerStack stack = build_stack(cfg);
  FieldProfile fields = build_fields(cfg, stack);
  SCFResult res = run_scf(stack, fields, build_charge(cfg), build_scf(cfg));
  TransitionTable table = transition_table(res.states, stack);
  write_results(cfg.output_dir + "/results.txt", cfg, res, table);
  write_profile_csv(cfg.output_dir + "/profile.csv", res.potential);
  write_wavefunctions_csv(cfg.output_dir + "/wavefunctions.csv", res);
  write_delta_csv(cfg.output_dir + "/delta.csv", res);
  std::cout << "bound states: " << res.states.size();
  if (table.energies.size() >= 3)
    std::cout << ", omega13 = " << 1e3 * detection_energy(table) << " meV";
  std::cout << (res.converged ? "" : "  [NOT CONVERGED]") << "\n";
  return res.converged ? 0 : 2;
}

int cmd_profile(const std::string& config_path, const Overrides& ov) {
  RunConfig cfg = load(config_path, ov);
  fs::create_directories(cfg.output_dir);
  LayerStack stack = build_stack(cfg);
  FieldProfile fields = build_fields(cfg, stack);
  SamplingGrid grid = make_grid(stack, cfg.partitions);
  PotentialComponents comp;
  comp.grid = grid;
  comp.method_tag = "field_only";
  comp.delta_ec = offset_component(stack, cfg.temperature, grid);
  comp.v_e = field_component(fields, stack, grid);
  comp.v_h = Eigen::ArrayXd::Zero(grid.z.size());
  comp.v_hl = Eigen::ArrayXd::Zero(grid.z.size());
  write_profile_csv(cfg.output_dir + "/profile.csv", comp);
  std::cout << "wrote " << cfg.output_dir << "/profile.csv\n";
  return 0;
}

int cmd_scan(const std::string& config_path, const Overrides& ov, double d_min,
             double d_max, double d_step, int jobs) {
  RunConfig cfg = load(config_path, ov);
  if (cfg.stack_kind != "paper")
    throw std::runtime_error("scan requires the paper stack");
  if (d_min > d_max) throw std::runtime_error("scan: empty d range");
  fs::create_directories(cfg.output_dir);

  auto rows = geometry_scan(
      d_min, d_max, d_step,
      [&](double d) { return build_stack_at(cfg, d); },
      [&](const LayerStack& s) { return build_fields(cfg, s); },
      build_charge(cfg), build_scf(cfg), jobs);

  std::ofstream out(cfg.output_dir + "/scan.csv");
  out << "d_nm,E1_mev,E2_mev,E3_mev,E4_mev,E5_mev,f12,f13,f14,f15,"
         "cond_325,cond_326,bound_count,converged,error\n";
  char buf[512];
  for (const ScanRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.4f", r.d);
    out << buf;
    for (int i = 0; i < 5; ++i) {
      if (i < int(r.energies.size()))
        std::snprintf(buf, sizeof buf, ",%.4f", 1e3 * r.energies[i]);
      else
        std::snprintf(buf, sizeof buf, ",");
      out << buf;
    }
    std::snprintf(buf, sizeof buf, ",%.6f,%.6f,%.6f,%.6f,%d,%d,%d,%d,%s\n",
                  r.f12, r.f13, r.f14, r.f15, int(r.cond_325), int(r.cond_326),
                  r.bound_count, int(r.converged), r.error.c_str());
    out << buf;
  }
  std::cout << "wrote " << cfg.output_dir << "/scan.csv (" << rows.size()
            << " rows)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-consistent electronic structure of nitride "
               "resonance-tunneling cascades"};
  app.require_subcommand(1);

  std::string cfg_solve, cfg_scan, cfg_profile;
  Overrides ov_solve, ov_scan, ov_profile;
  double d_min = 0.6, d_max = 1.8, d_step = 0.01;
  int jobs = 1;

  CLI::App* solve = app.add_subcommand("solve", "solve one configuration");
  add_common(solve, &cfg_solve, &ov_solve);
  CLI::App* scan = app.add_subcommand("scan", "sweep the active-well width");
  add_common(scan, &cfg_scan, &ov_scan);
  scan->add_option("--d-min", d_min, "nm");
  scan->add_option("--d-max", d_max, "nm");
  scan->add_option("--d-step", d_step, "nm");
  scan->add_option("--jobs", jobs, "parallel scan rows");
  CLI::App* profile =
      app.add_subcommand("profile", "emit potential components only");
  add_common(profile, &cfg_profile, &ov_profile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(cfg_solve, ov_solve);
    if (scan->parsed()) return cmd_scan(cfg_scan, ov_scan, d_min, d_max, d_step, jobs);
    if (profile->parsed()) return cmd_profile(cfg_profile, ov_profile);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
