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

#include "qcdsim/config.hpp"
#include "qcdsim/scf.hpp"

using namespace qcd;
using doctest::Approx;

namespace {

RunConfig paper_config() {
  RunConfig cfg = parse_config(QCDSIM_CONFIG_DIR "/paper.cfg");
  resolve(cfg);
  return cfg;
}

}  // namespace

TEST_CASE("convergence delta") {
  Eigen::ArrayXd a(4), b(4);
  a << 1.0, 2.0, 0.5, 1e-15;
  b = a;
  CHECK(convergence_delta(a, b) == 0.0);
  b = 1.5 * a;
  CHECK(convergence_delta(a, b) == Approx(0.5).epsilon(1e-12));
  // differences only below the support threshold are masked out
  b = a;
  b[3] = 17.0 * a[3];
  CHECK(convergence_delta(a, b) == 0.0);
  // vanishing previous density -> 0 by convention
  Eigen::ArrayXd z = Eigen::ArrayXd::Zero(4);
  CHECK(convergence_delta(z, b) == 0.0);
}

TEST_CASE("field-only method solves in a single pass") {
  RunConfig cfg = paper_config();
  cfg.method = "field_only";
  LayerStack stack = build_stack(cfg);
  SCFResult r = run_scf(stack, build_fields(cfg, stack), build_charge(cfg),
                        build_scf(cfg));
  CHECK(r.converged);
  CHECK(r.iterations_used == 1);
  CHECK(r.delta_history.empty());
  CHECK(r.potential.v_h.abs().maxCoeff() == 0.0);
  CHECK(r.potential.v_hl.abs().maxCoeff() == 0.0);
  REQUIRE(r.states.size() >= 3);
  // the tuned configuration reproduces the field-only spectrum
  CHECK(1e3 * r.states[0].energy == Approx(-104.8).epsilon(0.01));
  CHECK(1e3 * r.states[2].energy == Approx(802.2).epsilon(0.01));
}

TEST_CASE("nothing to self-consist: undoped unpolarized stack") {
  RunConfig cfg = paper_config();
  cfg.nd_cm3 = 0.0;
  cfg.polarization_override.assign(7, -0.05);  // uniform: zero fields
  LayerStack stack = build_stack(cfg);
  SCFResult r = run_scf(stack, build_fields(cfg, stack), build_charge(cfg),
                        build_scf(cfg));
  CHECK(r.converged);
  CHECK(r.iterations_used <= 2);
  REQUIRE(!r.delta_history.empty());
  CHECK(r.delta_history.front() == 0.0);  // delta undefined -> 0 by convention
  CHECK(r.density.maxCoeff() < 1e-12);
}

TEST_CASE("full method converges and is stable at the fixed point") {
  RunConfig cfg = paper_config();
  cfg.mixing = 1.0;
  LayerStack stack = build_stack(cfg);
  FieldProfile fields = build_fields(cfg, stack);
  SCFConfig sconf = build_scf(cfg);
  SCFResult r1 = run_scf(stack, fields, build_charge(cfg), sconf);
  CHECK(r1.converged);
  CHECK(r1.delta_history.back() <= sconf.tolerance);
  CHECK(int(r1.delta_history.size()) <= 30);

  // determinism
  SCFResult r2 = run_scf(stack, fields, build_charge(cfg), sconf);
  REQUIRE(r1.states.size() == r2.states.size());
  for (size_t i = 0; i < r1.states.size(); ++i)
    CHECK(r1.states[i].energy == Approx(r2.states[i].energy).epsilon(1e-14));

  // pushing well past convergence barely moves the eigenvalues
  sconf.tolerance = 1e-10;
  sconf.max_iterations = r1.iterations_used + 10;
  SCFResult r3 = run_scf(stack, fields, build_charge(cfg), sconf);
  REQUIRE(r3.states.size() == r1.states.size());
  for (size_t i = 0; i < r1.states.size(); ++i)
    CHECK(std::abs(r3.states[i].energy - r1.states[i].energy) < 1e-7);
}

TEST_CASE("no_xc method omits the exchange-correlation component") {
  RunConfig cfg = paper_config();
  cfg.method = "no_xc";
  cfg.mixing = 1.0;
  LayerStack stack = build_stack(cfg);
  SCFResult r = run_scf(stack, build_fields(cfg, stack), build_charge(cfg),
                        build_scf(cfg));
  CHECK(r.converged);
  CHECK(r.potential.v_hl.abs().maxCoeff() == 0.0);
  CHECK(r.potential.v_h.abs().maxCoeff() > 1e-3);
}

TEST_CASE("sheet mode threads the printed sigma ramps into the Hartree term") {
  RunConfig cfg = paper_config();
  cfg.sheet_mode = "paper";
  cfg.max_iterations = 2;
  cfg.tolerance = 1e-30;  // force the iteration cap
  LayerStack stack = build_stack(cfg);
  SCFResult r = run_scf(stack, build_fields(cfg, stack), build_charge(cfg),
                        build_scf(cfg));
  CHECK(r.sheet_z.size() == stack.layers().size());
  // the ramps dominate V_H in this mode
  CHECK(r.potential.v_h.abs().maxCoeff() > 0.3);
}
