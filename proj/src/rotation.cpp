// Copyright 2026 The qpuzzle developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpuzzle/rotation.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qpuzzle/cayley.hpp"
#include "qpuzzle/evaluator.hpp"

namespace qpuzzle {

RotationInstance build_rotation_instance(int rows, int cols, int depth, double sigma_rot1,
                                         double sigma_rot2, int l_v, bool cz_enabled,
                                         std::uint64_t seed) {
  const int n = rows * cols;
  if (rows < 1 || cols < 1) throw std::invalid_argument("build_rotation_instance: bad grid");
  if (n > kRotationQubitCap)
    throw ResourceCapError("build_rotation_instance: " + std::to_string(n) +
                           " qubits exceed the statevector cap of " +
                           std::to_string(kRotationQubitCap));
  if (depth < 1 || depth > n)
    throw std::invalid_argument("build_rotation_instance: need 1 <= D <= n");
  if (l_v < 1) throw std::invalid_argument("build_rotation_instance: L_V must be >= 1");

  RotationInstance inst;
  inst.rows = rows;
  inst.cols = cols;
  inst.depth = depth;
  inst.sigma_rot1 = sigma_rot1;
  inst.sigma_rot2 = sigma_rot2;
  inst.l_v = l_v;
  inst.cz_enabled = cz_enabled;
  inst.seed = seed;
  inst.s_star = Bitstring::all_ones(depth);

  Rng root(seed);
  {
    // Uniform D-subset of the lattice sites.
    Rng trng = root.derive("targets");
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    for (int i = n - 1; i > 0; --i)
      std::swap(all[i], all[trng.below(static_cast<std::uint64_t>(i) + 1)]);
    inst.targets.assign(all.begin(), all.begin() + depth);
  }

  Rng arng = root.derive("angles");
  const double two_pi = 2.0 * std::numbers::pi;
  inst.w_phi1.resize(depth);
  inst.w_theta1.resize(depth);
  inst.w_phi2.resize(depth);
  inst.w_theta2.resize(depth);
  inst.v_phi.resize(depth);
  inst.v_theta.resize(depth);
  for (int i = 0; i < depth; ++i) {
    inst.w_phi1[i].resize(n);
    inst.w_theta1[i].resize(n);
    inst.w_phi2[i].resize(n);
    inst.w_theta2[i].resize(n);
    for (int j = 0; j < n; ++j) {
      inst.w_phi1[i][j] = two_pi * arng.uniform();
      inst.w_theta1[i][j] = sigma_rot1 * arng.normal();
      inst.w_phi2[i][j] = two_pi * arng.uniform();
      inst.w_theta2[i][j] = sigma_rot1 * arng.normal();
    }
    inst.v_phi[i] = two_pi * arng.uniform();
    inst.v_theta[i] = sigma_rot2 * arng.normal();
  }

  RotationEngine engine(inst);
  Statevector sv = Statevector::zero_state(n);
  for (int i = 0; i < depth; ++i) {
    engine.apply_w(i, sv, false);
    if (inst.s_star[i]) engine.apply_puzzle(i, sv, false);
  }
  inst.target_state = std::move(sv);
  return inst;
}

double rotation_loss(const RotationInstance& inst, const Bitstring& s) {
  if (s.size() != inst.depth) throw std::invalid_argument("rotation_loss: |s| must equal D");
  RotationEngine engine(inst);
  Statevector sv = inst.target_state;
  apply_ansatz(engine, s, sv);
  return fidelity_loss_of_state(sv);
}

}  // namespace qpuzzle
