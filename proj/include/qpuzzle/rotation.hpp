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

#pragma once

#include <cstdint>
#include <vector>

#include "qpuzzle/bitstring.hpp"
#include "qpuzzle/statevector.hpp"

namespace qpuzzle {

/// Statevector memory cap for the rotation family (2^24 amplitudes = 256 MB).
inline constexpr int kRotationQubitCap = 24;

/**
 * Rotation-based puzzle family for larger widths: scrambling comes from
 * kick layers K = Rz(phi) Ry(theta) Rz(phi)^dagger with randomized angles
 * plus sparse CZ layers on odd/even neighbor pairs of the linear qubit
 * index, instead of Cayley-transformed random Hermitians. The hidden
 * string is all ones and the dressing V_i acts on the single target qubit.
 */
struct RotationInstance {
  int rows = 0, cols = 0;
  int depth = 0;  // D
  double sigma_rot1 = 0.0;
  double sigma_rot2 = 0.0;
  int l_v = 1;  // kick repetitions inside V_i
  bool cz_enabled = true;
  std::uint64_t seed = 0;
  std::vector<int> targets;  // distinct 1-based linear indices, |targets| = D
  Bitstring s_star;          // 1...1

  // Per-layer angles. W_i uses two full kicks (phi uniform, theta normal *
  // sigma_rot1); V_i uses one kick on the target qubit (sigma_rot2).
  std::vector<std::vector<double>> w_phi1, w_theta1, w_phi2, w_theta2;
  std::vector<double> v_phi, v_theta;

  Statevector target_state;

  int n() const { return rows * cols; }
};

RotationInstance build_rotation_instance(int rows, int cols, int depth, double sigma_rot1,
                                         double sigma_rot2, int l_v, bool cz_enabled,
                                         std::uint64_t seed);

/// Fidelity loss for the rotation family, gate-level simulation only.
double rotation_loss(const RotationInstance& inst, const Bitstring& s);

}  // namespace qpuzzle
