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
#include <optional>
#include <string>
#include <vector>

#include "qpuzzle/bitstring.hpp"
#include "qpuzzle/cayley.hpp"
#include "qpuzzle/pauli.hpp"
#include "qpuzzle/rng.hpp"
#include "qpuzzle/statevector.hpp"

namespace qpuzzle {

/**
 * A hidden-T-gate puzzle: D layers of partially-random unitaries W_i with
 * V_i-conjugated T gates placed on qubits q[i] according to the hidden
 * string s*. Everything is reconstructible from (n, D, beta_w, beta_v, k,
 * seed, s_star); the target state U(s*)|0...0> is prepared once at build
 * time and cached, since every loss call only applies the ansatz.
 */
struct PuzzleInstance {
  int n = 0;
  int depth = 0;  // D
  double beta_w = 0.0;
  double beta_v = 0.0;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<int> targets;  // q[i], 1-based qubit indices
  Bitstring s_star;
  std::vector<RandomHermitian> herm_w;
  std::vector<RandomHermitian> herm_v;
  Statevector target_state;  // U(s*)|0...0>
};

PuzzleInstance build_instance(int n, int depth, double beta_w, double beta_v, int k,
                              std::uint64_t seed,
                              const std::optional<Bitstring>& s_star = std::nullopt);

/// U(s*)|0...0>; recomputed from scratch (the cached copy lives in the instance).
Statevector prepare_target(const PuzzleInstance& inst);

/// Fidelity loss l(s) = 1 - |<0|Ubar(s) U(s*)|0>|^2, evaluated matrix-free.
double loss(const PuzzleInstance& inst, const Bitstring& s);

/// Global Z-parity variance loss (Appendix-style non-faithful objective).
double parity_loss(const PuzzleInstance& inst, const Bitstring& s);

/// Additive Gaussian shot-noise model for observed losses.
struct NoisyLossModel {
  double sigma = 0.0;
  Rng rng{0};

  NoisyLossModel(double s, Rng r) : sigma(s), rng(r) {
    if (s < 0) throw std::invalid_argument("NoisyLossModel: sigma must be nonnegative");
  }
  double observe(double exact_loss) { return exact_loss + sigma * rng.normal(); }
};

/// Exact loss plus one Gaussian draw from the model's stream (no clamping).
double noisy_loss(const PuzzleInstance& inst, const Bitstring& s, NoisyLossModel& model);

// ---- instance files (JSON) ----
std::string instance_to_json(const PuzzleInstance& inst);
PuzzleInstance instance_from_json(const std::string& text);
void save_instance(const PuzzleInstance& inst, const std::string& path);
PuzzleInstance load_instance(const std::string& path);

}  // namespace qpuzzle
