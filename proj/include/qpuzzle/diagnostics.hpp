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
#include <utility>
#include <vector>

#include "qpuzzle/rng.hpp"
#include "qpuzzle/statevector.hpp"

namespace qpuzzle {

/// Renyi-2 entropy -log2 tr(rho_A^2) of the contiguous window
/// [window_start, window_start + length - 1].
double renyi2(const Statevector& sv, int length, int window_start = 1);

/// Renyi-2 entropy averaged over all contiguous windows of the given length.
double renyi2_window_mean(const Statevector& sv, int length);

/// Mean over qubit pairs of tr(rho_ij^2) - 1/4; all pairs for n <= 10,
/// otherwise pair_samples random pairs drawn from rng.
double two_body_purity_excess(const Statevector& sv, Rng rng = Rng(0), int pair_samples = 50);

struct MagicEstimate {
  double value = 0.0;
  enum class Mode { exhaustive, sampled } mode = Mode::exhaustive;
  long long sample_count = 0;
};

/// Stabilizer norm M = 2^-n sum_P |<P>|. Exhaustive mode sums all 4^n
/// words (n <= 8); sampled mode rescales the mean |<P>| over uniform draws.
MagicEstimate stabilizer_norm(const Statevector& sv,
                              MagicEstimate::Mode mode = MagicEstimate::Mode::exhaustive,
                              long long samples = 0, Rng rng = Rng(0));

struct CliffordCircuit {
  int n = 0;
  int depth = 0;
  std::vector<GateSpec> gates;
};

/// Random layered Clifford: per layer an H/S/identity choice on every qubit
/// followed by CNOTs on a random disjoint pairing.
CliffordCircuit sample_clifford(int n, int depth, Rng rng);

Statevector clifford_state(const CliffordCircuit& c);

/// count random circuits of the given depth, identity circuit prepended.
std::vector<CliffordCircuit> clifford_sample_set(int n, int count, int depth, Rng rng);

/// (F_stab, N) with F_stab = max_j |<phi_j|psi>|^2 and N = 1 - F_stab.
std::pair<double, double> stabilizer_fidelity(const Statevector& sv,
                                              const std::vector<CliffordCircuit>& samples);

/// Closed-form reference for the single-block zero-projector loss.
double single_block_loss_fit(double beta_eff);

}  // namespace qpuzzle
