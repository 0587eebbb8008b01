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

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "qpuzzle/pauli.hpp"

namespace qpuzzle {

using cplx = std::complex<double>;

/**
 * Dense n-qubit state, 2^n complex amplitudes.
 *
 * Qubit 1 is the most significant bit of the amplitude index: |q1 q2 ... qn>
 * sits at index sum_j q_j * 2^(n-j).
 */
class Statevector {
 public:
  Statevector() = default;
  explicit Statevector(int n) : n_(n), amp_(std::size_t{1} << n, cplx{0, 0}) {}

  /// |0...0> on n qubits.
  static Statevector zero_state(int n);
  static Statevector basis_state(int n, std::uint64_t index);

  int num_qubits() const { return n_; }
  std::size_t size() const { return amp_.size(); }
  cplx& operator[](std::size_t i) { return amp_[i]; }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }
  cplx* data() { return amp_.data(); }
  const cplx* data() const { return amp_.data(); }
  const std::vector<cplx>& amplitudes() const { return amp_; }

  double norm_sq() const;
  double norm() const;
  void normalize();
  cplx inner(const Statevector& other) const;  // <this|other>
  /// |<0...0|psi>|^2
  double zero_overlap_sq() const { return std::norm(amp_[0]); }

 private:
  int n_ = 0;
  std::vector<cplx> amp_;
};

// ---- gate kernels (in place, O(2^n), no dense matrix formed) ----

/// Generic single-qubit gate; m is row-major {m00, m01, m10, m11}.
void apply_single_qubit(Statevector& sv, int qubit, const std::array<cplx, 4>& m);

void apply_h(Statevector& sv, int qubit);
void apply_s(Statevector& sv, int qubit, bool dagger = false);
void apply_t(Statevector& sv, int qubit, bool dagger = false);
void apply_ry(Statevector& sv, int qubit, double theta);
void apply_rz(Statevector& sv, int qubit, double phi);
void apply_cz(Statevector& sv, int qubit_a, int qubit_b);
void apply_cnot(Statevector& sv, int control, int target);

/// Named gate dispatch used by circuit-level callers.
struct GateSpec {
  enum class Kind { T, Tdg, CZ, RY, RZ, H, S, CNOT } kind;
  int q1 = 0;       // 1-based target (control for CNOT)
  int q2 = 0;       // 1-based second qubit where applicable
  double angle = 0.0;
};
void apply_gate(const GateSpec& g, Statevector& sv);

/// P|psi> for an arbitrary Pauli word (amplitude permutation plus phases).
Statevector apply_pauli(const PauliString& p, const Statevector& sv);

/// (1/sqrt(k)) sum_j P_j |psi>; linear, not norm preserving.
Statevector apply_hermitian(const RandomHermitian& h, const Statevector& sv);
/// In-place accumulating form: out += scale * H * in. out must be distinct from in.
void accumulate_hermitian(const RandomHermitian& h, const Statevector& in, Statevector& out,
                          cplx scale);

/// <psi| P |psi> for a Hermitian Pauli word (real up to roundoff).
double pauli_expectation(const PauliString& p, const Statevector& sv);
/// <psi| Z...Z |psi>.
double parity_z_expectation(const Statevector& sv);

/// Mask-level Pauli expectation: P = i^{popcount(x&z)} X(x) Z(z).
double pauli_expectation_masks(std::uint64_t x_mask, std::uint64_t z_mask,
                               const Statevector& sv);

}  // namespace qpuzzle
