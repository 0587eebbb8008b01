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

#include "qpuzzle/statevector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpuzzle {

namespace {

inline void check_qubit(const Statevector& sv, int q, const char* who) {
  if (q < 1 || q > sv.num_qubits())
    throw std::out_of_range(std::string(who) + ": qubit index out of range");
}

// Bit position of 1-based qubit q (qubit 1 = MSB).
inline int bit_of(const Statevector& sv, int q) { return sv.num_qubits() - q; }

}  // namespace

Statevector Statevector::zero_state(int n) { return basis_state(n, 0); }

Statevector Statevector::basis_state(int n, std::uint64_t index) {
  if (n < 1 || n > 30) throw std::invalid_argument("Statevector: n out of range");
  Statevector sv(n);
  if (index >= sv.size()) throw std::out_of_range("Statevector::basis_state: index");
  sv.amp_[index] = cplx{1.0, 0.0};
  return sv;
}

double Statevector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return s;
}

double Statevector::norm() const { return std::sqrt(norm_sq()); }

void Statevector::normalize() {
  double nrm = norm();
  if (nrm == 0.0) throw std::runtime_error("Statevector::normalize: zero vector");
  for (auto& a : amp_) a /= nrm;
}

cplx Statevector::inner(const Statevector& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Statevector::inner: width mismatch");
  cplx s{0, 0};
  for (std::size_t i = 0; i < amp_.size(); ++i) s += std::conj(amp_[i]) * other.amp_[i];
  return s;
}

void apply_single_qubit(Statevector& sv, int qubit, const std::array<cplx, 4>& m) {
  check_qubit(sv, qubit, "apply_single_qubit");
  const int b = bit_of(sv, qubit);
  const std::size_t stride = std::size_t{1} << b;
  const std::size_t dim = sv.size();
  cplx* a = sv.data();
  const cplx m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx lo = a[i];
      const cplx hi = a[i + stride];
      a[i] = m00 * lo + m01 * hi;
      a[i + stride] = m10 * lo + m11 * hi;
    }
  }
}

void apply_h(Statevector& sv, int qubit) {
  const double r = std::numbers::sqrt2 / 2.0;
  apply_single_qubit(sv, qubit, {cplx{r, 0}, cplx{r, 0}, cplx{r, 0}, cplx{-r, 0}});
}

void apply_s(Statevector& sv, int qubit, bool dagger) {
  check_qubit(sv, qubit, "apply_s");
  const int b = bit_of(sv, qubit);
  const cplx ph = dagger ? cplx{0, -1} : cplx{0, 1};
  const std::size_t mask = std::size_t{1} << b;
  cplx* a = sv.data();
  for (std::size_t i = 0; i < sv.size(); ++i)
    if (i & mask) a[i] *= ph;
}

void apply_t(Statevector& sv, int qubit, bool dagger) {
  check_qubit(sv, qubit, "apply_t");
  const int b = bit_of(sv, qubit);
  const double c = std::numbers::sqrt2 / 2.0;
  const cplx ph = dagger ? cplx{c, -c} : cplx{c, c};  // e^{-+ i pi/4}
  const std::size_t mask = std::size_t{1} << b;
  cplx* a = sv.data();
  for (std::size_t i = 0; i < sv.size(); ++i)
    if (i & mask) a[i] *= ph;
}

void apply_ry(Statevector& sv, int qubit, double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  apply_single_qubit(sv, qubit, {cplx{c, 0}, cplx{-s, 0}, cplx{s, 0}, cplx{c, 0}});
}

void apply_rz(Statevector& sv, int qubit, double phi) {
  check_qubit(sv, qubit, "apply_rz");
  const int b = bit_of(sv, qubit);
  const cplx lo{std::cos(phi / 2), -std::sin(phi / 2)};
  const cplx hi{std::cos(phi / 2), std::sin(phi / 2)};
  const std::size_t mask = std::size_t{1} << b;
  cplx* a = sv.data();
  for (std::size_t i = 0; i < sv.size(); ++i) a[i] *= (i & mask) ? hi : lo;
}

void apply_cz(Statevector& sv, int qubit_a, int qubit_b) {
  check_qubit(sv, qubit_a, "apply_cz");
  check_qubit(sv, qubit_b, "apply_cz");
  if (qubit_a == qubit_b) throw std::invalid_argument("apply_cz: identical qubits");
  const std::size_t mask =
      (std::size_t{1} << bit_of(sv, qubit_a)) | (std::size_t{1} << bit_of(sv, qubit_b));
  cplx* a = sv.data();
  for (std::size_t i = 0; i < sv.size(); ++i)
    if ((i & mask) == mask) a[i] = -a[i];
}

void apply_cnot(Statevector& sv, int control, int target) {
  check_qubit(sv, control, "apply_cnot");
  check_qubit(sv, target, "apply_cnot");
  if (control == target) throw std::invalid_argument("apply_cnot: identical qubits");
  const std::size_t cmask = std::size_t{1} << bit_of(sv, control);
  const std::size_t tmask = std::size_t{1} << bit_of(sv, target);
  cplx* a = sv.data();
  for (std::size_t i = 0; i < sv.size(); ++i)
    if ((i & cmask) && !(i & tmask)) std::swap(a[i], a[i | tmask]);
}

void apply_gate(const GateSpec& g, Statevector& sv) {
  using K = GateSpec::Kind;
  switch (g.kind) {
    case K::T: apply_t(sv, g.q1, false); break;
    case K::Tdg: apply_t(sv, g.q1, true); break;
    case K::CZ: apply_cz(sv, g.q1, g.q2); break;
    case K::RY: apply_ry(sv, g.q1, g.angle); break;
    case K::RZ: apply_rz(sv, g.q1, g.angle); break;
    case K::H: apply_h(sv, g.q1); break;
    case K::S: apply_s(sv, g.q1, false); break;
    case K::CNOT: apply_cnot(sv, g.q1, g.q2); break;
  }
}

Statevector apply_pauli(const PauliString& p, const Statevector& sv) {
  if (p.width() != sv.num_qubits())
    throw std::invalid_argument("apply_pauli: width mismatch");
  const std::uint64_t mx = p.x_mask();
  const std::uint64_t mz = p.z_mask();
  const cplx pref = p.amplitude_prefactor();
  Statevector out(sv.num_qubits());
  const cplx* in = sv.data();
  cplx* o = out.data();
  for (std::size_t b = 0; b < sv.size(); ++b) {
    const cplx v = (std::popcount(b & mz) & 1) ? -pref * in[b] : pref * in[b];
    o[b ^ mx] = v;
  }
  return out;
}

void accumulate_hermitian(const RandomHermitian& h, const Statevector& in, Statevector& out,
                          cplx scale) {
  if (h.width() != in.num_qubits())
    throw std::invalid_argument("accumulate_hermitian: width mismatch");
  const std::size_t dim = in.size();
  const cplx* src = in.data();
  cplx* dst = out.data();
  for (const auto& t : h.masks()) {
    const cplx c = scale * t.coeff;
    const std::uint64_t mx = t.x;
    const std::uint64_t mz = t.z;
    for (std::size_t b = 0; b < dim; ++b) {
      const cplx v = (std::popcount(b & mz) & 1) ? -c * src[b] : c * src[b];
      dst[b ^ mx] += v;
    }
  }
}

Statevector apply_hermitian(const RandomHermitian& h, const Statevector& sv) {
  Statevector out(sv.num_qubits());
  accumulate_hermitian(h, sv, out, cplx{1.0, 0.0});
  return out;
}

double pauli_expectation_masks(std::uint64_t mx, std::uint64_t mz, const Statevector& sv) {
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx pref = ipow[std::popcount(mx & mz) % 4];
  const cplx* a = sv.data();
  cplx s{0, 0};
  for (std::size_t b = 0; b < sv.size(); ++b) {
    const cplx v = (std::popcount(b & mz) & 1) ? -a[b] : a[b];
    s += std::conj(a[b ^ mx]) * v;
  }
  return (pref * s).real();
}

double pauli_expectation(const PauliString& p, const Statevector& sv) {
  if (p.width() != sv.num_qubits())
    throw std::invalid_argument("pauli_expectation: width mismatch");
  if (p.phase.imag() != 0.0)
    throw std::invalid_argument("pauli_expectation: non-Hermitian phase");
  return p.phase.real() * pauli_expectation_masks(p.x_mask(), p.z_mask(), sv);
}

double parity_z_expectation(const Statevector& sv) {
  const cplx* a = sv.data();
  double s = 0.0;
  for (std::size_t b = 0; b < sv.size(); ++b) {
    const double w = std::norm(a[b]);
    s += (std::popcount(b) & 1) ? -w : w;
  }
  return s;
}

}  // namespace qpuzzle
