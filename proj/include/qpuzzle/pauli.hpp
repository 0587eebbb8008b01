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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qpuzzle/rng.hpp"

namespace qpuzzle {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * An n-site Pauli word with a unit phase.
 *
 * Basis-index convention used throughout: qubit 1 is the most significant
 * bit of the amplitude index, so qubit q maps to bit (n - q).
 */
struct PauliString {
  std::vector<Pauli> letters;
  std::complex<double> phase{1.0, 0.0};

  PauliString() = default;
  explicit PauliString(std::vector<Pauli> l, std::complex<double> ph = {1.0, 0.0})
      : letters(std::move(l)), phase(ph) {}
  static PauliString parse(std::string_view word, std::complex<double> ph = {1.0, 0.0});

  int width() const { return static_cast<int>(letters.size()); }
  /// True when the word contains at least one X or Y letter.
  bool off_diagonal() const;
  /// True when every letter is in {I, X, Y}.
  bool xy_only() const;
  std::string to_string() const;

  bool commutes_with(const PauliString& other) const;
  bool operator==(const PauliString& other) const = default;

  /// Bit masks of the word action: |b> -> phase * i^{n_Y} * (-1)^{popcount(b & z)} |b ^ x>.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;
  /// phase * i^{n_Y}; the full amplitude prefactor apart from the Z-parity sign.
  std::complex<double> amplitude_prefactor() const;
};

/**
 * Equal-weight Pauli-sum Hermitian H = (1/sqrt(k)) * sum_j P_j with every
 * P_j an off-diagonal word over {I, X, Y}. Masks are precomputed so the
 * matrix-free action costs one pass per term.
 */
class RandomHermitian {
 public:
  RandomHermitian() = default;
  explicit RandomHermitian(std::vector<PauliString> strings);

  int width() const { return n_; }
  int term_count() const { return static_cast<int>(strings_.size()); }
  double normalization() const { return norm_; }
  const std::vector<PauliString>& strings() const { return strings_; }

  struct TermMasks {
    std::uint64_t x;
    std::uint64_t z;
    std::complex<double> coeff;  // normalization * i^{n_Y}
  };
  const std::vector<TermMasks>& masks() const { return masks_; }

 private:
  int n_ = 0;
  double norm_ = 1.0;
  std::vector<PauliString> strings_;
  std::vector<TermMasks> masks_;
};

/**
 * Draw k words uniformly over {I, X, Y}^n conditioned on being off-diagonal
 * (at least one non-identity letter). Duplicates are allowed unless dedup
 * is set; with dedup, k may not exceed the 3^n - 1 distinct options.
 */
std::vector<PauliString> sample_offdiagonal_strings(int n, int k, Rng rng, bool dedup = false);

RandomHermitian sample_random_hermitian(int n, int k, Rng rng);

}  // namespace qpuzzle
