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
#include <string>
#include <vector>

#include "qpuzzle/rng.hpp"

namespace qpuzzle {

/**
 * Length-D candidate gate placement. Bit i (0-based) is s_{i+1} of the
 * problem; indexing uses s_1 as the most significant bit, matching the
 * qubit-order convention of the statevector.
 */
struct Bitstring {
  std::vector<std::uint8_t> bits;

  Bitstring() = default;
  explicit Bitstring(int d) : bits(d, 0) {}

  int size() const { return static_cast<int>(bits.size()); }
  std::uint8_t& operator[](int i) { return bits[i]; }
  std::uint8_t operator[](int i) const { return bits[i]; }
  bool operator==(const Bitstring& o) const = default;

  Bitstring flipped(int i) const;
  int hamming(const Bitstring& o) const;
  int weight() const;

  std::uint64_t to_index() const;
  static Bitstring from_index(int d, std::uint64_t index);
  std::string to_string() const;     // e.g. "1011010111"
  std::string to_hex() const;        // index in hex, s_1 as MSB
  static Bitstring parse(std::string_view s);

  static Bitstring random(int d, Rng& rng);
  static Bitstring all_ones(int d);
};

}  // namespace qpuzzle
