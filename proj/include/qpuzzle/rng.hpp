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
#include <string_view>

namespace qpuzzle {

/**
 * Counter-based pseudo-random stream.
 *
 * Each output is a pure function of (key, counter), so a stream can be
 * copied, replayed and split without hidden state. Independent substreams
 * are derived from labels or indices; every stochastic routine in the
 * library takes an explicit Rng so results do not depend on evaluation
 * order or thread count.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent substream identified by an integer salt.
  Rng derive(std::uint64_t salt) const;
  /// Independent substream identified by a label such as "targets".
  Rng derive(std::string_view label) const;

  std::uint64_t next_u64();
  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform integer in [0, n), unbiased. Requires n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Standard normal deviate (Box-Muller).
  double normal();
  /// Fair coin.
  int bit();

  std::uint64_t key() const { return key_; }

 private:
  Rng(std::uint64_t key, int) : key_(key) {}

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace qpuzzle
