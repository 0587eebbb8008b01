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

#include <string>
#include <vector>

#include "qpuzzle/bitstring.hpp"
#include "qpuzzle/optimizer.hpp"

namespace qpuzzle {

/**
 * Exhaustive loss table over all 2^D bitstrings. values[i] is the loss of
 * Bitstring::from_index(D, i); s_1 is the most significant index bit.
 */
struct LossMap {
  int depth = 0;
  std::vector<double> values;

  double at(const Bitstring& s) const { return values[s.to_index()]; }
  std::size_t size() const { return values.size(); }
};

/// Complete table by direct evaluation; D capped at 16.
LossMap enumerate_losses(const LossFn& loss_fn, int depth);

Bitstring lossmap_argmin(const LossMap& map);

/// Mean loss per Hamming shell around s_star (index h = 0..D).
std::vector<double> shell_means(const LossMap& map, const Bitstring& s_star);

/**
 * Unique global minimum and every other point has a strictly improving
 * one-flip neighbor (strictness tolerance tol).
 */
bool is_unimodal(const LossMap& map, double tol = 1e-12);

/**
 * XOR-aligned monotonicity relative to s_star: whenever the disagreement
 * mask of s is a subset of that of s', l(s) <= l(s') + tol.
 */
bool is_monotonic(const LossMap& map, const Bitstring& s_star, double tol = 1e-12);

/**
 * Additively separable: for each bit the flip difference is constant over
 * all 2^(D-1) contexts within tol.
 */
bool is_separable(const LossMap& map, double tol = 1e-8);

/// Sliding step Delta_S: mean difference of shell means, (1/D) sum_h (l(h) - l(h-1)).
double sliding_step(const LossMap& map, const Bitstring& s_star);

/// Mean gap between ordered losses on the shell at h = ceil(D/2).
double gap_delta(const LossMap& map, const Bitstring& s_star);

struct LandscapeReport {
  bool unimodal = false;
  bool monotonic = false;
  bool separable = false;
  double delta_s = 0.0;
  double delta_gap = 0.0;
  Bitstring argmin;
};

LandscapeReport classify_landscape(const LossMap& map, const Bitstring& s_star);

/// Raw little-endian float64 table plus a JSON sidecar (base + ".bin"/".json").
void lossmap_save(const LossMap& map, const std::string& base_path);
LossMap lossmap_load(const std::string& base_path);

}  // namespace qpuzzle
