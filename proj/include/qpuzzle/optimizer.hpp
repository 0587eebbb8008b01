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

#include <functional>
#include <string>
#include <vector>

#include "qpuzzle/bitstring.hpp"
#include "qpuzzle/evaluator.hpp"
#include "qpuzzle/rng.hpp"

namespace qpuzzle {

using LossFn = std::function<double(const Bitstring&)>;
using SweepFn = std::function<SweepResult(const Bitstring&)>;

enum class Termination { converged, no_improvement, iteration_cap };
std::string termination_name(Termination t);

struct OptTrace {
  struct SweepRecord {
    double loss;               // carried current loss after the sweep
    long long f_evals_cum;     // cumulative loss evaluations
    Bitstring current;
  };

  std::vector<Bitstring> path;  // s0 followed by every accepted move
  std::vector<SweepRecord> sweeps;
  long long f_evals = 0;
  Termination termination = Termination::no_improvement;
  bool success = false;  // s_final == s*, judged post hoc by the caller

  const Bitstring& final_string() const { return path.back(); }
  int sweep_count() const { return static_cast<int>(sweeps.size()); }
  std::vector<double> loss_per_sweep() const;
  /// CSV rows: sweep, current_loss, f_evals_cumulative, bitstring_hex.
  std::string to_csv() const;
};

/**
 * Steepest-descent hill climbing: per sweep evaluate all D one-flip
 * neighbors, flip the best strictly improving one (ties break to the lowest
 * index), stop once the carried loss drops below tol or no neighbor
 * improves. f_evals counts exactly D per sweep; the one-off evaluation of
 * the start point is not counted.
 */
OptTrace hill_climb(const SweepFn& sweep, int depth, const Bitstring& s0, double tol = 1e-10);
OptTrace hill_climb(const LossFn& loss_fn, int depth, const Bitstring& s0, double tol = 1e-10);

/// Adapter: D+1 plain loss calls per sweep.
SweepFn sweep_from_loss(const LossFn& loss_fn, int depth);

struct NoisyScheduleTier {
  double loss_threshold;  // tier applies while the loss estimate >= threshold
  int breadth;            // lambda
  int trials;             // m
};

struct NoisySchedule {
  std::vector<NoisyScheduleTier> tiers;

  /// l >= 0.3: (36, 1); 0.1 <= l < 0.3: (12, 3); l < 0.1: (2, 6).
  static NoisySchedule standard();
  const NoisyScheduleTier& pick(double loss_estimate) const;
  void validate() const;
};

/**
 * Hill climbing under a noisy loss. Per sweep: pick (lambda, m) from the
 * current estimate, sample lambda distinct random flips, average m draws
 * per candidate, re-estimate the incumbent with m draws, and move only when
 * the best candidate beats it by margin_factor * sigma * sqrt(2/m). Stops
 * once the incumbent estimate falls to the noise floor 2*sigma/sqrt(m) or
 * the sweep cap is hit. Every noisy draw counts toward f_evals.
 */
OptTrace noisy_hill_climb(const LossFn& noisy_loss_fn, int depth, const Bitstring& s0,
                          const NoisySchedule& schedule, double sigma, Rng rng,
                          double margin_factor = 1.0, int max_sweeps = 200);

/**
 * Non-adaptive baseline: evaluates bitstrings in a uniformly random
 * permutation order until the loss drops below tol; f_evals is the rank of
 * the hit. Capped at D <= 20.
 */
OptTrace random_search(const LossFn& loss_fn, int depth, Rng rng, double tol = 1e-10);

}  // namespace qpuzzle
