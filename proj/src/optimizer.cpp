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

#include "qpuzzle/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpuzzle {

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::no_improvement: return "no_improvement";
    case Termination::iteration_cap: return "iteration_cap";
  }
  return "?";
}

std::vector<double> OptTrace::loss_per_sweep() const {
  std::vector<double> out;
  out.reserve(sweeps.size());
  for (const auto& r : sweeps) out.push_back(r.loss);
  return out;
}

std::string OptTrace::to_csv() const {
  std::ostringstream os;
  os << "sweep,current_loss,f_evals_cumulative,bitstring_hex\n";
  char buf[40];
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", sweeps[i].loss);
    os << (i + 1) << "," << buf << "," << sweeps[i].f_evals_cum << ","
       << sweeps[i].current.to_hex() << "\n";
  }
  return os.str();
}

SweepFn sweep_from_loss(const LossFn& loss_fn, int depth) {
  return [loss_fn, depth](const Bitstring& s) {
    SweepResult r;
    r.current = loss_fn(s);
    r.neighbors.resize(depth);
    for (int j = 0; j < depth; ++j) r.neighbors[j] = loss_fn(s.flipped(j));
    return r;
  };
}

OptTrace hill_climb(const SweepFn& sweep, int depth, const Bitstring& s0, double tol) {
  if (s0.size() != depth) throw std::invalid_argument("hill_climb: |s0| != D");
  OptTrace trace;
  trace.path.push_back(s0);
  Bitstring cur = s0;
  double cur_loss = 0.0;
  bool have_cur = false;

  for (;;) {
    SweepResult sr = sweep(cur);
    if (!have_cur) {
      cur_loss = sr.current;
      have_cur = true;
    }
    trace.f_evals += depth;

    int best = 0;
    for (int j = 1; j < depth; ++j)
      if (sr.neighbors[j] < sr.neighbors[best]) best = j;
    const bool moved = sr.neighbors[best] < cur_loss;
    if (moved) {
      cur = cur.flipped(best);
      cur_loss = sr.neighbors[best];
      trace.path.push_back(cur);
    }
    trace.sweeps.push_back({cur_loss, trace.f_evals, cur});
    if (cur_loss < tol) {
      trace.termination = Termination::converged;
      break;
    }
    if (!moved) {
      trace.termination = Termination::no_improvement;
      break;
    }
  }
  return trace;
}

OptTrace hill_climb(const LossFn& loss_fn, int depth, const Bitstring& s0, double tol) {
  return hill_climb(sweep_from_loss(loss_fn, depth), depth, s0, tol);
}

NoisySchedule NoisySchedule::standard() {
  return NoisySchedule{{{0.3, 36, 1}, {0.1, 12, 3}, {0.0, 2, 6}}};
}

void NoisySchedule::validate() const {
  if (tiers.empty()) throw std::invalid_argument("NoisySchedule: empty");
  for (std::size_t i = 0; i < tiers.size(); ++i) {
    if (tiers[i].breadth < 1 || tiers[i].trials < 1)
      throw std::invalid_argument("NoisySchedule: lambda and m must be >= 1");
    if (i > 0 && !(tiers[i].loss_threshold < tiers[i - 1].loss_threshold))
      throw std::invalid_argument("NoisySchedule: thresholds must be strictly decreasing");
  }
}

const NoisyScheduleTier& NoisySchedule::pick(double loss_estimate) const {
  for (const auto& t : tiers)
    if (loss_estimate >= t.loss_threshold) return t;
  return tiers.back();
}

OptTrace noisy_hill_climb(const LossFn& noisy_loss_fn, int depth, const Bitstring& s0,
                          const NoisySchedule& schedule, double sigma, Rng rng,
                          double margin_factor, int max_sweeps) {
  if (s0.size() != depth) throw std::invalid_argument("noisy_hill_climb: |s0| != D");
  if (sigma < 0) throw std::invalid_argument("noisy_hill_climb: sigma must be nonnegative");
  schedule.validate();

  OptTrace trace;
  trace.path.push_back(s0);
  Bitstring cur = s0;
  // Seed the schedule with a single draw; every sweep re-estimates.
  double est_cur = noisy_loss_fn(cur);
  trace.f_evals += 1;

  std::vector<int> all_flips(depth);
  std::iota(all_flips.begin(), all_flips.end(), 0);

  int sweeps_done = 0;
  trace.termination = Termination::iteration_cap;
  while (sweeps_done < max_sweeps) {
    const NoisyScheduleTier& tier = schedule.pick(est_cur);
    const int lambda = std::min(tier.breadth, depth);
    const int m = tier.trials;

    // lambda distinct flips, sampled without replacement.
    for (int i = 0; i < lambda; ++i) {
      const int j = i + static_cast<int>(rng.below(depth - i));
      std::swap(all_flips[i], all_flips[j]);
    }

    int best_flip = -1;
    double best_est = 0.0;
    for (int i = 0; i < lambda; ++i) {
      const Bitstring cand = cur.flipped(all_flips[i]);
      double acc = 0.0;
      for (int t = 0; t < m; ++t) acc += noisy_loss_fn(cand);
      acc /= m;
      trace.f_evals += m;
      // Deterministic tie-break: smaller estimate, then lower flip index.
      if (best_flip < 0 || acc < best_est ||
          (acc == best_est && all_flips[i] < best_flip)) {
        best_est = acc;
        best_flip = all_flips[i];
      }
    }
    double acc = 0.0;
    for (int t = 0; t < m; ++t) acc += noisy_loss_fn(cur);
    est_cur = acc / m;
    trace.f_evals += m;

    const double margin = margin_factor * sigma * std::sqrt(2.0 / m);
    if (best_flip >= 0 && best_est < est_cur - margin) {
      cur = cur.flipped(best_flip);
      est_cur = best_est;
      trace.path.push_back(cur);
    }
    ++sweeps_done;
    trace.sweeps.push_back({est_cur, trace.f_evals, cur});
    if (est_cur <= 2.0 * sigma / std::sqrt(static_cast<double>(m))) {
      trace.termination = Termination::converged;
      break;
    }
  }
  return trace;
}

OptTrace random_search(const LossFn& loss_fn, int depth, Rng rng, double tol) {
  if (depth < 1 || depth > 20)
    throw std::invalid_argument("random_search: D must be in [1, 20]");
  const std::size_t count = std::size_t{1} << depth;
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  for (std::size_t i = count - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(i + 1)]);

  OptTrace trace;
  trace.termination = Termination::iteration_cap;
  for (std::size_t i = 0; i < count; ++i) {
    const Bitstring s = Bitstring::from_index(depth, order[i]);
    const double l = loss_fn(s);
    trace.f_evals += 1;
    trace.path.push_back(s);
    if (l < tol) {
      trace.termination = Termination::converged;
      trace.sweeps.push_back({l, trace.f_evals, s});
      break;
    }
  }
  return trace;
}

}  // namespace qpuzzle
