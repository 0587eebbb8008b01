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

#include <Eigen/Dense>
#include <array>
#include <memory>
#include <vector>

#include "qpuzzle/bitstring.hpp"
#include "qpuzzle/cayley.hpp"
#include "qpuzzle/instance.hpp"
#include "qpuzzle/rotation.hpp"
#include "qpuzzle/statevector.hpp"

namespace qpuzzle {

/**
 * Layer-structured circuit behind both puzzle families. Ansatz layer i
 * (0-based) is W_i^dagger composed with the dressed puzzle piece
 * V_i^dagger T^{+-} V_i when the corresponding bit is set.
 */
class LayerModel {
 public:
  virtual ~LayerModel() = default;
  virtual int num_qubits() const = 0;
  virtual int depth() const = 0;
  virtual const Statevector& target_state() const = 0;
  virtual void apply_w(int i, Statevector& sv, bool adjoint) const = 0;
  virtual void apply_puzzle(int i, Statevector& sv, bool t_dagger) const = 0;

  /// Column-block variants used by exhaustive enumeration.
  virtual void apply_w_block(int i, Eigen::MatrixXcd& states, bool adjoint) const;
  virtual void apply_puzzle_block(int i, Eigen::MatrixXcd& states, bool t_dagger) const;
};

/// Apply the full ansatz Ubar(s) in place (layers D..1).
void apply_ansatz(const LayerModel& model, const Bitstring& s, Statevector& sv);

double fidelity_loss_of_state(const Statevector& sv);
double parity_loss_of_state(const Statevector& sv);

struct SweepResult {
  double current = 0.0;
  std::vector<double> neighbors;
};

/**
 * Loss evaluation engine over a LayerModel.
 *
 * For the fidelity objective a full sweep reuses two cascades of partial
 * states, so evaluating the current point plus all D one-flip neighbors
 * costs about 3D layer applications instead of D^2. Holds scratch buffers;
 * use one evaluator per thread.
 */
class SweepEvaluator {
 public:
  enum class Objective { Fidelity, Parity };

  SweepEvaluator(const LayerModel& model, Objective obj = Objective::Fidelity,
                 std::size_t memory_budget_bytes = std::size_t{2} << 30);

  double loss(const Bitstring& s);
  SweepResult sweep(const Bitstring& s);
  /// Losses for the listed one-flip neighbors only (noisy-mode breadth).
  std::vector<double> neighbor_losses(const Bitstring& s, const std::vector<int>& flips);

  Objective objective() const { return obj_; }
  const LayerModel& model() const { return *model_; }

 private:
  void build_forward_cache(const Bitstring& s);  // states after layers D..i+1
  void apply_layer(int i, int bit, Statevector& sv) const;
  void apply_layer_adjoint(int i, int bit, Statevector& sv) const;
  double finish(const Statevector& sv) const;

  const LayerModel* model_;
  Objective obj_;
  bool cached_mode_;
  std::vector<Statevector> fwd_;  // fwd_[i] = layers D..i+1 applied to the target
  Statevector scratch_;
};

/**
 * Exhaustive loss table over all 2^D bitstrings, sharing layer applications
 * across the bitstring tree (about 2^(D+1) layer applications in total).
 * Indexing follows Bitstring::to_index (s_1 is the MSB).
 */
std::vector<double> enumerate_losses_model(const LayerModel& model,
                                           SweepEvaluator::Objective obj,
                                           std::size_t memory_budget_bytes = std::size_t{2}
                                                                             << 30);

/// Engine for Cayley-based puzzle instances. Dense mode caches per-layer
/// unitaries behind an LU solve each and pays off whenever an instance is
/// evaluated more than a handful of times.
class PuzzleEngine : public LayerModel {
 public:
  enum class Mode { MatrixFree, Dense, Auto };

  explicit PuzzleEngine(const PuzzleInstance& inst, Mode mode = Mode::Auto);

  int num_qubits() const override { return inst_->n; }
  int depth() const override { return inst_->depth; }
  const Statevector& target_state() const override { return inst_->target_state; }
  void apply_w(int i, Statevector& sv, bool adjoint) const override;
  void apply_puzzle(int i, Statevector& sv, bool t_dagger) const override;
  void apply_w_block(int i, Eigen::MatrixXcd& states, bool adjoint) const override;
  void apply_puzzle_block(int i, Eigen::MatrixXcd& states, bool t_dagger) const override;

  const PuzzleInstance& instance() const { return *inst_; }
  bool dense() const { return dense_; }

 private:
  const PuzzleInstance* inst_;
  bool dense_;
  std::vector<CayleyBlock> w_, v_;
};

/// Engine for the rotation family (gate-level only).
class RotationEngine : public LayerModel {
 public:
  explicit RotationEngine(const RotationInstance& inst);

  int num_qubits() const override { return inst_->n(); }
  int depth() const override { return inst_->depth; }
  const Statevector& target_state() const override { return inst_->target_state; }
  void apply_w(int i, Statevector& sv, bool adjoint) const override;
  void apply_puzzle(int i, Statevector& sv, bool t_dagger) const override;

  const RotationInstance& instance() const { return *inst_; }

 private:
  void apply_cz_layer(int which, Statevector& sv) const;

  const RotationInstance* inst_;
  // Fused 2x2 kick matrices: [layer][qubit] for the two W kicks.
  std::vector<std::vector<std::array<cplx, 4>>> k1_, k2_;
  // Dressed puzzle piece V^dagger T^{+-} V collapsed to one 2x2 per layer.
  std::vector<std::array<cplx, 4>> puzzle_t_, puzzle_tdg_;
};

}  // namespace qpuzzle
