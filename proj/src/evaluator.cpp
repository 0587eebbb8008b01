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

#include "qpuzzle/evaluator.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpuzzle {

void LayerModel::apply_w_block(int i, Eigen::MatrixXcd& states, bool adjoint) const {
  Statevector tmp(num_qubits());
  for (Eigen::Index c = 0; c < states.cols(); ++c) {
    std::copy(states.col(c).data(), states.col(c).data() + states.rows(), tmp.data());
    apply_w(i, tmp, adjoint);
    std::copy(tmp.data(), tmp.data() + states.rows(), states.col(c).data());
  }
}

void LayerModel::apply_puzzle_block(int i, Eigen::MatrixXcd& states, bool t_dagger) const {
  Statevector tmp(num_qubits());
  for (Eigen::Index c = 0; c < states.cols(); ++c) {
    std::copy(states.col(c).data(), states.col(c).data() + states.rows(), tmp.data());
    apply_puzzle(i, tmp, t_dagger);
    std::copy(tmp.data(), tmp.data() + states.rows(), states.col(c).data());
  }
}

void apply_ansatz(const LayerModel& model, const Bitstring& s, Statevector& sv) {
  if (s.size() != model.depth()) throw std::invalid_argument("apply_ansatz: |s| != D");
  for (int i = model.depth() - 1; i >= 0; --i) {
    if (s[i]) model.apply_puzzle(i, sv, /*t_dagger=*/true);
    model.apply_w(i, sv, /*adjoint=*/true);
  }
}

double fidelity_loss_of_state(const Statevector& sv) { return 1.0 - sv.zero_overlap_sq(); }

double parity_loss_of_state(const Statevector& sv) {
  const double z = parity_z_expectation(sv);
  return 1.0 - z * z;
}

SweepEvaluator::SweepEvaluator(const LayerModel& model, Objective obj,
                               std::size_t memory_budget_bytes)
    : model_(&model), obj_(obj), scratch_(model.num_qubits()) {
  const std::size_t state_bytes = (std::size_t{1} << model.num_qubits()) * sizeof(cplx);
  const std::size_t cached_need = state_bytes * (static_cast<std::size_t>(model.depth()) + 3);
  cached_mode_ = cached_need <= memory_budget_bytes;
}

void SweepEvaluator::apply_layer(int i, int bit, Statevector& sv) const {
  if (bit) model_->apply_puzzle(i, sv, true);
  model_->apply_w(i, sv, true);
}

void SweepEvaluator::apply_layer_adjoint(int i, int bit, Statevector& sv) const {
  model_->apply_w(i, sv, false);
  if (bit) model_->apply_puzzle(i, sv, false);
}

double SweepEvaluator::finish(const Statevector& sv) const {
  return obj_ == Objective::Fidelity ? fidelity_loss_of_state(sv) : parity_loss_of_state(sv);
}

double SweepEvaluator::loss(const Bitstring& s) {
  scratch_ = model_->target_state();
  apply_ansatz(*model_, s, scratch_);
  return finish(scratch_);
}

void SweepEvaluator::build_forward_cache(const Bitstring& s) {
  const int d = model_->depth();
  fwd_.assign(d + 1, Statevector());
  fwd_[d] = model_->target_state();
  for (int i = d - 1; i >= 0; --i) {
    fwd_[i] = fwd_[i + 1];
    apply_layer(i, s[i], fwd_[i]);
  }
}

SweepResult SweepEvaluator::sweep(const Bitstring& s) {
  const int d = model_->depth();
  if (s.size() != d) throw std::invalid_argument("SweepEvaluator::sweep: |s| != D");
  SweepResult out;
  out.neighbors.resize(d);

  if (!cached_mode_) {
    out.current = loss(s);
    for (int j = 0; j < d; ++j) out.neighbors[j] = loss(s.flipped(j));
    return out;
  }

  build_forward_cache(s);
  out.current = finish(fwd_[0]);

  if (obj_ == Objective::Fidelity) {
    // amplitude_j = <g_j | Ltilde_j | fwd_[j]> with g_j the adjoint cascade
    // of the leading layers applied to |0...0>.
    Statevector g = Statevector::zero_state(model_->num_qubits());
    for (int j = 0; j < d; ++j) {
      scratch_ = fwd_[j + 1];
      apply_layer(j, 1 - s[j], scratch_);
      out.neighbors[j] = 1.0 - std::norm(g.inner(scratch_));
      if (j + 1 < d) apply_layer_adjoint(j, s[j], g);
    }
  } else {
    // Parity needs the full recompiled state per neighbor; reuse the
    // forward cache and replay only the leading layers.
    for (int j = 0; j < d; ++j) {
      scratch_ = fwd_[j + 1];
      apply_layer(j, 1 - s[j], scratch_);
      for (int i = j - 1; i >= 0; --i) apply_layer(i, s[i], scratch_);
      out.neighbors[j] = finish(scratch_);
    }
  }
  return out;
}

std::vector<double> SweepEvaluator::neighbor_losses(const Bitstring& s,
                                                    const std::vector<int>& flips) {
  const int d = model_->depth();
  if (s.size() != d) throw std::invalid_argument("SweepEvaluator::neighbor_losses: |s| != D");
  std::vector<double> out(flips.size());
  if (!cached_mode_ || obj_ == Objective::Parity) {
    for (std::size_t t = 0; t < flips.size(); ++t) out[t] = loss(s.flipped(flips[t]));
    return out;
  }
  build_forward_cache(s);
  // Walk flips in ascending order so the adjoint cascade advances once.
  std::vector<std::size_t> order(flips.size());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return flips[a] < flips[b]; });
  Statevector g = Statevector::zero_state(model_->num_qubits());
  int g_level = 0;  // g = adjoint cascade of layers [0, g_level)
  for (std::size_t t : order) {
    const int j = flips[t];
    if (j < 0 || j >= d) throw std::out_of_range("neighbor_losses: flip index");
    while (g_level < j) {
      apply_layer_adjoint(g_level, s[g_level], g);
      ++g_level;
    }
    scratch_ = fwd_[j + 1];
    apply_layer(j, 1 - s[j], scratch_);
    out[t] = 1.0 - std::norm(g.inner(scratch_));
  }
  return out;
}

std::vector<double> enumerate_losses_model(const LayerModel& model,
                                           SweepEvaluator::Objective obj,
                                           std::size_t memory_budget_bytes) {
  const int d = model.depth();
  const int n = model.num_qubits();
  if (d > 16) throw std::invalid_argument("enumerate_losses_model: D above the cap of 16");
  const std::size_t leaves = std::size_t{1} << d;
  const std::size_t state_bytes = (std::size_t{1} << n) * sizeof(cplx);

  // Block mode doubles a matrix of partial states per layer; fall back to a
  // depth-first walk when 3x the leaf block does not fit the budget.
  if (3 * leaves * state_bytes <= memory_budget_bytes) {
    Eigen::MatrixXcd block(std::size_t{1} << n, 1);
    const Statevector& tgt = model.target_state();
    std::copy(tgt.data(), tgt.data() + tgt.size(), block.col(0).data());
    for (int i = d - 1; i >= 0; --i) {
      const Eigen::Index w = block.cols();
      Eigen::MatrixXcd next(block.rows(), 2 * w);
      next.leftCols(w) = block;
      next.rightCols(w) = block;
      auto right = next.rightCols(w);
      {
        Eigen::MatrixXcd tmp = right;
        model.apply_puzzle_block(i, tmp, /*t_dagger=*/true);
        right = tmp;
      }
      model.apply_w_block(i, next, /*adjoint=*/true);
      block = std::move(next);
    }
    std::vector<double> out(leaves);
    Statevector tmp(n);
    for (std::size_t c = 0; c < leaves; ++c) {
      if (obj == SweepEvaluator::Objective::Fidelity) {
        out[c] = 1.0 - std::norm(block(0, c));
      } else {
        std::copy(block.col(c).data(), block.col(c).data() + block.rows(), tmp.data());
        out[c] = parity_loss_of_state(tmp);
      }
    }
    return out;
  }

  std::vector<double> out(leaves);
  std::vector<Statevector> stack(d + 1);
  stack[d] = model.target_state();
  // Depth-first over layers D..1; prefix collects bits s_1..s_i as the
  // leading index bits.
  struct Walker {
    const LayerModel& m;
    SweepEvaluator::Objective obj;
    std::vector<Statevector>& stack;
    std::vector<double>& out;
    int d;
    void walk(int i, std::size_t prefix) {
      if (i == 0) {
        out[prefix] = obj == SweepEvaluator::Objective::Fidelity
                          ? fidelity_loss_of_state(stack[0])
                          : parity_loss_of_state(stack[0]);
        return;
      }
      for (int bit = 0; bit <= 1; ++bit) {
        stack[i - 1] = stack[i];
        if (bit) m.apply_puzzle(i - 1, stack[i - 1], true);
        m.apply_w(i - 1, stack[i - 1], true);
        // 0-based layer (i-1) carries bit s_i, weight 2^(d-i) in the index.
        walk(i - 1, prefix | (static_cast<std::size_t>(bit) << (d - i)));
      }
    }
  } walker{model, obj, stack, out, d};
  walker.walk(d, 0);
  return out;
}

// ---- PuzzleEngine ----

PuzzleEngine::PuzzleEngine(const PuzzleInstance& inst, Mode mode) : inst_(&inst) {
  dense_ = mode == Mode::Dense || (mode == Mode::Auto && inst.n <= 8);
  if (dense_ && inst.n > kDenseThreshold)
    throw ResourceCapError("PuzzleEngine: dense mode above the dense threshold");
  w_.reserve(inst.depth);
  v_.reserve(inst.depth);
  for (int i = 0; i < inst.depth; ++i) {
    w_.emplace_back(inst.herm_w[i], inst.beta_w);
    v_.emplace_back(inst.herm_v[i], inst.beta_v);
    if (dense_) {
      w_.back().ensure_dense();
      v_.back().ensure_dense();
    }
  }
}

void PuzzleEngine::apply_w(int i, Statevector& sv, bool adjoint) const {
  w_[i].apply(sv, adjoint);
}

void PuzzleEngine::apply_puzzle(int i, Statevector& sv, bool t_dagger) const {
  v_[i].apply(sv, false);
  apply_t(sv, inst_->targets[i], t_dagger);
  v_[i].apply(sv, true);
}

void PuzzleEngine::apply_w_block(int i, Eigen::MatrixXcd& states, bool adjoint) const {
  w_[i].apply_block(states, adjoint);
}

void PuzzleEngine::apply_puzzle_block(int i, Eigen::MatrixXcd& states, bool t_dagger) const {
  v_[i].apply_block(states, false);
  Statevector tmp(inst_->n);
  for (Eigen::Index c = 0; c < states.cols(); ++c) {
    std::copy(states.col(c).data(), states.col(c).data() + states.rows(), tmp.data());
    apply_t(tmp, inst_->targets[i], t_dagger);
    std::copy(tmp.data(), tmp.data() + states.rows(), states.col(c).data());
  }
  v_[i].apply_block(states, true);
}

// ---- RotationEngine ----

namespace {

std::array<cplx, 4> kick_matrix(double phi, double theta) {
  // Rz(phi) Ry(theta) Rz(phi)^dagger
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const cplx em{std::cos(phi), -std::sin(phi)};
  const cplx ep{std::cos(phi), std::sin(phi)};
  return {cplx{c, 0}, -s * em, s * ep, cplx{c, 0}};
}

std::array<cplx, 4> mat_mul(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

std::array<cplx, 4> mat_adjoint(const std::array<cplx, 4>& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

std::array<cplx, 4> mat_pow(std::array<cplx, 4> a, int p) {
  std::array<cplx, 4> r = {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
  for (int i = 0; i < p; ++i) r = mat_mul(a, r);
  return r;
}

}  // namespace

RotationEngine::RotationEngine(const RotationInstance& inst) : inst_(&inst) {
  const int d = inst.depth;
  const int n = inst.n();
  k1_.resize(d);
  k2_.resize(d);
  puzzle_t_.resize(d);
  puzzle_tdg_.resize(d);
  const double r = std::sqrt(0.5);
  const std::array<cplx, 4> tgate = {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{r, r}};
  const std::array<cplx, 4> tdg = {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{r, -r}};
  for (int i = 0; i < d; ++i) {
    k1_[i].resize(n);
    k2_[i].resize(n);
    for (int j = 0; j < n; ++j) {
      k1_[i][j] = kick_matrix(inst.w_phi1[i][j], inst.w_theta1[i][j]);
      k2_[i][j] = kick_matrix(inst.w_phi2[i][j], inst.w_theta2[i][j]);
    }
    const auto v = mat_pow(kick_matrix(inst.v_phi[i], inst.v_theta[i]), inst.l_v);
    const auto vdg = mat_adjoint(v);
    puzzle_t_[i] = mat_mul(vdg, mat_mul(tgate, v));
    puzzle_tdg_[i] = mat_mul(vdg, mat_mul(tdg, v));
  }
}

void RotationEngine::apply_cz_layer(int which, Statevector& sv) const {
  const int n = inst_->n();
  // which = 1: pairs (1,2), (3,4), ...; which = 2: pairs (2,3), (4,5), ...
  for (int a = which; a + 1 <= n; a += 2) apply_cz(sv, a, a + 1);
}

void RotationEngine::apply_w(int i, Statevector& sv, bool adjoint) const {
  const int n = inst_->n();
  if (!adjoint) {
    for (int j = 0; j < n; ++j) apply_single_qubit(sv, j + 1, k1_[i][j]);
    if (inst_->cz_enabled) apply_cz_layer(1, sv);
    for (int j = 0; j < n; ++j) apply_single_qubit(sv, j + 1, k2_[i][j]);
    if (inst_->cz_enabled) apply_cz_layer(2, sv);
  } else {
    if (inst_->cz_enabled) apply_cz_layer(2, sv);
    for (int j = 0; j < n; ++j) apply_single_qubit(sv, j + 1, mat_adjoint(k2_[i][j]));
    if (inst_->cz_enabled) apply_cz_layer(1, sv);
    for (int j = 0; j < n; ++j) apply_single_qubit(sv, j + 1, mat_adjoint(k1_[i][j]));
  }
}

void RotationEngine::apply_puzzle(int i, Statevector& sv, bool t_dagger) const {
  apply_single_qubit(sv, inst_->targets[i], t_dagger ? puzzle_tdg_[i] : puzzle_t_[i]);
}

}  // namespace qpuzzle
