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
#include <memory>
#include <stdexcept>

#include "qpuzzle/pauli.hpp"
#include "qpuzzle/statevector.hpp"

namespace qpuzzle {

/// Numeric failure of an iterative solve; carries the last residual.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

/// A requested size exceeds a documented resource cap.
class ResourceCapError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CayleySolveOptions {
  double tolerance = 1e-10;
  int max_iterations = 500;
};

/// Above this qubit count only the matrix-free path is allowed (2^10 x 2^10
/// dense complex matrix is roughly 16 MB).
inline constexpr int kDenseThreshold = 10;

/**
 * W(beta)|psi> with W = (1 - i beta H)(1 + i beta H)^{-1}.
 *
 * The shifted system is solved matrix-free by conjugate gradients on the
 * Hermitian positive-definite normal operator (1 + beta^2 H^2), whose
 * spectrum starts at 1, so iteration counts stay low for moderate beta.
 * Set adjoint to apply W(beta)^dagger = W(-beta).
 */
Statevector cayley_apply(const RandomHermitian& h, double beta, const Statevector& sv,
                         bool adjoint = false, const CayleySolveOptions& opt = {});

/// Dense 2^n x 2^n matrix of H (for oracles and the dense cache).
Eigen::MatrixXcd dense_hermitian(const RandomHermitian& h);

/// Explicit W(beta); requires h.width() <= dense_threshold.
Eigen::MatrixXcd dense_cayley(const RandomHermitian& h, double beta,
                              int dense_threshold = kDenseThreshold);

/// Cayley transform of an explicit Hermitian matrix.
Eigen::MatrixXcd dense_cayley_of(const Eigen::MatrixXcd& herm, double beta);

/**
 * One partially-random unitary W(beta) usable matrix-free or through a
 * cached dense matrix. The dense form pays one LU factorization and then
 * applies as a single matrix-vector (or matrix-block) product.
 */
class CayleyBlock {
 public:
  CayleyBlock() = default;
  CayleyBlock(RandomHermitian h, double beta);

  int width() const { return herm_.width(); }
  double beta() const { return beta_; }
  const RandomHermitian& hermitian() const { return herm_; }
  bool has_dense() const { return dense_ != nullptr; }

  /// Build and keep the dense matrix (width() <= dense_threshold only).
  void ensure_dense(int dense_threshold = kDenseThreshold);
  void drop_dense() { dense_.reset(); }

  void apply(Statevector& sv, bool adjoint = false) const;
  /// Apply to a block of column states (used by exhaustive enumeration).
  void apply_block(Eigen::MatrixXcd& states, bool adjoint = false) const;

 private:
  RandomHermitian herm_;
  double beta_ = 0.0;
  std::shared_ptr<const Eigen::MatrixXcd> dense_;
};

}  // namespace qpuzzle
