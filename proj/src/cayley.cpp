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

#include "qpuzzle/cayley.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qpuzzle {

namespace {

using Vec = Eigen::VectorXcd;

// y = (1 + beta^2 H^2) x, with scratch for the inner H x product.
void normal_op(const RandomHermitian& h, double beta, const Statevector& x, Statevector& hx,
               Statevector& y) {
  const std::size_t dim = x.size();
  std::fill(hx.data(), hx.data() + dim, cplx{0, 0});
  accumulate_hermitian(h, x, hx, cplx{1, 0});
  std::copy(x.data(), x.data() + dim, y.data());
  accumulate_hermitian(h, hx, y, cplx{beta * beta, 0});
}

}  // namespace

Statevector cayley_apply(const RandomHermitian& h, double beta, const Statevector& sv,
                         bool adjoint, const CayleySolveOptions& opt) {
  if (h.width() != sv.num_qubits()) throw std::invalid_argument("cayley_apply: width mismatch");
  if (beta < 0.0) throw std::invalid_argument("cayley_apply: beta must be nonnegative");
  const double b = adjoint ? -beta : beta;
  if (b == 0.0) return sv;

  const std::size_t dim = sv.size();
  const int n = sv.num_qubits();

  // rhs = (1 - i b H)^2 psi = psi - 2 i b H psi - b^2 H^2 psi
  Statevector hpsi(n);
  accumulate_hermitian(h, sv, hpsi, cplx{1, 0});
  Statevector rhs(n);
  for (std::size_t i = 0; i < dim; ++i) rhs[i] = sv[i] + cplx{0, -2.0 * b} * hpsi[i];
  accumulate_hermitian(h, hpsi, rhs, cplx{-b * b, 0});

  double rhs_norm = rhs.norm();
  if (rhs_norm == 0.0) rhs_norm = 1.0;
  const double tol_abs = opt.tolerance * rhs_norm;

  // CG on (1 + b^2 H^2) x = rhs, started from the input state.
  Statevector x = sv;
  Statevector hx(n), ax(n);
  normal_op(h, b, x, hx, ax);
  Statevector r(n), p(n);
  double rr = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    r[i] = rhs[i] - ax[i];
    p[i] = r[i];
    rr += std::norm(r[i]);
  }
  int it = 0;
  while (std::sqrt(rr) > tol_abs) {
    if (++it > opt.max_iterations)
      throw SolverError("cayley_apply: conjugate gradient did not converge (residual " +
                            std::to_string(std::sqrt(rr) / rhs_norm) + ")",
                        std::sqrt(rr) / rhs_norm);
    normal_op(h, b, p, hx, ax);
    cplx pap{0, 0};
    for (std::size_t i = 0; i < dim; ++i) pap += std::conj(p[i]) * ax[i];
    const double alpha = rr / pap.real();
    double rr_next = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ax[i];
      rr_next += std::norm(r[i]);
    }
    const double betacg = rr_next / rr;
    rr = rr_next;
    for (std::size_t i = 0; i < dim; ++i) p[i] = r[i] + betacg * p[i];
  }
  return x;
}

Eigen::MatrixXcd dense_hermitian(const RandomHermitian& h) {
  const int n = h.width();
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.masks()) {
    for (std::size_t b = 0; b < dim; ++b) {
      const cplx v = (std::popcount(b & t.z) & 1) ? -t.coeff : t.coeff;
      m(b ^ t.x, b) += v;
    }
  }
  return m;
}

Eigen::MatrixXcd dense_cayley_of(const Eigen::MatrixXcd& herm, double beta) {
  const auto dim = herm.rows();
  const cplx ib{0.0, beta};
  Eigen::MatrixXcd plus = Eigen::MatrixXcd::Identity(dim, dim) + ib * herm;
  Eigen::MatrixXcd minus = Eigen::MatrixXcd::Identity(dim, dim) - ib * herm;
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(plus).solve(minus);
}

Eigen::MatrixXcd dense_cayley(const RandomHermitian& h, double beta, int dense_threshold) {
  if (h.width() > dense_threshold)
    throw ResourceCapError("dense_cayley: " + std::to_string(h.width()) +
                           " qubits exceed the dense threshold of " +
                           std::to_string(dense_threshold));
  if (beta < 0.0) throw std::invalid_argument("dense_cayley: beta must be nonnegative");
  return dense_cayley_of(dense_hermitian(h), beta);
}

CayleyBlock::CayleyBlock(RandomHermitian h, double beta) : herm_(std::move(h)), beta_(beta) {
  if (beta < 0.0) throw std::invalid_argument("CayleyBlock: beta must be nonnegative");
}

void CayleyBlock::ensure_dense(int dense_threshold) {
  if (dense_ || beta_ == 0.0) return;
  dense_ = std::make_shared<const Eigen::MatrixXcd>(dense_cayley(herm_, beta_, dense_threshold));
}

void CayleyBlock::apply(Statevector& sv, bool adjoint) const {
  if (beta_ == 0.0) return;
  if (dense_) {
    Eigen::Map<Vec> v(sv.data(), static_cast<Eigen::Index>(sv.size()));
    if (adjoint)
      v = dense_->adjoint() * v;
    else
      v = (*dense_) * v;
    return;
  }
  sv = cayley_apply(herm_, beta_, sv, adjoint);
}

void CayleyBlock::apply_block(Eigen::MatrixXcd& states, bool adjoint) const {
  if (beta_ == 0.0) return;
  if (dense_) {
    if (adjoint)
      states = dense_->adjoint() * states;
    else
      states = (*dense_) * states;
    return;
  }
  Statevector tmp(herm_.width());
  for (Eigen::Index c = 0; c < states.cols(); ++c) {
    std::copy(states.col(c).data(), states.col(c).data() + states.rows(), tmp.data());
    Statevector res = cayley_apply(herm_, beta_, tmp, adjoint);
    std::copy(res.data(), res.data() + states.rows(), states.col(c).data());
  }
}

}  // namespace qpuzzle
