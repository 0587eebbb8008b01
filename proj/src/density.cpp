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

#include "qpuzzle/density.hpp"

#include <set>
#include <stdexcept>

namespace qpuzzle {

namespace {

struct SubsetLayout {
  std::vector<int> keep_bits;  // bit positions of the kept qubits, subset order
  std::vector<int> env_bits;   // bit positions of the traced-out qubits
};

SubsetLayout subset_layout(const Statevector& sv, const std::vector<int>& qubits) {
  const int n = sv.num_qubits();
  if (qubits.empty()) throw std::invalid_argument("reduced_density: empty subset");
  std::set<int> seen;
  SubsetLayout lay;
  for (int q : qubits) {
    if (q < 1 || q > n) throw std::invalid_argument("reduced_density: qubit out of range");
    if (!seen.insert(q).second) throw std::invalid_argument("reduced_density: repeated qubit");
    lay.keep_bits.push_back(n - q);
  }
  if (static_cast<int>(qubits.size()) > 12)
    throw std::invalid_argument("reduced_density: subset larger than 12 qubits");
  for (int b = n - 1; b >= 0; --b)
    if (!seen.count(n - b)) lay.env_bits.push_back(b);
  return lay;
}

std::uint64_t expand(std::uint64_t packed, const std::vector<int>& bits) {
  std::uint64_t out = 0;
  const int m = static_cast<int>(bits.size());
  for (int j = 0; j < m; ++j)
    if (packed >> (m - 1 - j) & 1) out |= std::uint64_t{1} << bits[j];
  return out;
}

}  // namespace

Eigen::MatrixXcd reduced_density(const Statevector& sv, const std::vector<int>& qubits) {
  const SubsetLayout lay = subset_layout(sv, qubits);
  const int L = static_cast<int>(lay.keep_bits.size());
  const int E = static_cast<int>(lay.env_bits.size());
  const std::size_t sub_dim = std::size_t{1} << L;
  const std::size_t env_dim = std::size_t{1} << E;

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(sub_dim, sub_dim);
  std::vector<cplx> slice(sub_dim);
  for (std::uint64_t e = 0; e < env_dim; ++e) {
    const std::uint64_t env_part = expand(e, lay.env_bits);
    for (std::uint64_t a = 0; a < sub_dim; ++a)
      slice[a] = sv[env_part | expand(a, lay.keep_bits)];
    for (std::uint64_t a = 0; a < sub_dim; ++a) {
      const cplx va = slice[a];
      if (va == cplx{0, 0}) continue;
      for (std::uint64_t b = 0; b < sub_dim; ++b) rho(a, b) += va * std::conj(slice[b]);
    }
  }
  return rho;
}

double subsystem_purity(const Statevector& sv, const std::vector<int>& qubits) {
  const Eigen::MatrixXcd rho = reduced_density(sv, qubits);
  return rho.cwiseAbs2().sum();
}

}  // namespace qpuzzle
