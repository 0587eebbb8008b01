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
#include <vector>

#include "qpuzzle/statevector.hpp"

namespace qpuzzle {

/**
 * Reduced density matrix over the given qubits (1-based, distinct). The
 * subset order defines the tensor order of the reduced space; the first
 * listed qubit is the most significant bit of the reduced index.
 */
Eigen::MatrixXcd reduced_density(const Statevector& sv, const std::vector<int>& qubits);

/// tr(rho^2) of the reduced state over the given qubits.
double subsystem_purity(const Statevector& sv, const std::vector<int>& qubits);

}  // namespace qpuzzle
