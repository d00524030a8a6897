// Copyright 2026 The stabtool Authors
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

#include "stab/clifford.hpp"
#include "stab/pauli.hpp"
#include "stab/stabiliser.hpp"

namespace stab {

// Exact conjugation of a Pauli by the elementary Clifford gates, acting on
// the (x, z) bits with the phase carried along. These generate the full
// symplectic action used by the random-instance generators.
void conjugate_hadamard(PauliOperator& p, size_t qubit);
void conjugate_phase_gate(PauliOperator& p, size_t qubit);
void conjugate_cnot(PauliOperator& p, size_t control, size_t target);

/// Tableau of a seeded random circuit of H/S/CNOT gates (depth gates in
/// total; 0 means the default of 10n). Deterministic in (n, seed, depth).
Tableau random_tableau(size_t n, uint64_t seed, size_t depth = 0);

/// Check matrix of a seeded random stabiliser state: the single-qubit Z rows
/// pushed through a random circuit, with random signs.
CheckMatrix random_check_matrix(size_t n, uint64_t seed, size_t depth = 0);

}  // namespace stab
