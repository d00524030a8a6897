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

#include "stab/clifford.hpp"
#include "stab/pauli.hpp"
#include "stab/stabiliser.hpp"

// Brute-force reference implementations, deliberately simple: dense matrices
// and exhaustive loops only. They validate the fast paths at desk scale and
// double as benchmark baselines. Nothing here shares logic with the fast
// paths beyond the Pauli -> dense converter.
namespace stab::oracle {

inline constexpr size_t kStateOracleQubitLimit = 6;
inline constexpr size_t kGateOracleQubitLimit = 4;
inline constexpr size_t kEnumerationQubitLimit = 2;
inline constexpr double kOracleTolerance = 1e-9;

/// Every Hermitian Pauli (all 4^n exponent pairs, both signs) fixing the
/// normalised input within kOracleTolerance, found by dense application.
std::vector<PauliOperator> brute_stabiliser_group(const AmplitudeVector& v);

/// True exactly when the stabiliser group has full size 2^n.
bool brute_is_stabiliser(const AmplitudeVector& v);

/// Conjugates every basic Pauli densely and pattern-matches the results
/// against phase * Pauli with fourth-root phases. Non-unitary inputs fail.
bool brute_is_clifford(const CliffordMatrix& m);

/// All distinct stabiliser states up to global phase, from every signed set
/// of n independent commuting Hermitian Paulis, recovered through projectors.
std::vector<AmplitudeVector> enumerate_stabiliser_states(size_t n);

/// Projector-sum baseline for check matrix -> amplitudes: sums the dense
/// matrices of all 2^n group elements and extracts a projector column.
AmplitudeVector brute_check_to_amplitudes(const CheckMatrix& m);

/// Dense baseline for tableau -> matrix: builds each column by dense
/// matrix-vector products of the tableau's v parts.
CliffordMatrix brute_tableau_to_matrix(const Tableau& t);

}  // namespace stab::oracle
