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

#include "stab/random.hpp"

#include <random>

namespace stab {

void conjugate_hadamard(PauliOperator& p, size_t qubit) {
  bool xb = p.x.get(qubit);
  bool zb = p.z.get(qubit);
  p.x.set(qubit, zb);
  p.z.set(qubit, xb);
  if (xb && zb) p.phase_t = static_cast<uint8_t>((p.phase_t + 2) & 3);  // Y -> -Y
}

void conjugate_phase_gate(PauliOperator& p, size_t qubit) {
  bool xb = p.x.get(qubit);
  if (!xb) return;  // Z is fixed
  p.z.set(qubit, !p.z.get(qubit));
  p.phase_t = static_cast<uint8_t>((p.phase_t + 3) & 3);  // X -> Y, Y -> -X
}

void conjugate_cnot(PauliOperator& p, size_t control, size_t target) {
  // X_c -> X_c X_t and Z_t -> Z_c Z_t; in the X^x Z^z normal form the new
  // letters land on their own kind, so no reorder sign appears.
  p.x.set(target, p.x.get(target) ^ p.x.get(control));
  p.z.set(control, p.z.get(control) ^ p.z.get(target));
}

namespace {

/// One uniformly chosen H/S/CNOT applied to every operator in `targets`.
template <typename Apply>
void random_circuit(size_t n, uint64_t seed, size_t depth, Apply&& apply_gate) {
  std::mt19937_64 rng(seed);
  if (depth == 0) depth = 10 * n;
  std::uniform_int_distribution<int> gate_dist(0, n >= 2 ? 2 : 1);
  std::uniform_int_distribution<size_t> qubit_dist(0, n - 1);
  for (size_t step = 0; step < depth; ++step) {
    int gate = gate_dist(rng);
    size_t a = qubit_dist(rng);
    if (gate == 2) {
      size_t b = qubit_dist(rng);
      while (b == a) b = qubit_dist(rng);
      apply_gate([a, b](PauliOperator& p) { conjugate_cnot(p, a, b); });
    } else if (gate == 1) {
      apply_gate([a](PauliOperator& p) { conjugate_phase_gate(p, a); });
    } else {
      apply_gate([a](PauliOperator& p) { conjugate_hadamard(p, a); });
    }
  }
}

}  // namespace

Tableau random_tableau(size_t n, uint64_t seed, size_t depth) {
  if (n == 0) throw std::invalid_argument("random_tableau: qubit count must be positive");
  Tableau t = Tableau::identity(n);
  random_circuit(n, seed, depth, [&t](auto&& gate) {
    for (Tableau::Pair& pair : t.pairs) {
      gate(pair.u);
      gate(pair.v);
    }
  });
  return t;
}

CheckMatrix random_check_matrix(size_t n, uint64_t seed, size_t depth) {
  if (n == 0) throw std::invalid_argument("random_check_matrix: qubit count must be positive");
  std::vector<PauliOperator> rows;
  rows.reserve(n);
  for (size_t i = 0; i < n; ++i) rows.push_back(PauliOperator::single_z(n, i));
  random_circuit(n, seed, depth, [&rows](auto&& gate) {
    for (PauliOperator& p : rows) gate(p);
  });
  // Random signs; a separate stream keeps them independent of the circuit.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (PauliOperator& p : rows) {
    if (rng() & 1) p.phase_t = static_cast<uint8_t>((p.phase_t + 2) & 3);
  }
  return CheckMatrix::from_paulis(rows);
}

}  // namespace stab
