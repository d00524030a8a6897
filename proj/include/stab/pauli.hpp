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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stab/dense.hpp"
#include "stab/f2.hpp"

namespace stab {

// Basis-label convention used throughout: a label is one bit per qubit,
// qubit 1 first, and qubit 1 occupies the most significant bit of the packed
// integer index. This matches the tensor order Z_1 = Z (x) I (x) ... used by
// the dense oracle, and XOR on packed indices is entrywise GF(2) addition on
// labels.

/// Packed integer index of an n-qubit basis label.
uint64_t index_of(const f2::BitVector& label);
/// Label of a packed index. Throws std::out_of_range when index >= 2^n.
f2::BitVector bits_of(uint64_t index, size_t n);

/// An n-qubit Pauli unitary (-1)^c (-i)^d X^x Z^z with c,d in GF(2); x and z
/// hold one X / Z exponent per qubit. The phase is tracked exactly as the
/// exponent t in (-i)^t, with c = t>>1 and d = t&1.
struct PauliOperator {
  f2::BitVector x;      // X exponents, one bit per qubit
  f2::BitVector z;      // Z exponents
  uint8_t phase_t = 0;  // phase (-i)^phase_t, 0..3

  PauliOperator() = default;
  PauliOperator(f2::BitVector x_bits, f2::BitVector z_bits, int phase_exponent);

  static PauliOperator identity(size_t n);
  static PauliOperator single_x(size_t n, size_t qubit);  // X on `qubit` (0-based)
  static PauliOperator single_z(size_t n, size_t qubit);
  /// From the (c, d) sign bits of the normal form (-1)^c (-i)^d X^x Z^z.
  static PauliOperator from_sign_bits(f2::BitVector x_bits, f2::BitVector z_bits, bool c, bool d);

  size_t qubits() const { return x.size(); }
  bool sign_bit() const { return (phase_t >> 1) & 1; }  // c
  bool imag_bit() const { return phase_t & 1; }         // d
  cplx phase() const;

  /// True when the operator squares to the identity (equivalently, is
  /// Hermitian): d must equal the parity of x·z.
  bool is_hermitian_order_two() const;

  bool operator==(const PauliOperator& other) const = default;
};

/// Matrix product of two Paulis, phase tracked exactly through the
/// commutation rule Z^z X^x = (-1)^{z.x} X^x Z^z.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

/// True when the symplectic form z_a.x_b + z_b.x_a vanishes.
bool commutes(const PauliOperator& a, const PauliOperator& b);

/// Left-to-right product of the generators selected by `exponents`.
PauliOperator power_product(std::span<const PauliOperator> generators,
                            const f2::BitVector& exponents);

/// State vector of n qubits; entries indexed by packed basis label.
struct AmplitudeVector {
  size_t n = 0;
  std::vector<cplx> entries;  // size 2^n

  AmplitudeVector() = default;
  AmplitudeVector(size_t qubits, std::vector<cplx> amps);
  static AmplitudeVector zero(size_t qubits);
  static AmplitudeVector basis_state(size_t qubits, uint64_t index);

  size_t dim() const { return entries.size(); }
  double max_abs() const;
  double norm() const;
};

/// One pass over the 2^n entries: the result at index_of(label + x) is
/// phase * (-1)^{z.label} * v[index_of(label)].
AmplitudeVector apply(const PauliOperator& a, const AmplitudeVector& v);

/// Dense 2^n x 2^n unitary of a Pauli. Oracle support; n is capped.
DenseMatrix to_dense(const PauliOperator& a, size_t max_qubits = 10);

/// Parses literals like "XZI", "-Y", "+iXZ", "-iZZ": optional phase prefix
/// (+, -, +i, -i) followed by one of I/X/Y/Z per qubit, qubit 1 first.
PauliOperator parse_pauli_literal(std::string_view text);
std::string pauli_literal(const PauliOperator& a);

namespace kernels {

/// Pauli data packed into index space for the amplitude kernels: masks are
/// packed labels, so bit (n-1-j) of a mask is qubit j+1.
struct PackedPauli {
  uint64_t x_mask = 0;
  uint64_t z_mask = 0;
  int phase_t = 0;
};

PackedPauli pack(const PauliOperator& a);

/// Product in index space, same phase tracking as multiply() on operators.
PackedPauli multiply(const PackedPauli& a, const PackedPauli& b);

/// phase * (-1)^{parity(z_mask & i)} as an exact unit multiplier on `value`.
cplx apply_entry_phase(const PackedPauli& p, uint64_t source_index, cplx value);

void apply_pauli_serial(const PackedPauli& p, std::span<const cplx> in, std::span<cplx> out);
void apply_pauli_parallel(const PackedPauli& p, std::span<const cplx> in, std::span<cplx> out);

/// In-place variant used by the column-walk kernels.
void apply_pauli_in_place_serial(const PackedPauli& p, std::span<cplx> data);
void apply_pauli_in_place_parallel(const PackedPauli& p, std::span<cplx> data);

}  // namespace kernels

}  // namespace stab
