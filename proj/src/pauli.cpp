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

#include "stab/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "stab/parallel.hpp"

namespace stab {

uint64_t index_of(const f2::BitVector& label) {
  size_t n = label.size();
  if (n > 63) throw std::invalid_argument("index_of: label too long to pack");
  uint64_t idx = 0;
  for (size_t j = 0; j < n; ++j) {
    if (label.get(j)) idx |= uint64_t{1} << (n - 1 - j);
  }
  return idx;
}

f2::BitVector bits_of(uint64_t index, size_t n) {
  if (n > 63) throw std::invalid_argument("bits_of: label too long to pack");
  if (index >> n) throw std::out_of_range("bits_of: index out of range");
  f2::BitVector label(n);
  for (size_t j = 0; j < n; ++j) label.set(j, (index >> (n - 1 - j)) & 1);
  return label;
}

PauliOperator::PauliOperator(f2::BitVector x_bits, f2::BitVector z_bits, int phase_exponent)
    : x(std::move(x_bits)), z(std::move(z_bits)), phase_t(static_cast<uint8_t>(phase_exponent & 3)) {
  if (x.size() != z.size()) throw std::invalid_argument("PauliOperator: x/z length mismatch");
}

PauliOperator PauliOperator::identity(size_t n) {
  return PauliOperator(f2::BitVector(n), f2::BitVector(n), 0);
}

PauliOperator PauliOperator::single_x(size_t n, size_t qubit) {
  return PauliOperator(f2::BitVector::unit(n, qubit), f2::BitVector(n), 0);
}

PauliOperator PauliOperator::single_z(size_t n, size_t qubit) {
  return PauliOperator(f2::BitVector(n), f2::BitVector::unit(n, qubit), 0);
}

PauliOperator PauliOperator::from_sign_bits(f2::BitVector x_bits, f2::BitVector z_bits, bool c,
                                            bool d) {
  return PauliOperator(std::move(x_bits), std::move(z_bits), (c ? 2 : 0) + (d ? 1 : 0));
}

cplx PauliOperator::phase() const {
  static const cplx table[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  return table[phase_t];
}

bool PauliOperator::is_hermitian_order_two() const { return imag_bit() == x.dot(z); }

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("multiply: qubit count mismatch");
  int reorder = a.z.dot(b.x) ? 2 : 0;  // Z^z X^x picks up (-1)^{z.x} when reordered
  return PauliOperator(a.x ^ b.x, a.z ^ b.z, a.phase_t + b.phase_t + reorder);
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("commutes: qubit count mismatch");
  return a.z.dot(b.x) == b.z.dot(a.x);
}

PauliOperator power_product(std::span<const PauliOperator> generators,
                            const f2::BitVector& exponents) {
  if (generators.size() != exponents.size()) {
    throw std::invalid_argument("power_product: exponent count mismatch");
  }
  size_t n = generators.empty() ? 0 : generators.front().qubits();
  PauliOperator acc = PauliOperator::identity(n);
  for (size_t i = 0; i < generators.size(); ++i) {
    if (exponents.get(i)) acc = multiply(acc, generators[i]);
  }
  return acc;
}

AmplitudeVector::AmplitudeVector(size_t qubits, std::vector<cplx> amps)
    : n(qubits), entries(std::move(amps)) {
  if (entries.size() != (size_t{1} << n)) {
    throw std::invalid_argument("AmplitudeVector: entry count is not 2^n");
  }
}

AmplitudeVector AmplitudeVector::zero(size_t qubits) {
  return AmplitudeVector(qubits, std::vector<cplx>(size_t{1} << qubits, cplx{0.0, 0.0}));
}

AmplitudeVector AmplitudeVector::basis_state(size_t qubits, uint64_t index) {
  AmplitudeVector v = zero(qubits);
  v.entries.at(index) = 1.0;
  return v;
}

double AmplitudeVector::max_abs() const {
  double best = 0.0;
  for (const cplx& e : entries) best = std::max(best, std::abs(e));
  return best;
}

double AmplitudeVector::norm() const {
  double acc = 0.0;
  for (const cplx& e : entries) acc += std::norm(e);
  return std::sqrt(acc);
}

namespace kernels {

PackedPauli pack(const PauliOperator& a) {
  return PackedPauli{index_of(a.x), index_of(a.z), a.phase_t};
}

PackedPauli multiply(const PackedPauli& a, const PackedPauli& b) {
  int reorder = 2 * (std::popcount(a.z_mask & b.x_mask) & 1);
  return PackedPauli{a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask,
                     (a.phase_t + b.phase_t + reorder) & 3};
}

cplx apply_entry_phase(const PackedPauli& p, uint64_t source_index, cplx value) {
  int t = (p.phase_t + 2 * (std::popcount(p.z_mask & source_index) & 1)) & 3;
  switch (t) {
    case 0:
      return value;
    case 1:
      return {value.imag(), -value.real()};  // * -i
    case 2:
      return {-value.real(), -value.imag()};
    default:
      return {-value.imag(), value.real()};  // * i
  }
}

void apply_pauli_serial(const PackedPauli& p, std::span<const cplx> in, std::span<cplx> out) {
  const uint64_t size = in.size();
  for (uint64_t i = 0; i < size; ++i) {
    out[i ^ p.x_mask] = apply_entry_phase(p, i, in[i]);
  }
}

void apply_pauli_parallel(const PackedPauli& p, std::span<const cplx> in, std::span<cplx> out) {
  const int64_t size = static_cast<int64_t>(in.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < size; ++i) {
    uint64_t u = static_cast<uint64_t>(i);
    out[u ^ p.x_mask] = apply_entry_phase(p, u, in[u]);
  }
}

void apply_pauli_in_place_serial(const PackedPauli& p, std::span<cplx> data) {
  const uint64_t size = data.size();
  if (p.x_mask == 0) {
    for (uint64_t i = 0; i < size; ++i) data[i] = apply_entry_phase(p, i, data[i]);
    return;
  }
  for (uint64_t i = 0; i < size; ++i) {
    uint64_t j = i ^ p.x_mask;
    if (j < i) continue;  // each swap pair handled once
    cplx vi = data[i];
    data[i] = apply_entry_phase(p, j, data[j]);
    data[j] = apply_entry_phase(p, i, vi);
  }
}

void apply_pauli_in_place_parallel(const PackedPauli& p, std::span<cplx> data) {
  const int64_t size = static_cast<int64_t>(data.size());
  if (p.x_mask == 0) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < size; ++i) {
      uint64_t u = static_cast<uint64_t>(i);
      data[u] = apply_entry_phase(p, u, data[u]);
    }
    return;
  }
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < size; ++i) {
    uint64_t u = static_cast<uint64_t>(i);
    uint64_t j = u ^ p.x_mask;
    if (j < u) continue;
    cplx vi = data[u];
    data[u] = apply_entry_phase(p, j, data[j]);
    data[j] = apply_entry_phase(p, u, vi);
  }
}

}  // namespace kernels

AmplitudeVector apply(const PauliOperator& a, const AmplitudeVector& v) {
  if (a.qubits() != v.n) throw std::invalid_argument("apply: qubit count mismatch");
  kernels::PackedPauli p = kernels::pack(a);
  AmplitudeVector out = AmplitudeVector::zero(v.n);
  if (parallel_enabled() && v.dim() >= kParallelGrainSize) {
    kernels::apply_pauli_parallel(p, v.entries, out.entries);
  } else {
    kernels::apply_pauli_serial(p, v.entries, out.entries);
  }
  return out;
}

DenseMatrix to_dense(const PauliOperator& a, size_t max_qubits) {
  if (a.qubits() > max_qubits) throw std::invalid_argument("to_dense: qubit count above limit");
  size_t dim = size_t{1} << a.qubits();
  kernels::PackedPauli p = kernels::pack(a);
  DenseMatrix m(dim);
  for (uint64_t col = 0; col < dim; ++col) {
    m.at(col ^ p.x_mask, col) = kernels::apply_entry_phase(p, col, cplx{1.0, 0.0});
  }
  return m;
}

PauliOperator parse_pauli_literal(std::string_view text) {
  int t = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    bool negative = text.front() == '-';
    text.remove_prefix(1);
    if (!text.empty() && text.front() == 'i') {
      text.remove_prefix(1);
      t = negative ? 1 : 3;  // -i = (-i)^1, +i = (-i)^3
    } else if (negative) {
      t = 2;
    }
  }
  if (text.empty()) throw std::invalid_argument("pauli literal: no qubit letters");
  f2::BitVector x(text.size());
  f2::BitVector z(text.size());
  for (size_t j = 0; j < text.size(); ++j) {
    switch (text[j]) {
      case 'I':
        break;
      case 'X':
        x.set(j, true);
        break;
      case 'Z':
        z.set(j, true);
        break;
      case 'Y':
        x.set(j, true);
        z.set(j, true);
        t += 3;  // Y = i X Z = (-i)^3 X Z
        break;
      default:
        throw std::invalid_argument("pauli literal: expected I/X/Y/Z");
    }
  }
  return PauliOperator(std::move(x), std::move(z), t);
}

std::string pauli_literal(const PauliOperator& a) {
  std::string letters;
  letters.reserve(a.qubits());
  int letter_t = 0;
  for (size_t j = 0; j < a.qubits(); ++j) {
    bool xb = a.x.get(j);
    bool zb = a.z.get(j);
    if (xb && zb) {
      letters.push_back('Y');
      letter_t += 3;
    } else if (xb) {
      letters.push_back('X');
    } else if (zb) {
      letters.push_back('Z');
    } else {
      letters.push_back('I');
    }
  }
  int residual = (a.phase_t - letter_t) & 3;
  static const char* prefixes[4] = {"", "-i", "-", "+i"};
  return prefixes[residual] + letters;
}

}  // namespace stab
