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

#include "stab/stabiliser.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

#include "stab/parallel.hpp"

namespace stab {

namespace {

constexpr cplx kUnitPhases[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};  // i^t

/// Exponent t with |ratio - i^t| <= tol, or nullopt.
std::optional<int> quantise_phase(cplx ratio, double tol) {
  for (int t = 0; t < 4; ++t) {
    if (std::abs(ratio - kUnitPhases[t]) <= tol) return t;
  }
  return std::nullopt;
}

}  // namespace

CheckMatrix::CheckMatrix(size_t n, std::vector<CheckRow> rows) : n_(n), rows_(std::move(rows)) {
  if (n == 0) throw InvalidCheckMatrix("qubit count must be positive");
  if (rows_.size() != n) throw InvalidCheckMatrix("check matrix must have exactly n rows");
  for (const CheckRow& r : rows_) {
    if (r.x.size() != n || r.z.size() != n) {
      throw InvalidCheckMatrix("check matrix row width mismatch");
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (rows_[i].z.dot(rows_[j].x) != rows_[j].z.dot(rows_[i].x)) {
        throw InvalidCheckMatrix("check matrix rows do not commute");
      }
    }
  }
  if (f2::rank(symplectic_rows()) != n) {
    throw InvalidCheckMatrix("check matrix rows are dependent");
  }
}

CheckMatrix CheckMatrix::from_paulis(const std::vector<PauliOperator>& paulis) {
  std::vector<CheckRow> rows;
  rows.reserve(paulis.size());
  size_t n = paulis.empty() ? 0 : paulis.front().qubits();
  for (const PauliOperator& p : paulis) {
    if (!p.is_hermitian_order_two()) {
      throw InvalidCheckMatrix("check matrix rows must square to the identity");
    }
    rows.push_back({p.x, p.z, static_cast<bool>(p.sign_bit() ^ p.imag_bit())});
  }
  return CheckMatrix(n, std::move(rows));
}

PauliOperator CheckMatrix::row_pauli(size_t i) const {
  const CheckRow& r = rows_.at(i);
  bool d = r.x.dot(r.z);
  bool c = r.sign ^ d;  // absorb the Z^z X^x -> X^x Z^z reorder sign
  return PauliOperator::from_sign_bits(r.x, r.z, c, d);
}

std::vector<PauliOperator> CheckMatrix::row_paulis() const {
  std::vector<PauliOperator> out;
  out.reserve(n_);
  for (size_t i = 0; i < n_; ++i) out.push_back(row_pauli(i));
  return out;
}

f2::BitMatrix CheckMatrix::symplectic_rows() const {
  std::vector<f2::BitVector> rows;
  rows.reserve(n_);
  for (const CheckRow& r : rows_) rows.push_back(r.x.concat(r.z));
  return f2::BitMatrix::from_rows(std::move(rows), 2 * n_);
}

std::string to_string(StabiliserFailure reason) {
  switch (reason) {
    case StabiliserFailure::SupportSizeNotPowerOfTwo:
      return "support size not a power of two";
    case StabiliserFailure::SupportNotAffine:
      return "support not affine";
    case StabiliserFailure::AmplitudeOffUnitCircle:
      return "amplitudes off unit circle";
    case StabiliserFailure::AmplitudeInconsistent:
      return "amplitude inconsistent with Q,l";
    case StabiliserFailure::ZeroVector:
      return "zero vector";
  }
  return "unknown";
}

namespace kernels {

PackedTriple pack(const AffineSubspaceTriple& t) {
  PackedTriple p;
  p.k = t.dimension();
  if (p.k > 63) throw std::invalid_argument("triple dimension too large to pack");
  p.shift_index = index_of(t.shift);
  p.basis_indices.reserve(p.k);
  for (const f2::BitVector& b : t.basis) p.basis_indices.push_back(index_of(b));
  p.qform_rows.assign(p.k, 0);
  for (size_t i = 0; i < p.k; ++i) {
    for (size_t j = i; j < p.k; ++j) {
      if (t.qform.get(i, j)) p.qform_rows[i] |= uint64_t{1} << j;
    }
  }
  p.lmap_mask = 0;
  for (size_t i = 0; i < p.k; ++i) {
    if (t.lmap.get(i)) p.lmap_mask |= uint64_t{1} << i;
  }
  p.scale = std::pow(2.0, -0.5 * static_cast<double>(p.k));
  return p;
}

int phase_exponent_at(const PackedTriple& t, uint64_t coords) {
  int l = std::popcount(t.lmap_mask & coords) & 1;
  int q = 0;
  uint64_t remaining = coords;
  while (remaining != 0) {
    int i = std::countr_zero(remaining);
    remaining &= remaining - 1;
    q ^= std::popcount(t.qform_rows[i] & coords) & 1;
  }
  return (l + 2 * q) & 3;
}

uint64_t label_at(const PackedTriple& t, uint64_t coords) {
  uint64_t label = t.shift_index;
  uint64_t remaining = coords;
  while (remaining != 0) {
    int i = std::countr_zero(remaining);
    remaining &= remaining - 1;
    label ^= t.basis_indices[i];
  }
  return label;
}

void fill_triple_amplitudes_serial(const PackedTriple& t, std::span<cplx> out) {
  const uint64_t count = uint64_t{1} << t.k;
  for (uint64_t a = 0; a < count; ++a) {
    out[label_at(t, a)] = kUnitPhases[phase_exponent_at(t, a)] * t.scale;
  }
}

void fill_triple_amplitudes_parallel(const PackedTriple& t, std::span<cplx> out) {
  const int64_t count = int64_t{1} << t.k;
#pragma omp parallel for schedule(static)
  for (int64_t a = 0; a < count; ++a) {
    uint64_t u = static_cast<uint64_t>(a);
    out[label_at(t, u)] = kUnitPhases[phase_exponent_at(t, u)] * t.scale;
  }
}

namespace {

/// Position fails when the sorted support breaks affine closure or the
/// amplitude ratio strays from the predicted fourth root of unity.
bool position_ok(const PackedTriple& t, std::span<const uint64_t> support,
                 std::span<const cplx> entries, cplx factor, double tolerance, uint64_t pos) {
  uint64_t predicted = label_at(t, pos) ^ t.shift_index;
  if (support[pos] != predicted) return false;
  cplx ratio = entries[support[pos] ^ t.shift_index] / factor;
  return std::abs(ratio - kUnitPhases[phase_exponent_at(t, pos)]) <= tolerance;
}

SupportCheckResult classify(const PackedTriple& t, std::span<const uint64_t> support,
                            std::span<const cplx> entries, cplx factor, double tolerance,
                            uint64_t pos) {
  SupportCheckResult r;
  r.bad_position = pos;
  uint64_t predicted = label_at(t, pos) ^ t.shift_index;
  if (support[pos] == predicted) {
    cplx ratio = entries[support[pos] ^ t.shift_index] / factor;
    r.off_circle = std::abs(std::abs(ratio) - 1.0) > tolerance;
  }
  return r;
}

}  // namespace

SupportCheckResult check_support_serial(const PackedTriple& t,
                                        std::span<const uint64_t> sorted_shifted_support,
                                        std::span<const cplx> entries, cplx factor,
                                        double tolerance) {
  const uint64_t count = sorted_shifted_support.size();
  for (uint64_t pos = 0; pos < count; ++pos) {
    if (!position_ok(t, sorted_shifted_support, entries, factor, tolerance, pos)) {
      return classify(t, sorted_shifted_support, entries, factor, tolerance, pos);
    }
  }
  return {};
}

SupportCheckResult check_support_parallel(const PackedTriple& t,
                                          std::span<const uint64_t> sorted_shifted_support,
                                          std::span<const cplx> entries, cplx factor,
                                          double tolerance) {
  const int64_t count = static_cast<int64_t>(sorted_shifted_support.size());
  int64_t lowest_bad = count;
#pragma omp parallel for schedule(static) reduction(min : lowest_bad)
  for (int64_t pos = 0; pos < count; ++pos) {
    if (pos < lowest_bad &&
        !position_ok(t, sorted_shifted_support, entries, factor, tolerance,
                     static_cast<uint64_t>(pos))) {
      lowest_bad = pos;
    }
  }
  if (lowest_bad == count) return {};
  return classify(t, sorted_shifted_support, entries, factor, tolerance,
                  static_cast<uint64_t>(lowest_bad));
}

}  // namespace kernels

namespace {

struct Extraction {
  bool ok = false;
  StabiliserFailure reason{};
  std::optional<uint64_t> witness;
  std::string detail;
  AffineSubspaceTriple triple;
  cplx factor{};
};

Extraction fail(StabiliserFailure reason, std::optional<uint64_t> witness, std::string detail) {
  Extraction e;
  e.ok = false;
  e.reason = reason;
  e.witness = witness;
  e.detail = std::move(detail);
  return e;
}

/// Shared core of the amplitude-side conversion and verification. In trusted
/// mode the affine-closure and full amplitude re-checks are skipped; the
/// remaining checks still catch detectable violations.
Extraction extract_triple(const AmplitudeVector& v, bool full_checks) {
  const size_t n = v.n;
  const double max_abs = v.max_abs();
  if (max_abs == 0.0) return fail(StabiliserFailure::ZeroVector, std::nullopt, "all amplitudes zero");
  const double zero_tol = kRelativeZeroTolerance * max_abs;

  std::vector<uint64_t> support;
  for (uint64_t i = 0; i < v.dim(); ++i) {
    if (std::abs(v.entries[i]) > zero_tol) support.push_back(i);
  }
  if (!std::has_single_bit(support.size())) {
    return fail(StabiliserFailure::SupportSizeNotPowerOfTwo, std::nullopt,
                "support size " + std::to_string(support.size()));
  }
  const size_t k = std::countr_zero(support.size());
  const uint64_t shift_index = support.front();
  const cplx factor = v.entries[shift_index];

  for (uint64_t& s : support) s ^= shift_index;
  std::sort(support.begin(), support.end());

  std::vector<uint64_t> basis_indices(k);
  for (size_t i = 0; i < k; ++i) basis_indices[i] = support[size_t{1} << i];

  // l from the weight-1 coordinate amplitudes, the diagonal of the form from
  // their signs, off-diagonals from the weight-2 coordinate amplitudes.
  f2::BitVector lmap(k);
  f2::BitMatrix qform(k, k);
  const double tol = kPhaseGridTolerance;
  std::vector<int> weight1_exp(k, 0);
  for (size_t i = 0; i < k; ++i) {
    uint64_t label = basis_indices[i] ^ shift_index;
    cplx ratio = v.entries[label] / factor;
    std::optional<int> t = quantise_phase(ratio, tol);
    if (!t) {
      bool off_circle = std::abs(std::abs(ratio) - 1.0) > tol;
      return fail(off_circle ? StabiliserFailure::AmplitudeOffUnitCircle
                             : StabiliserFailure::AmplitudeInconsistent,
                  label, "amplitude ratio off the {1,-1,i,-i} grid");
    }
    weight1_exp[i] = *t;
    lmap.set(i, *t & 1);
    qform.set(i, i, (*t >> 1) & 1);
  }
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      uint64_t shifted = support[(size_t{1} << i) | (size_t{1} << j)];
      uint64_t label = shifted ^ shift_index;
      cplx ratio = v.entries[label] / factor;
      std::optional<int> t = quantise_phase(ratio, tol);
      if (!t) {
        bool off_circle = std::abs(std::abs(ratio) - 1.0) > tol;
        return fail(off_circle ? StabiliserFailure::AmplitudeOffUnitCircle
                               : StabiliserFailure::AmplitudeInconsistent,
                    label, "amplitude ratio off the {1,-1,i,-i} grid");
      }
      bool l_parity = lmap.get(i) ^ lmap.get(j);
      if ((*t & 1) != static_cast<int>(l_parity)) {
        return fail(StabiliserFailure::AmplitudeInconsistent, label,
                    "weight-2 amplitude parity clashes with l");
      }
      bool qij = ((*t >> 1) & 1) ^ qform.get(i, i) ^ qform.get(j, j);
      qform.set(i, j, qij);
    }
  }

  Extraction e;
  e.triple.n = n;
  e.triple.shift = bits_of(shift_index, n);
  e.triple.basis.reserve(k);
  for (size_t i = 0; i < k; ++i) e.triple.basis.push_back(bits_of(basis_indices[i], n));
  e.triple.qform = std::move(qform);
  e.triple.lmap = std::move(lmap);
  e.factor = factor;

  if (full_checks) {
    kernels::PackedTriple packed = kernels::pack(e.triple);
    kernels::SupportCheckResult check =
        (parallel_enabled() && support.size() >= kParallelGrainSize)
            ? kernels::check_support_parallel(packed, support, v.entries, factor, tol)
            : kernels::check_support_serial(packed, support, v.entries, factor, tol);
    if (check.bad_position) {
      uint64_t shifted = support[*check.bad_position];
      uint64_t predicted = kernels::label_at(packed, *check.bad_position) ^ packed.shift_index;
      if (shifted != predicted) {
        return fail(StabiliserFailure::SupportNotAffine, shifted ^ shift_index,
                    "support label breaks affine closure");
      }
      return fail(check.off_circle ? StabiliserFailure::AmplitudeOffUnitCircle
                                   : StabiliserFailure::AmplitudeInconsistent,
                  shifted ^ shift_index, "amplitude disagrees with extracted Q,l");
    }
  }

  e.ok = true;
  return e;
}

}  // namespace

TripleWithFactor amplitudes_to_triple(const AmplitudeVector& v) {
  Extraction e = extract_triple(v, /*full_checks=*/false);
  if (!e.ok) {
    throw NotAStabiliserState(to_string(e.reason) + (e.detail.empty() ? "" : ": " + e.detail));
  }
  return {std::move(e.triple), e.factor};
}

StabiliserDiagnosis verify_stabiliser_vector(const AmplitudeVector& v) {
  Extraction e = extract_triple(v, /*full_checks=*/true);
  StabiliserDiagnosis d;
  d.accepted = e.ok;
  if (e.ok) {
    d.triple = std::move(e.triple);
    d.global_factor = e.factor;
  } else {
    d.failure_reason = e.reason;
    d.witness = e.witness;
    d.detail = std::move(e.detail);
  }
  return d;
}

AffineSubspaceTriple check_to_triple(const CheckMatrix& m) {
  const size_t n = m.qubits();
  std::vector<PauliOperator> rows = m.row_paulis();

  // Row reduce the (x|z) block; a row addition is an exact Pauli product, so
  // the reduced rows generate the same group with correct signs.
  auto bit_at = [&](size_t r, size_t col) {
    return col < n ? rows[r].x.get(col) : rows[r].z.get(col - n);
  };
  size_t pivot_row = 0;
  for (size_t col = 0; col < 2 * n && pivot_row < n; ++col) {
    size_t sel = n;
    for (size_t r = pivot_row; r < n; ++r) {
      if (bit_at(r, col)) {
        sel = r;
        break;
      }
    }
    if (sel == n) continue;
    std::swap(rows[sel], rows[pivot_row]);
    for (size_t r = 0; r < n; ++r) {
      if (r != pivot_row && bit_at(r, col)) rows[r] = multiply(rows[r], rows[pivot_row]);
    }
    ++pivot_row;
  }

  size_t k = 0;
  while (k < n && rows[k].x.any()) ++k;

  // Shift: any solution of the constraints imposed by the pure-Z rows.
  std::vector<f2::BitVector> constraint_rows;
  f2::BitVector gamma(n - k);
  for (size_t i = k; i < n; ++i) {
    assert(!rows[i].x.any());
    constraint_rows.push_back(rows[i].z);
    gamma.set(i - k, rows[i].sign_bit());
  }
  std::optional<f2::BitVector> shift =
      f2::solve(f2::BitMatrix::from_rows(std::move(constraint_rows), n), gamma);
  if (!shift) {
    throw InvalidCheckMatrix("shift system inconsistent; check matrix is corrupt");
  }

  AffineSubspaceTriple t;
  t.n = n;
  t.shift = std::move(*shift);
  t.basis.reserve(k);
  t.lmap = f2::BitVector(k);
  t.qform = f2::BitMatrix(k, k);
  for (size_t i = 0; i < k; ++i) {
    t.basis.push_back(rows[i].x);
    bool li = rows[i].z.dot(rows[i].x);
    t.lmap.set(i, li);
    t.qform.set(i, i, rows[i].sign_bit() ^ rows[i].z.dot(rows[i].x ^ t.shift));
    for (size_t j = i + 1; j < k; ++j) {
      bool lj = rows[j].z.dot(rows[j].x);
      t.qform.set(i, j, rows[i].z.dot(rows[j].x) ^ (li && lj));
    }
  }
  return t;
}

namespace {

void validate_triple(const AffineSubspaceTriple& t) {
  const size_t k = t.basis.size();
  if (t.n == 0) throw InvalidTriple("qubit count must be positive");
  if (k > t.n) throw InvalidTriple("basis larger than the space");
  if (t.shift.size() != t.n) throw InvalidTriple("shift length mismatch");
  for (const f2::BitVector& b : t.basis) {
    if (b.size() != t.n) throw InvalidTriple("basis vector length mismatch");
  }
  if (t.lmap.size() != k) throw InvalidTriple("lmap length mismatch");
  if (t.qform.row_count() != k || t.qform.col_count() != k) {
    throw InvalidTriple("qform shape mismatch");
  }
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (t.qform.get(i, j)) throw InvalidTriple("qform must be upper triangular");
    }
  }
  if (k > 0 && f2::rank(f2::BitMatrix::from_rows(t.basis, t.n)) != k) {
    throw InvalidTriple("basis vectors dependent");
  }
}

}  // namespace

CheckMatrix triple_to_check(const AffineSubspaceTriple& t) {
  validate_triple(t);
  const size_t n = t.n;
  const size_t k = t.dimension();

  f2::RrefResult rr = f2::rref(f2::BitMatrix::from_rows(t.basis, n));
  const f2::BitMatrix& reduced = rr.matrix;            // rows are the new basis
  const f2::BitMatrix& change = rr.record.transform;   // change * old_basis = reduced

  // Re-express l and Q in the reduced basis. Old coordinates relate to new
  // ones through the transpose of the change-of-basis matrix, so the matrix
  // of the form becomes change * Q * change^T, refolded to upper triangular.
  f2::BitVector lmap2 = change.mul(t.lmap);
  f2::BitMatrix mixed = change.mul(t.qform).mul(change.transposed());
  f2::BitMatrix qform2(k, k);
  for (size_t i = 0; i < k; ++i) {
    qform2.set(i, i, mixed.get(i, i));
    for (size_t j = i + 1; j < k; ++j) qform2.set(i, j, mixed.get(i, j) ^ mixed.get(j, i));
  }

  std::vector<f2::BitVector> orthogonal = f2::null_space_basis(reduced);

  f2::PreparedSolver solver(reduced);
  std::vector<CheckRow> rows;
  rows.reserve(n);
  for (size_t i = 0; i < k; ++i) {
    f2::BitVector rhs(k);
    for (size_t j = 0; j < k; ++j) {
      bool sym = i == j ? false : (i < j ? qform2.get(i, j) : qform2.get(j, i));
      rhs.set(j, sym ^ (lmap2.get(i) && lmap2.get(j)));
    }
    std::optional<f2::BitVector> zpart = solver.solve(rhs);
    assert(zpart.has_value());  // reduced rows are independent
    bool c = zpart->dot(reduced.row(i) ^ t.shift) ^ qform2.get(i, i);
    bool row_sign = c ^ zpart->dot(reduced.row(i));
    rows.push_back({reduced.row(i), std::move(*zpart), row_sign});
  }
  for (f2::BitVector& rho : orthogonal) {
    bool gamma = rho.dot(t.shift);
    rows.push_back({f2::BitVector(n), std::move(rho), gamma});
  }
  return CheckMatrix(n, std::move(rows));
}

AmplitudeVector triple_to_amplitudes(const AffineSubspaceTriple& t) {
  validate_triple(t);
  if (t.n > 26) throw InvalidTriple("qubit count too large for amplitude synthesis");
  kernels::PackedTriple packed = kernels::pack(t);
  AmplitudeVector out = AmplitudeVector::zero(t.n);
  if (parallel_enabled() && (uint64_t{1} << packed.k) >= kParallelGrainSize) {
    kernels::fill_triple_amplitudes_parallel(packed, out.entries);
  } else {
    kernels::fill_triple_amplitudes_serial(packed, out.entries);
  }
  return out;
}

CheckMatrix amplitudes_to_check(const AmplitudeVector& v) {
  return triple_to_check(amplitudes_to_triple(v).triple);
}

AmplitudeVector check_to_amplitudes(const CheckMatrix& m) {
  return triple_to_amplitudes(check_to_triple(m));
}

}  // namespace stab
