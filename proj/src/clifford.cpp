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

#include "stab/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

#include "stab/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stab {

namespace {

constexpr cplx kUnitPhases[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};  // i^t

/// Exponent s with value/|value| within tol of i^s, or nullopt.
std::optional<int> quantise_unit_phase(cplx value, double tol) {
  double mag = std::abs(value);
  if (mag == 0.0) return std::nullopt;
  cplx dir = value / mag;
  for (int s = 0; s < 4; ++s) {
    if (std::abs(dir - kUnitPhases[s]) <= tol) return s;
  }
  return std::nullopt;
}

/// Index bit of qubit j (0-based): qubit 1 is the most significant bit.
uint64_t qubit_index_bit(size_t n, size_t qubit) { return uint64_t{1} << (n - 1 - qubit); }

/// Multiplies an operator's phase by the value i^s.
void scale_phase_by_i_power(PauliOperator& p, int s) {
  p.phase_t = static_cast<uint8_t>((p.phase_t + 4 - (s & 3)) & 3);
}

std::optional<uint64_t> first_above(const cplx* column, uint64_t dim, double threshold) {
  for (uint64_t i = 0; i < dim; ++i) {
    if (std::abs(column[i]) > threshold) return i;
  }
  return std::nullopt;
}

}  // namespace

Tableau Tableau::identity(size_t n) {
  Tableau t;
  t.n = n;
  t.pairs.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    t.pairs.push_back({PauliOperator::single_z(n, i), PauliOperator::single_x(n, i)});
  }
  return t;
}

CliffordMatrix::CliffordMatrix(size_t qubits, DenseMatrix m) : n(qubits), mat(std::move(m)) {
  if (n == 0) throw std::invalid_argument("CliffordMatrix: qubit count must be positive");
  if (mat.dim != (size_t{1} << n)) {
    throw std::invalid_argument("CliffordMatrix: dimension is not 2^n");
  }
}

std::string to_string(CliffordFailure reason) {
  switch (reason) {
    case CliffordFailure::FirstColumnNotStabiliser:
      return "first column not stabiliser";
    case CliffordFailure::ColumnNotStabilised:
      return "column not (anti)stabilised by U_i";
    case CliffordFailure::CandidateVNotCommuting:
      return "candidate V_i do not commute";
    case CliffordFailure::RelativePhaseInconsistent:
      return "relative column phase inconsistent";
    case CliffordFailure::NonUnitarySupportPattern:
      return "non-unitary support pattern";
  }
  return "unknown";
}

bool is_valid_tableau(const Tableau& t) {
  if (t.pairs.size() != t.n || t.n == 0) return false;
  for (const Tableau::Pair& pair : t.pairs) {
    if (pair.u.qubits() != t.n || pair.v.qubits() != t.n) return false;
    if (!pair.u.is_hermitian_order_two() || !pair.v.is_hermitian_order_two()) return false;
  }
  for (size_t i = 0; i < t.n; ++i) {
    for (size_t j = 0; j < t.n; ++j) {
      if (!commutes(t.pairs[i].u, t.pairs[j].u)) return false;
      if (!commutes(t.pairs[i].v, t.pairs[j].v)) return false;
      bool anti = !commutes(t.pairs[i].u, t.pairs[j].v);
      if (anti != (i == j)) return false;
    }
  }
  return true;
}

namespace kernels {

namespace {

/// True when gen * column equals sign * column entrywise within `tolerance`.
bool column_stabilised(const cplx* column, uint64_t dim, const PackedPauli& gen, bool negate,
                       double tolerance) {
  for (uint64_t i = 0; i < dim; ++i) {
    uint64_t src = i ^ gen.x_mask;
    cplx lhs = apply_entry_phase(gen, src, column[src]);
    cplx rhs = negate ? -column[i] : column[i];
    if (std::abs(lhs - rhs) > tolerance) return false;
  }
  return true;
}

bool column_ok(const DenseMatrix& m, std::span<const PackedPauli> generators,
               std::span<const uint64_t> sign_rows, double tolerance, uint64_t col) {
  const cplx* column = m.column(col);
  for (size_t g = 0; g < generators.size(); ++g) {
    bool negate = std::popcount(sign_rows[g] & col) & 1;
    if (!column_stabilised(column, m.dim, generators[g], negate, tolerance)) return false;
  }
  return true;
}

}  // namespace

std::optional<uint64_t> column_stabilisation_witness_serial(
    const DenseMatrix& m, std::span<const PackedPauli> generators,
    std::span<const uint64_t> sign_rows, double tolerance) {
  for (uint64_t col = 0; col < m.dim; ++col) {
    if (!column_ok(m, generators, sign_rows, tolerance, col)) return col;
  }
  return std::nullopt;
}

std::optional<uint64_t> column_stabilisation_witness_parallel(
    const DenseMatrix& m, std::span<const PackedPauli> generators,
    std::span<const uint64_t> sign_rows, double tolerance) {
  const int64_t dim = static_cast<int64_t>(m.dim);
  int64_t lowest_bad = dim;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : lowest_bad)
  for (int64_t col = 0; col < dim; ++col) {
    if (col < lowest_bad &&
        !column_ok(m, generators, sign_rows, tolerance, static_cast<uint64_t>(col))) {
      lowest_bad = col;
    }
  }
  if (lowest_bad == dim) return std::nullopt;
  return static_cast<uint64_t>(lowest_bad);
}

namespace {

void walk_columns(std::span<const PackedPauli> v_parts, DenseMatrix& out, std::vector<cplx>& w,
                  uint64_t begin, uint64_t end) {
  const size_t n = v_parts.size();
  for (uint64_t t = begin; t < end; ++t) {
    size_t qubit = n - 1 - static_cast<size_t>(std::countr_zero(t));
    apply_pauli_in_place_serial(v_parts[qubit], w);
    std::copy(w.begin(), w.end(), out.column(f2::gray_code(t)));
  }
}

}  // namespace

void fill_tableau_columns_serial(std::span<const PackedPauli> v_parts, DenseMatrix& out) {
  const uint64_t dim = out.dim;
  std::vector<cplx> w(out.column(0), out.column(0) + dim);
  walk_columns(v_parts, out, w, 1, dim);
}

void fill_tableau_columns_parallel(std::span<const PackedPauli> v_parts, DenseMatrix& out) {
#ifndef _OPENMP
  fill_tableau_columns_serial(v_parts, out);
#else
  const uint64_t dim = out.dim;
  const size_t n = v_parts.size();
  const std::vector<cplx> base(out.column(0), out.column(0) + dim);
#pragma omp parallel
  {
    const uint64_t threads = static_cast<uint64_t>(omp_get_num_threads());
    const uint64_t me = static_cast<uint64_t>(omp_get_thread_num());
    const uint64_t chunk = (dim + threads - 1) / threads;
    const uint64_t begin = me * chunk;
    const uint64_t end = std::min(dim, begin + chunk);
    if (begin < end) {
      std::vector<cplx> w = base;
      if (begin > 0) {
        // Jump straight to the chunk head: one product of the flipped v parts
        // (they commute exactly, so the order is immaterial), one application.
        PackedPauli prod{0, 0, 0};
        uint64_t code = f2::gray_code(begin);
        for (size_t qubit = 0; qubit < n; ++qubit) {
          if (code & qubit_index_bit(n, qubit)) prod = multiply(prod, v_parts[qubit]);
        }
        apply_pauli_serial(prod, base, w);
        std::copy(w.begin(), w.end(), out.column(code));
      }
      walk_columns(v_parts, out, w, std::max<uint64_t>(begin, 1), end);
    }
  }
#endif
}

}  // namespace kernels

namespace {

/// Everything the extraction and the verifier share once the generators of
/// column 0's stabiliser group are known.
struct ConjugationContext {
  size_t n = 0;
  uint64_t dim = 0;
  double zero_tol = 0.0;
  double phase_tol = kPhaseGridTolerance;
  std::vector<PauliOperator> generators;
  std::vector<kernels::PackedPauli> packed_generators;
  std::vector<uint64_t> probes;     // first nonzero index of column 0 and each weight-1 column
  std::vector<uint64_t> rho_masks;  // per generator, sign pattern over weight-1 columns
};

struct StepFailure {
  CliffordFailure reason;
  uint64_t witness;
  std::string detail;
};

/// Scans column 0 and the weight-1 columns for their first nonzero entries.
std::optional<StepFailure> scan_probe_columns(const DenseMatrix& m, ConjugationContext& ctx) {
  ctx.probes.assign(ctx.n + 1, 0);
  for (size_t j = 0; j <= ctx.n; ++j) {
    uint64_t col = j == 0 ? 0 : qubit_index_bit(ctx.n, j - 1);
    std::optional<uint64_t> probe = first_above(m.column(col), ctx.dim, ctx.zero_tol);
    if (!probe) {
      return StepFailure{CliffordFailure::NonUnitarySupportPattern, col, "column has no support"};
    }
    ctx.probes[j] = *probe;
  }
  return std::nullopt;
}

/// Determines the generator sign patterns over the weight-1 columns from one
/// probe entry per (generator, column) pair.
std::optional<StepFailure> extract_sign_patterns(const DenseMatrix& m, ConjugationContext& ctx) {
  ctx.rho_masks.assign(ctx.generators.size(), 0);
  for (size_t j = 0; j < ctx.n; ++j) {
    uint64_t col = qubit_index_bit(ctx.n, j);
    const cplx* column = m.column(col);
    uint64_t m0 = ctx.probes[j + 1];
    for (size_t g = 0; g < ctx.generators.size(); ++g) {
      const kernels::PackedPauli& gen = ctx.packed_generators[g];
      uint64_t src = m0 ^ gen.x_mask;
      cplx moved = kernels::apply_entry_phase(gen, src, column[src]);
      cplx base = column[m0];
      if (std::abs(moved - base) <= ctx.phase_tol * std::abs(base)) continue;
      if (std::abs(moved + base) <= ctx.phase_tol * std::abs(base)) {
        ctx.rho_masks[g] |= col;
        continue;
      }
      return StepFailure{CliffordFailure::ColumnNotStabilised, col,
                         "probe entry is not an eigenvalue +-1 match"};
    }
  }
  return std::nullopt;
}

/// Inverts the sign-pattern matrix and recombines the generators into the
/// conjugates of the single-qubit Z gates.
std::optional<StepFailure> recombine_generators(const ConjugationContext& ctx,
                                                std::vector<PauliOperator>& us) {
  const size_t n = ctx.n;
  f2::BitMatrix rho_columns(n, n);
  for (size_t g = 0; g < n; ++g) {
    for (size_t j = 0; j < n; ++j) {
      if (ctx.rho_masks[g] & qubit_index_bit(n, j)) rho_columns.set(j, g, true);
    }
  }
  std::optional<f2::BitMatrix> inverse = f2::invert(rho_columns);
  if (!inverse) {
    return StepFailure{CliffordFailure::NonUnitarySupportPattern, 0,
                       "sign patterns of the weight-1 columns are degenerate"};
  }
  us.clear();
  us.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    f2::BitVector exponents(n);
    for (size_t j = 0; j < n; ++j) exponents.set(j, inverse->get(j, i));
    us.push_back(power_product(ctx.generators, exponents));
  }
  return std::nullopt;
}

/// Candidate partners: one Pauli per qubit pairing symplectically with the
/// u rows, from a right inverse of the u bit matrix.
std::vector<PauliOperator> candidate_partners(const std::vector<PauliOperator>& us) {
  const size_t n = us.front().qubits();
  std::vector<f2::BitVector> rows;
  rows.reserve(n);
  for (const PauliOperator& u : us) rows.push_back(u.x.concat(u.z));
  std::optional<f2::BitMatrix> rinv =
      f2::right_inverse(f2::BitMatrix::from_rows(std::move(rows), 2 * n));
  if (!rinv) throw ExtractionFailed("conjugated Z rows are dependent");
  std::vector<PauliOperator> ws;
  ws.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    f2::BitVector alpha(n);
    f2::BitVector beta(n);
    for (size_t j = 0; j < n; ++j) {
      alpha.set(j, rinv->get(j, i));
      beta.set(j, rinv->get(n + j, i));
    }
    bool d = alpha.dot(beta);
    ws.push_back(PauliOperator::from_sign_bits(std::move(beta), std::move(alpha), false, d));
  }
  return ws;
}

/// Phase exponent s (value ~ i^s) of column `dst` at the image of `probe`
/// under w, relative to w applied to column `src`.
std::optional<int> relative_phase_exponent(const DenseMatrix& m, const ConjugationContext& ctx,
                                           const kernels::PackedPauli& w, uint64_t src_col,
                                           uint64_t probe, uint64_t dst_col) {
  cplx predicted = kernels::apply_entry_phase(w, probe, m.column(src_col)[probe]);
  cplx actual = m.column(dst_col)[probe ^ w.x_mask];
  if (std::abs(predicted) == 0.0) return std::nullopt;
  return quantise_unit_phase(actual / predicted, ctx.phase_tol);
}

/// Corrects the candidate partners against the weight-0/1/2 columns; on
/// success vs[i] is exactly the conjugate of the single-qubit X gate.
std::optional<StepFailure> correct_partners(const DenseMatrix& m, const ConjugationContext& ctx,
                                            const std::vector<PauliOperator>& us,
                                            std::vector<PauliOperator>& vs) {
  const size_t n = ctx.n;
  std::vector<PauliOperator> ws = candidate_partners(us);
  vs.clear();
  vs.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    kernels::PackedPauli w = kernels::pack(ws[i]);
    uint64_t ei = qubit_index_bit(n, i);
    std::optional<int> base = relative_phase_exponent(m, ctx, w, 0, ctx.probes[0], ei);
    if (!base) {
      return StepFailure{CliffordFailure::RelativePhaseInconsistent, ei,
                         "column phase relative to the candidate partner is off the grid"};
    }
    f2::BitVector exponents(n);
    for (size_t j = 0; j < n; ++j) {
      uint64_t ej = qubit_index_bit(n, j);
      std::optional<int> s = relative_phase_exponent(m, ctx, w, ej, ctx.probes[j + 1], ej ^ ei);
      if (!s || ((*s - *base) & 1)) {
        return StepFailure{CliffordFailure::RelativePhaseInconsistent, ej ^ ei,
                           "weight-2 column phase is inconsistent"};
      }
      exponents.set(j, ((*s - *base) & 3) == 2);
    }
    PauliOperator v = multiply(ws[i], power_product(us, exponents));
    scale_phase_by_i_power(v, *base);
    vs.push_back(std::move(v));
  }
  for (size_t i = 0; i < n; ++i) {
    if (!vs[i].is_hermitian_order_two()) {
      return StepFailure{CliffordFailure::CandidateVNotCommuting, qubit_index_bit(n, i),
                         "candidate partner is not order 2"};
    }
    for (size_t j = i + 1; j < n; ++j) {
      if (!commutes(vs[i], vs[j])) {
        return StepFailure{CliffordFailure::CandidateVNotCommuting,
                           qubit_index_bit(n, i) ^ qubit_index_bit(n, j),
                           "candidate partners do not commute"};
      }
    }
  }
  return std::nullopt;
}

/// Relative-phase walk over all columns in Gray-code order, tracking one
/// nonzero index. Each step compares one predicted entry, modulus included.
std::optional<StepFailure> walk_relative_phases(const DenseMatrix& m,
                                                const ConjugationContext& ctx,
                                                const std::vector<PauliOperator>& vs,
                                                double matrix_max) {
  const size_t n = ctx.n;
  std::vector<kernels::PackedPauli> packed;
  packed.reserve(n);
  for (const PauliOperator& v : vs) packed.push_back(kernels::pack(v));
  uint64_t probe = ctx.probes[0];
  uint64_t current = 0;
  const double tol = ctx.phase_tol * matrix_max;
  for (uint64_t t = 1; t < ctx.dim; ++t) {
    size_t qubit = n - 1 - static_cast<size_t>(std::countr_zero(t));
    uint64_t next = f2::gray_code(t);
    const kernels::PackedPauli& v = packed[qubit];
    cplx predicted = kernels::apply_entry_phase(v, probe, m.column(current)[probe]);
    probe ^= v.x_mask;
    cplx actual = m.column(next)[probe];
    if (std::abs(actual - predicted) > tol) {
      return StepFailure{CliffordFailure::RelativePhaseInconsistent, next,
                         "column disagrees with its predecessor under the tableau"};
    }
    current = next;
  }
  return std::nullopt;
}

AmplitudeVector column_as_vector(const DenseMatrix& m, size_t n, uint64_t col) {
  return AmplitudeVector(n, std::vector<cplx>(m.column(col), m.column(col) + m.dim));
}

}  // namespace

Tableau matrix_to_tableau(const CliffordMatrix& c) {
  const size_t n = c.n;
  const DenseMatrix& m = c.mat;
  ConjugationContext ctx;
  ctx.n = n;
  ctx.dim = m.dim;
  const double matrix_max = m.max_abs();
  if (matrix_max == 0.0) throw ExtractionFailed("zero matrix");
  ctx.zero_tol = kRelativeZeroTolerance * matrix_max;

  CheckMatrix generators = [&] {
    try {
      return triple_to_check(amplitudes_to_triple(column_as_vector(m, n, 0)).triple);
    } catch (const NotAStabiliserState& e) {
      throw ExtractionFailed(std::string("first column: ") + e.what());
    }
  }();
  ctx.generators = generators.row_paulis();
  for (const PauliOperator& g : ctx.generators) ctx.packed_generators.push_back(kernels::pack(g));

  if (auto f = scan_probe_columns(m, ctx)) throw ExtractionFailed(f->detail);
  if (auto f = extract_sign_patterns(m, ctx)) throw ExtractionFailed(f->detail);

  std::vector<PauliOperator> us;
  if (auto f = recombine_generators(ctx, us)) throw ExtractionFailed(f->detail);

  std::vector<PauliOperator> vs;
  if (auto f = correct_partners(m, ctx, us, vs)) throw ExtractionFailed(f->detail);

  Tableau t;
  t.n = n;
  t.pairs.reserve(n);
  for (size_t i = 0; i < n; ++i) t.pairs.push_back({std::move(us[i]), std::move(vs[i])});
  return t;
}

CliffordDiagnosis verify_clifford_matrix(const CliffordMatrix& c) {
  const size_t n = c.n;
  const DenseMatrix& m = c.mat;
  CliffordDiagnosis d;
  auto reject = [&d](CliffordFailure reason, uint64_t witness, std::string detail) {
    d.accepted = false;
    d.failure_reason = reason;
    d.witness_column = witness;
    d.detail = std::move(detail);
    return d;
  };

  ConjugationContext ctx;
  ctx.n = n;
  ctx.dim = m.dim;
  const double matrix_max = m.max_abs();
  if (matrix_max == 0.0) {
    return reject(CliffordFailure::NonUnitarySupportPattern, 0, "zero matrix");
  }
  ctx.zero_tol = kRelativeZeroTolerance * matrix_max;

  // Column 0 must be a stabiliser state; its group supplies the generators.
  StabiliserDiagnosis col0 = verify_stabiliser_vector(column_as_vector(m, n, 0));
  if (!col0.accepted) {
    return reject(CliffordFailure::FirstColumnNotStabiliser, 0,
                  to_string(*col0.failure_reason) +
                      (col0.detail.empty() ? "" : ": " + col0.detail));
  }
  CheckMatrix generators = triple_to_check(*col0.triple);
  ctx.generators = generators.row_paulis();
  for (const PauliOperator& g : ctx.generators) ctx.packed_generators.push_back(kernels::pack(g));

  // Every column needs support and every weight-1 column a probe entry.
  for (uint64_t col = 0; col < ctx.dim; ++col) {
    if (!first_above(m.column(col), ctx.dim, ctx.zero_tol)) {
      return reject(CliffordFailure::NonUnitarySupportPattern, col, "column has no support");
    }
  }
  if (auto f = scan_probe_columns(m, ctx)) return reject(f->reason, f->witness, f->detail);
  if (auto f = extract_sign_patterns(m, ctx)) return reject(f->reason, f->witness, f->detail);

  // Full (anti)stabilisation check of every column against every generator.
  const double column_tol = kPhaseGridTolerance * matrix_max;
  std::optional<uint64_t> witness =
      (parallel_enabled() && ctx.dim >= 64)
          ? kernels::column_stabilisation_witness_parallel(m, ctx.packed_generators, ctx.rho_masks,
                                                           column_tol)
          : kernels::column_stabilisation_witness_serial(m, ctx.packed_generators, ctx.rho_masks,
                                                         column_tol);
  if (witness) {
    return reject(CliffordFailure::ColumnNotStabilised, *witness,
                  "column is not an eigenvector with the predicted sign");
  }

  std::vector<PauliOperator> us;
  if (auto f = recombine_generators(ctx, us)) return reject(f->reason, f->witness, f->detail);

  std::vector<PauliOperator> vs;
  try {
    if (auto f = correct_partners(m, ctx, us, vs)) return reject(f->reason, f->witness, f->detail);
  } catch (const ExtractionFailed& e) {
    return reject(CliffordFailure::NonUnitarySupportPattern, 0, e.what());
  }

  if (auto f = walk_relative_phases(m, ctx, vs, matrix_max)) {
    return reject(f->reason, f->witness, f->detail);
  }

  double norm = 0.0;
  for (uint64_t i = 0; i < ctx.dim; ++i) norm += std::norm(m.column(0)[i]);
  if (std::abs(std::sqrt(norm) - 1.0) > kPhaseGridTolerance) {
    return reject(CliffordFailure::NonUnitarySupportPattern, 0, "columns are not unit vectors");
  }

  d.accepted = true;
  Tableau t;
  t.n = n;
  t.pairs.reserve(n);
  for (size_t i = 0; i < n; ++i) t.pairs.push_back({std::move(us[i]), std::move(vs[i])});
  d.tableau = std::move(t);
  return d;
}

CliffordMatrix tableau_to_matrix(const Tableau& t) {
  if (!is_valid_tableau(t)) throw InvalidTableau("conjugate-tuple relations violated");
  if (t.n > 12) throw InvalidTableau("qubit count too large for dense synthesis");
  const size_t n = t.n;
  const uint64_t dim = uint64_t{1} << n;

  std::vector<PauliOperator> us;
  us.reserve(n);
  for (const Tableau::Pair& p : t.pairs) us.push_back(p.u);
  AmplitudeVector shared_eigenvector = check_to_amplitudes(CheckMatrix::from_paulis(us));

  DenseMatrix out(dim);
  std::copy(shared_eigenvector.entries.begin(), shared_eigenvector.entries.end(), out.column(0));

  std::vector<kernels::PackedPauli> v_parts;
  v_parts.reserve(n);
  for (const Tableau::Pair& p : t.pairs) v_parts.push_back(kernels::pack(p.v));
  if (parallel_enabled() && dim >= 64) {
    kernels::fill_tableau_columns_parallel(v_parts, out);
  } else {
    kernels::fill_tableau_columns_serial(v_parts, out);
  }

  // Fix the global phase: first nonzero entry of column 0 becomes positive
  // real. The entry is an exact fourth root times the scale, so this rotation
  // is an exact component permutation.
  std::optional<uint64_t> lead = first_above(out.column(0), dim, 0.5 * out.max_abs());
  assert(lead.has_value());
  std::optional<int> s = quantise_unit_phase(out.column(0)[*lead], kPhaseGridTolerance);
  assert(s.has_value());
  if (*s != 0) {
    kernels::PackedPauli rotation{0, 0, *s & 3};  // multiplies every entry by (-i)^s = i^{-s}
    kernels::apply_pauli_in_place_serial(rotation, std::span<cplx>(out.a));
  }
  return CliffordMatrix(n, std::move(out));
}

}  // namespace stab
