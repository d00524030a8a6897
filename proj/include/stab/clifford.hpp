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

#include <optional>
#include <string>
#include <vector>

#include "stab/dense.hpp"
#include "stab/errors.hpp"
#include "stab/pauli.hpp"
#include "stab/stabiliser.hpp"

namespace stab {

/// Conjugate tuple of a Clifford gate C: pairs (u_i, v_i) = (C Z_i C*, C X_i C*).
/// A valid tableau has every entry of order 2, u_i anticommuting with v_j
/// exactly when i == j, and the u's and v's commuting among themselves.
struct Tableau {
  struct Pair {
    PauliOperator u;
    PauliOperator v;
  };
  size_t n = 0;
  std::vector<Pair> pairs;

  static Tableau identity(size_t n);
  bool operator==(const Tableau& other) const = default;
};

/// Dense unitary of a Clifford gate, dimension 2^n.
struct CliffordMatrix {
  size_t n = 0;
  DenseMatrix mat;

  CliffordMatrix() = default;
  CliffordMatrix(size_t qubits, DenseMatrix m);
  size_t dim() const { return mat.dim; }
};

enum class CliffordFailure {
  FirstColumnNotStabiliser,
  ColumnNotStabilised,
  CandidateVNotCommuting,
  RelativePhaseInconsistent,
  NonUnitarySupportPattern,
};

std::string to_string(CliffordFailure reason);

struct CliffordDiagnosis {
  bool accepted = false;
  std::optional<CliffordFailure> failure_reason;
  /// Packed label of the offending column, where applicable.
  std::optional<uint64_t> witness_column;
  std::string detail;
  /// Present on acceptance.
  std::optional<Tableau> tableau;
};

/// True when the conjugate-tuple relations and order-2 conditions all hold.
bool is_valid_tableau(const Tableau& t);

/// Extracts the conjugate tuple of a trusted Clifford matrix: the u_i from
/// the stabiliser group of column 0, then candidate partners from a right
/// inverse of the u bit rows, corrected against the weight-0/1/2 columns.
/// Touches every entry of the n+1 weight<=1 columns and O(1) entries per
/// weight-2 comparison. Throws ExtractionFailed on internal inconsistency
/// (the input was not a Clifford matrix).
Tableau matrix_to_tableau(const CliffordMatrix& c);

/// Full verification of an arbitrary 2^n x 2^n matrix: accepts exactly when
/// the input is a Clifford gate up to global phase. Adds to the extraction
/// full (anti)stabilisation checks of every column against every generator,
/// commutation and order-2 checks on the candidate v_i, a relative-phase walk
/// of all columns in Gray-code order, and a unit-norm check.
CliffordDiagnosis verify_clifford_matrix(const CliffordMatrix& m);

/// Builds the unique matrix (up to phase) with the given tableau: the shared
/// +1 eigenvector of the u_i fills column 0 and successive columns follow by
/// single Pauli applications in Gray-code order. The global phase is fixed by
/// making the first nonzero entry of column 0 positive real.
CliffordMatrix tableau_to_matrix(const Tableau& t);

namespace kernels {

/// For every column z of `m` and every generator (with its sign pattern row),
/// verifies generator * column == +-column entrywise, the sign being fixed by
/// the parity of sign_rows[g] & z. Returns the lowest offending column.
std::optional<uint64_t> column_stabilisation_witness_serial(
    const DenseMatrix& m, std::span<const PackedPauli> generators,
    std::span<const uint64_t> sign_rows, double tolerance);
std::optional<uint64_t> column_stabilisation_witness_parallel(
    const DenseMatrix& m, std::span<const PackedPauli> generators,
    std::span<const uint64_t> sign_rows, double tolerance);

/// Fills the columns of `out` with walk products of the tableau's v parts
/// applied to column 0 (already written): column gray(t) is obtained from
/// column gray(t-1) by one Pauli application.
void fill_tableau_columns_serial(std::span<const PackedPauli> v_parts, DenseMatrix& out);
void fill_tableau_columns_parallel(std::span<const PackedPauli> v_parts, DenseMatrix& out);

}  // namespace kernels

}  // namespace stab
