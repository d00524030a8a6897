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
#include <optional>
#include <string>
#include <vector>

#include "stab/errors.hpp"
#include "stab/f2.hpp"
#include "stab/pauli.hpp"

namespace stab {

/// Amplitudes below kRelativeZeroTolerance * max|entry| count as zero.
inline constexpr double kRelativeZeroTolerance = 1e-8;
/// After factoring out the global factor, every nonzero amplitude ratio must
/// sit within this distance of one of {1, -1, i, -i}.
inline constexpr double kPhaseGridTolerance = 1e-8;

/// A stabiliser state up to a global factor: the support is the affine
/// subspace span(basis) + shift, and the amplitude at coordinates a
/// (relative to `basis`) is (-1)^{Q(a)} i^{l(a)} with Q the quadratic form
/// given by the upper-triangular matrix `qform` and l the linear map `lmap`,
/// both GF(2)-valued.
struct AffineSubspaceTriple {
  size_t n = 0;
  std::vector<f2::BitVector> basis;  // k independent vectors of length n
  f2::BitVector shift;               // length n
  f2::BitMatrix qform;               // k x k, upper triangular
  f2::BitVector lmap;                // length k

  size_t dimension() const { return basis.size(); }
};

/// One generator row: the Pauli (-1)^{sign} (-i)^{x.z} Z^z X^x, i.e. the
/// conventional (x | z | sign) bit row of a check matrix.
struct CheckRow {
  f2::BitVector x;
  f2::BitVector z;
  bool sign = false;
};

/// n independent, pairwise commuting order-2 Pauli generators of a stabiliser
/// subgroup. Invariants are enforced on construction.
class CheckMatrix {
 public:
  CheckMatrix(size_t n, std::vector<CheckRow> rows);
  static CheckMatrix from_paulis(const std::vector<PauliOperator>& paulis);

  size_t qubits() const { return n_; }
  const std::vector<CheckRow>& rows() const { return rows_; }
  const CheckRow& row(size_t i) const { return rows_[i]; }

  /// The row as a normal-form Pauli operator (phase bits folded in).
  PauliOperator row_pauli(size_t i) const;
  std::vector<PauliOperator> row_paulis() const;

  /// The n x 2n matrix whose row i is (x_i | z_i).
  f2::BitMatrix symplectic_rows() const;

 private:
  size_t n_;
  std::vector<CheckRow> rows_;
};

enum class StabiliserFailure {
  SupportSizeNotPowerOfTwo,
  SupportNotAffine,
  AmplitudeOffUnitCircle,
  AmplitudeInconsistent,
  ZeroVector,
};

std::string to_string(StabiliserFailure reason);

struct StabiliserDiagnosis {
  bool accepted = false;
  std::optional<StabiliserFailure> failure_reason;
  /// Offending basis label (packed index), where applicable.
  std::optional<uint64_t> witness;
  std::string detail;
  /// Present on acceptance.
  std::optional<AffineSubspaceTriple> triple;
  std::optional<cplx> global_factor;
};

struct TripleWithFactor {
  AffineSubspaceTriple triple;
  /// Amplitude at the shift label; input == factor * (unnormalised phase
  /// pattern of the triple).
  cplx global_factor;
};

/// Reads a triple off the amplitudes of a (possibly unnormalised) stabiliser
/// state: shift from the first nonzero amplitude, basis from the power-of-two
/// positions of the sorted shifted support, l from the weight-1 coordinate
/// amplitudes, Q from weight-1 and weight-2 coordinate amplitudes. Throws
/// NotAStabiliserState when the input detectably violates the assumptions.
TripleWithFactor amplitudes_to_triple(const AmplitudeVector& v);

/// Full verification of an arbitrary complex vector: accepts exactly when the
/// vector is proportional to a stabiliser state. Adds to the conversion a
/// support-size check, the affine-closure check of every support label, and a
/// consistency re-check of every amplitude against the extracted Q and l.
StabiliserDiagnosis verify_stabiliser_vector(const AmplitudeVector& v);

/// Reads a triple off a check matrix: row-reduces the (x|z) block with exact
/// sign tracking, takes the X parts of the reduced rows as a basis, solves
/// for the shift from the pure-Z rows, and fills l and Q from the reduced
/// row bits.
AffineSubspaceTriple check_to_triple(const CheckMatrix& m);

/// Builds a check matrix generating the stabiliser group of the state the
/// triple describes: reduced basis rows paired with solved Z parts, plus one
/// pure-Z row per null-space basis vector of the support space.
CheckMatrix triple_to_check(const AffineSubspaceTriple& t);

/// Evaluates the phase pattern over the affine support, normalised to unit
/// norm with the amplitude at the shift label equal to +1/sqrt(2^k).
AmplitudeVector triple_to_amplitudes(const AffineSubspaceTriple& t);

CheckMatrix amplitudes_to_check(const AmplitudeVector& v);
AmplitudeVector check_to_amplitudes(const CheckMatrix& m);

namespace kernels {

/// Precomputed triple data for the amplitude-synthesis kernels. Coordinate
/// vectors are packed with coordinate i at bit i; labels are packed indices.
struct PackedTriple {
  size_t k = 0;
  uint64_t shift_index = 0;
  std::vector<uint64_t> basis_indices;   // k packed basis labels
  std::vector<uint64_t> qform_rows;      // row i: bits j >= i of the form
  uint64_t lmap_mask = 0;
  double scale = 1.0;                    // 1/sqrt(2^k)
};

PackedTriple pack(const AffineSubspaceTriple& t);

/// Phase exponent t(a) with amplitude = i^{t(a)} * scale at the label of a.
int phase_exponent_at(const PackedTriple& t, uint64_t coords);
uint64_t label_at(const PackedTriple& t, uint64_t coords);

/// Writes the 2^k support amplitudes into `out` (size 2^n, already zeroed).
void fill_triple_amplitudes_serial(const PackedTriple& t, std::span<cplx> out);
void fill_triple_amplitudes_parallel(const PackedTriple& t, std::span<cplx> out);

/// Consistency scan used by verification: for every support position checks
/// the affine closure and the amplitude ratio against the predicted phase.
/// Returns the lowest offending support position, or nullopt.
struct SupportCheckResult {
  std::optional<size_t> bad_position;
  bool off_circle = false;
};
SupportCheckResult check_support_serial(const PackedTriple& t,
                                        std::span<const uint64_t> sorted_shifted_support,
                                        std::span<const cplx> entries, cplx factor,
                                        double tolerance);
SupportCheckResult check_support_parallel(const PackedTriple& t,
                                          std::span<const uint64_t> sorted_shifted_support,
                                          std::span<const cplx> entries, cplx factor,
                                          double tolerance);

}  // namespace kernels

}  // namespace stab
