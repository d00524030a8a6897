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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stab::f2 {

/// Fixed-length vector over GF(2), packed 64 entries per machine word.
/// Addition is XOR, so v + v = 0 and row operations are word-wise.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(size_t length);

  /// Bit j of `value` becomes entry j (entry 0 is the lowest bit).
  static BitVector from_lsb_bits(uint64_t value, size_t length);
  /// Parses "0101..."; character j becomes entry j.
  static BitVector from_string(std::string_view bits);
  static BitVector unit(size_t length, size_t index);

  size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool get(size_t i) const;
  void set(size_t i, bool value);

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  /// Parity of the entrywise product (the GF(2) inner product).
  bool dot(const BitVector& other) const;

  size_t count() const;
  bool any() const;
  /// Index of the first set entry, or nullopt.
  std::optional<size_t> first_set() const;

  /// Entry j of the result is entry j of this followed by entries of `tail`.
  BitVector concat(const BitVector& tail) const;
  BitVector slice(size_t begin, size_t end) const;

  std::string to_string() const;

  bool operator==(const BitVector& other) const = default;

 private:
  size_t length_ = 0;
  std::vector<uint64_t> words_;
};

/// Rectangular matrix over GF(2); every row has col_count entries.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols);
  static BitMatrix identity(size_t n);
  static BitMatrix from_rows(std::vector<BitVector> rows, size_t cols);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  size_t row_count() const { return rows_.size(); }
  size_t col_count() const { return cols_; }

  BitVector& row(size_t r) { return rows_[r]; }
  const BitVector& row(size_t r) const { return rows_[r]; }

  bool get(size_t r, size_t c) const { return rows_[r].get(c); }
  void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }

  BitVector mul(const BitVector& x) const;
  BitMatrix mul(const BitMatrix& other) const;
  BitMatrix transposed() const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Record of the row operations performed by rref: transform * input == rref(input).
/// The transform is a product of elementary operations, hence invertible.
struct RowReductionRecord {
  std::vector<size_t> pivot_columns;
  BitMatrix transform;
};

struct RrefResult {
  BitMatrix matrix;
  RowReductionRecord record;
};

/// Reduced row echelon form: pivots are 1 and are the only nonzero entry in
/// their column; pivot columns strictly increase down the rows.
RrefResult rref(const BitMatrix& a);

size_t rank(const BitMatrix& a);

/// Reduces a matrix once and answers repeated solves against it.
/// Free variables are set to zero, so solutions are deterministic.
class PreparedSolver {
 public:
  explicit PreparedSolver(const BitMatrix& a);
  /// Any x with a*x == rhs, or nullopt when the system is inconsistent.
  std::optional<BitVector> solve(const BitVector& rhs) const;
  const RrefResult& reduction() const { return rr_; }

 private:
  RrefResult rr_;
  size_t cols_;
};

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b);

/// Basis of {x : a*x == 0}, one vector per free column in increasing column
/// order. Size is col_count - rank(a).
std::vector<BitVector> null_space_basis(const BitMatrix& a);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<BitMatrix> invert(const BitMatrix& a);

/// Right inverse via the explicit formula a^T (a a^T)^-1. Fails (nullopt) when
/// the rows are dependent, and also when a a^T happens to be singular over
/// GF(2) even though the rows are independent; callers that need a right
/// inverse unconditionally should use right_inverse instead.
std::optional<BitMatrix> right_pseudoinverse(const BitMatrix& a);

/// Any right inverse of a full-row-rank matrix (free components zeroed),
/// or nullopt when the rows are dependent.
std::optional<BitMatrix> right_inverse(const BitMatrix& a);

struct GrayStep {
  BitVector codeword;
  /// Bit flipped relative to the previous codeword; nullopt for the first.
  std::optional<size_t> flipped_bit;
};

/// All 2^k codewords of the binary-reflected Gray code starting at 0.
/// Consecutive codewords differ in exactly the reported bit.
std::vector<GrayStep> gray_sequence(size_t k);

/// Codeword at position t of the binary-reflected Gray code, packed as an
/// integer (bit j of the result is entry j).
inline uint64_t gray_code(uint64_t t) { return t ^ (t >> 1); }

}  // namespace stab::f2
