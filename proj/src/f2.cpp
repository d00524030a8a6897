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

#include "stab/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace stab::f2 {

namespace {
constexpr size_t kWordBits = 64;

size_t word_count(size_t length) { return (length + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_lsb_bits(uint64_t value, size_t length) {
  if (length < kWordBits && (value >> length) != 0) {
    throw std::invalid_argument("BitVector::from_lsb_bits: value wider than length");
  }
  BitVector v(length);
  for (size_t i = 0; i < std::min<size_t>(length, kWordBits); ++i) {
    v.set(i, (value >> i) & 1);
  }
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector::from_string: expected only '0'/'1'");
    }
  }
  return v;
}

BitVector BitVector::unit(size_t length, size_t index) {
  BitVector v(length);
  v.set(index, true);
  return v;
}

bool BitVector::get(size_t i) const {
  if (i >= length_) throw std::out_of_range("BitVector::get");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void BitVector::set(size_t i, bool value) {
  if (i >= length_) throw std::out_of_range("BitVector::set");
  uint64_t mask = uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) throw std::invalid_argument("BitVector: length mismatch");
  for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.length_ != length_) throw std::invalid_argument("BitVector::dot: length mismatch");
  uint64_t acc = 0;
  for (size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

size_t BitVector::count() const {
  size_t total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool BitVector::any() const {
  for (uint64_t w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::optional<size_t> BitVector::first_set() const {
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + std::countr_zero(words_[w]);
  }
  return std::nullopt;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(length_ + tail.length_);
  for (size_t i = 0; i < length_; ++i) out.set(i, get(i));
  for (size_t i = 0; i < tail.length_; ++i) out.set(length_ + i, tail.get(i));
  return out;
}

BitVector BitVector::slice(size_t begin, size_t end) const {
  if (begin > end || end > length_) throw std::out_of_range("BitVector::slice");
  BitVector out(end - begin);
  for (size_t i = begin; i < end; ++i) out.set(i - begin, get(i));
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, size_t cols) {
  for (const BitVector& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
  }
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const std::string& s : rows) parsed.push_back(BitVector::from_string(s));
  size_t cols = parsed.empty() ? 0 : parsed.front().size();
  return from_rows(std::move(parsed), cols);
}

BitVector BitMatrix::mul(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("BitMatrix::mul: size mismatch");
  BitVector out(row_count());
  for (size_t r = 0; r < row_count(); ++r) out.set(r, rows_[r].dot(x));
  return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& other) const {
  if (other.row_count() != cols_) throw std::invalid_argument("BitMatrix::mul: shape mismatch");
  BitMatrix out(row_count(), other.col_count());
  for (size_t r = 0; r < row_count(); ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (rows_[r].get(c)) out.row(r) ^= other.row(c);
    }
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(col_count(), row_count());
  for (size_t r = 0; r < row_count(); ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out.set(c, r, true);
    }
  }
  return out;
}

RrefResult rref(const BitMatrix& a) {
  BitMatrix r = a;
  BitMatrix t = BitMatrix::identity(a.row_count());
  std::vector<size_t> pivots;
  size_t pivot_row = 0;
  for (size_t c = 0; c < a.col_count() && pivot_row < a.row_count(); ++c) {
    size_t sel = a.row_count();
    for (size_t i = pivot_row; i < a.row_count(); ++i) {
      if (r.get(i, c)) {
        sel = i;
        break;
      }
    }
    if (sel == a.row_count()) continue;
    if (sel != pivot_row) {
      std::swap(r.row(sel), r.row(pivot_row));
      std::swap(t.row(sel), t.row(pivot_row));
    }
    for (size_t i = 0; i < a.row_count(); ++i) {
      if (i != pivot_row && r.get(i, c)) {
        r.row(i) ^= r.row(pivot_row);
        t.row(i) ^= t.row(pivot_row);
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {std::move(r), {std::move(pivots), std::move(t)}};
}

size_t rank(const BitMatrix& a) { return rref(a).record.pivot_columns.size(); }

PreparedSolver::PreparedSolver(const BitMatrix& a) : rr_(rref(a)), cols_(a.col_count()) {}

std::optional<BitVector> PreparedSolver::solve(const BitVector& rhs) const {
  if (rhs.size() != rr_.record.transform.row_count()) {
    throw std::invalid_argument("PreparedSolver::solve: rhs length mismatch");
  }
  BitVector reduced = rr_.record.transform.mul(rhs);
  const auto& pivots = rr_.record.pivot_columns;
  for (size_t r = pivots.size(); r < reduced.size(); ++r) {
    if (reduced.get(r)) return std::nullopt;
  }
  BitVector x(cols_);
  for (size_t r = 0; r < pivots.size(); ++r) x.set(pivots[r], reduced.get(r));
  return x;
}

std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
  return PreparedSolver(a).solve(b);
}

std::vector<BitVector> null_space_basis(const BitMatrix& a) {
  RrefResult rr = rref(a);
  const auto& pivots = rr.record.pivot_columns;
  std::vector<bool> is_pivot(a.col_count(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (size_t free_col = 0; free_col < a.col_count(); ++free_col) {
    if (is_pivot[free_col]) continue;
    BitVector x(a.col_count());
    x.set(free_col, true);
    for (size_t r = 0; r < pivots.size(); ++r) {
      if (rr.matrix.get(r, free_col)) x.set(pivots[r], true);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<BitMatrix> invert(const BitMatrix& a) {
  if (a.row_count() != a.col_count()) throw std::invalid_argument("invert: matrix not square");
  RrefResult rr = rref(a);
  if (rr.record.pivot_columns.size() != a.row_count()) return std::nullopt;
  return rr.record.transform;
}

std::optional<BitMatrix> right_pseudoinverse(const BitMatrix& a) {
  if (a.row_count() > a.col_count()) {
    throw std::invalid_argument("right_pseudoinverse: more rows than columns");
  }
  if (rank(a) != a.row_count()) return std::nullopt;
  BitMatrix gram = a.mul(a.transposed());
  std::optional<BitMatrix> gram_inv = invert(gram);
  if (!gram_inv) return std::nullopt;
  return a.transposed().mul(*gram_inv);
}

std::optional<BitMatrix> right_inverse(const BitMatrix& a) {
  PreparedSolver solver(a);
  if (solver.reduction().record.pivot_columns.size() != a.row_count()) return std::nullopt;
  BitMatrix out(a.col_count(), a.row_count());
  for (size_t j = 0; j < a.row_count(); ++j) {
    std::optional<BitVector> x = solver.solve(BitVector::unit(a.row_count(), j));
    // Full row rank makes every unit vector reachable.
    for (size_t i = 0; i < a.col_count(); ++i) out.set(i, j, x->get(i));
  }
  return out;
}

std::vector<GrayStep> gray_sequence(size_t k) {
  if (k > 26) throw std::invalid_argument("gray_sequence: k too large to materialise");
  std::vector<GrayStep> steps;
  steps.reserve(size_t{1} << k);
  steps.push_back({BitVector(k), std::nullopt});
  for (uint64_t t = 1; t < (uint64_t{1} << k); ++t) {
    size_t flipped = std::countr_zero(t);
    steps.push_back({BitVector::from_lsb_bits(gray_code(t), k), flipped});
  }
  return steps;
}

}  // namespace stab::f2
