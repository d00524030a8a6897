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
#include <random>
#include <vector>

#include "stab/dense.hpp"
#include "stab/f2.hpp"
#include "stab/pauli.hpp"

// Test-only oracles, independent of the library's fast paths: schoolbook
// integer GF(2) arithmetic and naive dense-matrix helpers.
namespace testutil {

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_ints(const stab::f2::BitMatrix& m) {
  IntMatrix out(m.row_count(), std::vector<int>(m.col_count(), 0));
  for (size_t r = 0; r < m.row_count(); ++r) {
    for (size_t c = 0; c < m.col_count(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  }
  return out;
}

inline IntMatrix schoolbook_mul(const IntMatrix& a, const IntMatrix& b) {
  size_t rows = a.size();
  size_t inner = b.size();
  size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(rows, std::vector<int>(cols, 0));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      int acc = 0;
      for (size_t k = 0; k < inner; ++k) acc += a[r][k] * b[k][c];
      out[r][c] = acc % 2;
    }
  }
  return out;
}

inline std::vector<int> schoolbook_mul_vec(const IntMatrix& a, const std::vector<int>& x) {
  std::vector<int> out(a.size(), 0);
  for (size_t r = 0; r < a.size(); ++r) {
    int acc = 0;
    for (size_t c = 0; c < x.size(); ++c) acc += a[r][c] * x[c];
    out[r] = acc % 2;
  }
  return out;
}

inline stab::f2::BitMatrix random_bit_matrix(std::mt19937_64& rng, size_t rows, size_t cols) {
  stab::f2::BitMatrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
  }
  return m;
}

inline stab::f2::BitVector random_bit_vector(std::mt19937_64& rng, size_t len) {
  stab::f2::BitVector v(len);
  for (size_t i = 0; i < len; ++i) v.set(i, rng() & 1);
  return v;
}

inline stab::cplx random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return {gauss(rng), gauss(rng)};
}

inline std::vector<stab::cplx> random_complex_vector(std::mt19937_64& rng, size_t size) {
  std::vector<stab::cplx> out(size);
  for (stab::cplx& e : out) e = random_complex(rng);
  return out;
}

inline double max_abs_diff(const std::vector<stab::cplx>& a, const std::vector<stab::cplx>& b) {
  double best = 0.0;
  for (size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

/// Distance after aligning b to a by one global scalar (taken at the largest
/// entry of b).
inline double max_abs_diff_up_to_scalar(const std::vector<stab::cplx>& a,
                                        const std::vector<stab::cplx>& b) {
  size_t pivot = 0;
  double best = 0.0;
  for (size_t i = 0; i < b.size(); ++i) {
    if (std::abs(b[i]) > best) {
      best = std::abs(b[i]);
      pivot = i;
    }
  }
  if (best == 0.0) return max_abs_diff(a, b);
  stab::cplx scalar = a[pivot] / b[pivot];
  std::vector<stab::cplx> scaled = b;
  for (stab::cplx& e : scaled) e *= scalar;
  return max_abs_diff(a, scaled);
}

inline double max_abs_diff_up_to_phase(const stab::DenseMatrix& a, const stab::DenseMatrix& b) {
  size_t pivot = 0;
  double best = 0.0;
  for (size_t i = 0; i < b.a.size(); ++i) {
    if (std::abs(b.a[i]) > best) {
      best = std::abs(b.a[i]);
      pivot = i;
    }
  }
  if (best == 0.0) return a.max_abs_diff(b);
  stab::cplx scalar = a.a[pivot] / b.a[pivot];
  return a.max_abs_diff(b.scaled(scalar));
}

/// Naive Kronecker product for building expected dense operators.
inline stab::DenseMatrix kron(const stab::DenseMatrix& a, const stab::DenseMatrix& b) {
  stab::DenseMatrix out(a.dim * b.dim);
  for (size_t ar = 0; ar < a.dim; ++ar) {
    for (size_t ac = 0; ac < a.dim; ++ac) {
      for (size_t br = 0; br < b.dim; ++br) {
        for (size_t bc = 0; bc < b.dim; ++bc) {
          out.at(ar * b.dim + br, ac * b.dim + bc) = a.at(ar, ac) * b.at(br, bc);
        }
      }
    }
  }
  return out;
}

inline stab::DenseMatrix dense_from_rows(std::initializer_list<std::initializer_list<stab::cplx>> rows) {
  stab::DenseMatrix m(rows.size());
  size_t r = 0;
  for (const auto& row : rows) {
    size_t c = 0;
    for (const stab::cplx& e : row) m.at(r, c++) = e;
    ++r;
  }
  return m;
}

}  // namespace testutil
