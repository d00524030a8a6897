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
#include <cstddef>
#include <vector>

namespace stab {

using cplx = std::complex<double>;

/// Small dense complex matrix, column-major. Used by the oracles and by the
/// Clifford-matrix representation; sizes stay at desk scale (dim = 2^n).
struct DenseMatrix {
  size_t dim = 0;
  std::vector<cplx> a;  // column-major, a[c * dim + r]

  DenseMatrix() = default;
  explicit DenseMatrix(size_t d) : dim(d), a(d * d, cplx{0.0, 0.0}) {}

  static DenseMatrix identity(size_t d) {
    DenseMatrix m(d);
    for (size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
  }

  cplx& at(size_t r, size_t c) { return a[c * dim + r]; }
  const cplx& at(size_t r, size_t c) const { return a[c * dim + r]; }

  cplx* column(size_t c) { return a.data() + c * dim; }
  const cplx* column(size_t c) const { return a.data() + c * dim; }

  DenseMatrix mul(const DenseMatrix& other) const;
  std::vector<cplx> mul_vec(const std::vector<cplx>& v) const;
  DenseMatrix adjoint() const;
  DenseMatrix scaled(cplx factor) const;

  double max_abs() const;
  double max_abs_diff(const DenseMatrix& other) const;
};

}  // namespace stab
