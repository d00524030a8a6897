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

#include "stab/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stab {

DenseMatrix DenseMatrix::mul(const DenseMatrix& other) const {
  if (other.dim != dim) throw std::invalid_argument("DenseMatrix::mul: dimension mismatch");
  DenseMatrix out(dim);
  for (size_t c = 0; c < dim; ++c) {
    for (size_t k = 0; k < dim; ++k) {
      cplx f = other.at(k, c);
      if (f == cplx{0.0, 0.0}) continue;
      const cplx* lhs_col = column(k);
      cplx* out_col = out.column(c);
      for (size_t r = 0; r < dim; ++r) out_col[r] += lhs_col[r] * f;
    }
  }
  return out;
}

std::vector<cplx> DenseMatrix::mul_vec(const std::vector<cplx>& v) const {
  if (v.size() != dim) throw std::invalid_argument("DenseMatrix::mul_vec: dimension mismatch");
  std::vector<cplx> out(dim, cplx{0.0, 0.0});
  for (size_t c = 0; c < dim; ++c) {
    cplx f = v[c];
    if (f == cplx{0.0, 0.0}) continue;
    const cplx* col = column(c);
    for (size_t r = 0; r < dim; ++r) out[r] += col[r] * f;
  }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim);
  for (size_t c = 0; c < dim; ++c) {
    for (size_t r = 0; r < dim; ++r) out.at(c, r) = std::conj(at(r, c));
  }
  return out;
}

DenseMatrix DenseMatrix::scaled(cplx factor) const {
  DenseMatrix out = *this;
  for (cplx& e : out.a) e *= factor;
  return out;
}

double DenseMatrix::max_abs() const {
  double best = 0.0;
  for (const cplx& e : a) best = std::max(best, std::abs(e));
  return best;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  if (other.dim != dim) throw std::invalid_argument("DenseMatrix::max_abs_diff: dimension mismatch");
  double best = 0.0;
  for (size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - other.a[i]));
  return best;
}

}  // namespace stab
