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

#include "stab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace stab::oracle {

namespace {

std::vector<cplx> normalised(const AmplitudeVector& v) {
  double norm = v.norm();
  if (norm == 0.0) return v.entries;
  std::vector<cplx> out = v.entries;
  for (cplx& e : out) e /= norm;
  return out;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double best = 0.0;
  for (size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

/// Divides by the phase of the first clearly nonzero entry and normalises,
/// so states are comparable up to global phase.
std::vector<cplx> canonical_state(std::vector<cplx> state) {
  double max = 0.0;
  for (const cplx& e : state) max = std::max(max, std::abs(e));
  double norm = 0.0;
  for (const cplx& e : state) norm += std::norm(e);
  norm = std::sqrt(norm);
  for (const cplx& e : state) {
    if (std::abs(e) > 0.5 * max) {
      cplx unit = e / std::abs(e);
      for (cplx& x : state) x /= unit * norm;
      break;
    }
  }
  return state;
}

}  // namespace

std::vector<PauliOperator> brute_stabiliser_group(const AmplitudeVector& v) {
  if (v.n > kStateOracleQubitLimit) {
    throw std::invalid_argument("brute_stabiliser_group: qubit count above oracle limit");
  }
  const size_t n = v.n;
  std::vector<cplx> state = normalised(v);
  std::vector<PauliOperator> group;
  for (uint64_t xm = 0; xm < (uint64_t{1} << n); ++xm) {
    for (uint64_t zm = 0; zm < (uint64_t{1} << n); ++zm) {
      bool d = std::popcount(xm & zm) & 1;
      for (int c = 0; c < 2; ++c) {
        PauliOperator p = PauliOperator::from_sign_bits(bits_of(xm, n), bits_of(zm, n), c, d);
        std::vector<cplx> applied = to_dense(p).mul_vec(state);
        if (max_abs_diff(applied, state) <= kOracleTolerance) group.push_back(std::move(p));
      }
    }
  }
  return group;
}

bool brute_is_stabiliser(const AmplitudeVector& v) {
  return brute_stabiliser_group(v).size() == (size_t{1} << v.n);
}

namespace {

/// True when `m` equals phase * X^x Z^z for some fourth-root phase.
bool is_phase_times_pauli(const DenseMatrix& m, double tol) {
  const size_t dim = m.dim;
  // Candidate X mask from the support of column 0.
  size_t x_mask = dim;
  for (size_t r = 0; r < dim; ++r) {
    if (std::abs(m.at(r, 0)) > 0.5) {
      x_mask = r;
      break;
    }
  }
  if (x_mask == dim) return false;
  cplx phase = m.at(x_mask, 0);
  bool fourth_root = false;
  const cplx roots[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const cplx& root : roots) fourth_root |= std::abs(phase - root) <= tol;
  if (!fourth_root) return false;
  // Z mask from the signs of the remaining columns.
  uint64_t z_mask = 0;
  size_t n = std::countr_zero(dim);
  for (size_t j = 0; j < n; ++j) {
    uint64_t col = uint64_t{1} << (n - 1 - j);
    cplx e = m.at(col ^ x_mask, col);
    if (std::abs(e - phase) <= tol) continue;
    if (std::abs(e + phase) <= tol) {
      z_mask |= col;
      continue;
    }
    return false;
  }
  // Reconstruct and compare everywhere, zeros included.
  DenseMatrix expected(dim);
  for (uint64_t col = 0; col < dim; ++col) {
    double sign = (std::popcount(z_mask & col) & 1) ? -1.0 : 1.0;
    expected.at(col ^ x_mask, col) = phase * sign;
  }
  return m.max_abs_diff(expected) <= tol;
}

}  // namespace

bool brute_is_clifford(const CliffordMatrix& m) {
  if (m.n > kGateOracleQubitLimit) {
    throw std::invalid_argument("brute_is_clifford: qubit count above oracle limit");
  }
  DenseMatrix adj = m.mat.adjoint();
  if (m.mat.mul(adj).max_abs_diff(DenseMatrix::identity(m.dim())) > kOracleTolerance) {
    return false;
  }
  for (size_t i = 0; i < m.n; ++i) {
    DenseMatrix z = to_dense(PauliOperator::single_z(m.n, i));
    DenseMatrix x = to_dense(PauliOperator::single_x(m.n, i));
    if (!is_phase_times_pauli(m.mat.mul(z).mul(adj), kOracleTolerance)) return false;
    if (!is_phase_times_pauli(m.mat.mul(x).mul(adj), kOracleTolerance)) return false;
  }
  return true;
}

namespace {

/// Projector column of (1/2^n) * sum of the group generated by `generators`.
std::vector<cplx> projector_state(const std::vector<PauliOperator>& generators, size_t n) {
  const size_t dim = size_t{1} << n;
  DenseMatrix projector(dim);
  for (uint64_t e = 0; e < (uint64_t{1} << generators.size()); ++e) {
    PauliOperator element =
        power_product(generators, f2::BitVector::from_lsb_bits(e, generators.size()));
    DenseMatrix dense = to_dense(element);
    for (size_t i = 0; i < dense.a.size(); ++i) projector.a[i] += dense.a[i];
  }
  for (cplx& e : projector.a) e /= static_cast<double>(dim);
  // The group never contains -I (independent commuting order-2 generators),
  // so the projector has rank one; any clearly nonzero column is the state.
  size_t best_col = 0;
  double best = 0.0;
  for (size_t c = 0; c < dim; ++c) {
    double norm = 0.0;
    for (size_t r = 0; r < dim; ++r) norm += std::norm(projector.at(r, c));
    if (norm > best) {
      best = norm;
      best_col = c;
    }
  }
  if (best == 0.0) return {};
  return std::vector<cplx>(projector.column(best_col), projector.column(best_col) + dim);
}

void enumerate_generator_sets(size_t n, std::vector<size_t>& chosen,
                              const std::vector<PauliOperator>& candidates, size_t next,
                              std::vector<std::vector<cplx>>& states) {
  if (chosen.size() == n) {
    std::vector<PauliOperator> generators;
    generators.reserve(n);
    for (size_t idx : chosen) generators.push_back(candidates[idx]);
    for (uint64_t signs = 0; signs < (uint64_t{1} << n); ++signs) {
      std::vector<PauliOperator> signed_gens = generators;
      for (size_t i = 0; i < n; ++i) {
        if ((signs >> i) & 1) {
          signed_gens[i].phase_t = static_cast<uint8_t>((signed_gens[i].phase_t + 2) & 3);
        }
      }
      std::vector<cplx> state = projector_state(signed_gens, n);
      if (state.empty()) continue;
      state = canonical_state(std::move(state));
      bool duplicate = false;
      for (const std::vector<cplx>& existing : states) {
        if (max_abs_diff(existing, state) <= kOracleTolerance) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) states.push_back(std::move(state));
    }
    return;
  }
  for (size_t idx = next; idx < candidates.size(); ++idx) {
    bool ok = true;
    for (size_t prev : chosen) ok = ok && commutes(candidates[prev], candidates[idx]);
    if (!ok) continue;
    chosen.push_back(idx);
    // Independence: the (x|z) rows of the chosen set must have full rank.
    std::vector<f2::BitVector> rows;
    for (size_t c : chosen) rows.push_back(candidates[c].x.concat(candidates[c].z));
    if (f2::rank(f2::BitMatrix::from_rows(std::move(rows), 2 * n)) == chosen.size()) {
      enumerate_generator_sets(n, chosen, candidates, idx + 1, states);
    }
    chosen.pop_back();
  }
}

}  // namespace

std::vector<AmplitudeVector> enumerate_stabiliser_states(size_t n) {
  if (n == 0 || n > kEnumerationQubitLimit) {
    throw std::invalid_argument("enumerate_stabiliser_states: qubit count above oracle limit");
  }
  std::vector<PauliOperator> candidates;
  for (uint64_t xm = 0; xm < (uint64_t{1} << n); ++xm) {
    for (uint64_t zm = 0; zm < (uint64_t{1} << n); ++zm) {
      if (xm == 0 && zm == 0) continue;
      bool d = std::popcount(xm & zm) & 1;
      candidates.push_back(PauliOperator::from_sign_bits(bits_of(xm, n), bits_of(zm, n), false, d));
    }
  }
  std::vector<std::vector<cplx>> states;
  std::vector<size_t> chosen;
  enumerate_generator_sets(n, chosen, candidates, 0, states);
  std::vector<AmplitudeVector> out;
  out.reserve(states.size());
  for (std::vector<cplx>& s : states) out.push_back(AmplitudeVector(n, std::move(s)));
  return out;
}

AmplitudeVector brute_check_to_amplitudes(const CheckMatrix& m) {
  if (m.qubits() > kStateOracleQubitLimit) {
    throw std::invalid_argument("brute_check_to_amplitudes: qubit count above oracle limit");
  }
  std::vector<cplx> state = projector_state(m.row_paulis(), m.qubits());
  if (state.empty()) throw InvalidCheckMatrix("projector vanished; rows are corrupt");
  return AmplitudeVector(m.qubits(), canonical_state(std::move(state)));
}

CliffordMatrix brute_tableau_to_matrix(const Tableau& t) {
  if (t.n > kStateOracleQubitLimit) {
    throw std::invalid_argument("brute_tableau_to_matrix: qubit count above oracle limit");
  }
  if (!is_valid_tableau(t)) throw InvalidTableau("conjugate-tuple relations violated");
  std::vector<PauliOperator> us;
  for (const Tableau::Pair& p : t.pairs) us.push_back(p.u);
  AmplitudeVector u0 = brute_check_to_amplitudes(CheckMatrix::from_paulis(us));
  const uint64_t dim = uint64_t{1} << t.n;
  std::vector<DenseMatrix> v_dense;
  for (const Tableau::Pair& p : t.pairs) v_dense.push_back(to_dense(p.v));
  DenseMatrix out(dim);
  for (uint64_t col = 0; col < dim; ++col) {
    std::vector<cplx> w = u0.entries;
    for (size_t j = 0; j < t.n; ++j) {
      if ((col >> (t.n - 1 - j)) & 1) w = v_dense[j].mul_vec(w);
    }
    std::copy(w.begin(), w.end(), out.column(col));
  }
  return CliffordMatrix(t.n, std::move(out));
}

}  // namespace stab::oracle
