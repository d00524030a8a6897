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

// Times every parallel kernel against its serial reference implementation.
// The serial kernels are the ground truth the tests compare against; this
// tool reports what the OpenMP variants buy on this machine.

#include <cinttypes>
#include <cstdio>
#include <vector>

#include "stab/bench.hpp"
#include "stab/clifford.hpp"
#include "stab/parallel.hpp"
#include "stab/random.hpp"
#include "stab/stabiliser.hpp"

namespace {

using namespace stab;

void report(const char* kernel, size_t n, double serial_s, double parallel_s) {
  std::printf("%-28s n=%-3zu serial %10.3e s   parallel %10.3e s   speedup %6.2fx\n", kernel, n,
              serial_s, parallel_s, parallel_s > 0.0 ? serial_s / parallel_s : 0.0);
}

void bench_apply_pauli(size_t n, size_t repeats) {
  Tableau t = random_tableau(n, /*seed=*/17 * n);
  kernels::PackedPauli p = kernels::pack(t.pairs.front().v);
  std::vector<cplx> in(size_t{1} << n, cplx{1.0, 0.5});
  std::vector<cplx> out(in.size());
  double serial_s = bench::time_median_seconds(
      [&] { kernels::apply_pauli_serial(p, in, out); }, repeats);
  double parallel_s = bench::time_median_seconds(
      [&] { kernels::apply_pauli_parallel(p, in, out); }, repeats);
  report("apply_pauli", n, serial_s, parallel_s);
}

void bench_fill_triple(size_t n, size_t repeats) {
  // Full-dimension support is the heavy case.
  AmplitudeVector state = check_to_amplitudes(random_check_matrix(n, /*seed=*/23 * n));
  AffineSubspaceTriple triple = amplitudes_to_triple(state).triple;
  kernels::PackedTriple packed = kernels::pack(triple);
  std::vector<cplx> out(size_t{1} << n);
  double serial_s = bench::time_median_seconds(
      [&] { kernels::fill_triple_amplitudes_serial(packed, out); }, repeats);
  double parallel_s = bench::time_median_seconds(
      [&] { kernels::fill_triple_amplitudes_parallel(packed, out); }, repeats);
  report("fill_triple_amplitudes", n, serial_s, parallel_s);
}

void bench_column_checks(size_t n, size_t repeats) {
  Tableau t = random_tableau(n, /*seed=*/31 * n);
  CliffordMatrix m = tableau_to_matrix(t);
  std::vector<PauliOperator> gens;
  for (const Tableau::Pair& p : t.pairs) gens.push_back(p.u);
  std::vector<kernels::PackedPauli> packed;
  std::vector<uint64_t> sign_rows;
  for (size_t i = 0; i < n; ++i) {
    packed.push_back(kernels::pack(gens[i]));
    sign_rows.push_back(uint64_t{1} << (n - 1 - i));  // u_i flips sign with bit i of the label
  }
  double tol = kPhaseGridTolerance * m.mat.max_abs();
  double serial_s = bench::time_median_seconds(
      [&] { kernels::column_stabilisation_witness_serial(m.mat, packed, sign_rows, tol); },
      repeats);
  double parallel_s = bench::time_median_seconds(
      [&] { kernels::column_stabilisation_witness_parallel(m.mat, packed, sign_rows, tol); },
      repeats);
  report("column_stabilisation", n, serial_s, parallel_s);
}

void bench_fill_tableau(size_t n, size_t repeats) {
  Tableau t = random_tableau(n, /*seed=*/41 * n);
  CliffordMatrix m = tableau_to_matrix(t);
  std::vector<kernels::PackedPauli> v_parts;
  for (const Tableau::Pair& p : t.pairs) v_parts.push_back(kernels::pack(p.v));
  DenseMatrix work(m.dim());
  std::copy(m.mat.column(0), m.mat.column(0) + m.dim(), work.column(0));
  double serial_s = bench::time_median_seconds(
      [&] { kernels::fill_tableau_columns_serial(v_parts, work); }, repeats);
  double parallel_s = bench::time_median_seconds(
      [&] { kernels::fill_tableau_columns_parallel(v_parts, work); }, repeats);
  report("fill_tableau_columns", n, serial_s, parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  size_t repeats = 5;
  if (argc > 1) repeats = static_cast<size_t>(std::atol(argv[1]));
  std::printf("threads available: %d\n", parallel_thread_count());

  for (size_t n : {16, 18, 20, 21}) bench_apply_pauli(n, repeats);
  for (size_t n : {16, 18, 20, 21}) bench_fill_triple(n, repeats);
  for (size_t n : {8, 9, 10}) bench_column_checks(n, repeats);
  for (size_t n : {9, 10, 11}) bench_fill_tableau(n, repeats);
  return 0;
}
