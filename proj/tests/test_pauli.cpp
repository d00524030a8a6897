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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stab/pauli.hpp"
#include "test_util.hpp"

using namespace stab;
using testutil::dense_from_rows;
using testutil::kron;
using testutil::max_abs_diff;

namespace {

const cplx kI{0.0, 1.0};

DenseMatrix dense_x() { return dense_from_rows({{0, 1}, {1, 0}}); }
DenseMatrix dense_y() { return dense_from_rows({{0, -kI}, {kI, 0}}); }
DenseMatrix dense_z() { return dense_from_rows({{1, 0}, {0, -1}}); }

PauliOperator random_pauli(std::mt19937_64& rng, size_t n) {
  PauliOperator p(testutil::random_bit_vector(rng, n), testutil::random_bit_vector(rng, n),
                  static_cast<int>(rng() & 3));
  return p;
}

}  // namespace

TEST_CASE("index packing follows the qubit-1-most-significant convention") {
  CHECK(index_of(f2::BitVector::from_string("000")) == 0);
  // Label written qubit-1-first; the displayed tuple (z3,z2,z1) = (1,0,1)
  // corresponds to the string "101".
  CHECK(index_of(f2::BitVector::from_string("101")) == 5);
  CHECK(index_of(f2::BitVector::from_string("100")) == 4);
  CHECK(bits_of(5, 3) == f2::BitVector::from_string("101"));
  CHECK_THROWS_AS(bits_of(8, 3), std::out_of_range);
}

TEST_CASE("index packing round-trips over all ten-qubit labels") {
  for (uint64_t i = 0; i < (1u << 10); ++i) CHECK(index_of(bits_of(i, 10)) == i);
}

TEST_CASE("pauli literals cover the single-qubit table") {
  CHECK(to_dense(parse_pauli_literal("X")).max_abs_diff(dense_x()) == 0.0);
  CHECK(to_dense(parse_pauli_literal("Y")).max_abs_diff(dense_y()) == 0.0);
  CHECK(to_dense(parse_pauli_literal("Z")).max_abs_diff(dense_z()) == 0.0);
  CHECK(to_dense(parse_pauli_literal("I")).max_abs_diff(DenseMatrix::identity(2)) == 0.0);
  CHECK(to_dense(parse_pauli_literal("-Y")).max_abs_diff(dense_y().scaled(-1.0)) == 0.0);
  CHECK(to_dense(parse_pauli_literal("+iX")).max_abs_diff(dense_x().scaled(kI)) == 0.0);
  CHECK(to_dense(parse_pauli_literal("-iZ")).max_abs_diff(dense_z().scaled(-kI)) == 0.0);

  // Y carries the bits x=1, z=1 and is Hermitian of order two.
  PauliOperator y = parse_pauli_literal("Y");
  CHECK(y.x.get(0));
  CHECK(y.z.get(0));
  CHECK(y.is_hermitian_order_two());

  CHECK_THROWS_AS(parse_pauli_literal("Q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli_literal("-"), std::invalid_argument);
}

TEST_CASE("pauli literal round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    PauliOperator p = random_pauli(rng, 4);
    CHECK(parse_pauli_literal(pauli_literal(p)) == p);
  }
  CHECK(pauli_literal(parse_pauli_literal("-XZI")) == "-XZI");
}

TEST_CASE("to_dense matches tensor products") {
  // X (x) Z against the naive Kronecker construction.
  PauliOperator p = parse_pauli_literal("XZ");
  CHECK(to_dense(p).max_abs_diff(kron(dense_x(), dense_z())) == 0.0);
  PauliOperator q = parse_pauli_literal("-iYX");
  CHECK(to_dense(q).max_abs_diff(kron(dense_y(), dense_x()).scaled(-kI)) == 0.0);
  CHECK_THROWS_AS(to_dense(PauliOperator::identity(11)), std::invalid_argument);
}

TEST_CASE("multiplication agrees with the dense oracle") {
  CHECK(multiply(parse_pauli_literal("X"), parse_pauli_literal("X")) ==
        PauliOperator::identity(1));
  // X * Z stays in normal form with no extra phase.
  PauliOperator xz = multiply(parse_pauli_literal("X"), parse_pauli_literal("Z"));
  CHECK(xz.x.get(0));
  CHECK(xz.z.get(0));
  CHECK(xz.phase_t == 0);

  std::mt19937_64 rng(5);
  for (size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      PauliOperator a = random_pauli(rng, n);
      PauliOperator b = random_pauli(rng, n);
      DenseMatrix expected = to_dense(a).mul(to_dense(b));
      CHECK(to_dense(multiply(a, b)).max_abs_diff(expected) == 0.0);
    }
  }
}

TEST_CASE("commutation matches the dense commutator") {
  CHECK(commutes(parse_pauli_literal("X"), parse_pauli_literal("X")));
  CHECK(!commutes(parse_pauli_literal("X"), parse_pauli_literal("Z")));

  std::mt19937_64 rng(7);
  for (size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      PauliOperator a = random_pauli(rng, n);
      PauliOperator b = random_pauli(rng, n);
      DenseMatrix ab = to_dense(a).mul(to_dense(b));
      DenseMatrix ba = to_dense(b).mul(to_dense(a));
      CHECK(commutes(a, b) == (ab.max_abs_diff(ba) < 1e-12));
      // Products in the two orders differ exactly by the symplectic sign.
      PauliOperator forward = multiply(a, b);
      PauliOperator backward = multiply(b, a);
      if (commutes(a, b)) {
        CHECK(forward == backward);
      } else {
        CHECK(((forward.phase_t + 2) & 3) == backward.phase_t);
      }
    }
  }
}

TEST_CASE("apply matches the stated sign rules") {
  // Z on |1> flips the sign.
  AmplitudeVector one = AmplitudeVector::basis_state(1, 1);
  AmplitudeVector z_one = apply(PauliOperator::single_z(1, 0), one);
  CHECK(z_one.entries[1] == cplx{-1.0, 0.0});
  // X on |0> permutes to |1>.
  AmplitudeVector x_zero = apply(PauliOperator::single_x(1, 0), AmplitudeVector::basis_state(1, 0));
  CHECK(x_zero.entries[1] == cplx{1.0, 0.0});
  CHECK(x_zero.entries[0] == cplx{0.0, 0.0});
}

TEST_CASE("apply agrees with dense application on random vectors") {
  std::mt19937_64 rng(11);
  for (size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      PauliOperator p = random_pauli(rng, n);
      AmplitudeVector v(n, testutil::random_complex_vector(rng, size_t{1} << n));
      AmplitudeVector fast = apply(p, v);
      std::vector<cplx> dense = to_dense(p).mul_vec(v.entries);
      CHECK(max_abs_diff(fast.entries, dense) < 1e-12);
    }
  }
}

TEST_CASE("apply is an involution for order-2 paulis and is linear") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = 1 + trial % 3;
    f2::BitVector x = testutil::random_bit_vector(rng, n);
    f2::BitVector z = testutil::random_bit_vector(rng, n);
    bool d = x.dot(z);
    PauliOperator p = PauliOperator::from_sign_bits(x, z, rng() & 1, d);
    REQUIRE(p.is_hermitian_order_two());
    AmplitudeVector v(n, testutil::random_complex_vector(rng, size_t{1} << n));
    AmplitudeVector twice = apply(p, apply(p, v));
    CHECK(max_abs_diff(twice.entries, v.entries) == 0.0);  // exact unit phases

    AmplitudeVector w(n, testutil::random_complex_vector(rng, size_t{1} << n));
    cplx alpha = testutil::random_complex(rng);
    AmplitudeVector combo(n, v.entries);
    for (size_t i = 0; i < combo.entries.size(); ++i) {
      combo.entries[i] = alpha * v.entries[i] + w.entries[i];
    }
    AmplitudeVector lhs = apply(p, combo);
    AmplitudeVector pv = apply(p, v);
    AmplitudeVector pw = apply(p, w);
    for (size_t i = 0; i < lhs.entries.size(); ++i) {
      CHECK(std::abs(lhs.entries[i] - (alpha * pv.entries[i] + pw.entries[i])) < 1e-12);
    }
  }
}

TEST_CASE("power product multiplies selected generators in order") {
  std::vector<PauliOperator> zs = {PauliOperator::single_z(2, 0), PauliOperator::single_z(2, 1)};
  CHECK(power_product(zs, f2::BitVector::from_string("00")) == PauliOperator::identity(2));
  PauliOperator both = power_product(zs, f2::BitVector::from_string("11"));
  CHECK(both == parse_pauli_literal("ZZ"));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = 2 + trial % 2;
    std::vector<PauliOperator> gens;
    for (size_t g = 0; g < 3; ++g) gens.push_back(random_pauli(rng, n));
    f2::BitVector exps = testutil::random_bit_vector(rng, 3);
    DenseMatrix expected = DenseMatrix::identity(size_t{1} << n);
    for (size_t g = 0; g < 3; ++g) {
      if (exps.get(g)) expected = expected.mul(to_dense(gens[g]));
    }
    CHECK(to_dense(power_product(gens, exps)).max_abs_diff(expected) == 0.0);
  }
}

TEST_CASE("hermitian order-2 condition matches the dense square") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    PauliOperator p = random_pauli(rng, 2);
    DenseMatrix square = to_dense(p).mul(to_dense(p));
    bool is_identity = square.max_abs_diff(DenseMatrix::identity(4)) < 1e-12;
    CHECK(p.is_hermitian_order_two() == is_identity);
  }
}
