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

#include "stab/f2.hpp"
#include "test_util.hpp"

using namespace stab::f2;
using testutil::random_bit_matrix;
using testutil::random_bit_vector;
using testutil::schoolbook_mul;
using testutil::to_ints;

TEST_CASE("bit vector basics") {
  BitVector v = BitVector::from_string("0110");
  CHECK(v.size() == 4);
  CHECK(!v.get(0));
  CHECK(v.get(1));
  CHECK(v.count() == 2);
  CHECK(v.to_string() == "0110");
  CHECK(v.first_set() == 1);

  BitVector w = v;
  w ^= v;
  CHECK(!w.any());  // addition is self-inverse

  CHECK(BitVector::from_string("101").dot(BitVector::from_string("110")) == true);
  CHECK(BitVector::from_string("101").dot(BitVector::from_string("011")) == true);
  CHECK(BitVector::from_string("101").dot(BitVector::from_string("010")) == false);

  CHECK(v.concat(BitVector::from_string("10")).to_string() == "011010");
  CHECK(v.slice(1, 3).to_string() == "11");
  CHECK_THROWS_AS(v.get(4), std::out_of_range);
}

TEST_CASE("bit vector word boundaries") {
  std::mt19937_64 rng(7);
  for (size_t len : {63u, 64u, 65u, 130u}) {
    BitVector a = random_bit_vector(rng, len);
    BitVector b = random_bit_vector(rng, len);
    bool expected = false;
    for (size_t i = 0; i < len; ++i) expected ^= a.get(i) && b.get(i);
    CHECK(a.dot(b) == expected);
    BitVector sum = a ^ b;
    for (size_t i = 0; i < len; ++i) CHECK(sum.get(i) == (a.get(i) ^ b.get(i)));
  }
}

TEST_CASE("rref of the identity is the identity") {
  RrefResult rr = rref(BitMatrix::identity(3));
  CHECK(rr.matrix == BitMatrix::identity(3));
  CHECK(rr.record.transform == BitMatrix::identity(3));
  CHECK(rr.record.pivot_columns == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("rref forced 2x2 elimination") {
  BitMatrix a = BitMatrix::from_strings({"11", "10"});
  RrefResult rr = rref(a);
  CHECK(rr.matrix == BitMatrix::identity(2));
  CHECK(rr.record.pivot_columns == std::vector<size_t>{0, 1});
}

TEST_CASE("rref transform reproduces the reduction on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    BitMatrix a = random_bit_matrix(rng, 8, 16);
    RrefResult rr = rref(a);
    // Independent schoolbook check of transform * a == rref(a).
    CHECK(schoolbook_mul(to_ints(rr.record.transform), to_ints(a)) == to_ints(rr.matrix));
    // Pivot columns strictly increase.
    for (size_t i = 1; i < rr.record.pivot_columns.size(); ++i) {
      CHECK(rr.record.pivot_columns[i - 1] < rr.record.pivot_columns[i]);
    }
    // Idempotence.
    CHECK(rref(rr.matrix).matrix == rr.matrix);
    // The transform is invertible.
    CHECK(invert(rr.record.transform).has_value());
  }
}

TEST_CASE("solve on identity and free-variable systems") {
  BitVector rhs = BitVector::from_string("10");
  CHECK(solve(BitMatrix::identity(2), rhs) == rhs);

  // One equation, two unknowns: the free variable is zeroed.
  CHECK(solve(BitMatrix::from_strings({"11"}), BitVector::from_string("1")) ==
        BitVector::from_string("10"));

  // Contradictory rows.
  CHECK(!solve(BitMatrix::from_strings({"10", "10"}), BitVector::from_string("10")).has_value());
}

TEST_CASE("solve returns a valid solution exactly when one exists") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    BitMatrix a = random_bit_matrix(rng, 5, 7);
    BitVector b = random_bit_vector(rng, 5);
    std::optional<BitVector> x = solve(a, b);
    // Exhaustive oracle over all 2^7 candidates.
    bool solvable = false;
    for (uint64_t cand = 0; cand < (1u << 7) && !solvable; ++cand) {
      solvable = a.mul(BitVector::from_lsb_bits(cand, 7)) == b;
    }
    CHECK(x.has_value() == solvable);
    if (x) CHECK(a.mul(*x) == b);
  }
}

TEST_CASE("null space basis cases") {
  CHECK(null_space_basis(BitMatrix::identity(3)).empty());

  std::vector<BitVector> basis = null_space_basis(BitMatrix::from_strings({"11"}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == BitVector::from_string("11"));
}

TEST_CASE("null space spans the kernel exactly") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    size_t cols = 5;
    BitMatrix a = random_bit_matrix(rng, 3, cols);
    std::vector<BitVector> basis = null_space_basis(a);
    size_t r = rank(a);
    CHECK(basis.size() == cols - r);
    for (const BitVector& x : basis) CHECK(!a.mul(x).any());
    // Exhaustive kernel count: 2^(cols - rank) vectors must be annihilated.
    size_t kernel_size = 0;
    for (uint64_t cand = 0; cand < (1u << cols); ++cand) {
      if (!a.mul(BitVector::from_lsb_bits(cand, cols)).any()) ++kernel_size;
    }
    CHECK(kernel_size == (size_t{1} << basis.size()));
    // Basis vectors are independent.
    CHECK(rank(BitMatrix::from_rows(basis, cols)) == basis.size());
  }
}

TEST_CASE("invert identities and shears") {
  CHECK(invert(BitMatrix::identity(4)) == BitMatrix::identity(4));
  BitMatrix shear = BitMatrix::from_strings({"11", "01"});
  CHECK(invert(shear) == shear);  // self-inverse
  CHECK(!invert(BitMatrix::from_strings({"11", "11"})).has_value());
}

TEST_CASE("invert random invertible matrices") {
  std::mt19937_64 rng(19);
  int found = 0;
  while (found < 30) {
    BitMatrix a = random_bit_matrix(rng, 6, 6);
    std::optional<BitMatrix> inverse = invert(a);
    if (!inverse) continue;
    ++found;
    CHECK(schoolbook_mul(to_ints(*inverse), to_ints(a)) == to_ints(BitMatrix::identity(6)));
    CHECK(schoolbook_mul(to_ints(a), to_ints(*inverse)) == to_ints(BitMatrix::identity(6)));
    CHECK(invert(*inverse) == a);
  }
}

TEST_CASE("right pseudoinverse via the explicit formula") {
  CHECK(right_pseudoinverse(BitMatrix::identity(2)) == BitMatrix::identity(2));

  std::optional<BitMatrix> padded = right_pseudoinverse(BitMatrix::from_strings({"100", "010"}));
  REQUIRE(padded.has_value());
  CHECK(*padded == BitMatrix::from_strings({"10", "01", "00"}));

  // Dependent rows are an error.
  CHECK(!right_pseudoinverse(BitMatrix::from_strings({"1010", "1010"})).has_value());

  // Independent rows whose Gram matrix is singular over GF(2): the formula
  // has no answer and the failure is surfaced rather than papered over.
  CHECK(!right_pseudoinverse(BitMatrix::from_strings({"11"})).has_value());
  CHECK(right_inverse(BitMatrix::from_strings({"11"})).has_value());
}

TEST_CASE("right pseudoinverse on random full-rank wide matrices") {
  std::mt19937_64 rng(23);
  int formula_hits = 0;
  for (int trial = 0; trial < 200 && formula_hits < 30; ++trial) {
    BitMatrix a = random_bit_matrix(rng, 5, 10);
    if (rank(a) != 5) continue;
    std::optional<BitMatrix> pseudo = right_pseudoinverse(a);
    if (!pseudo) continue;  // Gram matrix happened to be singular
    ++formula_hits;
    CHECK(schoolbook_mul(to_ints(a), to_ints(*pseudo)) == to_ints(BitMatrix::identity(5)));
  }
  CHECK(formula_hits == 30);
}

TEST_CASE("general right inverse works for every full-row-rank matrix") {
  std::mt19937_64 rng(29);
  int checked = 0;
  while (checked < 50) {
    BitMatrix a = random_bit_matrix(rng, 5, 10);
    if (rank(a) != 5) continue;
    ++checked;
    std::optional<BitMatrix> rinv = right_inverse(a);
    REQUIRE(rinv.has_value());
    CHECK(schoolbook_mul(to_ints(a), to_ints(*rinv)) == to_ints(BitMatrix::identity(5)));
  }
  CHECK(!right_inverse(BitMatrix::from_strings({"11", "11"})).has_value());
}

TEST_CASE("gray sequence for k = 0 and k = 2") {
  std::vector<GrayStep> empty = gray_sequence(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].codeword.size() == 0);
  CHECK(!empty[0].flipped_bit.has_value());

  std::vector<GrayStep> two = gray_sequence(2);
  REQUIRE(two.size() == 4);
  CHECK(two[0].codeword == BitVector::from_lsb_bits(0b00, 2));
  CHECK(two[1].codeword == BitVector::from_lsb_bits(0b01, 2));
  CHECK(two[2].codeword == BitVector::from_lsb_bits(0b11, 2));
  CHECK(two[3].codeword == BitVector::from_lsb_bits(0b10, 2));
  CHECK(two[1].flipped_bit == 0);
  CHECK(two[2].flipped_bit == 1);
  CHECK(two[3].flipped_bit == 0);
}

TEST_CASE("gray sequence enumerates all codewords with single-bit steps") {
  std::vector<GrayStep> steps = gray_sequence(5);
  REQUIRE(steps.size() == 32);
  std::vector<bool> seen(32, false);
  for (const GrayStep& s : steps) {
    uint64_t value = 0;
    for (size_t b = 0; b < 5; ++b) value |= uint64_t{s.codeword.get(b)} << b;
    CHECK(!seen[value]);
    seen[value] = true;
  }
  for (size_t t = 1; t < steps.size(); ++t) {
    BitVector diff = steps[t].codeword ^ steps[t - 1].codeword;
    CHECK(diff.count() == 1);
    CHECK(diff.get(*steps[t].flipped_bit));
  }
}
