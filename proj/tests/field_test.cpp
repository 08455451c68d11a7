// Copyright 2026 The Hypershare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypershare/field.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hypershare/error.hpp"
#include "hypershare/random.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace hypershare {
namespace {

using testutil::CodeOf;

Matrix RandomMatrix(const Field& f, std::size_t rows, std::size_t cols, RandomTape& tape) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = tape.Uniform(f.modulus());
  }
  return m;
}

std::vector<oracle::Row> ToRows(const Matrix& m) {
  std::vector<oracle::Row> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rows;
}

TEST(MakeField, AcceptsPrimesOnly) {
  EXPECT_EQ(Field::Make(5).modulus(), 5u);
  EXPECT_EQ(CodeOf([] { Field::Make(6); }), ErrorCode::kNotPrime);
  ASSERT_TRUE(oracle::TrialDivisionIsPrime(10007));
  EXPECT_EQ(Field::Make(10007).modulus(), 10007u);
  EXPECT_EQ(CodeOf([] { Field::Make(1); }), ErrorCode::kRange);
  EXPECT_EQ(CodeOf([] { Field::Make(kMaxModulus + 1); }), ErrorCode::kRange);
  EXPECT_EQ(Field::Make((std::uint64_t{1} << 61) - 1).modulus(), (std::uint64_t{1} << 61) - 1);
}

TEST(Primality, MatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(IsPrime(n), oracle::TrialDivisionIsPrime(n)) << n;
  }
  // Carmichael numbers and strong pseudoprimes to small bases.
  for (std::uint64_t n : {561ULL, 41041ULL, 3215031751ULL, 3825123056546413051ULL}) {
    EXPECT_FALSE(IsPrime(n)) << n;
  }
  EXPECT_TRUE(IsPrime(2147483647ULL));
  EXPECT_TRUE(IsPrime((1ULL << 61) - 1));
}

TEST(SmallestPrime, Examples) {
  EXPECT_EQ(SmallestPrimeAtLeast(2), 2u);
  EXPECT_EQ(SmallestPrimeAtLeast(9), 11u);
  EXPECT_EQ(SmallestPrimeAtLeast(90), 97u);
  // Sieve oracle.
  std::vector<bool> composite(6000, false);
  for (std::size_t p = 2; p * p < composite.size(); ++p) {
    for (std::size_t m = p * p; m < composite.size(); m += p) composite[m] = true;
  }
  for (std::uint64_t b = 2; b < 5000; ++b) {
    std::uint64_t expect = b;
    while (composite[expect]) ++expect;
    ASSERT_EQ(SmallestPrimeAtLeast(b), expect) << b;
  }
}

TEST(FieldArith, Examples) {
  const Field f5 = Field::Make(5), f7 = Field::Make(7);
  EXPECT_EQ(f5.Add(3, 4), 2u);
  EXPECT_EQ(f7.Inv(3), 5u);
  EXPECT_EQ(f7.Neg(0), 0u);
  EXPECT_EQ(f7.Sub(2, 5), 4u);
  EXPECT_EQ(f7.Reduce(-1), 6u);
  EXPECT_EQ(CodeOf([&] { f7.Inv(0); }), ErrorCode::kDivisionByZero);
}

TEST(FieldArith, AxiomsOnRandomTriples) {
  RandomTape tape(11);
  for (std::uint64_t q : {2ULL, 3ULL, 101ULL, 65537ULL, (1ULL << 61) - 1}) {
    const Field f = Field::Make(q);
    for (int i = 0; i < 2000; ++i) {
      const Element a = tape.Uniform(q), b = tape.Uniform(q), c = tape.Uniform(q);
      ASSERT_EQ(f.Add(a, f.Add(b, c)), f.Add(f.Add(a, b), c));
      ASSERT_EQ(f.Mul(a, f.Mul(b, c)), f.Mul(f.Mul(a, b), c));
      ASSERT_EQ(f.Add(a, b), f.Add(b, a));
      ASSERT_EQ(f.Mul(a, b), f.Mul(b, a));
      ASSERT_EQ(f.Mul(a, f.Add(b, c)), f.Add(f.Mul(a, b), f.Mul(a, c)));
      ASSERT_EQ(f.Add(a, f.Neg(a)), 0u);
      if (a != 0) ASSERT_EQ(f.Mul(a, f.Inv(a)), 1u);
    }
  }
}

TEST(Rank, Examples) {
  const Field f5 = Field::Make(5);
  EXPECT_EQ(Rank(f5, Matrix::Identity(3)), 3u);
  EXPECT_EQ(Rank(f5, Matrix(2, 4)), 0u);
  EXPECT_EQ(Rank(f5, Matrix::FromRows({{1, 2}, {2, 4}}, 2)), 1u);
  EXPECT_EQ(Rank(f5, Matrix(0, 3)), 0u);
}

// The span of a rank-r matrix over GF(q) has exactly q^r vectors.
TEST(Rank, MatchesSpanSizeOnTinyField) {
  const Field f3 = Field::Make(3);
  RandomTape tape(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + tape.Uniform(4), cols = 1 + tape.Uniform(4);
    const Matrix m = RandomMatrix(f3, rows, cols, tape);
    std::set<Vector> span;
    std::size_t combos = 1;
    for (std::size_t r = 0; r < rows; ++r) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      Vector coeff(rows);
      std::size_t x = code;
      for (auto& c : coeff) {
        c = x % 3;
        x /= 3;
      }
      span.insert(VecMat(f3, coeff, m));
    }
    std::size_t expect = 1;
    for (std::size_t i = 0; i < Rank(f3, m); ++i) expect *= 3;
    ASSERT_EQ(span.size(), expect);
  }
}

TEST(Rank, InvariantUnderPermutationAndDependentRows) {
  RandomTape tape(9);
  const Field f = Field::Make(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = RandomMatrix(f, 1 + tape.Uniform(5), 1 + tape.Uniform(6), tape);
    std::vector<std::size_t> order(m.rows());
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());
    EXPECT_EQ(Rank(f, m.SelectRows(order)), Rank(f, m));
    Vector u(m.rows());
    for (auto& x : u) x = tape.Uniform(7);
    Matrix extended = m;
    extended.AppendRow(VecMat(f, u, m));
    EXPECT_EQ(Rank(f, extended), Rank(f, m));
    EXPECT_EQ(Rank(f, m), oracle::Rank(ToRows(m), 7));
  }
}

TEST(SolveLeft, Examples) {
  const Field f = Field::Make(5);
  const Vector t10{1, 0};
  auto v = SolveLeft(f, Matrix::Identity(2), t10);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (Vector{1, 0}));
  EXPECT_FALSE(SolveLeft(f, Matrix::FromRows({{1, 1}}, 2), t10));
}

TEST(SolveLeft, RecoversKnownCombination) {
  const Field f = Field::Make(7);
  RandomTape tape(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = RandomMatrix(f, 4, 6, tape);
    Vector u(4);
    for (auto& x : u) x = tape.Uniform(7);
    const Vector t = VecMat(f, u, m);
    const auto v = SolveLeft(f, m, t);
    ASSERT_TRUE(v);
    EXPECT_EQ(VecMat(f, *v, m), t);
  }
}

TEST(SolveLeft, SolvableIffRankUnchanged) {
  const Field f = Field::Make(3);
  RandomTape tape(4);
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix m = RandomMatrix(f, tape.Uniform(5), 1 + tape.Uniform(4), tape);
    Vector t(m.cols());
    for (auto& x : t) x = tape.Uniform(3);
    Matrix with = m;
    with.AppendRow(t);
    const auto v = SolveLeft(f, m, t);
    EXPECT_EQ(v.has_value(), Rank(f, with) == Rank(f, m));
    if (v) EXPECT_EQ(VecMat(f, *v, m), t);
  }
}

TEST(SolveLeft, CanonicalFreeVariablesAreZero) {
  const Field f = Field::Make(5);
  // Rows 0 and 1 are equal; the pivot row is used and the duplicate gets 0.
  const Matrix m = Matrix::FromRows({{1, 0}, {1, 0}, {0, 1}}, 2);
  const Vector t{2, 3};
  const auto v = SolveLeft(f, m, t);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (Vector{2, 0, 3}));
}

TEST(MatVec, Examples) {
  const Field f = Field::Make(5);
  const Vector r{3, 1, 4};
  EXPECT_EQ(MatVec(f, Matrix::Identity(3), r), r);
  EXPECT_EQ(MatVec(f, Matrix(2, 3), r), (Vector{0, 0}));
  const Vector ones{1, 1};
  EXPECT_EQ(MatVec(f, Matrix::FromRows({{1, 2}, {3, 4}}, 2), ones), (Vector{3, 2}));
}

TEST(Nullspace, BasisIsAnnihilatedAndComplete) {
  const Field f = Field::Make(11);
  RandomTape tape(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = RandomMatrix(f, tape.Uniform(5), 1 + tape.Uniform(6), tape);
    const Matrix n = Nullspace(f, m);
    EXPECT_EQ(n.rows(), m.cols() - Rank(f, m));
    EXPECT_EQ(Rank(f, n), n.rows());
    for (std::size_t r = 0; r < n.rows(); ++r) {
      for (Element x : MatVec(f, m, n.row(r))) ASSERT_EQ(x, 0u);
    }
  }
}

TEST(Inverse, ProductIsIdentity) {
  const Field f = Field::Make(13);
  RandomTape tape(3);
  int invertible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + tape.Uniform(5);
    const Matrix m = RandomMatrix(f, n, n, tape);
    const auto inv = Inverse(f, m);
    EXPECT_EQ(inv.has_value(), Rank(f, m) == n);
    if (inv) {
      ++invertible;
      EXPECT_EQ(MatMul(f, m, *inv), Matrix::Identity(n));
    }
  }
  EXPECT_GT(invertible, 50);
  EXPECT_FALSE(Inverse(f, Matrix::FromRows({{1, 2}, {2, 4}}, 2)));
}

TEST(Matrix, AppendRowChecksWidth) {
  Matrix m(0, 3);
  const Vector ok{1, 2, 3}, bad{1, 2};
  m.AppendRow(ok);
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(CodeOf([&] { m.AppendRow(bad); }), ErrorCode::kRange);
}

}  // namespace
}  // namespace hypershare
