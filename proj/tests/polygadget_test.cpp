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

#include "hypershare/polygadget.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

namespace hypershare {
namespace {

using testutil::CodeOf;

std::vector<oracle::Row> ToRows(const Matrix& m) {
  std::vector<oracle::Row> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rows;
}

TEST(MonomialIndex, LexicographicPositions) {
  const MonomialIndex idx(2, 2);
  EXPECT_EQ(idx.size(), 9u);
  EXPECT_EQ(idx.Position({0, 0}), 0u);
  EXPECT_EQ(idx.Position({0, 1}), 1u);
  EXPECT_EQ(idx.Position({1, 0}), 3u);
  EXPECT_EQ(idx.Position({2, 2}), 8u);
  for (std::size_t p = 0; p < idx.size(); ++p) EXPECT_EQ(idx.Position(idx.Exponents(p)), p);
  EXPECT_EQ(MonomialIndex(3, 0).size(), 1u);
  EXPECT_EQ(CodeOf([] { MonomialIndex(8, 1000); }), ErrorCode::kSizeOverflow);
}

TEST(VanishingBasis, UnivariateExample) {
  const Field f = Field::Make(5);
  const MonomialIndex idx(1, 2);
  const Matrix v = VanishingBasis(0, 1, idx, f);
  EXPECT_EQ(v, Matrix::FromRows({{4, 1, 0}, {0, 4, 1}}, 3));
  // Every basis polynomial vanishes at X = 1.
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const Vector row(v.row(r).begin(), v.row(r).end());
    EXPECT_EQ(EvaluatePolynomial(row, {1}, idx, f), 0u);
  }
}

TEST(VanishingBasis, DimensionAndIndependence) {
  const Field f = Field::Make(11);
  for (std::size_t vars = 1; vars <= 3; ++vars) {
    for (std::size_t d = 0; d <= 3; ++d) {
      const MonomialIndex idx(vars, d);
      for (std::size_t j = 0; j < vars; ++j) {
        const Matrix v = VanishingBasis(j, 4, idx, f);
        std::size_t expect = d;
        for (std::size_t i = 1; i < vars; ++i) expect *= d + 1;
        EXPECT_EQ(v.rows(), expect);
        EXPECT_EQ(oracle::Rank(ToRows(v), 11), expect);
      }
    }
  }
}

TEST(VanishingBasis, ContainsMultiplesAndExcludesOne) {
  const Field f = Field::Make(7);
  RandomTape tape(2);
  const MonomialIndex idx(2, 2);
  for (Element alpha = 0; alpha < 7; ++alpha) {
    for (std::size_t j = 0; j < 2; ++j) {
      const auto rows = ToRows(VanishingBasis(j, alpha, idx, f));
      // (X_j - alpha) * Q with deg_j Q <= 1 and the other degree <= 2.
      oracle::Poly q;
      for (std::size_t a = 0; a <= 2; ++a) {
        for (std::size_t b = 0; b <= 2; ++b) {
          std::vector<std::size_t> e{a, b};
          if (e[j] > 1) continue;
          q[e] = tape.Uniform(7);
        }
      }
      const auto product = oracle::Multiply(oracle::Linear(2, j, alpha, 7), q, 7);
      EXPECT_TRUE(oracle::InSpan(rows, oracle::Coefficients(product, 2, 2), 7));
      oracle::Row one(idx.size(), 0);
      one[0] = 1;
      EXPECT_FALSE(oracle::InSpan(rows, one, 7));
    }
  }
}

TEST(ZVector, Examples) {
  const Field f = Field::Make(7);
  const MonomialIndex idx(1, 2);
  EXPECT_EQ(ZVector({{2, 3}}, idx, f), (Vector{6, 2, 1}));
  EXPECT_EQ(ZVector({{}}, idx, f), (Vector{1, 0, 0}));
  EXPECT_EQ(CodeOf([&] { ZVector({{1, 2, 3}}, idx, f); }), ErrorCode::kDegreeOverflow);
}

TEST(ZVector, MatchesPolynomialExpansion) {
  const Field f = Field::Make(13);
  RandomTape tape(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t vars = 1 + tape.Uniform(3), d = tape.Uniform(4);
    const MonomialIndex idx(vars, d);
    std::vector<std::vector<Element>> roots(vars);
    oracle::Poly expect;
    expect[std::vector<std::size_t>(vars, 0)] = 1;
    for (std::size_t j = 0; j < vars; ++j) {
      const std::size_t count = tape.Uniform(d + 1);
      for (std::size_t i = 0; i < count; ++i) {
        roots[j].push_back(tape.Uniform(13));
        expect = oracle::Multiply(expect, oracle::Linear(vars, j, roots[j].back(), 13), 13);
      }
    }
    const Vector z = ZVector(roots, idx, f);
    EXPECT_EQ(oracle::Row(z.begin(), z.end()), oracle::Coefficients(expect, vars, d));
    std::vector<Element> point(vars);
    for (auto& x : point) x = tape.Uniform(13);
    EXPECT_EQ(EvaluatePolynomial(z, point, idx, f), oracle::Evaluate(expect, point, 13));
  }
}

// z lies in V_{j,alpha} exactly when alpha is one of z's variable-j roots.
TEST(ZVector, DivisibilityCharacterization) {
  const Field f = Field::Make(7);
  for (std::size_t vars = 1; vars <= 2; ++vars) {
    const std::size_t d = 2;
    const MonomialIndex idx(vars, d);
    std::vector<Matrix> spaces[2];
    for (std::size_t j = 0; j < vars; ++j) {
      for (Element alpha = 0; alpha < 7; ++alpha) {
        spaces[j].push_back(VanishingBasis(j, alpha, idx, f));
      }
    }
    // Every root list of length <= d drawn from {1, 2, 3} per variable.
    const std::vector<std::vector<Element>> choices = {{}, {1}, {2}, {3}, {1, 2}, {2, 2}, {1, 3}};
    std::vector<std::size_t> pick(vars, 0);
    while (true) {
      std::vector<std::vector<Element>> roots;
      for (std::size_t j = 0; j < vars; ++j) roots.push_back(choices[pick[j]]);
      const Vector z = ZVector(roots, idx, f);
      for (std::size_t j = 0; j < vars; ++j) {
        for (Element alpha = 0; alpha < 7; ++alpha) {
          const bool member = oracle::InSpan(ToRows(spaces[j][alpha]),
                                             oracle::Row(z.begin(), z.end()), 7);
          const bool root = std::count(roots[j].begin(), roots[j].end(), alpha) > 0;
          ASSERT_EQ(member, root);
        }
      }
      std::size_t j = vars;
      while (j-- > 0) {
        if (++pick[j] < choices.size()) break;
        pick[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
  }
}

}  // namespace
}  // namespace hypershare
