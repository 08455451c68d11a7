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

#include "hypershare/scheme.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "hypershare/polygadget.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace hypershare {
namespace {

using testutil::CodeOf;

std::vector<Edge> AllTuples(const PartiteHypergraph& h) {
  std::vector<Edge> out;
  Edge t(h.k());
  std::vector<std::size_t> idx(h.k(), 0);
  for (int j = 0; j < h.k(); ++j) {
    if (h.part(j).empty()) return out;
  }
  while (true) {
    for (int j = 0; j < h.k(); ++j) t[j] = h.part(j)[idx[j]];
    out.push_back(t);
    int j = h.k();
    while (j-- > 0) {
      if (++idx[j] < h.part(j).size()) break;
      idx[j] = 0;
    }
    if (j < 0) return out;
  }
}

std::vector<Edge> AllKSets(int k, Vertex n) {
  std::vector<Edge> out;
  for (const auto& s : oracle::AllSubsets(n)) {
    if (s.size() == static_cast<std::size_t>(k)) out.push_back(s);
  }
  return out;
}

void ExpectEdgesReconstruct(const BuiltScheme& s, const std::vector<Edge>& edges,
                            RandomTape& tape) {
  const Element secret = tape.Uniform(s.msp.field().modulus());
  const auto shares = Distribute(s.msp, secret, tape);
  for (const auto& e : edges) {
    ASSERT_TRUE(Accepts(s.msp, e));
    ASSERT_EQ(Reconstruct(s.msp, e, shares), secret);
  }
}

// Every A_k vertex of a k=2 graph with the same degree d.
PartiteHypergraph RegularBipartite(std::size_t m1, std::size_t m2, std::size_t d) {
  std::vector<Vertex> a, b;
  for (std::size_t i = 0; i < m1; ++i) a.push_back(static_cast<Vertex>(i + 1));
  for (std::size_t i = 0; i < m2; ++i) b.push_back(static_cast<Vertex>(m1 + i + 1));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m2; ++i) {
    for (std::size_t j = 0; j < d; ++j) edges.push_back({a[(i + j) % m1], b[i]});
  }
  return PartiteHypergraph({a, b}, edges);
}

TEST(Bounds, Formulas) {
  EXPECT_DOUBLE_EQ(SparsePartiteBound({4, 4}, 2), 16.0);
  EXPECT_DOUBLE_EQ(SparsePartiteBound({3, 3, 3}, 1), 27.0);
  EXPECT_DOUBLE_EQ(DensePartiteBound({4, 4}, 1), 16.0);
  EXPECT_NEAR(UniformAsymptoticBound(16, 2, 0.0), std::pow(4.0, 3), 1e-9);
}

TEST(SparsePartite, RegularBipartiteMeetsBoundExactly) {
  const auto h = RegularBipartite(4, 4, 2);
  const auto s = BuildSparsePartite(h, Field::Make(5));
  EXPECT_EQ(s.report.total_rows, 16u);
  EXPECT_DOUBLE_EQ(*s.report.Bound("gadget_bound"), 16.0);
  RandomTape tape(1);
  ExpectEdgesReconstruct(s, h.edges(), tape);
  for (const auto& t : AllTuples(h)) EXPECT_EQ(Accepts(s.msp, t), h.HasEdge(t));
}

TEST(SparsePartite, ThreePartiteWithinBound) {
  const PartiteHypergraph h({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}},
                            {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}});
  const auto s = BuildSparsePartite(h, Field::Make(7));
  EXPECT_LE(s.report.total_rows, 27u);
  RandomTape tape(2);
  ExpectEdgesReconstruct(s, h.edges(), tape);
}

TEST(SparsePartite, EmptyEdgeSetAcceptsNoTuple) {
  const PartiteHypergraph h({{1, 2}, {3, 4}, {5}}, {});
  const auto s = BuildSparsePartite(h, Field::Make(5));
  for (const auto& t : AllTuples(h)) EXPECT_FALSE(Accepts(s.msp, t));
}

TEST(SparsePartite, FieldTooSmall) {
  const auto h = RegularBipartite(4, 4, 2);
  EXPECT_EQ(CodeOf([&] { BuildSparsePartite(h, Field::Make(3)); }),
            ErrorCode::kFieldTooSmall);
}

TEST(SparsePartite, BipartiteIsExact) {
  RandomTape tape(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = testutil::RandomPartite({1 + tape.Uniform(5), 1 + tape.Uniform(5)}, 1, 2, tape);
    const auto s = BuildSparsePartite(h, Field::Make(11));
    EXPECT_LE(static_cast<double>(s.report.total_rows), *s.report.Bound("gadget_bound"));
    for (const auto& t : AllTuples(h)) {
      ASSERT_EQ(Accepts(s.msp, t), h.HasEdge(t));
      ASSERT_EQ(PrivacyRankCheck(s.msp, t), !h.HasEdge(t));
    }
    ExpectEdgesReconstruct(s, h.edges(), tape);
  }
}

// A tuple is accepted iff z_{a_k} lies in V_{1,a_1} + ... + V_{k-1,a_{k-1}}.
TEST(SparsePartite, ThreePartiteAcceptanceIsSubspaceSum) {
  RandomTape tape(4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::vector<std::size_t> sizes{1 + tape.Uniform(3), 1 + tape.Uniform(3),
                                         1 + tape.Uniform(3)};
    const auto h = testutil::RandomPartite(sizes, 1, 3, tape);
    const Field f = Field::Make(11);
    const auto s = BuildSparsePartite(h, f);
    // Evaluation points 1, 2, ... in class order.
    std::vector<Element> alpha(h.MaxVertex() + 1, 0);
    Element next = 1;
    for (int j = 0; j < 2; ++j) {
      for (Vertex v : h.part(j)) alpha[v] = next++;
    }
    std::size_t d = 0;
    for (Vertex v : h.part(2)) d = std::max(d, h.Degree(v));
    const MonomialIndex idx(2, d);
    for (const auto& t : AllTuples(h)) {
      std::vector<std::vector<Element>> roots(2);
      for (const auto& e : h.edges()) {
        if (e[2] != t[2]) continue;
        roots[0].push_back(alpha[e[0]]);
        roots[1].push_back(alpha[e[1]]);
      }
      const bool has_edges = !roots[0].empty();
      bool predicted = false;
      if (has_edges) {
        std::vector<oracle::Row> sum;
        for (int j = 0; j < 2; ++j) {
          const Matrix v = VanishingBasis(j, alpha[t[j]], idx, f);
          for (std::size_t r = 0; r < v.rows(); ++r) sum.emplace_back(v.row(r).begin(), v.row(r).end());
        }
        const Vector z = ZVector(roots, idx, f);
        predicted = sum.empty() ? std::all_of(z.begin(), z.end(), [](Element x) { return x == 0; })
                                : oracle::InSpan(sum, oracle::Row(z.begin(), z.end()), 11);
      }
      ASSERT_EQ(Accepts(s.msp, t), predicted) << trial;
      if (h.HasEdge(t)) ASSERT_TRUE(predicted);
    }
  }
}

TEST(DensePartite, BoundExample) {
  // Each A_2 vertex misses exactly one A_1 vertex.
  std::vector<Edge> edges;
  for (Vertex b = 5; b <= 8; ++b) {
    for (Vertex a = 1; a <= 4; ++a) {
      if (a != b - 4) edges.push_back({a, b});
    }
  }
  const PartiteHypergraph h({{1, 2, 3, 4}, {5, 6, 7, 8}}, edges);
  const auto s = BuildDensePartite(h, Field::Make(5));
  EXPECT_DOUBLE_EQ(*s.report.Bound("gadget_bound"), 16.0);
  EXPECT_LE(s.report.total_rows, 16u);
  for (const auto& t : AllTuples(h)) {
    EXPECT_EQ(Accepts(s.msp, t), h.HasEdge(t));
  }
}

TEST(DensePartite, CompleteGraphAcceptsEveryTuple) {
  for (int k = 2; k <= 3; ++k) {
    std::vector<std::vector<Vertex>> parts;
    Vertex next = 1;
    for (int j = 0; j < k; ++j) parts.push_back({next, next + 1}), next += 2;
    PartiteHypergraph empty(parts, {});
    const auto complete = ComplementPartite(empty);
    const auto s = BuildDensePartite(complete, Field::Make(7));
    // No non-edges: every polynomial block is the constant 1.
    for (std::size_t r = 0; r < s.msp.rows(); ++r) {
      if (complete.PartOf(s.msp.labels()[r]) != k - 1) continue;
      const auto row = s.msp.matrix().row(r);
      if (row[0] == 1) continue;
      EXPECT_EQ(row[k], 1u);
    }
    for (const auto& t : AllTuples(complete)) EXPECT_TRUE(Accepts(s.msp, t));
    RandomTape tape(5);
    ExpectEdgesReconstruct(s, complete.edges(), tape);
  }
}

TEST(DensePartite, BipartiteIsExact) {
  RandomTape tape(6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + tape.Uniform(5);
    const auto h = testutil::RandomPartite({m, 1 + tape.Uniform(5)}, 3, 4, tape);
    RandomTape target(trial);
    const auto s = BuildDensePartite(h, Field::Make(11), target);
    EXPECT_LE(static_cast<double>(s.report.total_rows), *s.report.Bound("gadget_bound"));
    for (const auto& t : AllTuples(h)) {
      ASSERT_EQ(Accepts(s.msp, t), h.HasEdge(t)) << trial;
    }
    ExpectEdgesReconstruct(s, h.edges(), tape);
  }
}

TEST(Overlay, AddsThresholdRows) {
  const Field f = Field::Make(11);
  const MonotoneSpanProgram empty(f, Matrix(0, 1), {}, Vector{1}, 6);
  const auto o = UniformOverlay(empty, 2, 6, f);
  EXPECT_EQ(o.rows(), 6u);
  for (const auto& s : oracle::AllSubsets(6)) EXPECT_EQ(Accepts(o, s), s.size() >= 3);
  EXPECT_EQ(UniformOverlay(empty, 6, 6, f).rows(), 0u);
}

TEST(Overlay, KSetsUnaffected) {
  RandomTape tape(7);
  const auto h = RegularBipartite(4, 4, 2);
  const Field f = Field::Make(11);
  const auto base = BuildSparsePartite(h, f).msp;
  const auto o = UniformOverlay(base, 2, 8, f);
  EXPECT_EQ(o.rows(), base.rows() + 8);
  for (const auto& s : oracle::AllSubsets(8)) {
    if (s.size() <= 2) {
      EXPECT_EQ(Accepts(o, s), Accepts(base, s));
    } else {
      EXPECT_TRUE(Accepts(o, s));
    }
  }
}

void ExpectExhaustiveAgreement(const BuiltScheme& s, const Hypergraph& h) {
  for (const auto& set : oracle::AllSubsets(h.n())) {
    const bool qualified = IsQualified(h, set);
    ASSERT_EQ(Accepts(s.msp, set), qualified);
    if (!qualified) ASSERT_TRUE(PrivacyRankCheck(s.msp, set));
  }
}

TEST(SparseUniform, BipartiteMatchesStructureExhaustively) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    RandomTape gen(seed);
    const Vertex n = 5 + static_cast<Vertex>(seed % 4);
    const double beta = 0.3;
    auto h = testutil::RandomUniform(2, n, 1, 3, gen);
    if (h.edges().size() > SparseEdgeBudget(n, beta)) {
      auto edges = h.edges();
      edges.resize(SparseEdgeBudget(n, beta));
      h = Hypergraph(2, n, edges);
    }
    RandomTape tape(seed);
    const auto s = BuildSparseUniform(h, beta, tape);
    ExpectExhaustiveAgreement(s, h);
    ExpectEdgesReconstruct(s, h.edges(), tape);
    EXPECT_EQ(s.report.total_rows, s.msp.rows());
    std::size_t sum = 0;
    for (auto c : s.report.rows_per_participant) sum += c;
    EXPECT_EQ(sum, s.report.total_rows);
    for (const auto& leaf : s.report.leaves) {
      EXPECT_LE(static_cast<double>(leaf.rows), leaf.bound);
    }
  }
}

TEST(SparseUniform, ForcedPartitionStaysCorrect) {
  // A perfect matching keeps every degree at 1 inside any block.
  const Hypergraph h(2, 8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  RandomTape tape(3);
  BuildOptions options;
  options.force_partition = true;
  const auto s = BuildSparseUniform(h, 0.5, tape, options);
  EXPECT_NE(*s.report.Fact("buckets_partitioned"), "0");
  ExpectExhaustiveAgreement(s, h);
}

TEST(SparseUniform, ThreeUniformAcceptsEdgesAndLargeSets) {
  RandomTape gen(12);
  const auto h = testutil::RandomUniform(3, 8, 1, 8, gen);
  RandomTape tape(4);
  const auto s = BuildSparseUniform(h, 0.5, tape);
  ExpectEdgesReconstruct(s, h.edges(), tape);
  for (const auto& set : AllKSets(4, 8)) EXPECT_TRUE(Accepts(s.msp, set));
}

TEST(SparseUniform, Preconditions) {
  RandomTape tape(1);
  const auto dense = testutil::RandomUniform(2, 8, 1, 1, tape);
  EXPECT_EQ(CodeOf([&] { BuildSparseUniform(dense, 0.0, tape); }), ErrorCode::kUsage);
  const Hypergraph h(2, 8, {{1, 2}});
  EXPECT_EQ(CodeOf([&] { BuildSparseUniform(h, 1.0, tape); }), ErrorCode::kUsage);
  BuildOptions tiny;
  tiny.modulus = 5;
  EXPECT_EQ(CodeOf([&] { BuildSparseUniform(h, 0.0, tape, tiny); }),
            ErrorCode::kFieldTooSmall);
}

TEST(DenseUniform, CompleteGraphsAcceptEverything) {
  for (int k = 2; k <= 3; ++k) {
    for (Vertex n = static_cast<Vertex>(k + 1); n <= 7; ++n) {
      const Hypergraph h(k, n, AllKSets(k, n));
      RandomTape tape(n);
      const auto s = BuildDenseUniform(h, 0.0, tape);
      for (const auto& set : oracle::AllSubsets(n)) {
        ASSERT_EQ(Accepts(s.msp, set), set.size() >= static_cast<std::size_t>(k));
      }
    }
  }
}

TEST(DenseUniform, BipartiteMatchesStructureExhaustively) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Vertex n = 5 + static_cast<Vertex>(seed % 4);
    const double beta = 0.25;
    RandomTape gen(seed);
    auto all = AllKSets(2, n);
    // Drop up to the budget of pairs.
    const auto drop = gen.SampleWithoutReplacement(static_cast<std::uint32_t>(all.size()),
                                                   static_cast<std::uint32_t>(SparseEdgeBudget(n, beta)));
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < all.size(); ++i) {
      if (!std::binary_search(drop.begin(), drop.end(), i)) edges.push_back(all[i]);
    }
    const Hypergraph h(2, n, edges);
    RandomTape tape(seed);
    const auto s = BuildDenseUniform(h, beta, tape);
    ExpectExhaustiveAgreement(s, h);
    ExpectEdgesReconstruct(s, h.edges(), tape);
  }
}

TEST(Report, FormatHasTableAndKeyValues) {
  RandomTape gen(1);
  const auto h = testutil::RandomUniform(2, 6, 1, 3, gen);
  RandomTape tape(2);
  const auto s = BuildSparseUniform(h, 0.5, tape);
  const std::string text = FormatReport(ShareSizeReport(s));
  EXPECT_NE(text.find("participant  rows"), std::string::npos);
  EXPECT_NE(text.find("[summary]"), std::string::npos);
  EXPECT_NE(text.find("total_rows=" + std::to_string(s.msp.rows())), std::string::npos);
  EXPECT_NE(text.find("ratio_total_to_asymptotic="), std::string::npos);
  RandomTape again(2);
  EXPECT_EQ(FormatReport(BuildSparseUniform(h, 0.5, again).report), FormatReport(s.report));
}

}  // namespace
}  // namespace hypershare
