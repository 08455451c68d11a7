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

#include "hypershare/generate.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hypershare/error.hpp"

namespace hypershare {

namespace {

constexpr std::uint64_t kDirectSampleLimit = std::uint64_t{1} << 22;

// The index-th k-subset of {1..n} in lexicographic order.
Edge UnrankCombination(std::uint64_t index, int k, Vertex n) {
  Edge e;
  Vertex v = 1;
  for (int slot = k; slot > 0; --slot) {
    while (true) {
      const std::uint64_t with_v = Binomial(n - v, static_cast<std::uint64_t>(slot - 1));
      if (index < with_v) break;
      index -= with_v;
      ++v;
    }
    e.push_back(v++);
  }
  return e;
}

bool NextCombination(Edge& s, Vertex n) {
  const std::size_t r = s.size();
  std::size_t i = r;
  while (i-- > 0) {
    if (s[i] < n - (r - 1 - i)) {
      ++s[i];
      for (std::size_t j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Edge> RandomEdges(int k, Vertex n, std::uint64_t count, RandomTape& tape) {
  if (k < 1 || static_cast<Vertex>(k) > n) Fail(ErrorCode::kUsage, "need 1 <= k <= n");
  const std::uint64_t all = Binomial(n, static_cast<std::uint64_t>(k));
  if (count > all) {
    Fail(ErrorCode::kInfeasibleCount, "requested " + std::to_string(count) +
                                          " edges but only " + std::to_string(all) +
                                          " k-sets exist");
  }
  std::vector<Edge> edges;
  if (all <= kDirectSampleLimit) {
    for (std::uint32_t index : tape.SampleWithoutReplacement(
             static_cast<std::uint32_t>(all), static_cast<std::uint32_t>(count))) {
      edges.push_back(UnrankCombination(index, k, n));
    }
    return edges;
  }
  std::set<Edge> drawn;
  while (drawn.size() < count) {
    Edge e;
    for (std::uint32_t i : tape.SampleWithoutReplacement(n, static_cast<std::uint32_t>(k))) {
      e.push_back(i + 1);
    }
    drawn.insert(std::move(e));
  }
  return {drawn.begin(), drawn.end()};
}

Hypergraph RandomHypergraph(int k, Vertex n, double beta, GenerateMode mode,
                            RandomTape& tape, std::uint64_t cap) {
  if (k < 2) Fail(ErrorCode::kUsage, "k must be at least 2");
  if (!(beta >= 0.0 && beta < 1.0)) Fail(ErrorCode::kUsage, "beta must lie in [0, 1)");
  RandomTape edge_tape = tape.Split("edges");
  std::vector<Edge> drawn = RandomEdges(k, n, SparseEdgeBudget(n, beta), edge_tape);
  if (mode == GenerateMode::kSparse) return Hypergraph(k, n, std::move(drawn));
  const std::uint64_t all = Binomial(n, static_cast<std::uint64_t>(k));
  if (all > cap) {
    Fail(ErrorCode::kSizeOverflow, "dense instance would list " + std::to_string(all) +
                                       " k-sets, above the cap of " + std::to_string(cap));
  }
  std::vector<Edge> edges;
  Edge s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[i] = static_cast<Vertex>(i + 1);
  std::size_t next = 0;  // drawn is lexicographically sorted
  do {
    if (next < drawn.size() && drawn[next] == s) {
      ++next;
    } else {
      edges.push_back(s);
    }
  } while (NextCombination(s, n));
  return Hypergraph(k, n, std::move(edges));
}

}  // namespace hypershare
