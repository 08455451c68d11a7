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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hypershare/hypergraph.hpp"
#include "hypershare/random.hpp"

namespace hypershare {

// Hard cap on colorings drawn by RandomPartiteCover:
// ceil(3 * (k^k / k!) * k * ln(n + 1)) + 16.
std::size_t CoverColoringCap(int k, Vertex n);

struct PartiteCover {
  // One sub-hypergraph per kept coloring: class i holds every vertex colored
  // i, and the edges are all input edges whose vertices get distinct colors.
  std::vector<PartiteHypergraph> subgraphs;
  std::size_t colorings_drawn = 0;
};

// Draws uniform k-colorings until every edge is rainbow in some kept
// coloring. Colorings that cover no new edge are discarded. Throws
// kCoverFailure once CoverColoringCap colorings were drawn without success.
PartiteCover RandomPartiteCover(const Hypergraph& h, RandomTape& tape);

struct DegreeBuckets {
  // buckets[s] holds the last-class vertices v with
  // n / 2^(s+1) <= deg(v) < n / 2^s (bucket 0 is closed above).
  std::vector<std::vector<Vertex>> buckets;
  // Last-class vertices that lie in no edge.
  std::vector<Vertex> discard;
};

// Bucket index for a positive degree: the least s >= 0 with
// deg * 2^(s+1) >= n, never above max(0, ceil(log2 n) - 1).
std::size_t BucketIndex(std::uint64_t degree, std::uint64_t n);

// Buckets the last class of `h` by degree in h's own edge family; pass the
// complement to bucket by non-edges.
DegreeBuckets BucketByDegree(const PartiteHypergraph& h, std::uint64_t n);

struct PartitionPlan {
  double tau = 0;     // log_n d
  double lambda = 0;  // log_n |A_k|
  double alpha = 0;   // block-size exponent, clamped to [0, 1]
  std::uint64_t block_size = 1;   // ceil(n^alpha)
  std::uint64_t block_count = 1;  // ceil(2 n^(1-alpha) ln n)
  std::uint64_t degree_cap = 1;   // ceil(2 n^((k-1) alpha + tau - k + 1))
  // d |A_k|^(k-1) >= n^(k-1) log2(n)^(k^2-2k+2)
  bool condition_met = false;
};

PartitionPlan PlanPartition(std::uint64_t n, std::uint64_t d,
                            std::uint64_t ak_size, int k);

struct BlockPartition {
  // blocks[i] is the list of blocks covering class i, for i < k-1.
  std::vector<std::vector<std::vector<Vertex>>> blocks;
  std::size_t attempts = 0;
};

std::size_t PartitionRetryCap(std::uint64_t n);

// Covers each of the first k-1 classes of `h` with plan.block_count random
// blocks of plan.block_size vertices (one block equal to the whole class when
// block_size reaches the class size). Every last-class vertex must have at
// most plan.degree_cap edges inside each block combination; violations
// trigger a full resample. Throws kPartitionFailure after
// PartitionRetryCap(n) attempts.
BlockPartition RandomBlockPartition(const PartiteHypergraph& h,
                                    const PartitionPlan& plan, std::uint64_t n,
                                    RandomTape& tape);

// Edges of `h` whose first k-1 vertices fall into the chosen blocks, as a
// partite hypergraph over those blocks plus h's last class.
PartiteHypergraph RestrictToBlocks(const PartiteHypergraph& h,
                                   const std::vector<std::vector<Vertex>>& chosen);

// Calls fn(combo) for every block combination, lexicographic in block index.
template <typename Fn>
void ForEachBlockCombination(const BlockPartition& p, Fn&& fn) {
  const std::size_t dims = p.blocks.size();
  std::vector<std::size_t> idx(dims, 0);
  for (const auto& b : p.blocks) {
    if (b.empty()) return;
  }
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = dims;
    while (i-- > 0) {
      if (++idx[i] < p.blocks[i].size()) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace hypershare
