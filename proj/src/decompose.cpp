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

#include "hypershare/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypershare/error.hpp"

namespace hypershare {

std::size_t CoverColoringCap(int k, Vertex n) {
  double ratio = 1.0;  // k^k / k!
  for (int i = 1; i <= k; ++i) ratio *= static_cast<double>(k) / i;
  return static_cast<std::size_t>(
             std::ceil(3.0 * ratio * k * std::log(static_cast<double>(n) + 1.0))) +
         16;
}

PartiteCover RandomPartiteCover(const Hypergraph& h, RandomTape& tape) {
  const int k = h.k();
  const std::size_t cap = CoverColoringCap(k, h.n());
  PartiteCover cover;
  std::vector<bool> covered(h.edges().size(), false);
  std::size_t remaining = h.edges().size();
  std::vector<int> color(static_cast<std::size_t>(h.n()) + 1, 0);
  while (remaining > 0) {
    if (cover.colorings_drawn == cap) {
      Fail(ErrorCode::kCoverFailure,
           "cover incomplete after " + std::to_string(cap) + " colorings (" +
               std::to_string(remaining) + " edges uncovered)");
    }
    ++cover.colorings_drawn;
    for (Vertex v = 1; v <= h.n(); ++v) {
      color[v] = static_cast<int>(tape.Uniform(static_cast<std::uint64_t>(k)));
    }
    std::vector<Edge> rainbow;
    bool fresh = false;
    std::vector<std::size_t> newly;
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
      const Edge& e = h.edges()[i];
      Edge tuple(k, 0);
      bool ok = true;
      for (Vertex v : e) {
        int c = color[v];
        if (tuple[c] != 0) {
          ok = false;
          break;
        }
        tuple[c] = v;
      }
      if (!ok) continue;
      rainbow.push_back(std::move(tuple));
      if (!covered[i]) {
        fresh = true;
        newly.push_back(i);
      }
    }
    if (!fresh) continue;
    for (auto i : newly) covered[i] = true;
    remaining -= newly.size();
    std::vector<std::vector<Vertex>> parts(k);
    for (Vertex v = 1; v <= h.n(); ++v) parts[color[v]].push_back(v);
    cover.subgraphs.emplace_back(std::move(parts), std::move(rainbow));
  }
  return cover;
}

std::size_t BucketIndex(std::uint64_t degree, std::uint64_t n) {
  std::size_t top = 0;
  while ((std::uint64_t{1} << (top + 1)) < n) ++top;  // ceil(log2 n) - 1
  std::size_t s = 0;
  while (s < top && static_cast<unsigned __int128>(degree) << (s + 1) < n) ++s;
  return s;
}

DegreeBuckets BucketByDegree(const PartiteHypergraph& h, std::uint64_t n) {
  const int last = h.k() - 1;
  std::vector<std::size_t> degree;
  degree.assign(h.part(last).size(), 0);
  for (const auto& e : h.edges()) ++degree[h.IndexInPart(e[last])];
  DegreeBuckets out;
  out.buckets.resize(BucketIndex(1, n) + 1);
  for (std::size_t i = 0; i < degree.size(); ++i) {
    const Vertex v = h.part(last)[i];
    if (degree[i] == 0) {
      out.discard.push_back(v);
    } else {
      out.buckets[BucketIndex(degree[i], n)].push_back(v);
    }
  }
  return out;
}

PartitionPlan PlanPartition(std::uint64_t n, std::uint64_t d,
                            std::uint64_t ak_size, int k) {
  PartitionPlan plan;
  const double D = static_cast<double>(k * k - 2 * k + 2);
  if (n < 2) {
    plan.tau = plan.lambda = plan.alpha = 1.0;
    plan.degree_cap = std::max<std::uint64_t>(d, 1);
    return plan;
  }
  const double ln_n = std::log(static_cast<double>(n));
  const double dd = static_cast<double>(std::max<std::uint64_t>(d, 1));
  const double ak = static_cast<double>(std::max<std::uint64_t>(ak_size, 1));
  plan.tau = std::log(dd) / ln_n;
  plan.lambda = std::log(ak) / ln_n;
  const double alpha = plan.lambda / D - (k - 1) * plan.tau / D +
                       static_cast<double>(k * k - 2 * k + 1) / D;
  plan.alpha = std::clamp(alpha, 0.0, 1.0);
  const double nd = static_cast<double>(n);
  plan.block_size = static_cast<std::uint64_t>(std::ceil(std::pow(nd, plan.alpha) - 1e-9));
  plan.block_count = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(2.0 * std::pow(nd, 1.0 - plan.alpha) * ln_n)));
  plan.degree_cap = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(
             2.0 * std::pow(nd, (k - 1) * plan.alpha + plan.tau - k + 1) - 1e-9)));
  // Compared in log space: log d + (k-1) log|A_k| >= (k-1) log n + D log log2 n.
  const double lhs = std::log(dd) + (k - 1) * std::log(ak);
  const double rhs = (k - 1) * ln_n + D * std::log(std::log2(nd));
  plan.condition_met = d >= 1 && ak_size >= 1 && lhs >= rhs;
  return plan;
}

std::size_t PartitionRetryCap(std::uint64_t n) {
  std::size_t log2n = 0;
  while ((std::uint64_t{1} << log2n) < n) ++log2n;
  return 64 * std::max<std::size_t>(log2n, 1);
}

PartiteHypergraph RestrictToBlocks(const PartiteHypergraph& h,
                                   const std::vector<std::vector<Vertex>>& chosen) {
  const int k = h.k();
  std::vector<std::vector<Vertex>> parts(chosen.begin(), chosen.end());
  parts.push_back(h.part(k - 1));
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    bool inside = true;
    for (int j = 0; j + 1 < k && inside; ++j) {
      inside = std::binary_search(chosen[j].begin(), chosen[j].end(), e[j]);
    }
    if (inside) edges.push_back(e);
  }
  return PartiteHypergraph(std::move(parts), std::move(edges));
}

namespace {

bool DegreesWithinCap(const PartiteHypergraph& h, const BlockPartition& p,
                      std::uint64_t cap) {
  const int k = h.k();
  const std::size_t last_size = h.part(k - 1).size();
  // membership[j][local index] -> blocks containing that vertex
  std::vector<std::vector<std::vector<std::size_t>>> membership(k - 1);
  for (int j = 0; j + 1 < k; ++j) {
    membership[j].resize(h.part(j).size());
    for (std::size_t b = 0; b < p.blocks[j].size(); ++b) {
      for (Vertex v : p.blocks[j][b]) membership[j][h.IndexInPart(v)].push_back(b);
    }
  }
  bool ok = true;
  ForEachBlockCombination(p, [&](const std::vector<std::size_t>& combo) {
    if (!ok) return;
    std::vector<std::uint64_t> count(last_size, 0);
    for (const auto& e : h.edges()) {
      bool inside = true;
      for (int j = 0; j + 1 < k && inside; ++j) {
        const auto& m = membership[j][h.IndexInPart(e[j])];
        inside = std::find(m.begin(), m.end(), combo[j]) != m.end();
      }
      if (inside && ++count[h.IndexInPart(e[k - 1])] > cap) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

}  // namespace

BlockPartition RandomBlockPartition(const PartiteHypergraph& h,
                                    const PartitionPlan& plan, std::uint64_t n,
                                    RandomTape& tape) {
  const int k = h.k();
  const std::size_t cap = PartitionRetryCap(n);
  BlockPartition out;
  for (std::size_t attempt = 1; attempt <= cap; ++attempt) {
    out.attempts = attempt;
    out.blocks.assign(k - 1, {});
    bool covers = true;
    for (int j = 0; j + 1 < k; ++j) {
      const auto& part = h.part(j);
      const auto size = static_cast<std::uint32_t>(part.size());
      if (plan.block_size >= size) {
        out.blocks[j].push_back(part);
        continue;
      }
      std::vector<bool> hit(size, false);
      for (std::uint64_t b = 0; b < plan.block_count; ++b) {
        auto picks = tape.SampleWithoutReplacement(
            size, static_cast<std::uint32_t>(plan.block_size));
        std::vector<Vertex> block;
        block.reserve(picks.size());
        for (auto i : picks) {
          hit[i] = true;
          block.push_back(part[i]);
        }
        out.blocks[j].push_back(std::move(block));
      }
      covers = covers && std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
    }
    if (covers && DegreesWithinCap(h, out, plan.degree_cap)) return out;
  }
  Fail(ErrorCode::kPartitionFailure,
       "no block partition met the degree cap " + std::to_string(plan.degree_cap) +
           " within " + std::to_string(cap) + " attempts");
}

}  // namespace hypershare
