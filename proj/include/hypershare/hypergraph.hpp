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
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hypershare {

// Participants and vertices are 1-based.
using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

inline constexpr std::uint64_t kDefaultComplementCap = std::uint64_t{1} << 24;

// Saturating binomial coefficient.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

// k-uniform hypergraph on {1..n}. Edges are stored sorted ascending and the
// edge list is kept in lexicographic order.
class Hypergraph {
 public:
  Hypergraph(int k, Vertex n, std::vector<Edge> edges);

  int k() const noexcept { return k_; }
  Vertex n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // `e` must be sorted ascending.
  bool HasEdge(std::span<const Vertex> e) const;

  bool operator==(const Hypergraph& other) const = default;

 private:
  int k_;
  Vertex n_;
  std::vector<Edge> edges_;
};

// k-partite k-uniform hypergraph. parts[i] lists the vertices of class i+1 in
// ascending order; every edge is a tuple holding one vertex per class, in
// class order. The edge list is kept in lexicographic order.
class PartiteHypergraph {
 public:
  PartiteHypergraph(std::vector<std::vector<Vertex>> parts,
                    std::vector<Edge> edges);

  int k() const noexcept { return static_cast<int>(parts_.size()); }
  const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }
  const std::vector<Vertex>& part(int i) const { return parts_.at(i); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Zero-based class of v, or -1 when v is in no class.
  int PartOf(Vertex v) const;
  // Position of v inside its class.
  std::size_t IndexInPart(Vertex v) const;
  std::size_t Degree(Vertex v) const;
  bool HasEdge(std::span<const Vertex> tuple) const;

  // Product of the class sizes, saturating.
  std::uint64_t TupleCount() const;
  // Largest vertex id in any class (0 when empty).
  Vertex MaxVertex() const;

  bool operator==(const PartiteHypergraph& other) const {
    return parts_ == other.parts_ && edges_ == other.edges_;
  }

 private:
  struct Slot {
    int part = -1;
    std::size_t index = 0;
  };
  const Slot* Find(Vertex v) const;

  std::vector<std::vector<Vertex>> parts_;
  std::vector<Edge> edges_;
  std::vector<Slot> slots_;  // indexed by vertex id
};

// The k-uniform access structure over a hypergraph: a set is qualified when
// it contains an edge or has at least k+1 members.
bool IsQualified(const Hypergraph& h, std::span<const Vertex> set);
bool IsQualified(const PartiteHypergraph& h, std::span<const Vertex> set);

// All one-per-class tuples that are not edges. Throws kSizeOverflow when the
// tuple universe exceeds `cap`.
PartiteHypergraph ComplementPartite(const PartiteHypergraph& h,
                                    std::uint64_t cap = kDefaultComplementCap);

enum class Density { kSparse, kDense, kNeither };
// sparse: |E| <= n^(1+beta); dense: |E| >= C(n,k) - n^(1+beta). A graph that
// satisfies both reports kSparse.
Density ClassifyDensity(const Hypergraph& h, double beta);
// floor(n^(1+beta)), guarded against pow rounding just below an integer.
std::uint64_t SparseEdgeBudget(Vertex n, double beta);

// Text formats. Errors carry kFormat (with line number) or kRange.
Hypergraph ParseHypergraph(std::string_view text);
PartiteHypergraph ParsePartiteHypergraph(std::string_view text);
std::variant<Hypergraph, PartiteHypergraph> ParseAnyHypergraph(std::string_view text);
std::string Serialize(const Hypergraph& h);
std::string Serialize(const PartiteHypergraph& h);

}  // namespace hypershare
