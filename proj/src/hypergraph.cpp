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

#include "hypershare/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hypershare/error.hpp"
#include "text_lines.hpp"

namespace hypershare {

using detail::ExpectKeyword;
using detail::ExpectTokenCount;
using detail::FormatFail;
using detail::ParseU64;
using detail::SplitLines;
using detail::TextLine;

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

Hypergraph::Hypergraph(int k, Vertex n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)) {
  if (k_ < 2) Fail(ErrorCode::kRange, "uniformity k must be at least 2");
  for (auto& e : edges_) {
    if (e.size() != static_cast<std::size_t>(k_)) {
      Fail(ErrorCode::kFormat, "edge does not have exactly k vertices");
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      Fail(ErrorCode::kFormat, "edge repeats a vertex");
    }
    if (e.front() < 1 || e.back() > n_) {
      Fail(ErrorCode::kRange, "edge vertex outside [1, n]");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    Fail(ErrorCode::kFormat, "duplicate edge");
  }
}

bool Hypergraph::HasEdge(std::span<const Vertex> e) const {
  return std::binary_search(
      edges_.begin(), edges_.end(), e, [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      });
}

PartiteHypergraph::PartiteHypergraph(std::vector<std::vector<Vertex>> parts,
                                     std::vector<Edge> edges)
    : parts_(std::move(parts)), edges_(std::move(edges)) {
  if (parts_.size() < 2) Fail(ErrorCode::kRange, "need at least two classes");
  Vertex max_vertex = 0;
  for (auto& p : parts_) {
    std::sort(p.begin(), p.end());
    if (!p.empty()) max_vertex = std::max(max_vertex, p.back());
  }
  slots_.assign(static_cast<std::size_t>(max_vertex) + 1, Slot{});
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (std::size_t j = 0; j < parts_[i].size(); ++j) {
      Vertex v = parts_[i][j];
      if (v < 1) Fail(ErrorCode::kRange, "vertex ids are 1-based");
      if (slots_[v].part != -1) {
        Fail(ErrorCode::kFormat, "vertex " + std::to_string(v) +
                                     " appears in more than one class");
      }
      slots_[v] = Slot{static_cast<int>(i), j};
    }
  }
  for (const auto& e : edges_) {
    if (e.size() != parts_.size()) {
      Fail(ErrorCode::kFormat, "edge does not have one vertex per class");
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Slot* s = Find(e[i]);
      if (s == nullptr || s->part != static_cast<int>(i)) {
        Fail(ErrorCode::kRange, "edge vertex " + std::to_string(e[i]) +
                                    " is not in class " + std::to_string(i + 1));
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    Fail(ErrorCode::kFormat, "duplicate edge");
  }
}

const PartiteHypergraph::Slot* PartiteHypergraph::Find(Vertex v) const {
  if (v >= slots_.size() || slots_[v].part == -1) return nullptr;
  return &slots_[v];
}

int PartiteHypergraph::PartOf(Vertex v) const {
  const Slot* s = Find(v);
  return s == nullptr ? -1 : s->part;
}

std::size_t PartiteHypergraph::IndexInPart(Vertex v) const {
  const Slot* s = Find(v);
  if (s == nullptr) Fail(ErrorCode::kRange, "vertex not in any class");
  return s->index;
}

std::size_t PartiteHypergraph::Degree(Vertex v) const {
  const int p = PartOf(v);
  if (p < 0) return 0;
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [&](const Edge& e) { return e[p] == v; }));
}

bool PartiteHypergraph::HasEdge(std::span<const Vertex> tuple) const {
  return std::binary_search(
      edges_.begin(), edges_.end(), tuple, [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      });
}

std::uint64_t PartiteHypergraph::TupleCount() const {
  unsigned __int128 acc = 1;
  for (const auto& p : parts_) {
    acc *= p.size();
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

Vertex PartiteHypergraph::MaxVertex() const {
  return slots_.empty() ? 0 : static_cast<Vertex>(slots_.size() - 1);
}

bool IsQualified(const Hypergraph& h, std::span<const Vertex> set) {
  const auto k = static_cast<std::size_t>(h.k());
  if (set.size() > k) return true;
  if (set.size() < k) return false;
  Edge sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  return h.HasEdge(sorted);
}

bool IsQualified(const PartiteHypergraph& h, std::span<const Vertex> set) {
  const auto k = static_cast<std::size_t>(h.k());
  if (set.size() > k) return true;
  if (set.size() < k) return false;
  Edge tuple(k, 0);
  for (Vertex v : set) {
    const int p = h.PartOf(v);
    if (p < 0 || tuple[p] != 0) return false;
    tuple[p] = v;
  }
  return h.HasEdge(tuple);
}

PartiteHypergraph ComplementPartite(const PartiteHypergraph& h,
                                    std::uint64_t cap) {
  const std::uint64_t total = h.TupleCount();
  if (total > cap) {
    Fail(ErrorCode::kSizeOverflow,
         "complement needs " + std::to_string(total) +
             " tuples, above the cap of " + std::to_string(cap));
  }
  std::vector<Edge> out;
  if (total == 0) return PartiteHypergraph(h.parts(), std::move(out));
  const auto& parts = h.parts();
  const std::size_t k = parts.size();
  std::vector<std::size_t> idx(k, 0);
  Edge tuple(k);
  // Odometer over the tuple universe in lexicographic order; the edge list is
  // lexicographic too, so a single merge pass finds the missing tuples.
  auto edge_it = h.edges().begin();
  for (std::uint64_t step = 0; step < total; ++step) {
    for (std::size_t i = 0; i < k; ++i) tuple[i] = parts[i][idx[i]];
    if (edge_it != h.edges().end() && *edge_it == tuple) {
      ++edge_it;
    } else {
      out.push_back(tuple);
    }
    for (std::size_t i = k; i-- > 0;) {
      if (++idx[i] < parts[i].size()) break;
      idx[i] = 0;
    }
  }
  return PartiteHypergraph(h.parts(), std::move(out));
}

std::uint64_t SparseEdgeBudget(Vertex n, double beta) {
  return static_cast<std::uint64_t>(
      std::floor(std::pow(static_cast<double>(n), 1.0 + beta) + 1e-9));
}

Density ClassifyDensity(const Hypergraph& h, double beta) {
  const std::uint64_t budget = SparseEdgeBudget(h.n(), beta);
  const std::uint64_t m = h.edges().size();
  if (m <= budget) return Density::kSparse;
  const std::uint64_t all = Binomial(h.n(), h.k());
  if (all <= budget || m >= all - budget) return Density::kDense;
  return Density::kNeither;
}

namespace {

Hypergraph ParseUniform(const std::vector<TextLine>& lines) {
  const TextLine& head = lines.front();
  ExpectTokenCount(head, 4);
  const auto k = ParseU64(head, 1);
  const auto n = ParseU64(head, 2);
  const auto m = ParseU64(head, 3);
  if (k < 2) FormatFail(head.number, "k must be at least 2");
  if (n > UINT32_MAX) FormatFail(head.number, "n too large");
  if (lines.size() - 1 != m) {
    FormatFail(head.number, "header declares " + std::to_string(m) +
                                " edges, found " +
                                std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const TextLine& l = lines[i];
    ExpectTokenCount(l, k);
    Edge e;
    for (std::size_t j = 0; j < k; ++j) {
      const auto v = ParseU64(l, j);
      if (v < 1 || v > n) {
        Fail(ErrorCode::kRange, "line " + std::to_string(l.number) + ": vertex " +
                                    std::to_string(v) + " outside [1, " +
                                    std::to_string(n) + "]");
      }
      if (!e.empty() && v <= e.back()) {
        FormatFail(l.number, "edge vertices must be strictly ascending");
      }
      e.push_back(static_cast<Vertex>(v));
    }
    if (!seen.insert(e).second) FormatFail(l.number, "duplicate edge");
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(k), static_cast<Vertex>(n), std::move(edges));
}

PartiteHypergraph ParsePartite(const std::vector<TextLine>& lines) {
  const TextLine& head = lines.front();
  ExpectTokenCount(head, 3);
  const auto k = ParseU64(head, 1);
  const auto m = ParseU64(head, 2);
  if (k < 2) FormatFail(head.number, "k must be at least 2");
  if (lines.size() != 1 + k + m) {
    FormatFail(head.number, "expected " + std::to_string(k) + " part lines and " +
                                std::to_string(m) + " edge lines");
  }
  std::vector<std::vector<Vertex>> parts(k);
  std::vector<int> owner;
  for (std::size_t i = 0; i < k; ++i) {
    const TextLine& l = lines[1 + i];
    ExpectKeyword(l, "part");
    if (ParseU64(l, 1) != i + 1) FormatFail(l.number, "parts must be listed in order");
    const auto size = ParseU64(l, 2);
    ExpectTokenCount(l, 3 + size);
    for (std::size_t j = 0; j < size; ++j) {
      const auto v = ParseU64(l, 3 + j);
      if (v < 1 || v > UINT32_MAX) {
        Fail(ErrorCode::kRange, "line " + std::to_string(l.number) +
                                    ": vertex id out of range");
      }
      if (owner.size() <= v) owner.resize(v + 1, -1);
      if (owner[v] != -1) FormatFail(l.number, "vertex listed twice");
      owner[v] = static_cast<int>(i);
      parts[i].push_back(static_cast<Vertex>(v));
    }
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t e = 0; e < m; ++e) {
    const TextLine& l = lines[1 + k + e];
    ExpectTokenCount(l, k);
    Edge tuple;
    for (std::size_t j = 0; j < k; ++j) {
      const auto v = ParseU64(l, j);
      if (v >= owner.size() || owner[v] != static_cast<int>(j)) {
        Fail(ErrorCode::kRange, "line " + std::to_string(l.number) + ": vertex " +
                                    std::to_string(v) + " is not in part " +
                                    std::to_string(j + 1));
      }
      tuple.push_back(static_cast<Vertex>(v));
    }
    if (!seen.insert(tuple).second) FormatFail(l.number, "duplicate edge");
    edges.push_back(std::move(tuple));
  }
  return PartiteHypergraph(std::move(parts), std::move(edges));
}

}  // namespace

std::variant<Hypergraph, PartiteHypergraph> ParseAnyHypergraph(std::string_view text) {
  const auto lines = SplitLines(text);
  if (lines.empty()) Fail(ErrorCode::kFormat, "empty hypergraph file");
  const auto kind = lines.front().tokens.front();
  if (kind == "kuniform") return ParseUniform(lines);
  if (kind == "kpartite") return ParsePartite(lines);
  FormatFail(lines.front().number,
             "expected 'kuniform' or 'kpartite', got '" + std::string(kind) + "'");
}

Hypergraph ParseHypergraph(std::string_view text) {
  auto any = ParseAnyHypergraph(text);
  if (auto* h = std::get_if<Hypergraph>(&any)) return std::move(*h);
  Fail(ErrorCode::kFormat, "expected a kuniform hypergraph");
}

PartiteHypergraph ParsePartiteHypergraph(std::string_view text) {
  auto any = ParseAnyHypergraph(text);
  if (auto* h = std::get_if<PartiteHypergraph>(&any)) return std::move(*h);
  Fail(ErrorCode::kFormat, "expected a kpartite hypergraph");
}

std::string Serialize(const Hypergraph& h) {
  std::string out = "kuniform " + std::to_string(h.k()) + " " +
                    std::to_string(h.n()) + " " +
                    std::to_string(h.edges().size()) + "\n";
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

std::string Serialize(const PartiteHypergraph& h) {
  std::string out = "kpartite " + std::to_string(h.k()) + " " +
                    std::to_string(h.edges().size()) + "\n";
  for (int i = 0; i < h.k(); ++i) {
    out += "part " + std::to_string(i + 1) + " " + std::to_string(h.part(i).size());
    for (Vertex v : h.part(i)) out += " " + std::to_string(v);
    out += '\n';
  }
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace hypershare
