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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hypershare/field.hpp"
#include "hypershare/hypergraph.hpp"
#include "hypershare/msp.hpp"
#include "hypershare/random.hpp"

namespace hypershare {

// One partite gadget inside a composed scheme.
struct LeafSummary {
  std::size_t subgraph = 0;  // index of the cover coloring
  std::size_t bucket = 0;    // degree bucket; the zero-degree bucket is last
  std::vector<std::size_t> blocks;  // block combination, empty when unpartitioned
  std::vector<std::size_t> part_sizes;
  std::size_t degree = 0;  // max last-class degree the gadget is sized for
  std::size_t rows = 0;
  double bound = 0;  // closed-form row bound of the gadget
};

struct SchemeReport {
  std::uint64_t modulus = 0;
  std::size_t columns = 0;
  std::vector<std::size_t> rows_per_participant;  // index p-1
  std::size_t total_rows = 0;
  // Ordered key/value facts: kind, parameters, counters, flags.
  std::vector<std::pair<std::string, std::string>> facts;
  // Ordered evaluated bound expressions and ratios.
  std::vector<std::pair<std::string, double>> bounds;
  std::vector<LeafSummary> leaves;

  const std::string* Fact(const std::string& key) const;
  std::optional<double> Bound(const std::string& key) const;
};

using AccessStructure = std::variant<Hypergraph, PartiteHypergraph>;

struct BuiltScheme {
  MonotoneSpanProgram msp;
  AccessStructure structure;
  SchemeReport report;
};

struct BuildOptions {
  // Field modulus; the default is the smallest prime covering every gadget's
  // evaluation points and the threshold overlay.
  std::optional<std::uint64_t> modulus;
  // Block-partition every bucket even when the size condition fails.
  bool force_partition = false;
};

// Row bound m_k + (d+1)^(k-1) (m_1 + ... + m_{k-1}).
double SparsePartiteBound(const std::vector<std::size_t>& part_sizes, std::size_t d);
// Row bound 2 m_k + (d+1)^(k-1) (k-1) n with n the largest of m_1..m_{k-1}.
double DensePartiteBound(const std::vector<std::size_t>& part_sizes, std::size_t d);
// n^((k^2-3k+2)/(k^2-2k+2) + beta (k^2-3k+3)/(k^2-2k+2)) * log2(n)^(k+1)
double UniformAsymptoticBound(Vertex n, int k, double beta);

// Vanishing-space gadget for a sparse partite hypergraph: the first k-1
// classes get a vanishing basis plus one unit row each, every last-class
// vertex of positive degree gets (1, 0, ..., 0, z). Target (1,...,1, 0).
// Throws kFieldTooSmall when q < m_1 + ... + m_{k-1}.
BuiltScheme BuildSparsePartite(const PartiteHypergraph& h, const Field& field);

// Complement gadget for a dense partite hypergraph: the vanishing spaces and
// z-vectors encode the non-edges, each last-class vertex owns (0, ..., 0, z)
// and (1, 0, ..., 0), and the target is (1, ..., 1, w). w starts as the
// constant polynomial 1 and is resampled from the subspace every edge can
// reach when that fails. Throws kFieldTooSmall, kSizeOverflow,
// kTargetSelectionFailure.
BuiltScheme BuildDensePartite(const PartiteHypergraph& h, const Field& field,
                              RandomTape& tape);
BuiltScheme BuildDensePartite(const PartiteHypergraph& h, const Field& field);

// base OR (k+1)-of-n threshold. Returns base unchanged when k + 1 > n.
MonotoneSpanProgram UniformOverlay(const MonotoneSpanProgram& base, int k, Vertex n,
                                   const Field& field);

BuiltScheme BuildSparseUniform(const Hypergraph& h, double beta, RandomTape& tape,
                               const BuildOptions& options = {});
BuiltScheme BuildDenseUniform(const Hypergraph& h, double beta, RandomTape& tape,
                              const BuildOptions& options = {});

// Row counts, modulus and width of a program, with no facts or bounds.
SchemeReport CountRows(const MonotoneSpanProgram& msp);

// Recounts rows from the program and carries over the stored bounds.
SchemeReport ShareSizeReport(const BuiltScheme& scheme);

// Plain-text table of per-participant rows followed by a key=value section.
std::string FormatReport(const SchemeReport& report);

}  // namespace hypershare
