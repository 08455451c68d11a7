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
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypershare/field.hpp"
#include "hypershare/msp.hpp"
#include "hypershare/scheme.hpp"

namespace hypershare {

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 22;

using QualifiedPredicate = std::function<bool(std::span<const Vertex>)>;

struct AuditReport {
  Vertex universe = 0;
  std::size_t max_size = 0;
  std::uint64_t examined = 0;
  // Qualified but not accepted.
  std::vector<std::vector<Vertex>> failures;
  // Unqualified but accepted.
  std::vector<std::vector<Vertex>> violations;
  // Subsets where the library's Accepts disagrees with the plain rank test.
  std::vector<std::vector<Vertex>> engine_mismatches;

  bool clean() const {
    return failures.empty() && violations.empty() && engine_mismatches.empty();
  }
};

// Plain rank test: rank(M_S) == rank([M_S; target]).
bool RankAccepts(const MonotoneSpanProgram& msp, std::span<const Vertex> set);

// Number of subsets of {1..n} with at most max_size members, saturating.
std::uint64_t SubsetCount(Vertex n, std::size_t max_size);

// Classifies every subset of {1..n} of size <= max_size, in order of size and
// then lexicographically. Throws kEnumerationTooLarge above `cap` subsets.
AuditReport AuditAcceptance(const MonotoneSpanProgram& msp, Vertex n,
                            const QualifiedPredicate& qualified, std::size_t max_size,
                            std::uint64_t cap = kEnumerationCap);
// Uses the scheme's own access structure and participant count.
AuditReport AuditAcceptance(const BuiltScheme& scheme, std::size_t max_size,
                            std::uint64_t cap = kEnumerationCap);

struct PrivacyCount {
  bool identical = false;  // same multiset of share tuples for every secret
  std::uint64_t tapes_per_secret = 0;
  std::uint64_t share_entries = 0;  // rows owned by the set
};

// Enumerates every randomness tape for every secret and compares the
// multisets of the set's share tuples. Throws kEnumerationTooLarge when
// q^(cols-1) exceeds `cap`.
PrivacyCount ExhaustivePrivacyCount(const MonotoneSpanProgram& msp,
                                    std::span<const Vertex> set,
                                    std::uint64_t cap = kEnumerationCap);

// P(0) of the polynomial through `points`, by
// sum_j y_j prod_{l != j} x_l / (x_l - x_j). Throws kDuplicatePoint and
// kRange for x = 0.
Element LagrangeReconstruct(std::span<const std::pair<Element, Element>> points,
                            std::uint64_t q);

// Header lines plus one witness set per line.
std::string Serialize(const AuditReport& report);

}  // namespace hypershare
