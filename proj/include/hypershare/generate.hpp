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

#include <cstdint>

#include "hypershare/hypergraph.hpp"
#include "hypershare/random.hpp"

namespace hypershare {

enum class GenerateMode { kSparse, kDense };

// Sparse: floor(n^(1+beta)) distinct uniform k-sets. Dense: every k-set
// except such a draw. Throws kInfeasibleCount when the draw exceeds C(n,k),
// kSizeOverflow when a dense complement would list more than the cap.
Hypergraph RandomHypergraph(int k, Vertex n, double beta, GenerateMode mode,
                            RandomTape& tape,
                            std::uint64_t cap = kDefaultComplementCap);

// Draws `count` distinct uniform k-subsets of {1..n}, sorted.
std::vector<Edge> RandomEdges(int k, Vertex n, std::uint64_t count, RandomTape& tape);

}  // namespace hypershare
