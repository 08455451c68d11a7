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
#include <string_view>
#include <vector>

namespace hypershare {

// Counter-based pseudorandom stream (SplitMix64 over seed + counter).
// Sub-streams are derived by hashing a label into the seed, so adding a new
// consumer never shifts the values seen by an existing one.
class RandomTape {
 public:
  explicit RandomTape(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t NextU64();

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound);

  // Independent child stream keyed by `label`.
  RandomTape Split(std::string_view label) const;
  RandomTape Split(std::string_view label, std::uint64_t index) const;

  // Uniform random subset of {0..population-1} of the given size, ascending.
  std::vector<std::uint32_t> SampleWithoutReplacement(std::uint32_t population,
                                                      std::uint32_t count);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

std::uint64_t Mix64(std::uint64_t x);

}  // namespace hypershare
