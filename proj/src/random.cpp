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

#include "hypershare/random.hpp"

#include <algorithm>
#include <numeric>

namespace hypershare {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t HashLabel(std::string_view label) {
  // FNV-1a, then mixed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Mix64(h);
}

}  // namespace

std::uint64_t Mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t RandomTape::NextU64() {
  ++counter_;
  return Mix64(seed_ + counter_ * kGolden);
}

std::uint64_t RandomTape::Uniform(std::uint64_t bound) {
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t x;
  do {
    x = NextU64();
  } while (x >= limit);
  return x % bound;
}

RandomTape RandomTape::Split(std::string_view label) const {
  return RandomTape(Mix64(seed_ ^ HashLabel(label)));
}

RandomTape RandomTape::Split(std::string_view label, std::uint64_t index) const {
  return RandomTape(Mix64(Split(label).seed() + (index + 1) * kGolden));
}

std::vector<std::uint32_t> RandomTape::SampleWithoutReplacement(
    std::uint32_t population, std::uint32_t count) {
  std::vector<std::uint32_t> pool(population);
  std::iota(pool.begin(), pool.end(), 0u);
  count = std::min(count, population);
  for (std::uint32_t i = 0; i < count; ++i) {
    auto j = i + static_cast<std::uint32_t>(Uniform(population - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace hypershare
