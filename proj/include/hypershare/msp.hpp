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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypershare/field.hpp"
#include "hypershare/hypergraph.hpp"
#include "hypershare/random.hpp"

namespace hypershare {

// Monotone span program: a labeled matrix over GF(q) and a nonzero target.
// A participant set is accepted when its rows span the target. Participants
// are 1..participant_count(); a participant may own zero rows.
class MonotoneSpanProgram {
 public:
  // participants == 0 means "largest label".
  MonotoneSpanProgram(Field field, Matrix matrix, std::vector<Vertex> labels,
                      Vector target, Vertex participants = 0);

  const Field& field() const noexcept { return field_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  const std::vector<Vertex>& labels() const noexcept { return labels_; }
  const Vector& target() const noexcept { return target_; }
  Vertex participant_count() const noexcept { return participants_; }

  std::size_t rows() const noexcept { return matrix_.rows(); }
  std::size_t cols() const noexcept { return matrix_.cols(); }

  // Row indices owned by p, ascending.
  std::span<const std::size_t> RowsOf(Vertex p) const;
  // Row indices owned by any member of `set`, ascending.
  std::vector<std::size_t> RowsOf(std::span<const Vertex> set) const;
  // Nonzero columns of row r.
  std::span<const std::uint32_t> Support(std::size_t r) const {
    return support_[r];
  }

  bool HasUnitTarget() const;

 private:
  Field field_;
  Matrix matrix_;
  std::vector<Vertex> labels_;
  Vector target_;
  Vertex participants_;
  std::vector<std::vector<std::size_t>> rows_of_;  // index p-1
  std::vector<std::vector<std::uint32_t>> support_;
};

// Per-participant share vectors: shares[p-1] holds the entries of M r on the
// rows labeled p, in row order.
struct ShareBundle {
  std::uint64_t modulus = 0;
  std::vector<Vector> shares;

  const Vector& of(Vertex p) const { return shares.at(p - 1); }
  bool operator==(const ShareBundle&) const = default;
};

bool Accepts(const MonotoneSpanProgram& msp, std::span<const Vertex> set);

// Recombination vector over RowsOf(set): the canonical solution of
// v * M_set = target, or nullopt.
std::optional<Vector> RecombinationVector(const MonotoneSpanProgram& msp,
                                          std::span<const Vertex> set);

// True when the rows of `set` do not span the target.
bool PrivacyRankCheck(const MonotoneSpanProgram& msp, std::span<const Vertex> set);

// Index of the first nonzero target coordinate; distribution solves for it.
std::size_t TargetPivot(const MonotoneSpanProgram& msp);

// Completes the free coordinates of r (all but the pivot) into the unique r
// with <target, r> = secret.
Vector CompleteRandomness(const MonotoneSpanProgram& msp, Element secret,
                          std::span<const Element> free_coordinates);

ShareBundle SharesFromRandomness(const MonotoneSpanProgram& msp,
                                 std::span<const Element> r);

ShareBundle Distribute(const MonotoneSpanProgram& msp, Element secret,
                       RandomTape& tape);

// Throws kNotQualified when `set` is not accepted.
Element Reconstruct(const MonotoneSpanProgram& msp, std::span<const Vertex> set,
                    const ShareBundle& shares);

// Shamir t-of-n as a Vandermonde program: participant j owns the row
// (1, j, j^2, ..., j^(t-1)); target e_1.
MonotoneSpanProgram ThresholdMsp(std::size_t t, Vertex n, const Field& field);

// Same access structure with target e_1, via M' = M Q for an invertible Q
// with target * Q = e_1.
MonotoneSpanProgram NormalizeTarget(const MonotoneSpanProgram& msp);

// Shares one secret under every constituent: the first column is shared and
// the remaining columns are placed block-diagonally. Constituents that do not
// have target e_1 are normalized first. Throws kFieldMismatch.
MonotoneSpanProgram OrCompose(std::span<const MonotoneSpanProgram> programs);

std::string Serialize(const MonotoneSpanProgram& msp);
MonotoneSpanProgram ParseMsp(std::string_view text);
std::string Serialize(const ShareBundle& shares);
ShareBundle ParseShares(std::string_view text);

}  // namespace hypershare
