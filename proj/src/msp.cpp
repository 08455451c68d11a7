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

#include "hypershare/msp.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hypershare/error.hpp"
#include "text_lines.hpp"

namespace hypershare {

MonotoneSpanProgram::MonotoneSpanProgram(Field field, Matrix matrix,
                                         std::vector<Vertex> labels, Vector target,
                                         Vertex participants)
    : field_(field),
      matrix_(std::move(matrix)),
      labels_(std::move(labels)),
      target_(std::move(target)),
      participants_(participants) {
  if (labels_.size() != matrix_.rows()) {
    Fail(ErrorCode::kRange, "every row needs exactly one label");
  }
  if (target_.size() != matrix_.cols() || matrix_.cols() == 0) {
    Fail(ErrorCode::kRange, "target length must equal the column count");
  }
  if (std::all_of(target_.begin(), target_.end(), [](Element x) { return x == 0; })) {
    Fail(ErrorCode::kRange, "target vector must be nonzero");
  }
  for (Element x : target_) {
    if (x >= field_.modulus()) Fail(ErrorCode::kRange, "target entry not reduced");
  }
  Vertex max_label = 0;
  for (Vertex l : labels_) {
    if (l < 1) Fail(ErrorCode::kRange, "row labels are 1-based participant ids");
    max_label = std::max(max_label, l);
  }
  if (participants_ == 0) participants_ = max_label;
  if (max_label > participants_) {
    Fail(ErrorCode::kRange, "row label exceeds the participant count");
  }
  rows_of_.resize(participants_);
  support_.resize(matrix_.rows());
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    rows_of_[labels_[r] - 1].push_back(r);
    const auto row = matrix_.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] >= field_.modulus()) Fail(ErrorCode::kRange, "matrix entry not reduced");
      if (row[c] != 0) support_[r].push_back(static_cast<std::uint32_t>(c));
    }
  }
}

std::span<const std::size_t> MonotoneSpanProgram::RowsOf(Vertex p) const {
  if (p < 1 || p > participants_) return {};
  return rows_of_[p - 1];
}

std::vector<std::size_t> MonotoneSpanProgram::RowsOf(std::span<const Vertex> set) const {
  std::vector<std::size_t> out;
  for (Vertex p : set) {
    auto rows = RowsOf(p);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MonotoneSpanProgram::HasUnitTarget() const {
  if (target_[0] != 1) return false;
  return std::all_of(target_.begin() + 1, target_.end(), [](Element x) { return x == 0; });
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t Find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void Unite(std::uint32_t a, std::uint32_t b) { parent[Find(a)] = Find(b); }
};

bool InRowSpan(const Field& f, const Matrix& m, std::span<const Element> t) {
  Matrix augmented = m;
  const std::size_t before = Rank(f, m);
  augmented.AppendRow(t);
  return Rank(f, augmented) == before;
}

}  // namespace

bool Accepts(const MonotoneSpanProgram& msp, std::span<const Vertex> set) {
  const auto rows = msp.RowsOf(set);
  const auto& target = msp.target();
  std::vector<std::uint32_t> target_support;
  for (std::size_t c = 0; c < target.size(); ++c) {
    if (target[c] != 0) target_support.push_back(static_cast<std::uint32_t>(c));
  }
  if (target_support.size() != 1) {
    return RecombinationVector(msp, set).has_value();
  }
  // Single-coordinate target: rows split into groups that share no column
  // besides the target's. Any combination reaching the target restricted to
  // a group is a multiple of the unit vector, so the target is in the span of
  // all rows iff it is in the span of one group.
  const std::uint32_t s = target_support.front();
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  std::vector<std::uint32_t> columns;
  for (auto r : rows) {
    for (auto c : msp.Support(r)) {
      if (c != s && local.emplace(c, static_cast<std::uint32_t>(columns.size())).second) {
        columns.push_back(c);
      }
    }
  }
  DisjointSets sets(columns.size());
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::int64_t> group_of_root(columns.size(), -1);
  for (auto r : rows) {
    std::int64_t first = -1;
    for (auto c : msp.Support(r)) {
      if (c == s) continue;
      const auto id = local[c];
      if (first < 0) {
        first = id;
      } else {
        sets.Unite(static_cast<std::uint32_t>(first), id);
      }
    }
    if (first < 0 && !msp.Support(r).empty()) return true;  // a multiple of e_s
  }
  for (auto r : rows) {
    for (auto c : msp.Support(r)) {
      if (c == s) continue;
      const auto root = sets.Find(local[c]);
      if (group_of_root[root] < 0) {
        group_of_root[root] = static_cast<std::int64_t>(groups.size());
        groups.emplace_back();
      }
      groups[group_of_root[root]].push_back(r);
      break;
    }
  }
  const Field& f = msp.field();
  for (const auto& group : groups) {
    // Local column order: the target column first, then the group's columns.
    std::vector<std::uint32_t> cols{s};
    for (auto r : group) {
      for (auto c : msp.Support(r)) {
        if (c != s) cols.push_back(c);
      }
    }
    std::sort(cols.begin() + 1, cols.end());
    cols.erase(std::unique(cols.begin() + 1, cols.end()), cols.end());
    std::unordered_map<std::uint32_t, std::size_t> pos;
    for (std::size_t i = 0; i < cols.size(); ++i) pos[cols[i]] = i;
    Matrix sub(group.size(), cols.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (auto c : msp.Support(group[i])) sub.at(i, pos[c]) = msp.matrix().at(group[i], c);
    }
    Vector t(cols.size(), 0);
    t[0] = target[s];
    if (InRowSpan(f, sub, t)) return true;
  }
  return false;
}

std::optional<Vector> RecombinationVector(const MonotoneSpanProgram& msp,
                                          std::span<const Vertex> set) {
  const auto rows = msp.RowsOf(set);
  return SolveLeft(msp.field(), msp.matrix().SelectRows(rows), msp.target());
}

bool PrivacyRankCheck(const MonotoneSpanProgram& msp, std::span<const Vertex> set) {
  return !Accepts(msp, set);
}

std::size_t TargetPivot(const MonotoneSpanProgram& msp) {
  const auto& t = msp.target();
  return static_cast<std::size_t>(
      std::find_if(t.begin(), t.end(), [](Element x) { return x != 0; }) - t.begin());
}

Vector CompleteRandomness(const MonotoneSpanProgram& msp, Element secret,
                          std::span<const Element> free_coordinates) {
  const Field& f = msp.field();
  const auto& t = msp.target();
  const std::size_t pivot = TargetPivot(msp);
  if (free_coordinates.size() + 1 != t.size()) {
    Fail(ErrorCode::kRange, "free coordinate count must be cols - 1");
  }
  Vector r(t.size(), 0);
  Element acc = f.ReduceU(secret);
  for (std::size_t i = 0, j = 0; i < t.size(); ++i) {
    if (i == pivot) continue;
    r[i] = free_coordinates[j++];
    acc = f.Sub(acc, f.Mul(t[i], r[i]));
  }
  r[pivot] = f.Mul(acc, f.Inv(t[pivot]));
  return r;
}

ShareBundle SharesFromRandomness(const MonotoneSpanProgram& msp,
                                 std::span<const Element> r) {
  const Vector values = MatVec(msp.field(), msp.matrix(), r);
  ShareBundle bundle;
  bundle.modulus = msp.field().modulus();
  bundle.shares.resize(msp.participant_count());
  for (std::size_t i = 0; i < values.size(); ++i) {
    bundle.shares[msp.labels()[i] - 1].push_back(values[i]);
  }
  return bundle;
}

ShareBundle Distribute(const MonotoneSpanProgram& msp, Element secret,
                       RandomTape& tape) {
  const Field& f = msp.field();
  Vector free(msp.cols() - 1);
  for (auto& x : free) x = tape.Uniform(f.modulus());
  return SharesFromRandomness(msp, CompleteRandomness(msp, secret, free));
}

Element Reconstruct(const MonotoneSpanProgram& msp, std::span<const Vertex> set,
                    const ShareBundle& shares) {
  if (shares.modulus != msp.field().modulus() ||
      shares.shares.size() != msp.participant_count()) {
    Fail(ErrorCode::kFieldMismatch, "share bundle does not belong to this scheme");
  }
  if (!Accepts(msp, set)) {
    Fail(ErrorCode::kNotQualified, "participant set is not qualified");
  }
  const auto rows = msp.RowsOf(set);
  const auto v = SolveLeft(msp.field(), msp.matrix().SelectRows(rows), msp.target());
  if (!v) Fail(ErrorCode::kNotQualified, "participant set is not qualified");
  const Field& f = msp.field();
  Element secret = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Vertex p = msp.labels()[rows[i]];
    const auto own = msp.RowsOf(p);
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(own.begin(), own.end(), rows[i]) - own.begin());
    const Vector& share = shares.of(p);
    if (share.size() != own.size()) {
      Fail(ErrorCode::kFormat, "share vector length does not match row count");
    }
    secret = f.Add(secret, f.Mul((*v)[i], share[pos]));
  }
  return secret;
}

MonotoneSpanProgram ThresholdMsp(std::size_t t, Vertex n, const Field& field) {
  if (t < 1 || t > n) Fail(ErrorCode::kRange, "threshold must lie in [1, n]");
  if (field.modulus() <= n) {
    Fail(ErrorCode::kFieldTooSmall,
         "threshold program needs a modulus above n = " + std::to_string(n));
  }
  Matrix m(n, t);
  std::vector<Vertex> labels(n);
  for (Vertex j = 1; j <= n; ++j) {
    Element power = 1;
    for (std::size_t c = 0; c < t; ++c) {
      m.at(j - 1, c) = power;
      power = field.Mul(power, j);
    }
    labels[j - 1] = j;
  }
  Vector target(t, 0);
  target[0] = 1;
  return MonotoneSpanProgram(field, std::move(m), std::move(labels), std::move(target), n);
}

MonotoneSpanProgram NormalizeTarget(const MonotoneSpanProgram& msp) {
  if (msp.HasUnitTarget()) return msp;
  const Field& f = msp.field();
  const std::size_t cols = msp.cols();
  const std::size_t pivot = TargetPivot(msp);
  // P has the target as its first row and unit rows for the other
  // coordinates, so e_1 P = target; Q = P^-1 then maps target to e_1.
  Matrix p(cols, cols);
  for (std::size_t c = 0; c < cols; ++c) p.at(0, c) = msp.target()[c];
  for (std::size_t c = 0, r = 1; c < cols; ++c) {
    if (c == pivot) continue;
    p.at(r++, c) = 1;
  }
  const auto q = Inverse(f, p);
  if (!q) Fail(ErrorCode::kRange, "normalization basis is singular");
  Vector e1(cols, 0);
  e1[0] = 1;
  return MonotoneSpanProgram(f, MatMul(f, msp.matrix(), *q), msp.labels(), e1,
                             msp.participant_count());
}

MonotoneSpanProgram OrCompose(std::span<const MonotoneSpanProgram> programs) {
  if (programs.empty()) Fail(ErrorCode::kRange, "nothing to compose");
  const Field f = programs.front().field();
  std::size_t cols = 1;
  std::size_t rows = 0;
  Vertex participants = 0;
  for (const auto& p : programs) {
    if (!(p.field() == f)) {
      Fail(ErrorCode::kFieldMismatch, "composed programs must share one field");
    }
    cols += p.cols() - 1;
    rows += p.rows();
    participants = std::max(participants, p.participant_count());
  }
  Matrix m(rows, cols);
  std::vector<Vertex> labels;
  labels.reserve(rows);
  std::size_t row_offset = 0;
  std::size_t col_offset = 1;
  for (const auto& original : programs) {
    const MonotoneSpanProgram normalized =
        original.HasUnitTarget() ? original : NormalizeTarget(original);
    const Matrix& src = normalized.matrix();
    for (std::size_t r = 0; r < src.rows(); ++r) {
      m.at(row_offset + r, 0) = src.at(r, 0);
      for (std::size_t c = 1; c < src.cols(); ++c) {
        m.at(row_offset + r, col_offset + c - 1) = src.at(r, c);
      }
      labels.push_back(normalized.labels()[r]);
    }
    row_offset += src.rows();
    col_offset += src.cols() - 1;
  }
  Vector target(cols, 0);
  target[0] = 1;
  return MonotoneSpanProgram(f, std::move(m), std::move(labels), std::move(target),
                             participants);
}

std::string Serialize(const MonotoneSpanProgram& msp) {
  std::string out = "msp " + std::to_string(msp.field().modulus()) + " " +
                    std::to_string(msp.rows()) + " " + std::to_string(msp.cols()) +
                    "\ntarget";
  for (Element x : msp.target()) out += " " + std::to_string(x);
  out += '\n';
  for (std::size_t r = 0; r < msp.rows(); ++r) {
    out += "row " + std::to_string(msp.labels()[r]);
    for (Element x : msp.matrix().row(r)) {
      out += ' ';
      out += std::to_string(x);
    }
    out += '\n';
  }
  return out;
}

MonotoneSpanProgram ParseMsp(std::string_view text) {
  using namespace detail;
  const auto lines = SplitLines(text);
  if (lines.size() < 2) Fail(ErrorCode::kFormat, "scheme file is truncated");
  const TextLine& head = lines[0];
  ExpectKeyword(head, "msp");
  ExpectTokenCount(head, 4);
  const auto q = ParseU64(head, 1);
  const auto rows = ParseU64(head, 2);
  const auto cols = ParseU64(head, 3);
  if (cols == 0) FormatFail(head.number, "column count must be positive");
  if (lines.size() != 2 + rows) {
    FormatFail(head.number, "header declares " + std::to_string(rows) +
                                " rows, found " + std::to_string(lines.size() - 2));
  }
  const Field f = Field::Make(q);
  const TextLine& tl = lines[1];
  ExpectKeyword(tl, "target");
  ExpectTokenCount(tl, cols + 1);
  Vector target(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    target[c] = ParseU64(tl, c + 1);
    if (target[c] >= q) Fail(ErrorCode::kRange, "line " + std::to_string(tl.number) + ": entry not below q");
  }
  Matrix m(rows, cols);
  std::vector<Vertex> labels(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const TextLine& l = lines[2 + r];
    ExpectKeyword(l, "row");
    ExpectTokenCount(l, cols + 2);
    const auto id = ParseU64(l, 1);
    if (id < 1 || id > UINT32_MAX) {
      Fail(ErrorCode::kRange, "line " + std::to_string(l.number) + ": bad participant id");
    }
    labels[r] = static_cast<Vertex>(id);
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = ParseU64(l, c + 2);
      if (m.at(r, c) >= q) {
        Fail(ErrorCode::kRange, "line " + std::to_string(l.number) + ": entry not below q");
      }
    }
  }
  return MonotoneSpanProgram(f, std::move(m), std::move(labels), std::move(target));
}

std::string Serialize(const ShareBundle& shares) {
  std::string out = "shares " + std::to_string(shares.modulus) + "\n";
  for (std::size_t p = 0; p < shares.shares.size(); ++p) {
    out += "p " + std::to_string(p + 1);
    for (Element x : shares.shares[p]) out += " " + std::to_string(x);
    out += '\n';
  }
  return out;
}

ShareBundle ParseShares(std::string_view text) {
  using namespace detail;
  const auto lines = SplitLines(text);
  if (lines.empty()) Fail(ErrorCode::kFormat, "empty shares file");
  ExpectKeyword(lines[0], "shares");
  ExpectTokenCount(lines[0], 2);
  ShareBundle bundle;
  bundle.modulus = ParseU64(lines[0], 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const TextLine& l = lines[i];
    ExpectKeyword(l, "p");
    if (ParseU64(l, 1) != i) FormatFail(l.number, "participants must be listed as 1, 2, ...");
    Vector v;
    for (std::size_t j = 2; j < l.tokens.size(); ++j) {
      v.push_back(ParseU64(l, j));
      if (v.back() >= bundle.modulus) Fail(ErrorCode::kRange, "line " + std::to_string(l.number) + ": share not below q");
    }
    bundle.shares.push_back(std::move(v));
  }
  return bundle;
}

}  // namespace hypershare
