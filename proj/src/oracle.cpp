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

#include "hypershare/oracle.hpp"

#include <algorithm>
#include <string>
#include <variant>

#include "hypershare/error.hpp"

namespace hypershare {

namespace {

std::uint64_t SaturatingPow(std::uint64_t base, std::size_t exponent, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (acc > limit / base) return limit + 1;
    acc *= base;
  }
  return acc;
}

// Advances `s` to the next size-|s| subset of {1..n} in lexicographic order.
bool NextCombination(std::vector<Vertex>& s, Vertex n) {
  const std::size_t r = s.size();
  std::size_t i = r;
  while (i-- > 0) {
    if (s[i] < n - (r - 1 - i)) {
      ++s[i];
      for (std::size_t j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void AppendSet(std::string& out, const char* tag, const std::vector<Vertex>& s) {
  out += tag;
  for (Vertex v : s) out += " " + std::to_string(v);
  out += "\n";
}

}  // namespace

bool RankAccepts(const MonotoneSpanProgram& msp, std::span<const Vertex> set) {
  const Field& f = msp.field();
  Matrix rows(0, msp.cols());
  for (Vertex p : set) {
    if (p == 0 || p > msp.participant_count()) continue;
    for (std::size_t r : msp.RowsOf(p)) rows.AppendRow(msp.matrix().row(r));
  }
  const std::size_t before = Rank(f, rows);
  rows.AppendRow(msp.target());
  return Rank(f, rows) == before;
}

std::uint64_t SubsetCount(Vertex n, std::size_t max_size) {
  std::uint64_t total = 0;
  for (std::size_t s = 0; s <= std::min<std::size_t>(max_size, n); ++s) {
    const std::uint64_t c = Binomial(n, s);
    if (total > UINT64_MAX - c) return UINT64_MAX;
    total += c;
  }
  return total;
}

AuditReport AuditAcceptance(const MonotoneSpanProgram& msp, Vertex n,
                            const QualifiedPredicate& qualified, std::size_t max_size,
                            std::uint64_t cap) {
  const std::uint64_t needed = SubsetCount(n, max_size);
  if (needed > cap) {
    Fail(ErrorCode::kEnumerationTooLarge,
         "audit needs " + std::to_string(needed) + " subsets, cap is " +
             std::to_string(cap));
  }
  AuditReport report;
  report.universe = n;
  report.max_size = max_size;
  for (std::size_t size = 0; size <= std::min<std::size_t>(max_size, n); ++size) {
    std::vector<Vertex> s(size);
    for (std::size_t i = 0; i < size; ++i) s[i] = static_cast<Vertex>(i + 1);
    do {
      ++report.examined;
      const bool accepted = RankAccepts(msp, s);
      if (Accepts(msp, s) != accepted) report.engine_mismatches.push_back(s);
      const bool is_qualified = qualified(s);
      if (is_qualified && !accepted) report.failures.push_back(s);
      if (!is_qualified && accepted) report.violations.push_back(s);
    } while (NextCombination(s, n));
  }
  return report;
}

AuditReport AuditAcceptance(const BuiltScheme& scheme, std::size_t max_size,
                            std::uint64_t cap) {
  const QualifiedPredicate qualified = [&](std::span<const Vertex> s) {
    return std::visit([&](const auto& h) { return IsQualified(h, s); }, scheme.structure);
  };
  return AuditAcceptance(scheme.msp, scheme.msp.participant_count(), qualified, max_size,
                         cap);
}

PrivacyCount ExhaustivePrivacyCount(const MonotoneSpanProgram& msp,
                                    std::span<const Vertex> set, std::uint64_t cap) {
  const Field& f = msp.field();
  const std::uint64_t q = f.modulus();
  const std::size_t free_count = msp.cols() - 1;
  const std::uint64_t tapes = SaturatingPow(q, free_count, cap);
  if (tapes > cap) {
    Fail(ErrorCode::kEnumerationTooLarge,
         "privacy count needs " + std::to_string(q) + "^" + std::to_string(free_count) +
             " tapes per secret, cap is " + std::to_string(cap));
  }
  const std::vector<std::size_t> rows = msp.RowsOf(set);
  PrivacyCount result;
  result.tapes_per_secret = tapes;
  result.share_entries = rows.size();

  // Share tuples are packed base q into one word when they fit, otherwise
  // compared as vectors.
  const bool packed = SaturatingPow(q, rows.size(), UINT64_MAX - 1) <= UINT64_MAX - 1;
  std::vector<std::uint64_t> reference_packed;
  std::vector<Vector> reference_full;
  bool identical = true;
  for (std::uint64_t secret = 0; secret < q && identical; ++secret) {
    std::vector<std::uint64_t> tuples_packed;
    std::vector<Vector> tuples_full;
    Vector free(free_count, 0);
    for (std::uint64_t t = 0; t < tapes; ++t) {
      const Vector r = CompleteRandomness(msp, secret, free);
      Vector tuple;
      tuple.reserve(rows.size());
      for (std::size_t row : rows) tuple.push_back(Dot(f, msp.matrix().row(row), r));
      if (packed) {
        std::uint64_t code = 0;
        for (Element x : tuple) code = code * q + x;
        tuples_packed.push_back(code);
      } else {
        tuples_full.push_back(std::move(tuple));
      }
      for (std::size_t i = 0; i < free_count; ++i) {
        if (++free[i] < q) break;
        free[i] = 0;
      }
    }
    std::sort(tuples_packed.begin(), tuples_packed.end());
    std::sort(tuples_full.begin(), tuples_full.end());
    if (secret == 0) {
      reference_packed = std::move(tuples_packed);
      reference_full = std::move(tuples_full);
    } else {
      identical = tuples_packed == reference_packed && tuples_full == reference_full;
    }
  }
  result.identical = identical;
  return result;
}

Element LagrangeReconstruct(std::span<const std::pair<Element, Element>> points,
                            std::uint64_t q) {
  const Field f = Field::Make(q);
  std::vector<Element> xs;
  for (const auto& [x, y] : points) {
    const Element xr = f.ReduceU(x);
    if (xr == 0) Fail(ErrorCode::kRange, "interpolation point x must be nonzero");
    if (std::find(xs.begin(), xs.end(), xr) != xs.end()) {
      Fail(ErrorCode::kDuplicatePoint, "duplicate x = " + std::to_string(xr));
    }
    xs.push_back(xr);
  }
  Element acc = 0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    Element coefficient = 1;
    for (std::size_t l = 0; l < points.size(); ++l) {
      if (l == j) continue;
      coefficient = f.Mul(coefficient, f.Mul(xs[l], f.Inv(f.Sub(xs[l], xs[j]))));
    }
    acc = f.Add(acc, f.Mul(f.ReduceU(points[j].second), coefficient));
  }
  return acc;
}

std::string Serialize(const AuditReport& report) {
  std::string out = "audit\n";
  out += "universe " + std::to_string(report.universe) + "\n";
  out += "max_size " + std::to_string(report.max_size) + "\n";
  out += "examined " + std::to_string(report.examined) + "\n";
  out += "failures " + std::to_string(report.failures.size()) + "\n";
  out += "violations " + std::to_string(report.violations.size()) + "\n";
  out += "engine_mismatches " + std::to_string(report.engine_mismatches.size()) + "\n";
  for (const auto& s : report.failures) AppendSet(out, "failure", s);
  for (const auto& s : report.violations) AppendSet(out, "violation", s);
  for (const auto& s : report.engine_mismatches) AppendSet(out, "mismatch", s);
  return out;
}

}  // namespace hypershare
