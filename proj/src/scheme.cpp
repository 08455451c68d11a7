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

#include "hypershare/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "hypershare/decompose.hpp"
#include "hypershare/error.hpp"
#include "hypershare/polygadget.hpp"

namespace hypershare {

namespace {

constexpr std::size_t kTargetRetries = 64;

std::string FormatDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::vector<std::size_t> PartSizes(const PartiteHypergraph& h) {
  std::vector<std::size_t> sizes;
  for (const auto& p : h.parts()) sizes.push_back(p.size());
  return sizes;
}

std::size_t LowerClassTotal(const PartiteHypergraph& h) {
  std::size_t total = 0;
  for (int j = 0; j + 1 < h.k(); ++j) total += h.part(j).size();
  return total;
}

// Distinct evaluation points 1, 2, 3, ... over the first k-1 classes in class
// order; indexed by vertex id.
std::vector<Element> AssignEvalPoints(const PartiteHypergraph& h, const Field& f) {
  std::vector<Element> alpha(static_cast<std::size_t>(h.MaxVertex()) + 1, 0);
  Element next = 1;
  for (int j = 0; j + 1 < h.k(); ++j) {
    for (Vertex v : h.part(j)) alpha[v] = f.ReduceU(next++);
  }
  return alpha;
}

// Edges grouped by their last-class vertex, by index in the last class.
std::vector<std::vector<const Edge*>> EdgesByLastVertex(const PartiteHypergraph& h) {
  const int last = h.k() - 1;
  std::vector<std::vector<const Edge*>> out(h.part(last).size());
  for (const auto& e : h.edges()) out[h.IndexInPart(e[last])].push_back(&e);
  return out;
}

Vector LastVertexPolynomial(const std::vector<const Edge*>& edges,
                            const std::vector<Element>& alpha,
                            const MonomialIndex& index, const Field& f) {
  std::vector<std::vector<Element>> roots(index.vars());
  for (const Edge* e : edges) {
    for (std::size_t j = 0; j < index.vars(); ++j) roots[j].push_back(alpha[(*e)[j]]);
  }
  return ZVector(roots, index, f);
}

// Rows for the first k-1 classes: padded vanishing basis, then the unit row
// e_{k-j} of the leading k columns.
void AppendLowerClassRows(const PartiteHypergraph& h, const std::vector<Element>& alpha,
                          const MonomialIndex& index, const Field& f, Matrix& m,
                          std::vector<Vertex>& labels) {
  const std::size_t k = static_cast<std::size_t>(h.k());
  Vector row(m.cols(), 0);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    for (Vertex v : h.part(static_cast<int>(j))) {
      const Matrix basis = VanishingBasis(j, alpha[v], index, f);
      for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        std::copy(basis.row(r).begin(), basis.row(r).end(), row.begin() + k);
        m.AppendRow(row);
        labels.push_back(v);
      }
      std::fill(row.begin(), row.end(), 0);
      row[k - 1 - j] = 1;
      m.AppendRow(row);
      labels.push_back(v);
    }
  }
}

std::size_t MaxLastDegree(const std::vector<std::vector<const Edge*>>& by_last) {
  std::size_t d = 0;
  for (const auto& edges : by_last) d = std::max(d, edges.size());
  return d;
}


bool AllEdgesAccepted(const MonotoneSpanProgram& msp, const std::vector<Edge>& edges) {
  return std::all_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return Accepts(msp, e); });
}

void CheckLowerClassField(const PartiteHypergraph& h, const Field& f) {
  const std::size_t needed = LowerClassTotal(h);
  if (f.modulus() < needed) {
    Fail(ErrorCode::kFieldTooSmall, "gadget needs a field of size at least " +
                                        std::to_string(needed) + ", got " +
                                        std::to_string(f.modulus()));
  }
}

}  // namespace

SchemeReport CountRows(const MonotoneSpanProgram& msp) {
  SchemeReport report;
  report.modulus = msp.field().modulus();
  report.columns = msp.cols();
  report.rows_per_participant.resize(msp.participant_count(), 0);
  for (Vertex l : msp.labels()) ++report.rows_per_participant[l - 1];
  report.total_rows = msp.rows();
  return report;
}

const std::string* SchemeReport::Fact(const std::string& key) const {
  for (const auto& [k, v] : facts) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::optional<double> SchemeReport::Bound(const std::string& key) const {
  for (const auto& [k, v] : bounds) {
    if (k == key) return v;
  }
  return std::nullopt;
}

double SparsePartiteBound(const std::vector<std::size_t>& part_sizes, std::size_t d) {
  const std::size_t k = part_sizes.size();
  double lower = 0;
  for (std::size_t j = 0; j + 1 < k; ++j) lower += static_cast<double>(part_sizes[j]);
  return static_cast<double>(part_sizes.back()) +
         std::pow(static_cast<double>(d + 1), static_cast<double>(k - 1)) * lower;
}

double DensePartiteBound(const std::vector<std::size_t>& part_sizes, std::size_t d) {
  const std::size_t k = part_sizes.size();
  std::size_t n = 0;
  for (std::size_t j = 0; j + 1 < k; ++j) n = std::max(n, part_sizes[j]);
  return 2.0 * static_cast<double>(part_sizes.back()) +
         std::pow(static_cast<double>(d + 1), static_cast<double>(k - 1)) *
             static_cast<double>(k - 1) * static_cast<double>(n);
}

double UniformAsymptoticBound(Vertex n, int k, double beta) {
  const double D = k * k - 2 * k + 2;
  const double exponent = (k * k - 3 * k + 2) / D + beta * (k * k - 3 * k + 3) / D;
  const double nd = static_cast<double>(n);
  return std::pow(nd, exponent) * std::pow(std::log2(nd), k + 1);
}

BuiltScheme BuildSparsePartite(const PartiteHypergraph& h, const Field& f) {
  CheckLowerClassField(h, f);
  const std::size_t k = static_cast<std::size_t>(h.k());
  const auto alpha = AssignEvalPoints(h, f);
  const auto by_last = EdgesByLastVertex(h);
  const std::size_t d = MaxLastDegree(by_last);
  const MonomialIndex index(k - 1, d);
  Matrix m(0, k + index.size());
  std::vector<Vertex> labels;
  AppendLowerClassRows(h, alpha, index, f, m, labels);
  Vector row(m.cols(), 0);
  const auto& last = h.part(static_cast<int>(k - 1));
  for (std::size_t i = 0; i < last.size(); ++i) {
    const Vector z = LastVertexPolynomial(by_last[i], alpha, index, f);
    std::fill(row.begin(), row.end(), 0);
    row[0] = 1;
    std::copy(z.begin(), z.end(), row.begin() + k);
    m.AppendRow(row);
    labels.push_back(last[i]);
  }
  Vector target(m.cols(), 0);
  std::fill(target.begin(), target.begin() + k, 1);
  MonotoneSpanProgram msp(f, std::move(m), std::move(labels), std::move(target),
                          h.MaxVertex());
  SchemeReport report = CountRows(msp);
  const double bound = SparsePartiteBound(PartSizes(h), d);
  report.facts = {{"kind", "sparse-partite"},
                  {"k", std::to_string(k)},
                  {"degree", std::to_string(d)},
                  {"edges", std::to_string(h.edges().size())}};
  report.bounds = {{"gadget_bound", bound},
                   {"ratio_total_to_bound",
                    bound > 0 ? static_cast<double>(report.total_rows) / bound : 0.0}};
  return BuiltScheme{std::move(msp), h, std::move(report)};
}

BuiltScheme BuildDensePartite(const PartiteHypergraph& h, const Field& f) {
  RandomTape tape(0);
  return BuildDensePartite(h, f, tape);
}

BuiltScheme BuildDensePartite(const PartiteHypergraph& h, const Field& f,
                              RandomTape& tape) {
  CheckLowerClassField(h, f);
  const std::size_t k = static_cast<std::size_t>(h.k());
  const PartiteHypergraph non_edges = ComplementPartite(h);
  const auto alpha = AssignEvalPoints(h, f);
  const auto by_last = EdgesByLastVertex(non_edges);
  const std::size_t d = MaxLastDegree(by_last);
  const MonomialIndex index(k - 1, d);
  Matrix m(0, k + index.size());
  std::vector<Vertex> labels;
  AppendLowerClassRows(h, alpha, index, f, m, labels);
  Vector row(m.cols(), 0);
  const auto& last = h.part(static_cast<int>(k - 1));
  std::vector<Vector> z_of(last.size());
  for (std::size_t i = 0; i < last.size(); ++i) {
    z_of[i] = LastVertexPolynomial(by_last[i], alpha, index, f);
    std::fill(row.begin(), row.end(), 0);
    std::copy(z_of[i].begin(), z_of[i].end(), row.begin() + k);
    m.AppendRow(row);
    labels.push_back(last[i]);
    std::fill(row.begin(), row.end(), 0);
    row[0] = 1;
    m.AppendRow(row);
    labels.push_back(last[i]);
  }

  auto with_w = [&](const Vector& w) {
    Vector target(k + index.size(), 0);
    std::fill(target.begin(), target.begin() + k, 1);
    std::copy(w.begin(), w.end(), target.begin() + k);
    return MonotoneSpanProgram(f, m, labels, std::move(target), h.MaxVertex());
  };

  Vector w(index.size(), 0);
  w[0] = 1;  // the constant polynomial 1 vanishes nowhere
  std::size_t w_attempts = 1;
  std::optional<MonotoneSpanProgram> msp = with_w(w);
  if (!AllEdgesAccepted(*msp, h.edges())) {
    msp.reset();
    // An edge (a_1..a_k) is accepted iff w lies in
    // span(z_{a_k}) + V_{1,a_1} + ... + V_{k-1,a_{k-1}}. Sample w from the
    // intersection of those spans over all edges.
    Matrix constraints(0, index.size());
    for (const auto& e : h.edges()) {
      Matrix span(0, index.size());
      span.AppendRow(z_of[h.IndexInPart(e[k - 1])]);
      for (std::size_t j = 0; j + 1 < k; ++j) {
        const Matrix basis = VanishingBasis(j, alpha[e[j]], index, f);
        for (std::size_t r = 0; r < basis.rows(); ++r) span.AppendRow(basis.row(r));
      }
      const Matrix annihilator = Nullspace(f, span);
      for (std::size_t r = 0; r < annihilator.rows(); ++r) {
        constraints.AppendRow(annihilator.row(r));
      }
    }
    const Matrix admissible = Nullspace(f, constraints);
    for (std::size_t attempt = 0; attempt < kTargetRetries && admissible.rows() > 0;
         ++attempt) {
      ++w_attempts;
      std::fill(w.begin(), w.end(), 0);
      for (std::size_t r = 0; r < admissible.rows(); ++r) {
        const Element c = tape.Uniform(f.modulus());
        for (std::size_t i = 0; i < w.size(); ++i) {
          w[i] = f.Add(w[i], f.Mul(c, admissible.at(r, i)));
        }
      }
      if (std::all_of(w.begin(), w.end(), [](Element x) { return x == 0; })) continue;
      auto candidate = with_w(w);
      if (AllEdgesAccepted(candidate, h.edges())) {
        msp.emplace(std::move(candidate));
        break;
      }
    }
    if (!msp) {
      Fail(ErrorCode::kTargetSelectionFailure,
           "no target vector accepts every edge (admissible dimension " +
               std::to_string(admissible.rows()) + ")");
    }
  }
  SchemeReport report = CountRows(*msp);
  const double bound = DensePartiteBound(PartSizes(h), d);
  report.facts = {{"kind", "dense-partite"},
                  {"k", std::to_string(k)},
                  {"complement_degree", std::to_string(d)},
                  {"edges", std::to_string(h.edges().size())},
                  {"non_edges", std::to_string(non_edges.edges().size())},
                  {"target_attempts", std::to_string(w_attempts)}};
  report.bounds = {{"gadget_bound", bound},
                   {"ratio_total_to_bound",
                    bound > 0 ? static_cast<double>(report.total_rows) / bound : 0.0}};
  return BuiltScheme{std::move(*msp), h, std::move(report)};
}

MonotoneSpanProgram UniformOverlay(const MonotoneSpanProgram& base, int k, Vertex n,
                                   const Field& field) {
  if (static_cast<Vertex>(k + 1) > n) return base;
  const MonotoneSpanProgram threshold = ThresholdMsp(static_cast<std::size_t>(k + 1), n, field);
  const MonotoneSpanProgram parts[] = {base, threshold};
  return OrCompose(parts);
}

namespace {

enum class Regime { kSparse, kDense };

struct LeafPlan {
  PartiteHypergraph graph;  // always the edge family to be accepted
  LeafSummary summary;
};

// Keeps only vertices that lie in some edge.
PartiteHypergraph PruneToEdges(const PartiteHypergraph& h) {
  std::vector<std::vector<Vertex>> parts(h.k());
  for (const auto& e : h.edges()) {
    for (int j = 0; j < h.k(); ++j) parts[j].push_back(e[j]);
  }
  for (auto& p : parts) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  return PartiteHypergraph(std::move(parts), h.edges());
}

PartiteHypergraph RestrictLastClass(const PartiteHypergraph& h,
                                    const std::vector<Vertex>& last) {
  auto parts = h.parts();
  parts.back() = last;
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    if (std::binary_search(last.begin(), last.end(), e.back())) edges.push_back(e);
  }
  return PartiteHypergraph(std::move(parts), std::move(edges));
}

std::size_t MaxDegreeOfLast(const PartiteHypergraph& h) {
  std::vector<std::size_t> deg(h.part(h.k() - 1).size(), 0);
  std::size_t d = 0;
  for (const auto& e : h.edges()) d = std::max(d, ++deg[h.IndexInPart(e.back())]);
  return d;
}

struct PipelineCounters {
  std::size_t buckets = 0;
  std::size_t partitioned = 0;
  std::size_t condition_met = 0;
  std::size_t partition_attempts = 0;
};

std::vector<LeafPlan> PlanLeaves(const PartiteCover& cover, Vertex n, Regime regime,
                                 RandomTape& tape, const BuildOptions& options,
                                 PipelineCounters& counters) {
  std::vector<LeafPlan> leaves;
  std::size_t partition_index = 0;
  for (std::size_t t = 0; t < cover.subgraphs.size(); ++t) {
    const PartiteHypergraph& sub = cover.subgraphs[t];
    const int k = sub.k();
    // In the dense regime every degree is measured on the non-edges.
    const PartiteHypergraph measured =
        regime == Regime::kSparse ? sub : ComplementPartite(sub);
    DegreeBuckets buckets = BucketByDegree(measured, n);
    if (regime == Regime::kDense && !buckets.discard.empty()) {
      // Last-class vertices without non-edges are adjacent to every tuple and
      // still need a gadget.
      buckets.buckets.push_back(buckets.discard);
    }
    for (std::size_t s = 0; s < buckets.buckets.size(); ++s) {
      const auto& bucket = buckets.buckets[s];
      if (bucket.empty()) continue;
      ++counters.buckets;
      const PartiteHypergraph edges_here = RestrictLastClass(sub, bucket);
      const PartiteHypergraph measured_here = RestrictLastClass(measured, bucket);
      const std::size_t d = MaxDegreeOfLast(measured_here);
      const PartitionPlan plan = PlanPartition(n, std::max<std::size_t>(d, 1),
                                               bucket.size(), k);
      if (plan.condition_met) ++counters.condition_met;

      auto emit = [&](PartiteHypergraph graph, std::vector<std::size_t> combo) {
        if (graph.edges().empty()) return;
        if (regime == Regime::kSparse) graph = PruneToEdges(graph);
        LeafSummary summary;
        summary.subgraph = t;
        summary.bucket = s;
        summary.blocks = std::move(combo);
        summary.part_sizes = PartSizes(graph);
        leaves.push_back(LeafPlan{std::move(graph), std::move(summary)});
      };

      if (!plan.condition_met && !options.force_partition) {
        emit(edges_here, {});
        continue;
      }
      ++counters.partitioned;
      RandomTape blocks_tape = tape.Split("blocks", partition_index++);
      const BlockPartition partition =
          RandomBlockPartition(measured_here, plan, n, blocks_tape);
      counters.partition_attempts += partition.attempts;
      ForEachBlockCombination(partition, [&](const std::vector<std::size_t>& combo) {
        std::vector<std::vector<Vertex>> chosen;
        for (std::size_t j = 0; j < combo.size(); ++j) {
          chosen.push_back(partition.blocks[j][combo[j]]);
        }
        emit(RestrictToBlocks(edges_here, chosen), combo);
      });
    }
  }
  return leaves;
}

BuiltScheme BuildUniform(const Hypergraph& h, double beta, RandomTape& tape,
                         const BuildOptions& options, Regime regime) {
  if (!(beta >= 0.0 && beta < 1.0)) Fail(ErrorCode::kUsage, "beta must lie in [0, 1)");
  const std::uint64_t budget = SparseEdgeBudget(h.n(), beta);
  const std::uint64_t m = h.edges().size();
  if (regime == Regime::kSparse && m > budget) {
    Fail(ErrorCode::kUsage, "graph has " + std::to_string(m) +
                                " edges, above the sparse budget " +
                                std::to_string(budget));
  }
  if (regime == Regime::kDense) {
    const std::uint64_t all = Binomial(h.n(), h.k());
    if (all > budget && m < all - budget) {
      Fail(ErrorCode::kUsage, "graph has " + std::to_string(m) +
                                  " edges, below the dense threshold " +
                                  std::to_string(all - budget));
    }
  }
  RandomTape cover_tape = tape.Split("cover");
  const PartiteCover cover = RandomPartiteCover(h, cover_tape);
  PipelineCounters counters;
  std::vector<LeafPlan> leaves = PlanLeaves(cover, h.n(), regime, tape, options, counters);

  std::uint64_t needed = static_cast<std::uint64_t>(h.n()) + 2;
  std::uint64_t needed_by_gadgets = 0;
  for (const auto& leaf : leaves) {
    needed_by_gadgets =
        std::max<std::uint64_t>(needed_by_gadgets, LowerClassTotal(leaf.graph) + 1);
  }
  needed = std::max(needed, needed_by_gadgets);
  std::uint64_t q = SmallestPrimeAtLeast(needed);
  if (options.modulus) {
    q = *options.modulus;
    if (q < needed) {
      Fail(ErrorCode::kFieldTooSmall, "modulus " + std::to_string(q) +
                                          " is below the required " +
                                          std::to_string(needed));
    }
  }
  const Field f = Field::Make(q);

  std::vector<MonotoneSpanProgram> gadgets;
  double gadget_bound_total = 0;
  std::size_t gadget_rows_total = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    auto& leaf = leaves[i];
    RandomTape target_tape = tape.Split("target", i);
    BuiltScheme built = regime == Regime::kSparse
                            ? BuildSparsePartite(leaf.graph, f)
                            : BuildDensePartite(leaf.graph, f, target_tape);
    leaf.summary.rows = built.report.total_rows;
    leaf.summary.bound = *built.report.Bound("gadget_bound");
    leaf.summary.degree = std::stoul(
        *built.report.Fact(regime == Regime::kSparse ? "degree" : "complement_degree"));
    gadget_bound_total += leaf.summary.bound;
    gadget_rows_total += leaf.summary.rows;
    gadgets.push_back(std::move(built.msp));
  }
  Vector e1{1};
  MonotoneSpanProgram base =
      gadgets.empty() ? MonotoneSpanProgram(f, Matrix(0, 1), {}, e1, h.n())
                      : OrCompose(gadgets);
  // Participants outside every gadget still count toward the universe.
  if (base.participant_count() < h.n()) {
    base = MonotoneSpanProgram(f, base.matrix(), base.labels(), base.target(), h.n());
  }
  MonotoneSpanProgram msp = UniformOverlay(base, h.k(), h.n(), f);

  SchemeReport report = CountRows(msp);
  const double asymptotic = UniformAsymptoticBound(h.n(), h.k(), beta);
  report.facts = {
      {"kind", regime == Regime::kSparse ? "sparse-uniform" : "dense-uniform"},
      {"k", std::to_string(h.k())},
      {"n", std::to_string(h.n())},
      {"edges", std::to_string(m)},
      {"beta", FormatDouble(beta)},
      {"seed", std::to_string(tape.seed())},
      {"colorings_drawn", std::to_string(cover.colorings_drawn)},
      {"colorings_kept", std::to_string(cover.subgraphs.size())},
      {"buckets", std::to_string(counters.buckets)},
      {"buckets_condition_met", std::to_string(counters.condition_met)},
      {"buckets_partitioned", std::to_string(counters.partitioned)},
      {"partition_attempts", std::to_string(counters.partition_attempts)},
      {"force_partition", options.force_partition ? "1" : "0"},
      {"gadgets", std::to_string(leaves.size())},
      {"overlay_rows", std::to_string(msp.rows() - base.rows())},
  };
  report.bounds = {
      {"gadget_rows_total", static_cast<double>(gadget_rows_total)},
      {"gadget_bound_total", gadget_bound_total},
      {"asymptotic_expression", asymptotic},
      {"ratio_total_to_asymptotic",
       asymptotic > 0 ? static_cast<double>(report.total_rows) / asymptotic : 0.0},
  };
  for (auto& leaf : leaves) report.leaves.push_back(std::move(leaf.summary));
  return BuiltScheme{std::move(msp), h, std::move(report)};
}

}  // namespace

BuiltScheme BuildSparseUniform(const Hypergraph& h, double beta, RandomTape& tape,
                               const BuildOptions& options) {
  return BuildUniform(h, beta, tape, options, Regime::kSparse);
}

BuiltScheme BuildDenseUniform(const Hypergraph& h, double beta, RandomTape& tape,
                              const BuildOptions& options) {
  return BuildUniform(h, beta, tape, options, Regime::kDense);
}

SchemeReport ShareSizeReport(const BuiltScheme& scheme) {
  SchemeReport report = CountRows(scheme.msp);
  report.facts = scheme.report.facts;
  report.bounds = scheme.report.bounds;
  report.leaves = scheme.report.leaves;
  return report;
}

std::string FormatReport(const SchemeReport& report) {
  std::string out = "participant  rows\n";
  for (std::size_t p = 0; p < report.rows_per_participant.size(); ++p) {
    char line[64];
    std::snprintf(line, sizeof line, "%-11zu  %zu\n", p + 1, report.rows_per_participant[p]);
    out += line;
  }
  char line[64];
  std::snprintf(line, sizeof line, "%-11s  %zu\n", "total", report.total_rows);
  out += line;
  out += "\n[gadgets]\n";
  for (const auto& leaf : report.leaves) {
    out += "subgraph=" + std::to_string(leaf.subgraph) +
           " bucket=" + std::to_string(leaf.bucket) + " blocks=";
    if (leaf.blocks.empty()) out += "-";
    for (std::size_t i = 0; i < leaf.blocks.size(); ++i) {
      out += (i ? "," : "") + std::to_string(leaf.blocks[i]);
    }
    out += " parts=";
    for (std::size_t i = 0; i < leaf.part_sizes.size(); ++i) {
      out += (i ? "," : "") + std::to_string(leaf.part_sizes[i]);
    }
    out += " degree=" + std::to_string(leaf.degree) + " rows=" + std::to_string(leaf.rows) +
           " bound=" + FormatDouble(leaf.bound) + "\n";
  }
  out += "\n[summary]\n";
  out += "modulus=" + std::to_string(report.modulus) + "\n";
  out += "columns=" + std::to_string(report.columns) + "\n";
  out += "total_rows=" + std::to_string(report.total_rows) + "\n";
  for (const auto& [k, v] : report.facts) out += k + "=" + v + "\n";
  for (const auto& [k, v] : report.bounds) out += k + "=" + FormatDouble(v) + "\n";
  return out;
}

}  // namespace hypershare
