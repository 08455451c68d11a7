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

#include "hypershare/hypershare.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <unistd.h>

#include "hypershare/error.hpp"
#include "hypershare/generate.hpp"
#include "hypershare/hypergraph.hpp"
#include "hypershare/msp.hpp"
#include "hypershare/oracle.hpp"
#include "hypershare/random.hpp"
#include "hypershare/scheme.hpp"

struct hs_hypergraph {
  hypershare::AccessStructure graph;
};

struct hs_scheme {
  hypershare::MonotoneSpanProgram msp;
  std::optional<hypershare::AccessStructure> structure;
  hypershare::SchemeReport report;
};

struct hs_shares {
  hypershare::ShareBundle bundle;
};

namespace {

using namespace hypershare;

thread_local std::string g_last_error;

hs_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormat:
    case ErrorCode::kRange:
    case ErrorCode::kFieldMismatch:
      return HS_ERR_FORMAT;
    case ErrorCode::kNotQualified: return HS_ERR_NOT_QUALIFIED;
    case ErrorCode::kCoverFailure: return HS_ERR_COVER_FAILURE;
    case ErrorCode::kPartitionFailure: return HS_ERR_PARTITION_FAILURE;
    case ErrorCode::kEnumerationTooLarge:
    case ErrorCode::kSizeOverflow:
      return HS_ERR_ENUMERATION_TOO_LARGE;
    case ErrorCode::kFieldTooSmall: return HS_ERR_FIELD_TOO_SMALL;
    case ErrorCode::kTargetSelectionFailure: return HS_ERR_TARGET_SELECTION;
    case ErrorCode::kInfeasibleCount: return HS_ERR_INFEASIBLE_COUNT;
    case ErrorCode::kUsage:
    case ErrorCode::kNotPrime:
    case ErrorCode::kIo:
      return HS_ERR_USAGE;
    default:
      return HS_ERR_INTERNAL;
  }
}

template <typename Fn>
hs_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    g_last_error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HS_ERR_INTERNAL;
  }
}

hs_status Usage(const std::string& message) {
  g_last_error = "Usage: " + message;
  return HS_ERR_USAGE;
}

std::string ReadFile(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const char* path, const std::string& content) {
  const std::string tmp = std::string(path) + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) Fail(ErrorCode::kIo, "cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) Fail(ErrorCode::kIo, "short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path) != 0) {
    std::remove(tmp.c_str());
    Fail(ErrorCode::kIo, std::string("cannot rename onto ") + path);
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t PartiteModulus(const PartiteHypergraph& h) {
  std::uint64_t lower = 0;
  for (int j = 0; j + 1 < h.k(); ++j) lower += h.part(j).size();
  return SmallestPrimeAtLeast(lower + 1);
}

BuiltScheme BuildFrom(const AccessStructure& graph, const hs_build_options& o) {
  RandomTape tape(o.seed);
  if (const auto* partite = std::get_if<PartiteHypergraph>(&graph)) {
    const Field f = Field::Make(o.modulus ? o.modulus : PartiteModulus(*partite));
    if (o.mode == HS_MODE_DENSE) {
      RandomTape target_tape = tape.Split("target");
      return BuildDensePartite(*partite, f, target_tape);
    }
    return BuildSparsePartite(*partite, f);
  }
  const auto& h = std::get<Hypergraph>(graph);
  BuildOptions options;
  if (o.modulus) options.modulus = o.modulus;
  options.force_partition = o.force_partition != 0;
  hs_mode mode = o.mode;
  if (mode == HS_MODE_AUTO) {
    switch (ClassifyDensity(h, o.beta)) {
      case Density::kSparse: mode = HS_MODE_SPARSE; break;
      case Density::kDense: mode = HS_MODE_DENSE; break;
      case Density::kNeither:
        Fail(ErrorCode::kUsage, "graph is neither sparse nor dense for this beta");
    }
  }
  return mode == HS_MODE_DENSE ? BuildDenseUniform(h, o.beta, tape, options)
                               : BuildSparseUniform(h, o.beta, tape, options);
}

}  // namespace

extern "C" {

const char* hs_last_error(void) { return g_last_error.c_str(); }

const char* hs_status_name(hs_status status) {
  switch (status) {
    case HS_OK: return "ok";
    case HS_ERR_USAGE: return "usage";
    case HS_ERR_FORMAT: return "format";
    case HS_ERR_NOT_QUALIFIED: return "not-qualified";
    case HS_ERR_COVER_FAILURE: return "cover-failure";
    case HS_ERR_PARTITION_FAILURE: return "partition-failure";
    case HS_ERR_ENUMERATION_TOO_LARGE: return "enumeration-too-large";
    case HS_ERR_FIELD_TOO_SMALL: return "field-too-small";
    case HS_ERR_TARGET_SELECTION: return "target-selection-failure";
    case HS_ERR_INFEASIBLE_COUNT: return "infeasible-count";
    case HS_ERR_AUDIT_FINDINGS: return "audit-findings";
    case HS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void hs_string_free(char* s) { std::free(s); }

hs_status hs_hypergraph_generate(int k, uint32_t n, double beta, hs_mode mode,
                                 uint64_t seed, hs_hypergraph** out) {
  if (!out) return Usage("null output handle");
  if (mode != HS_MODE_SPARSE && mode != HS_MODE_DENSE) {
    return Usage("generation mode must be sparse or dense");
  }
  return Guard([&] {
    RandomTape tape(seed);
    Hypergraph h = RandomHypergraph(
        k, n, beta, mode == HS_MODE_DENSE ? GenerateMode::kDense : GenerateMode::kSparse,
        tape);
    *out = new hs_hypergraph{std::move(h)};
    return HS_OK;
  });
}

hs_status hs_hypergraph_load(const char* path, hs_hypergraph** out) {
  if (!path || !out) return Usage("null argument");
  return Guard([&] {
    auto parsed = ParseAnyHypergraph(ReadFile(path));
    *out = std::visit([](auto&& g) { return new hs_hypergraph{std::move(g)}; },
                      std::move(parsed));
    return HS_OK;
  });
}

hs_status hs_hypergraph_save(const hs_hypergraph* h, const char* path) {
  if (!h || !path) return Usage("null argument");
  return Guard([&] {
    WriteFileAtomic(path, std::visit([](const auto& g) { return Serialize(g); }, h->graph));
    return HS_OK;
  });
}

hs_status hs_hypergraph_info(const hs_hypergraph* h, int* k, uint32_t* n, uint64_t* edges,
                             int* partite) {
  if (!h) return Usage("null hypergraph");
  return Guard([&] {
    std::visit(
        [&](const auto& g) {
          if (k) *k = g.k();
          if (edges) *edges = g.edges().size();
        },
        h->graph);
    const auto* p = std::get_if<PartiteHypergraph>(&h->graph);
    if (n) *n = p ? p->MaxVertex() : std::get<Hypergraph>(h->graph).n();
    if (partite) *partite = p ? 1 : 0;
    return HS_OK;
  });
}

void hs_hypergraph_free(hs_hypergraph* h) { delete h; }

void hs_build_options_init(hs_build_options* options) {
  if (!options) return;
  options->mode = HS_MODE_AUTO;
  options->beta = 0.0;
  options->seed = 0;
  options->modulus = 0;
  options->force_partition = 0;
}

hs_status hs_scheme_build(const hs_hypergraph* h, const hs_build_options* options,
                          hs_scheme** out) {
  if (!h || !out) return Usage("null argument");
  hs_build_options o;
  hs_build_options_init(&o);
  if (options) o = *options;
  return Guard([&] {
    BuiltScheme built = BuildFrom(h->graph, o);
    *out = new hs_scheme{std::move(built.msp), std::move(built.structure),
                         std::move(built.report)};
    return HS_OK;
  });
}

hs_status hs_scheme_load(const char* path, hs_scheme** out) {
  if (!path || !out) return Usage("null argument");
  return Guard([&] {
    MonotoneSpanProgram msp = ParseMsp(ReadFile(path));
    SchemeReport report = CountRows(msp);
    *out = new hs_scheme{std::move(msp), std::nullopt, std::move(report)};
    return HS_OK;
  });
}

hs_status hs_scheme_save(const hs_scheme* s, const char* path) {
  if (!s || !path) return Usage("null argument");
  return Guard([&] {
    WriteFileAtomic(path, Serialize(s->msp));
    return HS_OK;
  });
}

hs_status hs_scheme_save_report(const hs_scheme* s, const char* path) {
  if (!s || !path) return Usage("null argument");
  return Guard([&] {
    WriteFileAtomic(path, FormatReport(s->report));
    return HS_OK;
  });
}

hs_status hs_scheme_report(const hs_scheme* s, char** text) {
  if (!s || !text) return Usage("null argument");
  return Guard([&] {
    *text = CopyString(FormatReport(s->report));
    return HS_OK;
  });
}

hs_status hs_scheme_dimensions(const hs_scheme* s, uint64_t* modulus, uint64_t* rows,
                               uint64_t* cols, uint32_t* participants) {
  if (!s) return Usage("null scheme");
  if (modulus) *modulus = s->msp.field().modulus();
  if (rows) *rows = s->msp.rows();
  if (cols) *cols = s->msp.cols();
  if (participants) *participants = s->msp.participant_count();
  g_last_error.clear();
  return HS_OK;
}

hs_status hs_scheme_accepts(const hs_scheme* s, const uint32_t* subset, size_t count,
                            int* accepted) {
  if (!s || !accepted || (count && !subset)) return Usage("null argument");
  return Guard([&] {
    *accepted = Accepts(s->msp, std::span<const Vertex>(subset, count)) ? 1 : 0;
    return HS_OK;
  });
}

void hs_scheme_free(hs_scheme* s) { delete s; }

hs_status hs_share(const hs_scheme* s, uint64_t secret, uint64_t seed, hs_shares** out) {
  if (!s || !out) return Usage("null argument");
  return Guard([&] {
    if (secret >= s->msp.field().modulus()) {
      Fail(ErrorCode::kUsage, "secret must be below the modulus " +
                                  std::to_string(s->msp.field().modulus()));
    }
    RandomTape tape = RandomTape(seed).Split("tape");
    *out = new hs_shares{Distribute(s->msp, secret, tape)};
    return HS_OK;
  });
}

hs_status hs_shares_load(const char* path, hs_shares** out) {
  if (!path || !out) return Usage("null argument");
  return Guard([&] {
    *out = new hs_shares{ParseShares(ReadFile(path))};
    return HS_OK;
  });
}

hs_status hs_shares_save(const hs_shares* shares, const char* path) {
  if (!shares || !path) return Usage("null argument");
  return Guard([&] {
    WriteFileAtomic(path, Serialize(shares->bundle));
    return HS_OK;
  });
}

hs_status hs_reconstruct(const hs_scheme* s, const hs_shares* shares,
                         const uint32_t* subset, size_t count, uint64_t* secret) {
  if (!s || !shares || !secret || (count && !subset)) return Usage("null argument");
  return Guard([&] {
    *secret = Reconstruct(s->msp, std::span<const Vertex>(subset, count), shares->bundle);
    return HS_OK;
  });
}

void hs_shares_free(hs_shares* shares) { delete shares; }

hs_status hs_audit(const hs_scheme* s, const hs_hypergraph* structure, size_t max_size,
                   char** text, uint64_t* failures, uint64_t* violations) {
  if (!s) return Usage("null scheme");
  const AccessStructure* graph = structure ? &structure->graph
                                 : s->structure ? &*s->structure
                                                : nullptr;
  if (!graph) return Usage("scheme has no access structure; pass the hypergraph");
  return Guard([&] {
    const QualifiedPredicate qualified = [&](std::span<const Vertex> set) {
      return std::visit([&](const auto& g) { return IsQualified(g, set); }, *graph);
    };
    const AuditReport report =
        AuditAcceptance(s->msp, s->msp.participant_count(), qualified, max_size);
    if (text) *text = CopyString(Serialize(report));
    if (failures) *failures = report.failures.size() + report.engine_mismatches.size();
    if (violations) *violations = report.violations.size();
    return HS_OK;
  });
}

}  // extern "C"
