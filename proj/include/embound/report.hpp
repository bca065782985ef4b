#pragma once

// Runs the bound engines for one block size, assembles the per-engine
// evidence and the feasibility verdict, and renders the result.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "embound/dimension_bound.hpp"
#include "embound/factorial_bounds.hpp"

namespace embound {

enum class EngineKind { kElementary, kStirling, kOrderAnalytic, kOrderConstructive };

std::string_view to_string(EngineKind engine);
/// Throws LookupError listing the valid names.
EngineKind parse_engine(std::string_view name);
/// Comma-separated names; duplicates are dropped, first occurrence wins.
std::vector<EngineKind> parse_engine_list(std::string_view csv);
/// elementary, stirling, order-analytic.
const std::vector<EngineKind>& default_engines();

enum class EngineStatus { kOk, kInconclusive, kUnsupported };

struct EngineOutcome {
  EngineKind engine = EngineKind::kElementary;
  EngineStatus status = EngineStatus::kOk;
  std::optional<DimensionBound> bound;  // set iff status == kOk
  std::string error;
};

struct EmbeddingReport {
  unsigned block_bits = 0;
  GroupKind group = GroupKind::kAlt;
  unsigned precision_bits = kDefaultPrecision;
  std::vector<EngineOutcome> engines;  // in the order requested
  std::optional<std::uint64_t> m_final;
  std::string verdict;
  std::vector<std::string> notes;

  const EngineOutcome* find(EngineKind engine) const;
  std::optional<std::uint64_t> m_min(EngineKind engine) const;
  bool any_inconclusive() const;
  bool any_unsupported() const;
};

/// Requires block_bits >= 7 and 1 <= precision <= kMaxPrecision (DomainError).
/// Engine failures do not throw; they are recorded per engine.
EmbeddingReport analyze(unsigned block_bits, GroupKind group, const std::vector<EngineKind>& engines,
                        unsigned precision = kDefaultPrecision);

/// Deterministic: the same report always renders to the same bytes.
std::string to_json(const EmbeddingReport& report);
std::string to_text(const EmbeddingReport& report);

struct CipherPreset {
  std::string name;
  unsigned block_bits = 0;
  GroupKind group = GroupKind::kAlt;
  std::string citation;
};

const std::vector<CipherPreset>& cipher_presets();
/// Throws LookupError listing valid names.
const CipherPreset& find_preset(std::string_view name);
std::string to_json(const CipherPreset& preset);

}  // namespace embound
