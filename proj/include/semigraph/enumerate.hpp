#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "semigraph/cayley_table.hpp"

namespace semigraph {

enum class DedupMode { labeled, up_to_iso, up_to_iso_and_anti };

struct EnumerationConfig {
  int order = 1;
  DedupMode dedup = DedupMode::labeled;
  int parallel_width = 1;
};

constexpr int kMaxEnumerationOrder = 6;
constexpr int kMaxCanonicalOrder = 8;

/// Streams every associative table of the given order, in lexicographic
/// order of the flattened table; in dedup modes only canonical
/// representatives are emitted. The sink returns false to stop early.
/// Output order is identical for every parallel_width.
void enumerate_semigroups(const EnumerationConfig& cfg,
                          const std::function<bool(const CayleyTable&)>& sink);

std::vector<CayleyTable> enumerate_all(const EnumerationConfig& cfg);

std::uint64_t count_semigroups(const EnumerationConfig& cfg);

/// The lexicographically least table among all n! relabelings (and, in anti
/// mode, also relabelings of the transpose). Labeled mode returns the input.
/// Idempotent. Throws OrderCapError above order 8.
CayleyTable canonical_form(const CayleyTable& s, DedupMode mode);

bool is_canonical(const CayleyTable& s, DedupMode mode);

}  // namespace semigraph
