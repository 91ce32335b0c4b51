#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "polyvdw/coloring.hpp"
#include "polyvdw/pattern.hpp"

namespace polyvdw {

enum class SearchMode { Canonical, MonoOnly };

std::string_view to_string(SearchMode mode);

struct SearchStats {
    uint64_t nodes = 0;   // color assignments tried
    uint64_t prunes = 0;  // assignments rejected by a completed instance
};

/// Result of a threshold search.  threshold is the smallest N <= cap such
/// that every admissible coloring of [N] contains a forbidden instance;
/// empty when [cap] still has an avoiding coloring (a lower bound, not a
/// threshold).  witness is an avoiding coloring of [threshold - 1] (or of
/// [cap] when the search hit the wall).
struct SearchResult {
    std::optional<int64_t> threshold;
    int64_t cap = 0;
    std::optional<Coloring> witness;
    SearchStats stats;
};

inline constexpr int64_t kDefaultSearchCap = 40;

/// Smallest N <= cap such that every coloring of [N], with any number of
/// colors, contains a monochromatic or rainbow instance.  Colorings are
/// enumerated depth-first in restricted-growth form with incremental
/// checking of each instance the moment its last element is colored.
/// degenerateMonoPrunes controls whether an instance with repeated values
/// may serve as the monochromatic witness.
SearchResult canonical_vdw_number(const PatternFamily& family, XDomain dom,
                                  int64_t cap = kDefaultSearchCap,
                                  bool degenerateMonoPrunes = true);

/// Smallest N <= cap such that every coloring of [N] with at most
/// colorCount colors contains a monochromatic instance.
SearchResult mono_vdw_number(const PatternFamily& family, int32_t colorCount, XDomain dom,
                             int64_t cap = kDefaultSearchCap, bool degenerateMonoPrunes = true);

/// Certificate check, independent of the search internals: true iff the
/// streaming scanner reports no monochromatic instance (and, in canonical
/// mode, no rainbow instance either).
bool verify_witness(const Coloring& coloring, const PatternFamily& family, XDomain dom,
                    SearchMode mode, bool degenerateCountsAsMono = true);

}  // namespace polyvdw
