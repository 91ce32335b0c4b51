#pragma once

#include <string>

#include "polyvdw/coloring.hpp"
#include "polyvdw/fourier.hpp"
#include "polyvdw/harness.hpp"
#include "polyvdw/pattern.hpp"
#include "polyvdw/search.hpp"

namespace polyvdw {

// JSON renderings with a fixed key order, so byte output is reproducible.
// Counts that may exceed 64 bits are decimal strings.

std::string to_json(const PatternInstance& inst);
std::string to_json(const ScanReport& report);
std::string to_json(const WindowDensity& density);
std::string analyze_json(const ScanReport& scan, const WindowDensity& density);
std::string pair_count_json(uint64_t pairs);
std::string pair_count_windowed_json(uint64_t pairs, const WindowedPairCount& windowed);
std::string moment_json(const IntPolynomial& f, int64_t n, int s, uint128 moment,
                        std::string_view method);
std::string to_json(const HolderChainReport& report);
std::string search_result_json(const SearchResult& result, SearchMode mode);
std::string to_json(const PipelineReport& report);

}  // namespace polyvdw
