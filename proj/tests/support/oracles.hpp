#pragma once

// Independent brute-force oracles for the test and acceptance suites.  These
// deliberately avoid the library's slice/prefix/search machinery: plain
// loops, explicit limits, no pruning.

#include <cstdint>
#include <functional>
#include <vector>

#include "polyvdw/coloring.hpp"
#include "polyvdw/pattern.hpp"

namespace polyvdw::testing {

// Every instance with all values in [1, N], scanning y = 1..yLimit and the
// x-range implied directly by the value constraints.  yLimit must be chosen
// generously by the caller.
std::vector<PatternInstance> brute_force_instances(const PatternFamily& family, int64_t groundSize,
                                                   XDomain dom, int64_t yLimit);

uint64_t brute_pair_count(const std::vector<int64_t>& set, const IntPolynomial& f, int64_t n);

// Max over classes and all windows [x, x+L), L in [minLength, N], full scan.
struct BruteDensity {
    uint64_t count = 0;
    int64_t length = 1;
};
BruteDensity brute_window_density(const Coloring& coloring, int64_t minLength);

// Visits every restricted-growth string of the given length using at most
// maxColors colors (pass INT32_MAX for unbounded); returns false from the
// visitor to stop.  Returns the number of strings visited.
uint64_t for_each_restricted_growth(int64_t length, int32_t maxColors,
                                    const std::function<bool(const std::vector<int32_t>&)>& visit);

// Unpruned search oracle: does some coloring of [N] avoid every forbidden
// instance?  Enumerates every restricted-growth string and checks it against
// the full instance list.
bool avoiding_coloring_exists(const PatternFamily& family, int64_t groundSize, XDomain dom,
                              bool canonical, int32_t maxColors, bool degenerateMonoForbidden);

}  // namespace polyvdw::testing
