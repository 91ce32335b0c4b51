#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyvdw/pattern.hpp"

namespace polyvdw {

/// Coloring of [N] in restricted-growth normal form: element 1 has color 0
/// and every later element's color exceeds the running maximum by at most 1.
/// Two label arrays induce the same partition iff they normalize equal.
class Coloring {
public:
    Coloring() = default;  // empty ground set
    explicit Coloring(std::vector<int32_t> restrictedGrowthColors);

    static Coloring single_color(int64_t n);
    static Coloring rainbow(int64_t n);
    // Counter-based SplitMix64 draws: color(i) = splitmix64_at(seed, i) % colorCount,
    // then normalized.
    static Coloring random(int64_t n, int32_t colorCount, uint64_t seed);

    int64_t size() const { return static_cast<int64_t>(colors_.size()); }
    int32_t color_count() const { return numColors_; }
    int32_t color_of(int64_t element) const {  // element in [1, N]
        return colors_[static_cast<size_t>(element - 1)];
    }
    const std::vector<int32_t>& colors() const { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int32_t> colors_;
    int32_t numColors_ = 0;
};

// Order-preserving relabeling of arbitrary labels into restricted-growth form.
template <class Label>
Coloring normalize_labels(const std::vector<Label>& raw) {
    if (raw.empty()) throw std::invalid_argument("normalize_labels: empty label array");
    std::map<Label, int32_t> ids;
    std::vector<int32_t> out;
    out.reserve(raw.size());
    for (const Label& label : raw) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<int32_t>(ids.size()));
        out.push_back(it->second);
    }
    return Coloring(std::move(out));
}

struct Classification {
    bool mono = false;     // all k values share one color
    bool rainbow = false;  // the k colors are pairwise distinct
};

// Throws std::out_of_range when a value lies outside [1, N].  For k = 1 both
// flags are true; a repeated value makes rainbow impossible for k >= 2.
Classification classify_instance(const Coloring& coloring, const PatternInstance& inst);

struct ScanReport {
    uint64_t total = 0;
    uint64_t mono = 0;        // counts degenerate instances too
    uint64_t rainbow = 0;
    uint64_t nonRainbow = 0;  // total - rainbow
    uint64_t degenerate = 0;
    uint64_t monoNonDegenerate = 0;  // the stricter reading of "monochromatic"
    std::optional<PatternInstance> monoWitness;     // first in enumeration order
    std::optional<PatternInstance> rainbowWitness;  // first in enumeration order
};

ScanReport scan_coloring(const Coloring& coloring, const PatternFamily& family, XDomain dom);

/// Exact maximum over color classes A and windows [x, x+L), L >= minLength,
/// of |A intersect window| / L.  The worst ratio is kept as an exact
/// (count, length) pair next to the double.
struct WindowDensity {
    int64_t minLength = 0;
    uint64_t worstCount = 0;
    int64_t worstLength = 1;
    double worst = 0.0;
    int32_t argmaxClass = -1;
    int64_t argmaxStart = 0;   // window is [argmaxStart, argmaxStart + argmaxLength)
    int64_t argmaxLength = 0;
};

WindowDensity max_window_density(const Coloring& coloring, int64_t minLength);

// Union-bound quantity: over all color classes A and index pairs i < j, the
// number of instances whose i-th and j-th values both lie in A.  Always at
// least the number of non-rainbow instances.
uint64_t non_rainbow_upper_bound(const Coloring& coloring, const PatternFamily& family, XDomain dom);

}  // namespace polyvdw
