#include "polyvdw/coloring.hpp"

#include <algorithm>

#include "polyvdw/util.hpp"

namespace polyvdw {

Coloring::Coloring(std::vector<int32_t> restrictedGrowthColors)
    : colors_(std::move(restrictedGrowthColors)) {
    int32_t maxSeen = -1;
    for (size_t i = 0; i < colors_.size(); ++i) {
        int32_t c = colors_[i];
        if (c < 0 || c > maxSeen + 1)
            throw std::invalid_argument("coloring: not in restricted-growth form at position " +
                                        std::to_string(i + 1));
        maxSeen = std::max(maxSeen, c);
    }
    numColors_ = maxSeen + 1;
}

Coloring Coloring::single_color(int64_t n) {
    return Coloring(std::vector<int32_t>(static_cast<size_t>(n), 0));
}

Coloring Coloring::rainbow(int64_t n) {
    std::vector<int32_t> colors(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) colors[static_cast<size_t>(i)] = static_cast<int32_t>(i);
    return Coloring(std::move(colors));
}

Coloring Coloring::random(int64_t n, int32_t colorCount, uint64_t seed) {
    if (n < 1 || colorCount < 1) throw std::invalid_argument("random coloring: need n >= 1, colors >= 1");
    std::vector<int64_t> raw(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i)
        raw[static_cast<size_t>(i)] =
            static_cast<int64_t>(splitmix64_at(seed, static_cast<uint64_t>(i)) %
                                 static_cast<uint64_t>(colorCount));
    return normalize_labels(raw);
}

namespace {

inline bool all_same(const std::vector<int32_t>& colors) {
    for (size_t i = 1; i < colors.size(); ++i)
        if (colors[i] != colors[0]) return false;
    return true;
}

inline bool pairwise_distinct(const std::vector<int32_t>& colors) {
    for (size_t i = 0; i < colors.size(); ++i)
        for (size_t j = i + 1; j < colors.size(); ++j)
            if (colors[i] == colors[j]) return false;
    return true;
}

}  // namespace

Classification classify_instance(const Coloring& coloring, const PatternInstance& inst) {
    std::vector<int32_t> colors(inst.values.size());
    for (size_t i = 0; i < inst.values.size(); ++i) {
        int64_t v = inst.values[i];
        if (v < 1 || v > coloring.size())
            throw std::out_of_range("classify_instance: value " + std::to_string(v) +
                                    " outside [1, " + std::to_string(coloring.size()) + "]");
        colors[i] = coloring.color_of(v);
    }
    return Classification{all_same(colors), pairwise_distinct(colors)};
}

ScanReport scan_coloring(const Coloring& coloring, const PatternFamily& family, XDomain dom) {
    ScanReport report;
    if (coloring.size() == 0) return report;
    const int k = family.size();
    std::vector<int32_t> colors(static_cast<size_t>(k));
    detail::for_each_y_slice(family, coloring.size(), dom, [&](const YSlice& slice) {
        for (int64_t x = slice.xLo; x <= slice.xHi; ++x) {
            for (int i = 0; i < k; ++i)
                colors[static_cast<size_t>(i)] = coloring.color_of(x + (*slice.shifts)[i]);
            ++report.total;
            if (slice.degenerate) ++report.degenerate;
            bool mono = all_same(colors);
            bool rainbow = !slice.degenerate && pairwise_distinct(colors);
            if (mono) {
                ++report.mono;
                if (!slice.degenerate) ++report.monoNonDegenerate;
                if (!report.monoWitness) {
                    PatternInstance w;
                    w.x = x;
                    w.y = slice.y;
                    w.degenerate = slice.degenerate;
                    w.values.resize(k);
                    for (int i = 0; i < k; ++i) w.values[i] = x + (*slice.shifts)[i];
                    report.monoWitness = std::move(w);
                }
            }
            if (rainbow) {
                ++report.rainbow;
                if (!report.rainbowWitness) {
                    PatternInstance w;
                    w.x = x;
                    w.y = slice.y;
                    w.degenerate = slice.degenerate;
                    w.values.resize(k);
                    for (int i = 0; i < k; ++i) w.values[i] = x + (*slice.shifts)[i];
                    report.rainbowWitness = std::move(w);
                }
            }
        }
        return true;
    });
    report.nonRainbow = report.total - report.rainbow;
    return report;
}

WindowDensity max_window_density(const Coloring& coloring, int64_t minLength) {
    const int64_t n = coloring.size();
    if (minLength < 1 || minLength > n)
        throw std::invalid_argument("max_window_density: need 1 <= minLength <= N");
    WindowDensity best;
    best.minLength = minLength;
    // A maximum-density window of length >= L can always be shortened to one
    // of length < 2L by halving (one half is at least as dense), so lengths
    // in [L, 2L-1] suffice.
    const int64_t maxLength = std::min<int64_t>(2 * minLength - 1, n);
    std::vector<uint32_t> prefix(static_cast<size_t>(n) + 1);
    for (int32_t cls = 0; cls < coloring.color_count(); ++cls) {
        prefix[0] = 0;
        for (int64_t i = 1; i <= n; ++i)
            prefix[static_cast<size_t>(i)] =
                prefix[static_cast<size_t>(i - 1)] + (coloring.color_of(i) == cls ? 1u : 0u);
        for (int64_t len = minLength; len <= maxLength; ++len) {
            for (int64_t start = 1; start + len - 1 <= n; ++start) {
                uint64_t cnt = prefix[static_cast<size_t>(start + len - 1)] -
                               prefix[static_cast<size_t>(start - 1)];
                // cnt/len > worstCount/worstLength, by cross-multiplication
                if (cnt * static_cast<uint64_t>(best.worstLength) >
                    best.worstCount * static_cast<uint64_t>(len)) {
                    best.worstCount = cnt;
                    best.worstLength = len;
                    best.argmaxClass = cls;
                    best.argmaxStart = start;
                    best.argmaxLength = len;
                }
            }
        }
    }
    best.worst = static_cast<double>(best.worstCount) / static_cast<double>(best.worstLength);
    return best;
}

uint64_t non_rainbow_upper_bound(const Coloring& coloring, const PatternFamily& family,
                                 XDomain dom) {
    if (family.size() < 2)
        throw std::invalid_argument("non_rainbow_upper_bound: needs k >= 2");
    if (coloring.size() == 0) return 0;
    const int k = family.size();
    uint64_t pairs = 0;
    std::vector<int32_t> colors(static_cast<size_t>(k));
    detail::for_each_y_slice(family, coloring.size(), dom, [&](const YSlice& slice) {
        for (int64_t x = slice.xLo; x <= slice.xHi; ++x) {
            for (int i = 0; i < k; ++i)
                colors[static_cast<size_t>(i)] = coloring.color_of(x + (*slice.shifts)[i]);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (colors[static_cast<size_t>(i)] == colors[static_cast<size_t>(j)]) ++pairs;
        }
        return true;
    });
    return pairs;
}

}  // namespace polyvdw
