#include "polyvdw/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyvdw {

std::string_view to_string(SearchMode mode) {
    return mode == SearchMode::Canonical ? "canonical" : "mono";
}

namespace {

struct Searcher {
    const PatternFamily& family;
    SearchMode mode;
    int32_t colorCap;  // INT32_MAX for unbounded
    bool degenerateMonoPrunes;
    int64_t cap;

    // instances grouped by their completion element (largest value)
    std::vector<std::vector<const PatternInstance*>> byCompletion;
    std::vector<PatternInstance> instances;

    std::vector<int32_t> colors;  // colors[t-1] = color of element t
    int64_t deepestAvoiding = 0;
    std::vector<int32_t> bestWitness;
    bool hitWall = false;
    SearchStats stats;

    Searcher(const PatternFamily& fam, SearchMode m, int32_t cc, bool degMono, int64_t c, XDomain dom)
        : family(fam), mode(m), colorCap(cc), degenerateMonoPrunes(degMono), cap(c) {
        if (cap < 1) throw std::invalid_argument("search: cap must be >= 1");
        instances = enumerate_instances(family, cap, dom);
        byCompletion.assign(static_cast<size_t>(cap) + 1, {});
        for (const auto& inst : instances) {
            int64_t completion = *std::max_element(inst.values.begin(), inst.values.end());
            byCompletion[static_cast<size_t>(completion)].push_back(&inst);
        }
        colors.assign(static_cast<size_t>(cap), -1);
    }

    bool violates(const PatternInstance& inst) const {
        const size_t k = inst.values.size();
        int32_t first = colors[static_cast<size_t>(inst.values[0] - 1)];
        bool mono = true;
        for (size_t i = 1; i < k && mono; ++i)
            mono = colors[static_cast<size_t>(inst.values[i] - 1)] == first;
        if (mono && (degenerateMonoPrunes || !inst.degenerate)) return true;
        if (mode == SearchMode::Canonical && !inst.degenerate) {
            bool rainbow = true;
            for (size_t i = 0; i < k && rainbow; ++i)
                for (size_t j = i + 1; j < k; ++j)
                    if (colors[static_cast<size_t>(inst.values[i] - 1)] ==
                        colors[static_cast<size_t>(inst.values[j] - 1)]) {
                        rainbow = false;
                        break;
                    }
            if (rainbow) return true;
        }
        return false;
    }

    // depth-first over restricted-growth strings; element = next to color,
    // maxUsed = largest color id used so far
    void dfs(int64_t element, int32_t maxUsed) {
        if (hitWall) return;
        int32_t limit = std::min<int32_t>(maxUsed + 1, colorCap - 1);
        for (int32_t c = 0; c <= limit; ++c) {
            ++stats.nodes;
            colors[static_cast<size_t>(element - 1)] = c;
            bool bad = false;
            for (const PatternInstance* inst : byCompletion[static_cast<size_t>(element)]) {
                if (violates(*inst)) {
                    bad = true;
                    break;
                }
            }
            if (bad) {
                ++stats.prunes;
                continue;
            }
            if (element > deepestAvoiding) {
                deepestAvoiding = element;
                bestWitness.assign(colors.begin(), colors.begin() + element);
            }
            if (element == cap) {
                hitWall = true;
                return;
            }
            dfs(element + 1, std::max(maxUsed, c));
            if (hitWall) return;
        }
        colors[static_cast<size_t>(element - 1)] = -1;
    }

    SearchResult run() {
        dfs(1, -1);
        SearchResult result;
        result.cap = cap;
        result.stats = stats;
        if (hitWall) {
            result.witness = Coloring(bestWitness);
        } else {
            result.threshold = deepestAvoiding + 1;
            result.witness = Coloring(bestWitness);  // empty when threshold == 1
        }
        return result;
    }
};

}  // namespace

SearchResult canonical_vdw_number(const PatternFamily& family, XDomain dom, int64_t cap,
                                  bool degenerateMonoPrunes) {
    if (family.size() < 2)
        throw std::invalid_argument("canonical_vdw_number: needs k >= 2");
    Searcher searcher(family, SearchMode::Canonical, INT32_MAX, degenerateMonoPrunes, cap, dom);
    return searcher.run();
}

SearchResult mono_vdw_number(const PatternFamily& family, int32_t colorCount, XDomain dom,
                             int64_t cap, bool degenerateMonoPrunes) {
    if (colorCount < 1) throw std::invalid_argument("mono_vdw_number: need colorCount >= 1");
    Searcher searcher(family, SearchMode::MonoOnly, colorCount, degenerateMonoPrunes, cap, dom);
    return searcher.run();
}

bool verify_witness(const Coloring& coloring, const PatternFamily& family, XDomain dom,
                    SearchMode mode, bool degenerateCountsAsMono) {
    ScanReport report = scan_coloring(coloring, family, dom);
    uint64_t mono = degenerateCountsAsMono ? report.mono : report.monoNonDegenerate;
    if (mono != 0) return false;
    if (mode == SearchMode::Canonical && report.rainbow != 0) return false;
    return true;
}

}  // namespace polyvdw
