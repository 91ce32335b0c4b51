#include "polyvdw/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polyvdw/convolution.hpp"

namespace polyvdw {

namespace {

constexpr int64_t kMaxHistogramRange = int64_t{1} << 26;
constexpr double kBruteForceCap = 1e8;

// floor division for possibly negative numerators
int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

uint64_t pair_count_shifts(std::span<const int64_t> sortedSet, std::span<const int64_t> shifts) {
    uint64_t count = 0;
    for (int64_t shift : shifts) {
        size_t j = 0;
        for (size_t i = 0; i < sortedSet.size(); ++i) {
            int64_t z;
            if (__builtin_add_overflow(sortedSet[i], shift, &z)) continue;
            while (j < sortedSet.size() && sortedSet[j] < z) ++j;
            if (j == sortedSet.size()) break;
            if (sortedSet[j] == z) ++count;
        }
    }
    return count;
}

std::vector<int64_t> evaluate_on_range(const IntPolynomial& f, int64_t n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<int64_t> values(static_cast<size_t>(n));
    for (int64_t y = 1; y <= n; ++y) values[static_cast<size_t>(y - 1)] = f(y);
    return values;
}

}  // namespace

std::vector<int64_t> normalize_set(std::vector<int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

uint64_t pair_count(std::span<const int64_t> sortedSet, const IntPolynomial& f, int64_t n) {
    if (n < 1) throw std::invalid_argument("pair_count: need n >= 1");
    if (sortedSet.empty()) return 0;
    return pair_count_shifts(sortedSet, evaluate_on_range(f, n));
}

WindowedPairCount pair_count_windowed(std::span<const int64_t> sortedSet, const IntPolynomial& f,
                                      int64_t n) {
    if (sortedSet.empty()) throw std::invalid_argument("pair_count_windowed: empty set");
    if (f.degree() < 1) throw std::invalid_argument("pair_count_windowed: f must be nonconstant");
    std::vector<int64_t> shifts = evaluate_on_range(f, n);
    int64_t m = 0;
    for (int64_t v : shifts) m = std::max(m, checked_abs(v));
    if (m == 0)
        throw std::invalid_argument("pair_count_windowed: f vanishes on [1,n], windows degenerate");

    // Window indices with A_i nonempty: element a lies in windows
    // floor(a/m) - 1 and floor(a/m).
    std::vector<int64_t> indices;
    indices.reserve(2 * sortedSet.size());
    for (int64_t a : sortedSet) {
        int64_t i0 = floor_div(a, m);
        indices.push_back(i0 - 1);
        indices.push_back(i0);
    }
    indices = normalize_set(std::move(indices));

    WindowedPairCount result;
    result.windowScale = m;
    for (int64_t i : indices) {
        int64_t lo = checked_mul(i, m);
        int64_t hi = checked_mul(checked_add(i, 2), m);  // window [lo, hi)
        auto first = std::lower_bound(sortedSet.begin(), sortedSet.end(), lo);
        auto last = std::lower_bound(sortedSet.begin(), sortedSet.end(), hi);
        if (first == last) continue;
        result.windowSum += pair_count_shifts(
            std::span<const int64_t>(&*first, static_cast<size_t>(last - first)), shifts);
    }
    return result;
}

ValueHistogram::ValueHistogram(int64_t offset, std::vector<uint64_t> counts)
    : offset_(offset), counts_(std::move(counts)) {
    // keep the range tight
    size_t firstNonzero = 0;
    while (firstNonzero < counts_.size() && counts_[firstNonzero] == 0) ++firstNonzero;
    if (firstNonzero == counts_.size()) {
        counts_.clear();
        offset_ = 0;
        return;
    }
    size_t lastNonzero = counts_.size() - 1;
    while (counts_[lastNonzero] == 0) --lastNonzero;
    if (firstNonzero > 0 || lastNonzero + 1 < counts_.size()) {
        std::vector<uint64_t> tight(counts_.begin() + static_cast<ptrdiff_t>(firstNonzero),
                                    counts_.begin() + static_cast<ptrdiff_t>(lastNonzero) + 1);
        counts_ = std::move(tight);
        offset_ = checked_add(offset_, static_cast<int64_t>(firstNonzero));
    }
}

uint64_t ValueHistogram::count_at(int64_t value) const {
    if (empty() || value < min_value() || value > max_value()) return 0;
    return counts_[static_cast<size_t>(value - offset_)];
}

uint128 ValueHistogram::total_mass() const {
    uint128 mass = 0;
    for (uint64_t c : counts_) mass += c;
    return mass;
}

ValueHistogram value_histogram(const IntPolynomial& f, int64_t n, int folds) {
    if (folds < 1) throw std::invalid_argument("value_histogram: need folds >= 1");
    std::vector<int64_t> values = evaluate_on_range(f, n);
    auto [loIt, hiIt] = std::minmax_element(values.begin(), values.end());
    int64_t lo = *loIt, hi = *hiIt;
    // 64-bit bounds for the folded value range and the total mass
    checked_mul(lo, folds);
    checked_mul(hi, folds);
    int64_t range = checked_add(checked_sub(hi, lo), 1);
    if (checked_mul(range, folds) > kMaxHistogramRange)
        throw std::overflow_error("value_histogram: folded value range too large");
    uint128 mass = 1;
    for (int i = 0; i < folds; ++i) {
        mass *= static_cast<uint128>(n);
        if (mass > UINT64_MAX)
            throw std::overflow_error("value_histogram: total mass exceeds 64 bits");
    }

    std::vector<uint64_t> base(static_cast<size_t>(range), 0);
    for (int64_t v : values) ++base[static_cast<size_t>(v - lo)];

    // fold-doubling: histogram offsets add under convolution
    ValueHistogram result(0, {1});  // empty sum
    ValueHistogram power(lo, std::move(base));
    int remaining = folds;
    while (remaining > 0) {
        if (remaining & 1) {
            std::vector<uint64_t> conv = convolve_exact(result.counts(), power.counts());
            result = ValueHistogram(checked_add(result.offset(), power.offset()), std::move(conv));
        }
        remaining >>= 1;
        if (remaining > 0) {
            std::vector<uint64_t> sq = convolve_exact(power.counts(), power.counts());
            power = ValueHistogram(checked_mul(power.offset(), 2), std::move(sq));
        }
    }
    return result;
}

uint128 moment_count(const CountingQuery& query) {
    if (query.s < 2 || query.s % 2 != 0)
        throw std::invalid_argument("moment_count: s must be even and >= 2");
    ValueHistogram h = value_histogram(query.f, query.n, query.s / 2);
    uint128 total = 0;
    for (uint64_t c : h.counts()) total += static_cast<uint128>(c) * c;
    return total;
}

uint128 moment_count_bruteforce(const CountingQuery& query) {
    if (query.s < 2 || query.s % 2 != 0)
        throw std::invalid_argument("moment_count_bruteforce: s must be even and >= 2");
    if (query.n < 1) throw std::invalid_argument("moment_count_bruteforce: need n >= 1");
    if (std::pow(static_cast<double>(query.n), query.s) > kBruteForceCap)
        throw std::invalid_argument("moment_count_bruteforce: n^s exceeds the 10^8 cap");
    std::vector<int64_t> values = evaluate_on_range(query.f, query.n);
    const int s = query.s;
    const int64_t n = query.n;
    std::vector<int64_t> tuple(static_cast<size_t>(s), 1);
    uint128 solutions = 0;
    while (true) {
        int64_t lhs = 0, rhs = 0;
        for (int i = 0; i < s / 2; ++i) lhs = checked_add(lhs, values[static_cast<size_t>(tuple[i] - 1)]);
        for (int i = s / 2; i < s; ++i) rhs = checked_add(rhs, values[static_cast<size_t>(tuple[i] - 1)]);
        if (lhs == rhs) ++solutions;
        int pos = s - 1;
        while (pos >= 0 && tuple[static_cast<size_t>(pos)] == n) {
            tuple[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<size_t>(pos)];
    }
    return solutions;
}

double pair_count_ratio(std::span<const int64_t> sortedSet, const IntPolynomial& f, int64_t n,
                        int s) {
    if (sortedSet.empty()) throw std::invalid_argument("pair_count_ratio: empty set");
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("pair_count_ratio: requires deg f >= 2");
    if (s < 2 || s % 2 != 0)
        throw std::invalid_argument("pair_count_ratio: s must be even and >= 2");
    uint64_t pairs = pair_count(sortedSet, f, n);
    double setSize = static_cast<double>(sortedSet.size());
    double denom = std::pow(setSize, 1.0 + 1.0 / s) *
                   std::pow(static_cast<double>(n), 1.0 - static_cast<double>(d) / s);
    return static_cast<double>(pairs) / denom;
}

}  // namespace polyvdw
