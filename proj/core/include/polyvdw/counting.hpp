#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polyvdw/polynomial.hpp"
#include "polyvdw/util.hpp"

namespace polyvdw {

// Integer sets are sorted, duplicate-free vectors.
std::vector<int64_t> normalize_set(std::vector<int64_t> values);

/// #{(x, y) in A x [n] : x + f(y) in A}, exact.  A must be sorted and
/// duplicate-free.
uint64_t pair_count(std::span<const int64_t> sortedSet, const IntPolynomial& f, int64_t n);

struct WindowedPairCount {
    uint64_t windowSum = 0;  // sum of pair counts over the windows A_i
    int64_t windowScale = 0; // m = max |f(y)| over y in [n]; window i is [i*m, (i+2)*m)
};

/// Pair count localized to the overlapping windows A_i = A intersect
/// [i*m, (i+2)*m).  Every pair lands in one or two windows, so
/// pair_count <= windowSum <= 2 * pair_count.  Requires a nonempty set and a
/// nonconstant f with m >= 1.
WindowedPairCount pair_count_windowed(std::span<const int64_t> sortedSet, const IntPolynomial& f,
                                      int64_t n);

/// Dense multiset of values over a contiguous range; counts[v - offset] is
/// the number of generating tuples with value v.  The range is tight: first
/// and last entries are nonzero unless the histogram is empty.
class ValueHistogram {
public:
    ValueHistogram() = default;
    ValueHistogram(int64_t offset, std::vector<uint64_t> counts);

    int64_t offset() const { return offset_; }
    const std::vector<uint64_t>& counts() const { return counts_; }
    bool empty() const { return counts_.empty(); }
    int64_t min_value() const { return offset_; }
    int64_t max_value() const { return offset_ + static_cast<int64_t>(counts_.size()) - 1; }
    uint64_t count_at(int64_t value) const;
    uint128 total_mass() const;

    friend bool operator==(const ValueHistogram&, const ValueHistogram&) = default;

private:
    int64_t offset_ = 0;
    std::vector<uint64_t> counts_;
};

/// counts[v] = #{(y_1, ..., y_folds) in [n]^folds : sum f(y_i) = v},
/// computed by fold-doubling exact convolution.
ValueHistogram value_histogram(const IntPolynomial& f, int64_t n, int folds);

struct CountingQuery {
    IntPolynomial f;
    int64_t n = 1;
    int s = 2;  // even number of variables

    int degree() const { return f.degree(); }
};

/// Number of solutions of f(x_1)+...+f(x_{s/2}) = f(x_{s/2+1})+...+f(x_s)
/// with all variables in [n]: sum over v of h(v)^2 for the (s/2)-fold value
/// histogram h.  Exact, 128-bit.
uint128 moment_count(const CountingQuery& query);

/// Direct enumeration of all n^s tuples; the independent oracle for
/// moment_count.  Guarded by n^s <= 10^8.
uint128 moment_count_bruteforce(const CountingQuery& query);

/// pair_count / (|A|^(1+1/s) * n^(1-d/s)), the pair count normalized by its
/// proven envelope; requires nonempty A and deg f >= 2.
double pair_count_ratio(std::span<const int64_t> sortedSet, const IntPolynomial& f, int64_t n,
                        int s);

}  // namespace polyvdw
