#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "polyvdw/polynomial.hpp"

namespace polyvdw {

// Where the shift x ranges.  Instance values x + p_i(y) always live in [1, N]
// and y >= 1; the x convention is a caller choice.
enum class XDomain { AnyInteger, NonNegative, Positive };

XDomain parse_xdomain(std::string_view name);  // "any" | "nonneg" | "pos"
std::string_view to_string(XDomain dom);

/// Ordered tuple (p_1, ..., p_k) of pairwise-distinct polynomials that all
/// vanish at 0, together with the cached maximum pairwise difference degree.
class PatternFamily {
public:
    explicit PatternFamily(std::vector<IntPolynomial> polys);

    // ';'-separated polynomial specs, e.g. "0,1;0,2" or "y;2*y;y^2".
    static PatternFamily parse(std::string_view familySpec);

    int size() const { return static_cast<int>(polys_.size()); }
    const IntPolynomial& poly(int i) const { return polys_[i]; }
    const std::vector<IntPolynomial>& polys() const { return polys_; }

    // D = max over i != j of deg(p_i - p_j); defined for size() >= 2.
    int max_diff_degree() const;

    std::string to_string() const;

private:
    std::vector<IntPolynomial> polys_;
    int max_diff_degree_ = -1;
};

struct PatternInstance {
    int64_t x = 0;
    int64_t y = 0;
    std::vector<int64_t> values;  // values[i] = x + p_i(y)
    bool degenerate = false;      // some two values coincide
};

// One feasible y together with its admissible x-interval.  The shift vector
// holds p_i(y); instance values are x + shifts[i].
struct YSlice {
    int64_t y = 0;
    int64_t xLo = 0, xHi = 0;  // inclusive, xLo <= xHi
    const std::vector<int64_t>* shifts = nullptr;
    bool degenerate = false;
};

namespace detail {
// Visits every feasible y in increasing order; the visitor returns false to
// stop.  Throws std::invalid_argument when the instance set is infinite
// (k = 1 with an unbounded x-domain or a polynomial unbounded below).
void for_each_y_slice(const PatternFamily& family, int64_t groundSize, XDomain dom,
                      const std::function<bool(const YSlice&)>& visit);
}  // namespace detail

// Largest y >= 1 for which some x in the domain places all k values inside
// [1, N]; 0 when no instance exists.
int64_t y_bound(const PatternFamily& family, int64_t groundSize, XDomain dom);

// Number of instances, computed from per-y interval lengths without
// materializing anything.
uint64_t count_instances(const PatternFamily& family, int64_t groundSize, XDomain dom);

// Streams instances in (y ascending, x ascending) order.  The visitor gets a
// reused PatternInstance reference and returns false to stop early.
template <class Visitor>
void for_each_instance(const PatternFamily& family, int64_t groundSize, XDomain dom,
                       Visitor&& visit) {
    PatternInstance inst;
    inst.values.resize(family.size());
    detail::for_each_y_slice(family, groundSize, dom, [&](const YSlice& slice) {
        inst.y = slice.y;
        inst.degenerate = slice.degenerate;
        for (int64_t x = slice.xLo; x <= slice.xHi; ++x) {
            inst.x = x;
            for (int i = 0; i < family.size(); ++i) inst.values[i] = x + (*slice.shifts)[i];
            if (!visit(static_cast<const PatternInstance&>(inst))) return false;
        }
        return true;
    });
}

std::vector<PatternInstance> enumerate_instances(const PatternFamily& family, int64_t groundSize,
                                                 XDomain dom, uint64_t limit = UINT64_MAX);

}  // namespace polyvdw
