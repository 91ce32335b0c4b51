#include "polyvdw/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyvdw {

XDomain parse_xdomain(std::string_view name) {
    if (name == "any") return XDomain::AnyInteger;
    if (name == "nonneg") return XDomain::NonNegative;
    if (name == "pos") return XDomain::Positive;
    throw std::invalid_argument("unknown x-domain '" + std::string(name) + "' (want any|nonneg|pos)");
}

std::string_view to_string(XDomain dom) {
    switch (dom) {
        case XDomain::AnyInteger: return "any";
        case XDomain::NonNegative: return "nonneg";
        case XDomain::Positive: return "pos";
    }
    return "?";
}

PatternFamily::PatternFamily(std::vector<IntPolynomial> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) throw std::invalid_argument("pattern family: need at least one polynomial");
    for (const auto& p : polys_) {
        if (!p.vanishes_at_zero())
            throw std::invalid_argument("pattern family: " + p.to_string() + " does not vanish at 0");
    }
    for (size_t i = 0; i < polys_.size(); ++i)
        for (size_t j = i + 1; j < polys_.size(); ++j)
            if (polys_[i] == polys_[j])
                throw std::invalid_argument("pattern family: duplicate polynomial " + polys_[i].to_string());
    if (polys_.size() >= 2)
        max_diff_degree_ = max_pairwise_difference_degree(polys_);
}

PatternFamily PatternFamily::parse(std::string_view familySpec) {
    std::vector<IntPolynomial> polys;
    size_t start = 0;
    while (start <= familySpec.size()) {
        size_t semi = familySpec.find(';', start);
        std::string_view piece =
            familySpec.substr(start, semi == std::string_view::npos ? semi : semi - start);
        polys.push_back(IntPolynomial::parse(piece));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return PatternFamily(std::move(polys));
}

int PatternFamily::max_diff_degree() const {
    if (size() < 2)
        throw std::invalid_argument("max_diff_degree: defined only for families with k >= 2");
    return max_diff_degree_;
}

std::string PatternFamily::to_string() const {
    std::string out;
    for (const auto& p : polys_) {
        if (!out.empty()) out += "; ";
        out += p.to_string();
    }
    return out;
}

namespace {

// floor(c^(1/d)) for c >= 0, d >= 1, exact.
int64_t integer_root(int64_t c, int d) {
    if (c <= 0) return 0;
    if (d == 1) return c;
    auto pow_leq = [&](int64_t r) {
        // r^d <= c without overflow
        int128 acc = 1;
        for (int i = 0; i < d; ++i) {
            acc *= r;
            if (acc > c) return false;
        }
        return acc <= c;
    };
    int64_t r = static_cast<int64_t>(std::floor(std::pow(static_cast<double>(c), 1.0 / d)));
    r = std::max<int64_t>(r, 0);
    while (!pow_leq(r)) --r;
    while (pow_leq(r + 1)) ++r;
    return r;
}

// Sum of |coefficients| below the leading one.
int64_t tail_height(const IntPolynomial& p) {
    int64_t h = 0;
    for (int i = 0; i < p.degree(); ++i) h = checked_add(h, checked_abs(p.coeff(i)));
    return h;
}

// Smallest B so that |f(y)| > c for every y > B, for nonzero f of degree >= 1
// with |leading| >= 1: for y >= 1, |f(y)| >= y^(d-1) * (y - H) with
// H = tail_height(f), and y > H + floor(c^(1/d)) + 1 forces that above c.
int64_t escape_bound(const IntPolynomial& f, int64_t c) {
    int d = f.degree();
    return checked_add(checked_add(tail_height(f), integer_root(c, d)), 1);
}

struct ScanPlan {
    int64_t yMax = 0;  // no feasible y beyond this
};

ScanPlan make_scan_plan(const PatternFamily& family, int64_t groundSize, XDomain dom) {
    if (groundSize < 1) throw std::invalid_argument("ground-set size must be >= 1");
    const auto& polys = family.polys();
    ScanPlan plan;
    if (family.size() >= 2) {
        // Past min over pairs of the escape bound for p_i - p_j at N-1, some
        // pair of values is more than N-1 apart, so no x can work.
        int64_t best = INT64_MAX;
        for (size_t i = 0; i < polys.size(); ++i)
            for (size_t j = i + 1; j < polys.size(); ++j)
                best = std::min(best, escape_bound(polys[i] - polys[j], groundSize - 1));
        plan.yMax = best;
        return plan;
    }
    // k = 1: the x-interval for any y has exactly N integers, so only a
    // lower-bounded domain together with p(y) -> +infinity keeps the
    // instance set finite.
    const IntPolynomial& p = polys[0];
    if (dom == XDomain::AnyInteger || p.is_zero() || p.leading_coeff() < 0)
        throw std::invalid_argument(
            "enumeration over a single polynomial is infinite for this x-domain; "
            "use xdom=pos or xdom=nonneg with a polynomial of positive leading coefficient");
    plan.yMax = escape_bound(p, groundSize);
    return plan;
}

}  // namespace

namespace detail {

void for_each_y_slice(const PatternFamily& family, int64_t groundSize, XDomain dom,
                      const std::function<bool(const YSlice&)>& visit) {
    ScanPlan plan = make_scan_plan(family, groundSize, dom);
    const int k = family.size();
    std::vector<int64_t> shifts(k);
    YSlice slice;
    slice.shifts = &shifts;
    for (int64_t y = 1; y <= plan.yMax; ++y) {
        for (int i = 0; i < k; ++i) shifts[i] = family.poly(i)(y);
        auto [loIt, hiIt] = std::minmax_element(shifts.begin(), shifts.end());
        int64_t xLo = checked_sub(1, *loIt);
        int64_t xHi = checked_sub(groundSize, *hiIt);
        if (dom == XDomain::NonNegative) xLo = std::max<int64_t>(xLo, 0);
        if (dom == XDomain::Positive) xLo = std::max<int64_t>(xLo, 1);
        if (xLo > xHi) continue;
        slice.y = y;
        slice.xLo = xLo;
        slice.xHi = xHi;
        slice.degenerate = false;
        for (int i = 0; i < k && !slice.degenerate; ++i)
            for (int j = i + 1; j < k; ++j)
                if (shifts[i] == shifts[j]) {
                    slice.degenerate = true;
                    break;
                }
        if (!visit(slice)) return;
    }
}

}  // namespace detail

int64_t y_bound(const PatternFamily& family, int64_t groundSize, XDomain dom) {
    int64_t best = 0;
    detail::for_each_y_slice(family, groundSize, dom, [&](const YSlice& s) {
        best = s.y;
        return true;
    });
    return best;
}

uint64_t count_instances(const PatternFamily& family, int64_t groundSize, XDomain dom) {
    uint64_t total = 0;
    detail::for_each_y_slice(family, groundSize, dom, [&](const YSlice& s) {
        total += static_cast<uint64_t>(s.xHi - s.xLo + 1);
        return true;
    });
    return total;
}

std::vector<PatternInstance> enumerate_instances(const PatternFamily& family, int64_t groundSize,
                                                 XDomain dom, uint64_t limit) {
    std::vector<PatternInstance> out;
    if (limit == 0) return out;
    for_each_instance(family, groundSize, dom, [&](const PatternInstance& inst) {
        out.push_back(inst);
        return out.size() < limit;
    });
    return out;
}

}  // namespace polyvdw
