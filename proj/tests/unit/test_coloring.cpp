#include <doctest.h>

#include <string>

#include "polyvdw/coloring.hpp"
#include "polyvdw/util.hpp"
#include "support/oracles.hpp"

using polyvdw::Coloring;
using polyvdw::PatternFamily;
using polyvdw::PatternInstance;
using polyvdw::XDomain;

namespace {

PatternInstance instance(std::vector<int64_t> values) {
    PatternInstance inst;
    inst.values = std::move(values);
    for (size_t i = 0; i < inst.values.size() && !inst.degenerate; ++i)
        for (size_t j = i + 1; j < inst.values.size(); ++j)
            if (inst.values[i] == inst.values[j]) inst.degenerate = true;
    return inst;
}

}  // namespace

TEST_CASE("normalize relabels order-preservingly") {
    CHECK(polyvdw::normalize_labels(std::vector<std::string>{"b", "b", "a", "a"}).colors() ==
          std::vector<int32_t>{0, 0, 1, 1});
    CHECK(polyvdw::normalize_labels(std::vector<std::string>{"x", "y", "x"}).colors() ==
          std::vector<int32_t>{0, 1, 0});
    CHECK(polyvdw::normalize_labels(std::vector<std::string>{"q"}).colors() ==
          std::vector<int32_t>{0});
    CHECK_THROWS_AS(polyvdw::normalize_labels(std::vector<int64_t>{}), std::invalid_argument);
}

TEST_CASE("normalize is idempotent and partition-faithful") {
    polyvdw::SplitMix64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int64_t n = rng.next_in(1, 40);
        std::vector<int64_t> raw(static_cast<size_t>(n));
        for (auto& v : raw) v = rng.next_in(0, 5);
        Coloring normalized = polyvdw::normalize_labels(raw);
        // renormalizing the normal form changes nothing
        CHECK(polyvdw::normalize_labels(normalized.colors()) == normalized);
        // permuting the label alphabet leaves the partition fixed
        int64_t perm[6];
        for (int i = 0; i < 6; ++i) perm[i] = (i * 5 + 2 + trial) % 6;
        std::vector<int64_t> relabeled(raw.size());
        for (size_t i = 0; i < raw.size(); ++i) relabeled[i] = perm[raw[i]];
        CHECK(polyvdw::normalize_labels(relabeled) == normalized);
    }
}

TEST_CASE("restricted growth form is validated") {
    CHECK_THROWS_AS(Coloring({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Coloring({0, 2}), std::invalid_argument);
    CHECK(Coloring({0, 1, 0, 2}).color_count() == 3);
}

TEST_CASE("classification of small instances") {
    Coloring halves({0, 0, 1, 1});
    auto c1 = polyvdw::classify_instance(halves, instance({2, 3}));
    CHECK(!c1.mono);
    CHECK(c1.rainbow);

    Coloring mono = Coloring::single_color(5);
    auto c2 = polyvdw::classify_instance(mono, instance({1, 3, 5}));
    CHECK(c2.mono);
    CHECK(!c2.rainbow);
    auto single = polyvdw::classify_instance(mono, instance({4}));
    CHECK(single.mono);
    CHECK(single.rainbow);  // k = 1 is both

    Coloring five({0, 0, 1, 1, 0});
    auto repeated = polyvdw::classify_instance(five, instance({5, 5}));
    CHECK(!repeated.rainbow);
    CHECK(repeated.mono);

    CHECK_THROWS_AS(polyvdw::classify_instance(halves, instance({0, 2})), std::out_of_range);
    CHECK_THROWS_AS(polyvdw::classify_instance(halves, instance({2, 9})), std::out_of_range);
}

TEST_CASE("scan counts monochromatic and rainbow instances") {
    auto fam = PatternFamily::parse("y;2*y");

    // halves coloring: values (2,3) split, values (3,4) both in class 1
    auto halves = polyvdw::scan_coloring(Coloring({0, 0, 1, 1}), fam, XDomain::Positive);
    CHECK(halves.total == 2);
    CHECK(halves.rainbow == 1);
    CHECK(halves.mono == 1);
    CHECK(halves.nonRainbow == 1);
    REQUIRE(halves.monoWitness.has_value());
    CHECK(halves.monoWitness->values == std::vector<int64_t>{3, 4});

    auto allOne = polyvdw::scan_coloring(Coloring::single_color(4), fam, XDomain::Positive);
    CHECK(allOne.total == 2);
    CHECK(allOne.mono == 2);
    CHECK(allOne.rainbow == 0);

    auto striped = polyvdw::scan_coloring(Coloring({0, 1, 0, 1}), fam, XDomain::Positive);
    CHECK(striped.rainbow == 2);
    CHECK(striped.mono == 0);
}

TEST_CASE("rainbow plus nonRainbow is total, exhaustively") {
    polyvdw::SplitMix64 rng(512);
    auto fam = PatternFamily::parse("y;2*y;y^2");
    for (int trial = 0; trial < 30; ++trial) {
        int64_t n = rng.next_in(1, 60);
        Coloring coloring = Coloring::random(n, static_cast<int32_t>(rng.next_in(1, 6)),
                                             rng.next());
        auto report = polyvdw::scan_coloring(coloring, fam, XDomain::AnyInteger);
        CHECK(report.rainbow + report.nonRainbow == report.total);
        CHECK(report.mono <= report.nonRainbow);
        CHECK(report.total == polyvdw::count_instances(fam, n, XDomain::AnyInteger));
    }
}

TEST_CASE("window density on hand-checked colorings") {
    // alternating on [8]: the odd window [1,6) holds 3 of class 0
    auto alternating = polyvdw::max_window_density(Coloring({0, 1, 0, 1, 0, 1, 0, 1}), 4);
    CHECK(alternating.worstCount == 3);
    CHECK(alternating.worstLength == 5);
    CHECK(alternating.worst == doctest::Approx(0.6));

    auto allOne = polyvdw::max_window_density(Coloring::single_color(6), 3);
    CHECK(allOne.worst == doctest::Approx(1.0));
    CHECK(allOne.worstCount == static_cast<uint64_t>(allOne.worstLength));

    auto rainbow = polyvdw::max_window_density(Coloring::rainbow(4), 4);
    CHECK(rainbow.worstCount == 1);
    CHECK(rainbow.worstLength == 4);
}

TEST_CASE("window density matches the full-length brute force") {
    polyvdw::SplitMix64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        int64_t n = rng.next_in(2, 48);
        Coloring coloring = Coloring::random(n, static_cast<int32_t>(rng.next_in(1, 5)),
                                             rng.next());
        int64_t minLen = rng.next_in(1, n);
        auto fast = polyvdw::max_window_density(coloring, minLen);
        auto brute = polyvdw::testing::brute_window_density(coloring, minLen);
        // equal as exact rationals
        CHECK(fast.worstCount * static_cast<uint64_t>(brute.length) ==
              brute.count * static_cast<uint64_t>(fast.worstLength));
        // the reported argmax reproduces the reported ratio
        uint64_t cnt = 0;
        for (int64_t e = fast.argmaxStart; e < fast.argmaxStart + fast.argmaxLength; ++e)
            if (coloring.color_of(e) == fast.argmaxClass) ++cnt;
        CHECK(cnt == fast.worstCount);
        CHECK(fast.argmaxLength == fast.worstLength);
    }
}

TEST_CASE("window density is non-increasing in the length threshold") {
    Coloring coloring = Coloring::random(64, 3, 11);
    double prev = 1.0;
    for (int64_t minLen = 1; minLen <= 64; ++minLen) {
        auto density = polyvdw::max_window_density(coloring, minLen);
        CHECK(density.worst <= prev + 1e-12);
        prev = density.worst;
    }
}

TEST_CASE("union bound dominates the non-rainbow count") {
    auto fam = PatternFamily::parse("y;2*y");
    CHECK(polyvdw::non_rainbow_upper_bound(Coloring::single_color(4), fam, XDomain::Positive) == 2);
    CHECK(polyvdw::non_rainbow_upper_bound(Coloring::rainbow(4), fam, XDomain::Positive) == 0);
    // values (3,4) share class 1 under the halves coloring
    CHECK(polyvdw::non_rainbow_upper_bound(Coloring({0, 0, 1, 1}), fam, XDomain::Positive) == 1);

    CHECK_THROWS_AS(polyvdw::non_rainbow_upper_bound(Coloring::single_color(4),
                                                     PatternFamily::parse("y"), XDomain::Positive),
                    std::invalid_argument);

    polyvdw::SplitMix64 rng(31337);
    auto bigFam = PatternFamily::parse("y;2*y;y^2");
    for (int trial = 0; trial < 25; ++trial) {
        int64_t n = rng.next_in(2, 60);
        Coloring coloring = Coloring::random(n, static_cast<int32_t>(rng.next_in(1, 7)),
                                             rng.next());
        auto report = polyvdw::scan_coloring(coloring, bigFam, XDomain::AnyInteger);
        uint64_t bound = polyvdw::non_rainbow_upper_bound(coloring, bigFam, XDomain::AnyInteger);
        CHECK(bound >= report.nonRainbow);
    }
}
