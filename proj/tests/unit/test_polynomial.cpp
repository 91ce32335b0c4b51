#include <doctest.h>

#include <limits>

#include "polyvdw/polynomial.hpp"
#include "polyvdw/util.hpp"

using polyvdw::IntPolynomial;

namespace {
const IntPolynomial kSquare = IntPolynomial::monomial(1, 2);          // y^2
const IntPolynomial kLinear = IntPolynomial::monomial(1, 1);          // y
const IntPolynomial kCubicMinus2y = IntPolynomial({0, -2, 0, 1});     // y^3 - 2y
}  // namespace

TEST_CASE("evaluation is exact") {
    CHECK(kSquare(3) == 9);
    CHECK(IntPolynomial()(7) == 0);
    CHECK(kCubicMinus2y(-2) == -4);
    CHECK(kSquare(0) == 0);
    CHECK(IntPolynomial({5})(123) == 5);
}

TEST_CASE("evaluation overflow is loud") {
    IntPolynomial big = IntPolynomial::monomial(std::numeric_limits<int64_t>::max(), 1);
    CHECK_THROWS_AS(big(3), std::overflow_error);
    IntPolynomial cube = IntPolynomial::monomial(1, 3);
    CHECK_THROWS_AS(cube(3'000'000), std::overflow_error);
    CHECK(cube(2'000'000) == 8'000'000'000'000'000'000ll);
}

TEST_CASE("difference normalizes the degree") {
    CHECK((kSquare - kSquare).is_zero());
    CHECK((kSquare - kSquare).degree() == -1);
    CHECK(IntPolynomial::monomial(2, 1) - kLinear == kLinear);
    CHECK(IntPolynomial({0, 1, 1}) - kLinear == kSquare);
}

TEST_CASE("difference matches pointwise evaluation") {
    polyvdw::SplitMix64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int64_t> ca, cb;
        for (int i = 0, deg = static_cast<int>(rng.next_below(4)) + 1; i <= deg; ++i)
            ca.push_back(rng.next_in(-50, 50));
        for (int i = 0, deg = static_cast<int>(rng.next_below(4)) + 1; i <= deg; ++i)
            cb.push_back(rng.next_in(-50, 50));
        IntPolynomial p{std::vector<int64_t>(ca)}, q{std::vector<int64_t>(cb)};
        int64_t y = rng.next_in(-30, 30);
        CHECK((p - q)(y) == p(y) - q(y));
    }
}

TEST_CASE("max pairwise difference degree") {
    using polyvdw::max_pairwise_difference_degree;
    std::vector<IntPolynomial> two = {kLinear, IntPolynomial::monomial(2, 1)};
    CHECK(max_pairwise_difference_degree(two) == 1);
    std::vector<IntPolynomial> three = {kLinear, IntPolynomial::monomial(2, 1), kSquare};
    CHECK(max_pairwise_difference_degree(three) == 2);
    std::vector<IntPolynomial> close = {kSquare, IntPolynomial({0, 1, 1})};
    CHECK(max_pairwise_difference_degree(close) == 1);

    std::vector<IntPolynomial> one = {kLinear};
    CHECK_THROWS_AS(max_pairwise_difference_degree(one), std::invalid_argument);
    std::vector<IntPolynomial> dup = {kLinear, kLinear};
    CHECK_THROWS_AS(max_pairwise_difference_degree(dup), std::invalid_argument);
}

TEST_CASE("max pairwise difference degree is permutation invariant") {
    std::vector<IntPolynomial> polys = {kLinear, kSquare, kCubicMinus2y,
                                        IntPolynomial::monomial(3, 1)};
    int expected = polyvdw::max_pairwise_difference_degree(polys);
    polyvdw::SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        for (size_t i = polys.size(); i > 1; --i)
            std::swap(polys[i - 1], polys[rng.next_below(i)]);
        CHECK(polyvdw::max_pairwise_difference_degree(polys) == expected);
    }
}

TEST_CASE("parsing both syntaxes") {
    CHECK(IntPolynomial::parse("0,0,1") == kSquare);
    CHECK(IntPolynomial::parse("y^2") == kSquare);
    CHECK(IntPolynomial::parse("3*y") == IntPolynomial::monomial(3, 1));
    CHECK(IntPolynomial::parse("y^3-2*y") == kCubicMinus2y);
    CHECK(IntPolynomial::parse("y^2+y") == IntPolynomial({0, 1, 1}));
    CHECK(IntPolynomial::parse(" -2*y^3 + y ") == IntPolynomial({0, 1, 0, -2}));
    CHECK(IntPolynomial::parse("0, -1, 4") == IntPolynomial({0, -1, 4}));
    CHECK(IntPolynomial::parse("0").is_zero());

    CHECK_THROWS_AS(IntPolynomial::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("y^"), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("2**y"), std::invalid_argument);
}

TEST_CASE("to_string round-trips through parse") {
    for (const auto& p : {kSquare, kLinear, kCubicMinus2y, IntPolynomial({0, -1, 4}),
                          IntPolynomial(), IntPolynomial({7})})
        CHECK(IntPolynomial::parse(p.to_string()) == p);
}
