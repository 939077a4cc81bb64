#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thompson/metrics.hpp"
#include "thompson/sampling.hpp"

using namespace thompson;

namespace {

GroupElement E(const char* w) { return evaluate(parse_word(w)); }

CayleyBall& shared_ball() {
    static CayleyBall ball = [] {
        CayleyBall b;
        b.grow_to(6);
        return b;
    }();
    return ball;
}

} // namespace

TEST_CASE("caret counts and bounds") {
    CHECK(caret_count_of(GroupElement::identity()) == 0);
    CHECK(caret_count_of(E("x0")) == 2);
    const auto b0 = length_bounds(GroupElement::identity());
    CHECK_FALSE(b0.defined);
    CHECK(b0.lower == 0);
    CHECK(b0.upper == 0);
    const auto b1 = length_bounds(E("x1"));
    CHECK(b1.lower == 1);
    CHECK(b1.upper == 8);
    CHECK(length_bounds(E("x0")).upper == 4);
    for (long long k = 1; k <= 10; ++k) {
        const auto b = length_bounds(power(E("x0 x1^-1"), k));
        CHECK(b.lower == k);
        CHECK(b.upper == 4 * k + 4);
    }
}

TEST_CASE("frozen sphere sizes") {
    const auto& ball = shared_ball();
    const std::vector<std::size_t> expected{1, 4, 12, 36, 108, 314, 906};
    for (std::size_t r = 0; r < expected.size(); ++r) CHECK(ball.sphere(r).size() == expected[r]);
    CHECK(enumerate_ball(2).size() == 17);
}

TEST_CASE("exact lengths") {
    CHECK(exact_length(GroupElement::identity(), 1) == 0U);
    CHECK(exact_length(E("x1"), 3) == 1U);
    CHECK(exact_length(E("x2"), 4) == 3U);
    CHECK(exact_length(E("x1 x0"), 3) == 2U);
    CHECK_FALSE(exact_length(E("x5"), 3).has_value());
    CHECK_THROWS_AS(exact_length(E("x1"), kDefaultRadiusCap + 1), Error);
    CayleyBall small(3);
    CHECK_THROWS_AS(small.grow_to(4), Error);
}

TEST_CASE("bounds hold on the radius-6 ball") {
    const auto report = check_bounds_on_ball(shared_ball(), 6);
    CHECK(report.passed());
    CHECK(report.checked == 1 + 4 + 12 + 36 + 108 + 314 + 906 - 1);
}

TEST_CASE("metric symmetry") {
    auto& ball = shared_ball();
    for (std::size_t r = 0; r <= 6; ++r) {
        for (const auto& g : ball.sphere(r)) CHECK(ball.known_length(inverse(g)) == r);
    }
}

TEST_CASE("triangle inequality on sampled pairs") {
    auto& ball = shared_ball();
    Rng rng(13);
    for (int i = 0; i < 2000; ++i) {
        const auto& a = ball.sphere(static_cast<std::size_t>(rng.uniform(0, 3)));
        const auto& b = ball.sphere(static_cast<std::size_t>(rng.uniform(0, 3)));
        const auto& x = a[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(a.size()) - 1))];
        const auto& y = b[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(b.size()) - 1))];
        const auto lx = ball.known_length(x);
        const auto ly = ball.known_length(y);
        const auto lxy = ball.known_length(x * y);
        REQUIRE(lxy.has_value());
        CHECK(*lxy <= *lx + *ly);
    }
}

TEST_CASE("BFS is independent of generator order") {
    const GeneratorOrder reversed{{{1, true}, {1, false}, {0, true}, {0, false}}};
    CayleyBall other(kDefaultRadiusCap, reversed);
    other.grow_to(5);
    auto& ball = shared_ball();
    for (std::size_t r = 0; r <= 5; ++r) CHECK(other.sphere(r) == ball.sphere(r));
}

TEST_CASE("estimate uses the oracle when it can") {
    auto& ball = shared_ball();
    const auto e = estimate(E("x2"), &ball);
    CHECK(e.caret_count == 4);
    CHECK(e.exact == 3U);
    CHECK_FALSE(estimate(E("x2")).exact.has_value());
    CHECK_FALSE(estimate(E("x30"), &ball).exact.has_value());
}
