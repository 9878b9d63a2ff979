#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eqcolor/errors.hpp"
#include "eqcolor/params.hpp"

using namespace eqcolor;

TEST_CASE("beta at unit ratio") {
    double b = solve_beta(1.0, 1.0);
    CHECK(b == doctest::Approx(0.677650698804).epsilon(1e-9));
    // beta depends only on the ratio
    CHECK(solve_beta(3.0, 3.0) == doctest::Approx(b).epsilon(1e-12));
    CHECK(solve_beta(0.25, 0.25) == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("beta at the extreme ratio is one half") {
    CHECK(solve_beta(1.8, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(solve_beta(0.9, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("beta decreases as the ratio grows") {
    double prev = 1.0;
    for (double ratio = 1.0; ratio <= 1.801; ratio += 0.1) {
        double b = solve_beta(ratio, 1.0);
        CHECK(b < prev);
        CHECK(b >= 0.5 - 1e-12);
        CHECK(b < 1.0);
        prev = b;
    }
}

TEST_CASE("ratio outside [1, 1.8] is rejected") {
    CHECK_THROWS_AS(solve_beta(2.0, 1.0), RatioOutOfRange);
    CHECK_THROWS_AS(solve_beta(1.0, 2.0), RatioOutOfRange);
    CHECK_THROWS_AS(solve_beta(1.81, 1.0), RatioOutOfRange);
    CHECK_THROWS_AS(solve_beta(0.0, 1.0), PreconditionViolation);
    CHECK_THROWS_AS(build_params(-1.0, 1.0), PreconditionViolation);
}

TEST_CASE("derived parameters at m1 = m2 = 1") {
    auto p = build_params(1.0, 1.0);
    CHECK(p.beta == doctest::Approx(0.677650698804).epsilon(1e-9));
    CHECK(p.r0 == doctest::Approx(6.20444962213).epsilon(1e-9));
    CHECK(p.a0 == doctest::Approx(1.25307658654).epsilon(1e-9));
    CHECK(p.floor_2m1 == 2);
    CHECK(p.floor_a0 == 1);
    CHECK(p.min_r == 7);
}

TEST_CASE("m2 above m1 is clamped") {
    auto p = build_params(1.0, 5.0);
    CHECK(p.m2 == 1.0);
    CHECK(p.min_r == 7);
}

TEST_CASE("r0 scales linearly at fixed ratio") {
    auto p1 = build_params(1.0, 1.0);
    for (int d = 2; d <= 10; ++d) {
        auto pd = build_params(double(d), double(d));
        CHECK(pd.r0 == doctest::Approx(d * p1.r0).epsilon(1e-9));
        CHECK(pd.r0 / d > 6.19);
        CHECK(pd.r0 / d <= 6.21);
    }
}

TEST_CASE("defining identities hold at the solved root") {
    for (auto [m1, m2] : {std::pair{1.0, 1.0}, {1.5, 1.0}, {1.8, 1.0}, {7.0, 5.0}}) {
        auto p = build_params(m1, m2);
        CAPTURE(m1);
        CAPTURE(m2);
        // r0 and a0 from their definitions
        CHECK(p.r0 == doctest::Approx(2 * m1 / (1 - p.beta)).epsilon(1e-12));
        double disc = std::sqrt(p.r0 * p.r0 - 4 * p.m2 * p.r0);
        CHECK(p.a0 == doctest::Approx((p.r0 - disc) / 2).epsilon(1e-12));
        // the bounding inequalities are tight at the root
        CHECK((1 - p.beta * p.beta) * (p.r0 - 2 * p.a0) ==
              doctest::Approx(2 * m1).epsilon(1e-6));
        CHECK(p.beta * (p.r0 - 2 * p.a0) == doctest::Approx(2 * p.a0).epsilon(1e-6));
    }
}

TEST_CASE("local crossing number presets") {
    CHECK(kplanar_params(0) == std::pair{3.0, 2.0});
    CHECK(kplanar_params(1) == std::pair{4.0, 3.0});
    CHECK(kplanar_params(2) == std::pair{5.0, 3.5});
    CHECK(kplanar_params(3) == std::pair{5.5, 5.205});
    CHECK(kplanar_params(4) == std::pair{6.0, 6.0});
    auto [m1, m2] = kplanar_params(9);
    CHECK(m1 == doctest::Approx(3.81 * 3.0));
    CHECK(m2 == doctest::Approx(3.005 * 3.0));
    CHECK_THROWS_AS(kplanar_params(-1), PreconditionViolation);
}

TEST_CASE("color count thresholds for small k") {
    CHECK(kplanar_threshold(2) == 24);
    CHECK(kplanar_threshold(3) == 33);
    CHECK(kplanar_threshold(4) == 38);
}

TEST_CASE("thresholds track the square root envelope") {
    for (int k = 5; k <= 100; ++k) {
        CAPTURE(k);
        CHECK(kplanar_threshold(k) <= std::ceil(19.57 * std::sqrt(double(k))));
    }
}
