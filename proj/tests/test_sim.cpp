#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entrobound/torus_sim.hpp"

using namespace entrobound;

namespace {

const AffineTorusMap cat{ZMat{{2, 1}, {1, 1}}, {0, 0}};
const AffineTorusMap identity2{ZMat::identity(2), {0, 0}};
const AffineTorusMap doubling{ZMat{{2}}, {0}};

} // namespace

TEST_CASE("orbit: identity is constant") {
    const auto o = orbit(identity2, {0.3, 0.7}, 5);
    REQUIRE(o.size() == 6);
    for (const auto& p : o) {
        CHECK(p[0] == doctest::Approx(0.3));
        CHECK(p[1] == doctest::Approx(0.7));
    }
}

TEST_CASE("orbit: doubling map") {
    const auto o = orbit(doubling, {0.25}, 2);
    REQUIRE(o.size() == 3);
    CHECK(o[0][0] == doctest::Approx(0.25));
    CHECK(o[1][0] == doctest::Approx(0.5));
    CHECK(o[2][0] == doctest::Approx(0.0));
}

TEST_CASE("orbit: cat map fixes the origin") {
    const auto o = orbit(cat, {0.0, 0.0}, 3);
    for (const auto& p : o) {
        CHECK(p[0] == 0.0);
        CHECK(p[1] == 0.0);
    }
}

TEST_CASE("separated_count: static packing of the circle") {
    CHECK(separated_count({ZMat::identity(1), {0}}, 4, 0.1, 0.025) == 10);
}

TEST_CASE("separated_count: grid too coarse") {
    CHECK_THROWS_AS(separated_count(doubling, 2, 0.1, 0.03), GridTooCoarse);
}

TEST_CASE("separated_count: budget cap") {
    CHECK_THROWS_AS(separated_count(cat, 2, 0.05, 0.05 / 8, 100), BudgetExceeded);
}

TEST_CASE("separated_count: doubling map doubles until grid saturation") {
    // 80 grid points; exact counts 10 * 2^n up to 80
    std::vector<std::size_t> expected{10, 20, 40, 80, 80};
    for (std::size_t n = 0; n < expected.size(); ++n)
        CHECK(separated_count(doubling, n, 0.1, 0.0125) == expected[n]);
}

TEST_CASE("monotonicity in n and epsilon") {
    for (double eps : {0.2, 0.1}) {
        std::size_t prev = 0;
        for (std::size_t n = 0; n <= 6; ++n) {
            const std::size_t c = separated_count(cat, n, eps, eps / 8);
            CHECK(c >= prev);
            prev = c;
        }
    }
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(separated_count(cat, n, 0.2, 0.2 / 8) <= separated_count(cat, n, 0.1, 0.1 / 8));
}

TEST_CASE("entropy estimate: doubling map near log 2") {
    SimParams p;
    p.epsilons = {0.1};
    p.n_max = 10;
    const EntropyEstimate e = entropy_estimate(doubling, p);
    CHECK(std::fabs(e.estimate - std::log(2.0)) < 0.1);
}

TEST_CASE("entropy estimate: identity is flat zero") {
    SimParams p;
    p.epsilons = {0.2, 0.1};
    p.n_max = 6;
    const EntropyEstimate e = entropy_estimate(identity2, p);
    CHECK(e.estimate < 0.05);
    for (const auto& d : e.per_epsilon) CHECK(d.flat);
}

TEST_CASE("entropy estimate: window squeezed shut raises") {
    // diag(5,5) at eps=0.2: the 20x20 grid saturates after one step
    const AffineTorusMap fast{ZMat{{5, 0}, {0, 5}}, {0, 0}};
    SimParams p;
    p.epsilons = {0.2};
    p.delta_divisor = 4;
    p.n_max = 6;
    CHECK_THROWS_AS(entropy_estimate(fast, p), InsufficientWindow);
}

TEST_CASE("lift_to_cover: scalar cover keeps the matrix") {
    const AffineTorusMap shifted{ZMat{{2, 1}, {1, 1}}, {0.5, 0.25}};
    const AffineTorusMap lift = lift_to_cover(shifted, {ZMat{{2, 0}, {0, 2}}});
    CHECK(lift.matrix == shifted.matrix);
    CHECK(lift.translation[0] == doctest::Approx(0.25));
    CHECK(lift.translation[1] == doctest::Approx(0.125));
}

TEST_CASE("lift_to_cover: non-liftable lattice") {
    CHECK_THROWS_AS(lift_to_cover(cat, {ZMat{{1, 0}, {0, 2}}}), NotLiftable);
}

TEST_CASE("lift_to_cover: identity lifts to identity") {
    const AffineTorusMap lift = lift_to_cover(identity2, {ZMat{{2, 1}, {0, 3}}});
    CHECK(lift.matrix == ZMat::identity(2));
}

TEST_CASE("cover invariance at desk scale") {
    SimParams p;
    p.epsilons = {0.2, 0.1};
    p.n_max = 10;
    const double base = entropy_estimate(cat, p).estimate;
    const double lifted =
        entropy_estimate(lift_to_cover(cat, {ZMat{{2, 0}, {0, 2}}}), p).estimate;
    CHECK(std::fabs(base - lifted) <= 0.1);
}

TEST_CASE("equality report: diag(2,3)") {
    SimParams p;
    p.epsilons = {0.2, 0.1};
    p.n_max = 8;
    const EqualityReport r = equality_report({ZMat{{2, 0}, {0, 3}}, {0, 0}}, p);
    CHECK(r.bound.entropy_bound == doctest::Approx(std::log(6.0)).epsilon(1e-10));
    CHECK(r.difference <= 0.25);
}

TEST_CASE("translation does not change the estimate much") {
    SimParams p;
    p.epsilons = {0.2, 0.1};
    p.n_max = 10;
    const double plain = entropy_estimate(cat, p).estimate;
    const double moved =
        entropy_estimate({ZMat{{2, 1}, {1, 1}}, {0.37, 0.71}}, p).estimate;
    CHECK(std::fabs(plain - moved) <= 0.1);
    // the estimator stays at or below the spectral bound up to fitting noise
    CHECK(plain <= entropy_lower_bound(cat.matrix).entropy_bound + 0.05);
}
