#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "entrobound/lattice.hpp"
#include "entrobound/matrix.hpp"

using namespace entrobound;

namespace {

// spans of two saturated bases agree iff each expresses integrally in the other
bool same_lattice(const ZMat& a, const ZMat& b) {
    if (a.cols() != b.cols()) return false;
    try {
        to_integer_exact(express_in_basis(a, b), "t");
        to_integer_exact(express_in_basis(b, a), "t");
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

TEST_CASE("saturate divides out content") {
    ZMat v(2, 1);
    v(0, 0) = 2;
    const ZMat s = saturate(v);
    REQUIRE(s.cols() == 1);
    CHECK(s(0, 0) == 1);
    CHECK(s(1, 0) == 0);
}

TEST_CASE("saturate full-rank example") {
    const ZMat v{{2, 0}, {4, 3}};
    const ZMat s = saturate(v);
    REQUIRE(s.cols() == 2);
    // must span all of Z^2: determinant +-1
    CHECK(abs(determinant(s)) == 1);
}

TEST_CASE("saturate keeps an already-saturated basis") {
    const ZMat s = saturate(ZMat::identity(2));
    CHECK(s == ZMat::identity(2));
}

TEST_CASE("saturate rejects dependent input") {
    const ZMat v{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(saturate(v), DependentInput);
}

TEST_CASE("saturation is idempotent") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int s = 0; s < 40; ++s) {
        const std::size_t d = 2 + s % 3, m = 1 + s % d;
        ZMat v(d, m);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < m; ++j) v(i, j) = c(rng);
        ZMat sat1;
        try {
            sat1 = saturate(v);
        } catch (const DependentInput&) {
            continue;
        }
        const ZMat sat2 = saturate(sat1);
        CHECK(same_lattice(sat1, sat2));
    }
}

TEST_CASE("lattice points in the span are integer combinations") {
    // {(2,4),(0,3)} spans Q^2, saturation must be a basis of Z^2
    const ZMat v{{2, 0}, {4, 3}};
    const ZMat s = saturate(v);
    const QMat coords = express_in_basis(s, ZMat::identity(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(coords(i, j).get_den() == 1);
}

TEST_CASE("integer kernel") {
    // kernel of [0 1] in Z^2 is span{(1,0)}
    ZMat c(1, 2);
    c(0, 1) = 1;
    const ZMat k = integer_kernel(c);
    REQUIRE(k.cols() == 1);
    CHECK(k(1, 0) == 0);
    CHECK(abs(k(0, 0)) == 1);
}

TEST_CASE("hnf is deterministic echelon with positive pivots") {
    const ZMat m{{4, 2}, {2, 2}};
    const ZMat h = hnf_columns(m);
    CHECK(h(0, 0) > 0);
    // pivot structure: second column has zero in the first pivot row
    CHECK(h(0, 1) == 0);
    CHECK(same_lattice(h, hnf_columns(h)));
}

TEST_CASE("unimodular completion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int s = 0; s < 40; ++s) {
        const std::size_t d = 2 + s % 3;
        ZMat v(d, 1 + s % d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) = c(rng);
        ZMat sat;
        try {
            sat = saturate(v);
        } catch (const DependentInput&) {
            continue;
        }
        const ZMat m = unimodular_completion(sat);
        CHECK(abs(determinant(m)) == 1);
        CHECK(same_lattice(m.col_block(0, sat.cols()), sat));
    }
}
