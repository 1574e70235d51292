#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "entrobound/intpoly.hpp"

using namespace entrobound;

TEST_CASE("basic arithmetic") {
    const IntPolynomial xm1{1, -1}, xp1{1, 1};
    CHECK(xm1 * xp1 == IntPolynomial{1, 0, -1});
    CHECK(poly_divexact(IntPolynomial{1, 0, -1}, xp1) == xm1);
    CHECK_THROWS_AS(poly_divexact(IntPolynomial{1, 0, 1}, xp1), InexactDivision);
    CHECK((xm1 + xp1) == IntPolynomial{2, 0});
    CHECK(IntPolynomial{0, 0, 3, 1}.degree() == 1); // leading zeros stripped
}

TEST_CASE("evaluation and derivative") {
    const IntPolynomial p{2, -3, 1}; // 2x^2 - 3x + 1
    CHECK(p.eval(2) == 3);
    CHECK(p.derivative() == IntPolynomial{4, -3});
}

TEST_CASE("gcd and squarefree part") {
    const IntPolynomial a{1, -1}, b{1, 2};
    const IntPolynomial p = a * a * b; // (x-1)^2 (x+2)
    CHECK(poly_gcd(p, p.derivative()) == a);
    CHECK(squarefree_part(p) == a * b);
    const auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == b);
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == a);
    CHECK(dec[1].second == 2);
}

TEST_CASE("reciprocal test") {
    CHECK(is_reciprocal(IntPolynomial{1, -3, 1, -3, 1}));
    CHECK_FALSE(is_reciprocal(IntPolynomial{1, 0, -1, -1}));
    CHECK(is_reciprocal(IntPolynomial{1, -3, 1}));
    CHECK_THROWS_AS(is_reciprocal(IntPolynomial{1, 0}), ZeroConstantTerm);
}

TEST_CASE("reciprocal property: p times its reversal") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int s = 0; s < 40; ++s) {
        std::vector<mpz_class> cs(1 + s % 6 + 1);
        for (auto& v : cs) v = c(rng);
        if (cs.front() == 0) cs.front() = 1;
        if (cs.back() == 0) cs.back() = 1;
        const IntPolynomial p{std::vector<mpz_class>(cs)};
        CHECK(is_reciprocal(p * p.reversed()));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPolynomial{1, -1});
    CHECK(cyclotomic(3) == IntPolynomial{1, 1, 1});
    CHECK(cyclotomic(5) == IntPolynomial{1, 1, 1, 1, 1});
    CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic product detection") {
    CHECK(is_cyclotomic_product(IntPolynomial{1, 1, 1, 1, 1}));        // Phi_5
    CHECK_FALSE(is_cyclotomic_product(IntPolynomial{1, -3, 1}));       // root 2.618...
    CHECK(is_cyclotomic_product(IntPolynomial{1, 1, 1, 0, 0, 0}));     // x^3 Phi_3
    CHECK(is_cyclotomic_product(IntPolynomial{1, 0, -1}));             // (x-1)(x+1)
    CHECK_FALSE(is_cyclotomic_product(IntPolynomial{2, 2, 2}));        // not monic
    CHECK(is_cyclotomic_product(-cyclotomic(7)));
}

TEST_CASE("cyclotomic stripping") {
    const IntPolynomial p = cyclotomic(4) * IntPolynomial{1, -3, 1};
    auto [deg, rest] = strip_cyclotomic(p);
    CHECK(deg == 2);
    CHECK(rest == IntPolynomial{1, -3, 1});
    auto [deg2, rest2] = strip_cyclotomic(IntPolynomial::monomial(3));
    CHECK(deg2 == 3);
    CHECK(rest2 == IntPolynomial{1});
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
}
