#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "entrobound/charpoly.hpp"
#include "entrobound/nilpotent.hpp"

using namespace entrobound;

namespace {

NilpotentAlgebra abelian(std::size_t d) { return NilpotentAlgebra(d); }

NilpotentAlgebra heisenberg() {
    NilpotentAlgebra alg(3);
    alg.set_bracket_entry(0, 1, 2, 1); // [e1, e2] = e3
    alg.complete_antisymmetric();
    return alg;
}

NilpotentAlgebra filiform4() {
    NilpotentAlgebra alg(4);
    alg.set_bracket_entry(0, 1, 2, 1); // [e1, e2] = e3
    alg.set_bracket_entry(0, 2, 3, 1); // [e1, e3] = e4
    alg.complete_antisymmetric();
    return alg;
}

QMat diag(std::vector<mpq_class> entries) {
    QMat m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

// general bracket-compatible integer endomorphism of the Heisenberg algebra:
// e3 is central, D e3 = det(upper 2x2 action) e3
AlgebraEndomorphism heis_endo(int a11, int a12, int a21, int a22, int c1, int c2) {
    QMat m(3, 3);
    m(0, 0) = a11;
    m(0, 1) = a12;
    m(1, 0) = a21;
    m(1, 1) = a22;
    m(2, 0) = c1;
    m(2, 1) = c2;
    m(2, 2) = a11 * a22 - a12 * a21;
    return {m};
}

// one-parameter-family compatible endomorphism of the 4-dim filiform algebra
AlgebraEndomorphism fili_endo(int a, int b, int c) {
    QMat m(4, 4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 1) = c;
    m(2, 2) = a * b;
    m(3, 2) = a * c;
    m(3, 3) = a * a * b;
    return {m};
}

} // namespace

TEST_CASE("validate: abelian class 1") { CHECK(validate_algebra(abelian(2)) == 1); }

TEST_CASE("validate: heisenberg class 2") { CHECK(validate_algebra(heisenberg()) == 2); }

TEST_CASE("validate: antisymmetry violation") {
    NilpotentAlgebra alg(3);
    alg.set_bracket_entry(0, 1, 2, 1);
    alg.set_bracket_entry(1, 0, 2, 1); // same sign on both sides
    CHECK_THROWS_AS(validate_algebra(alg), NotAntisymmetric);
}

TEST_CASE("validate: jacobi violation") {
    NilpotentAlgebra alg(3);
    alg.set_bracket_entry(0, 1, 2, 1); // [e1, e2] = e3
    alg.set_bracket_entry(0, 2, 0, 1); // [e1, e3] = e1
    alg.complete_antisymmetric();
    CHECK_THROWS_AS(validate_algebra(alg), JacobiFails);
}

TEST_CASE("validate: non-nilpotent table") {
    NilpotentAlgebra alg(2);
    alg.set_bracket_entry(0, 1, 1, 1); // [e1, e2] = e2
    alg.complete_antisymmetric();
    CHECK_THROWS_AS(validate_algebra(alg), NotNilpotent);
}

TEST_CASE("central series degrees") {
    const CentralSeries ab = lower_central_series(abelian(2));
    CHECK(ab.degrees == std::vector<std::size_t>{2});

    const CentralSeries h = lower_central_series(heisenberg());
    CHECK(h.degrees == std::vector<std::size_t>{2, 1});
    REQUIRE(h.bases[1].cols() == 1);
    CHECK(h.bases[1](2, 0) == 1); // G_1 = span(e3), saturated
    // adapted: the deeper basis leads the shallower one
    CHECK(h.bases[0](2, 0) == 1);

    const CentralSeries f = lower_central_series(filiform4());
    CHECK(f.degrees == std::vector<std::size_t>{2, 1, 1});
}

TEST_CASE("degrees sum to the dimension") {
    for (const auto& alg : {abelian(2), heisenberg(), filiform4()}) {
        const CentralSeries s = lower_central_series(alg);
        std::size_t total = 0;
        for (auto d : s.degrees) total += d;
        CHECK(total == alg.dim());
    }
}

TEST_CASE("induced blocks: heisenberg diag(2,3,6)") {
    const auto alg = heisenberg();
    const AlgebraEndomorphism endo{diag({2, 3, 6})};
    const LinearizationBlocks blocks = induced_blocks(alg, endo);
    REQUIRE(blocks.blocks.size() == 2);
    CHECK(blocks.blocks[0].rows() == 2);
    CHECK(blocks.blocks[1].rows() == 1);
    CHECK(char_poly(blocks.blocks[1]) == IntPolynomial{1, -6});
    CHECK(char_poly(blocks.direct_sum) ==
          IntPolynomial{1, -2} * IntPolynomial{1, -3} * IntPolynomial{1, -6});
    CHECK(spectral_consistency(alg, endo, blocks));
}

TEST_CASE("induced blocks: abelian is the endomorphism itself") {
    const auto alg = abelian(2);
    QMat m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 1;
    const LinearizationBlocks blocks = induced_blocks(alg, {m});
    REQUIRE(blocks.blocks.size() == 1);
    CHECK(char_poly(blocks.direct_sum) == IntPolynomial{1, -3, 1});
    CHECK(spectral_consistency(alg, {m}, blocks));
}

TEST_CASE("induced blocks: lattice not preserved") {
    const AlgebraEndomorphism endo{diag({mpq_class(1, 2), 2, 1})};
    CHECK_THROWS_AS(induced_blocks(heisenberg(), endo), LatticeNotPreserved);
}

TEST_CASE("induced blocks: bracket incompatible") {
    const AlgebraEndomorphism endo{diag({2, 3, 5})};
    CHECK_THROWS_AS(induced_blocks(heisenberg(), endo), BracketIncompatible);
}

TEST_CASE("spectral consistency detects corruption") {
    const auto alg = heisenberg();
    const AlgebraEndomorphism endo{diag({2, 3, 6})};
    LinearizationBlocks blocks = induced_blocks(alg, endo);
    blocks.direct_sum(0, 0) = -blocks.direct_sum(0, 0);
    CHECK_FALSE(spectral_consistency(alg, endo, blocks));
}

TEST_CASE("functoriality: blocks of D^2 match squared blocks") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> c(-3, 3);
    const auto h = heisenberg();
    const auto f = filiform4();
    int done = 0;
    while (done < 20) {
        const AlgebraEndomorphism d1 = heis_endo(c(rng), c(rng), c(rng), c(rng), c(rng), c(rng));
        const AlgebraEndomorphism sq{d1.matrix * d1.matrix};
        const auto b1 = induced_blocks(h, d1);
        const auto b2 = induced_blocks(h, sq);
        CHECK(char_poly(b2.direct_sum) ==
              char_poly(b1.direct_sum * b1.direct_sum));
        CHECK(spectral_consistency(h, sq, b2));

        const AlgebraEndomorphism e1 = fili_endo(c(rng), c(rng), c(rng));
        const AlgebraEndomorphism esq{e1.matrix * e1.matrix};
        CHECK(char_poly(induced_blocks(f, esq).direct_sum) ==
              char_poly(induced_blocks(f, e1).direct_sum * induced_blocks(f, e1).direct_sum));
        ++done;
    }
}
