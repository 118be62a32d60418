#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "verocohom/poly.hpp"

using namespace verocohom;
using verocohom::testutil::random_homog;

TEST_CASE("monomial basis ordering and sizes") {
    MonomialBasis b12(1, 2);
    REQUIRE(b12.size() == 3);
    CHECK(b12.mono(0) == MultiIndex{2, 0});
    CHECK(b12.mono(1) == MultiIndex{1, 1});
    CHECK(b12.mono(2) == MultiIndex{0, 2});

    CHECK(MonomialBasis(2, 3).size() == 10);
    MonomialBasis b20(2, 0);
    REQUIRE(b20.size() == 1);
    CHECK(b20.mono(0) == MultiIndex{0, 0, 0});
}

TEST_CASE("multiplication") {
    QPoly one = QPoly::monomial(2, Side::primal, {0, 0});
    QPoly p(2, Side::primal);
    p.add_term({1, 0}, 3);
    p.add_term({0, 1}, -2);
    CHECK(multiply(p, one) == p);

    QPoly sum(2, Side::primal), diff(2, Side::primal);
    sum.add_term({1, 0}, 1);
    sum.add_term({0, 1}, 1);
    diff.add_term({1, 0}, 1);
    diff.add_term({0, 1}, -1);
    QPoly expect(2, Side::primal);
    expect.add_term({2, 0}, 1);
    expect.add_term({0, 2}, -1);
    CHECK(multiply(sum, diff) == expect);

    QPoly xy = QPoly::monomial(3, Side::primal, {1, 1, 0});
    QPoly xu = QPoly::monomial(3, Side::primal, {1, 0, 1});
    CHECK(multiply(xy, xu) == QPoly::monomial(3, Side::primal, {2, 1, 1}));
}

TEST_CASE("derivation") {
    QPoly x3 = QPoly::monomial(2, Side::primal, {3, 0});
    CHECK(derive(x3, 0) == QPoly::monomial(2, Side::primal, {2, 0}, 3));
    QPoly xyu = QPoly::monomial(3, Side::primal, {1, 1, 1});
    CHECK(derive(xyu, 1) == QPoly::monomial(3, Side::primal, {1, 0, 1}));
    CHECK(derive(QPoly::monomial(2, Side::primal, {0, 0}, 5), 0).is_zero());
    CHECK_THROWS_AS(derive(x3, 2), DimensionMismatch);
}

TEST_CASE("Leibniz rule") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        unsigned n = 1 + rng() % 2;
        QPoly p = random_homog(rng, n, 2), q = random_homog(rng, n, 3);
        for (unsigned j = 0; j <= n; ++j)
            CHECK(derive(multiply(p, q), j) ==
                  multiply(derive(p, j), q) + multiply(p, derive(q, j)));
    }
}

TEST_CASE("contraction") {
    // d0 applied to x0^2
    QPoly d0 = QPoly::monomial(2, Side::dual, {1, 0});
    QPoly x02 = QPoly::monomial(2, Side::primal, {2, 0});
    CHECK(contract(d0, x02) == QPoly::monomial(2, Side::primal, {1, 0}, 2));

    // full contraction of d0^2 on (a x0 + b x1)^2 equals 2 a^2 (with a=3, b=5)
    QPoly lin(2, Side::primal), d02 = QPoly::monomial(2, Side::dual, {2, 0});
    lin.add_term({1, 0}, 3);
    lin.add_term({0, 1}, 5);
    QPoly sq = multiply(lin, lin);
    CHECK(contract(d02, sq) == QPoly::monomial(2, Side::primal, {0, 0}, 18));
    QPoly d01 = QPoly::monomial(2, Side::dual, {1, 1});
    CHECK(apolar_pair(QPoly::monomial(2, Side::primal, {1, 1}), d01) == 1);

    CHECK(contract(d0, QPoly::monomial(2, Side::primal, {0, 3})).is_zero());
    CHECK_THROWS_AS(contract(d02, QPoly::monomial(2, Side::primal, {1, 0})), DimensionMismatch);
}

TEST_CASE("contraction composes") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        unsigned n = 1 + rng() % 2;
        QPoly g1 = random_homog(rng, n, 1, Side::dual);
        QPoly g2 = random_homog(rng, n, 2, Side::dual);
        QPoly p = random_homog(rng, n, 5);
        CHECK(contract(multiply(g1, g2), p) == contract(g1, contract(g2, p)));
    }
}

TEST_CASE("apolarity pairing is diagonal with factorial entries") {
    MonomialBasis b(2, 3);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Rational v = apolar_pair(QPoly::monomial(3, Side::primal, b.mono(i)),
                                     QPoly::monomial(3, Side::dual, b.mono(j)));
            if (i == j)
                CHECK(v == Rational(mi_factorial(b.mono(i))));
            else
                CHECK(v == 0);
        }
}

TEST_CASE("coords round trip") {
    MonomialBasis b(1, 2);
    QPoly p(2, Side::primal);
    p.add_term({1, 1}, 1);
    p.add_term({0, 2}, -2);
    std::vector<Rational> v = coords(p, b);
    CHECK(v == std::vector<Rational>{Rational(0), Rational(1), Rational(-2)});
    CHECK(from_coords(v, b, Side::primal) == p);

    CHECK(coords(QPoly(2, Side::primal), b) == std::vector<Rational>(3));
    CHECK(coords(QPoly::monomial(2, Side::primal, {2, 0}), b) ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(0)});

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        QPoly q = random_homog(rng, 2, 3);
        MonomialBasis b23(2, 3);
        CHECK(from_coords(coords(q, b23), b23, Side::primal) == q);
    }

    QPoly inhom(2, Side::primal);
    inhom.add_term({1, 0}, 1);
    inhom.add_term({2, 0}, 1);
    CHECK_THROWS_AS(coords(inhom, b), DimensionMismatch);
}
