#include <doctest.h>

#include <random>

#include "verocohom/matrix.hpp"

using namespace verocohom;

static QMatrix from_rows(std::vector<std::vector<long>> rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

TEST_CASE("rank on hand examples") {
    CHECK(rank(QMatrix::identity(2)) == 2);
    CHECK(rank(QMatrix(3, 4)) == 0);
    CHECK(rank(from_rows({{1, 2}, {2, 4}, {0, 1}})) == 2);
    CHECK(rank(QMatrix(0, 5)) == 0);
    CHECK(rank(QMatrix(5, 0)) == 0);
}

TEST_CASE("kernel dimensions and canonical form") {
    CHECK(kernel(QMatrix::identity(3)).rows() == 0);
    CHECK(kernel(QMatrix(2, 5)).rows() == 5);

    QMatrix m = from_rows({{1, 1, 0}});
    QMatrix k = kernel(m);
    REQUIRE(k.rows() == 2);
    // canonical RREF basis of {x0 + x1 = 0}
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(0, 1) == -1);
    CHECK(k.at(0, 2) == 0);
    CHECK(k.at(1, 0) == 0);
    CHECK(k.at(1, 1) == 0);
    CHECK(k.at(1, 2) == 1);
}

TEST_CASE("subspace intersect and contains") {
    auto e = [](int i) {
        std::vector<std::vector<long>> rows = {{0, 0, 0}};
        rows[0][i] = 1;
        return rows;
    };
    Subspace s12 = make_subspace("Q3", 3, from_rows({{1, 0, 0}, {0, 1, 0}}));
    Subspace s23 = make_subspace("Q3", 3, from_rows({{0, 1, 0}, {0, 0, 1}}));
    Subspace cap = intersect(s12, s23);
    CHECK(cap.dim() == 1);
    CHECK(contains(cap, {Rational(0), Rational(1), Rational(0)}));

    Subspace a = make_subspace("Q2", 2, from_rows({{1, 0}}));
    Subspace b = make_subspace("Q2", 2, from_rows({{0, 1}}));
    CHECK(intersect(a, b).dim() == 0);
    CHECK(same_space(intersect(a, a), a));

    Subspace mixed = make_subspace("Q2", 2, from_rows({{1, 1}, {0, 1}}));
    CHECK(contains(mixed, {Rational(1), Rational(0)}));
    CHECK_FALSE(contains(a, {Rational(0), Rational(1)}));
    CHECK(contains(a, {Rational(0), Rational(0)}));

    CHECK_THROWS_AS(intersect(a, s12), DimensionMismatch);
    CHECK_THROWS_AS(contains(a, {Rational(1)}), DimensionMismatch);
}

TEST_CASE("rank and kernel properties on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(val(rng));
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(kernel(m).rows() + rank(m) == c);
    }
}

TEST_CASE("Grassmann identity and intersection symmetry") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t dim = 4 + rng() % 3;
        auto rand_space = [&](std::size_t nrows) {
            QMatrix m(nrows, dim);
            for (std::size_t i = 0; i < nrows; ++i)
                for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = Rational(val(rng));
            return make_subspace("Q", dim, m);
        };
        Subspace a = rand_space(1 + rng() % dim), b = rand_space(1 + rng() % dim);
        CHECK(a.dim() + b.dim() == intersect(a, b).dim() + sum(a, b).dim());
        CHECK(same_space(intersect(a, b), intersect(b, a)));
    }
}
