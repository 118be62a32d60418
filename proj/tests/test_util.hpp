#pragma once

#include <random>

#include "verocohom/cohomology.hpp"
#include "verocohom/surface.hpp"

namespace verocohom::testutil {

inline QPoly random_homog(std::mt19937_64& rng, unsigned n, unsigned deg, Side side = Side::primal,
                          int density_percent = 70) {
    MonomialBasis b(n, deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> pick(1, 100);
    QPoly p(n + 1, side);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (pick(rng) <= density_percent) p.add_term(b.mono(i), Rational(coeff(rng)));
    if (p.is_zero()) p.add_term(b.mono(rng() % b.size()), Rational(1 + static_cast<int>(rng() % 5)));
    return p;
}

inline TensorElem random_tensor(std::mt19937_64& rng, unsigned n, unsigned a, unsigned b,
                                int nterms = 6) {
    MonomialBasis ba(n, a), bb(n, b);
    std::uniform_int_distribution<int> coeff(-9, 9);
    TensorElem e(n, a, b);
    for (int t = 0; t < nterms; ++t) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        e.add_term(ba.mono(rng() % ba.size()), bb.mono(rng() % bb.size()), Rational(c));
    }
    return e;
}

/// Random monomial center in S^dU over P^2, avoiding the three corner powers.
inline Subspace random_monomial_center(std::mt19937_64& rng, unsigned d, std::size_t size) {
    MonomialBasis b(2, d);
    std::vector<MultiIndex> pool;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const MultiIndex& mi = b.mono(i);
        if (mi[0] == d || mi[1] == d || mi[2] == d) continue;
        pool.push_back(mi);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    if (size > pool.size()) size = pool.size();
    std::vector<QPoly> gens;
    for (std::size_t i = 0; i < size; ++i)
        gens.push_back(QPoly::monomial(3, Side::primal, pool[i]));
    return span_of(gens, 2, d, Side::primal);
}

/// Random sparse triple set with pairwise distance >= 2, no corners.
inline TriangleT random_sparse_triangle(std::mt19937_64& rng, unsigned d, std::size_t want) {
    std::vector<Triple> pool;
    for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b) {
            Triple t{a, b, d - a - b};
            if (!t.is_corner()) pool.push_back(t);
        }
    std::shuffle(pool.begin(), pool.end(), rng);
    TriangleT out;
    out.d = d;
    for (const Triple& cand : pool) {
        bool ok = true;
        for (const Triple& have : out.triples)
            if (graph_distance(cand, have) < 2) ok = false;
        if (ok) out.triples.push_back(cand);
        if (out.triples.size() == want) break;
    }
    return out;
}

} // namespace verocohom::testutil
