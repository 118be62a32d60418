#include "verocohom/operators.hpp"

namespace verocohom {

QMatrix derivation_matrix(unsigned n, unsigned d, unsigned var) {
    if (d == 0) throw DimensionMismatch("derivation_matrix: degree must be positive");
    MonomialBasis src(n, d), dst(n, d - 1);
    QMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        const MultiIndex& mi = src.mono(c);
        if (mi[var] == 0) continue;
        MultiIndex t(mi);
        --t[var];
        m.at(dst.index_of(t), c) = Rational(mi[var]);
    }
    return m;
}

QMatrix psi_matrix(unsigned n, unsigned k, unsigned t) {
    if (k < 1 || t < k) throw DimensionMismatch("psi_matrix: needs 1 <= k <= t");
    TensorSpace src(n, 1, t), dst(n, k, t - k + 1);
    QMatrix m(dst.dim(), src.dim());
    for (std::size_t ib = 0; ib < src.second.size(); ++ib) {
        QPoly mono = QPoly::monomial(n + 1, Side::primal, src.second.mono(ib));
        TensorElem split = polarize(mono, k);
        for (std::size_t ia = 0; ia < src.first.size(); ++ia) {
            // first factor of U in basis order is x_ia
            unsigned var = 0;
            while (src.first.mono(ia)[var] == 0) ++var;
            TensorElem img = second_multiply(split, var);
            std::size_t col = src.index(ia, ib);
            for (const auto& [key, c] : img.terms())
                m.at(dst.index(dst.first.index_of(key.first), dst.second.index_of(key.second)),
                     col) = c;
        }
    }
    return m;
}

Subspace psi_image(unsigned n, unsigned k, unsigned t) {
    QMatrix m = psi_matrix(n, k, t);
    TensorSpace dst(n, k, t - k + 1);
    return make_subspace(dst.label(), dst.dim(), m.transpose());
}

static void pair_multisets(unsigned npairs, unsigned t, unsigned start, std::vector<unsigned>& cur,
                           std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == t) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = start; p < npairs; ++p) {
        cur.push_back(p);
        pair_multisets(npairs, t, p, cur, out);
        cur.pop_back();
    }
}

Subspace pieri_summand(unsigned t, unsigned k, unsigned d, unsigned n) {
    if (t > k) throw DimensionMismatch("pieri_summand: t exceeds k");
    if (d + k < 2 * t) throw DimensionMismatch("pieri_summand: degree too small");
    TensorSpace space(n, k, d);

    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<unsigned>> choices;
    std::vector<unsigned> cur;
    pair_multisets(static_cast<unsigned>(pairs.size()), t, 0, cur, choices);

    MonomialBasis source(n, d + k - 2 * t);
    QMatrix rows(choices.size() * source.size(), space.dim());
    std::size_t r = 0;
    for (std::size_t s = 0; s < source.size(); ++s) {
        TensorElem base = polarize(QPoly::monomial(n + 1, Side::primal, source.mono(s)), k - t);
        for (const auto& choice : choices) {
            TensorElem e = base;
            for (unsigned p : choice) e = xi(pairs[p].first, pairs[p].second, e);
            for (const auto& [key, c] : e.terms())
                rows.at(r, space.index(space.first.index_of(key.first),
                                       space.second.index_of(key.second))) = c;
            ++r;
        }
    }
    return make_subspace(space.label(), space.dim(), std::move(rows));
}

Subspace skew_kernel(unsigned n, unsigned k, unsigned d) {
    TensorSpace space(n, k, d);
    if (k == 0 || d == 0) return full_space(space.label(), space.dim());
    TensorSpace down(n, k - 1, d - 1);
    QMatrix stacked(0, space.dim());
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j)
            stacked = vstack(stacked, operator_matrix(space, down, [&](const TensorElem& e) {
                                 return dop(i, j, e);
                             }));
    return kernel_subspace(space.label(), stacked);
}

Subspace skew2_kernel(unsigned n, unsigned k, unsigned d) {
    TensorSpace space(n, k, d);
    if (k < 2 || d < 2) return full_space(space.label(), space.dim());
    TensorSpace down(n, k - 2, d - 2);
    QMatrix stacked(0, space.dim());
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j)
            for (unsigned r = 0; r <= n; ++r)
                for (unsigned s = r + 1; s <= n; ++s)
                    stacked = vstack(stacked, operator_matrix(space, down, [&](const TensorElem& e) {
                                         return dop(i, j, dop(r, s, e));
                                     }));
    return kernel_subspace(space.label(), stacked);
}

Subspace partials_span(const Subspace& T, unsigned n, unsigned d) {
    if (d == 0) throw DimensionMismatch("partials_span: degree must be positive");
    if (T.ambient_label != poly_space_label(n, d, Side::primal))
        throw DimensionMismatch("partials_span: ambient is not S^dU");
    MonomialBasis src(n, d), dst(n, d - 1);
    QMatrix rows((n + 1) * T.dim(), dst.size());
    std::size_t r = 0;
    for (std::size_t i = 0; i < T.dim(); ++i) {
        QPoly p = from_coords(T.basis.row(i), src, Side::primal);
        for (unsigned v = 0; v <= n; ++v) {
            std::vector<Rational> c = coords(derive(p, v), dst);
            for (std::size_t j = 0; j < c.size(); ++j) rows.at(r, j) = c[j];
            ++r;
        }
    }
    return make_subspace(poly_space_label(n, d - 1, Side::primal), dst.size(), std::move(rows));
}

Subspace partials_preimage(const Subspace& T, unsigned n, unsigned d, unsigned t) {
    if (T.ambient_label != poly_space_label(n, d, Side::primal))
        throw DimensionMismatch("partials_preimage: ambient is not S^dU");
    Subspace cur = T;
    for (unsigned step = 0; step < t; ++step) {
        unsigned deg = d + step;
        QMatrix constraints = coordinate_annihilator(cur); // rows vanish exactly on cur
        QMatrix stacked(0, MonomialBasis(n, deg + 1).size());
        for (unsigned v = 0; v <= n; ++v)
            stacked = vstack(stacked, matmul(constraints, derivation_matrix(n, deg + 1, v)));
        cur = kernel_subspace(poly_space_label(n, deg + 1, Side::primal), stacked);
    }
    return cur;
}

Subspace partials_preimage_dual(const Subspace& T, unsigned n, unsigned d, unsigned t) {
    return annihilator(mult_span_dual(annihilator(T, n, d), n, d, t), n, d + t);
}

Subspace annihilator(const Subspace& A, unsigned n, unsigned d) {
    Side side;
    if (A.ambient_label == poly_space_label(n, d, Side::primal))
        side = Side::primal;
    else if (A.ambient_label == poly_space_label(n, d, Side::dual))
        side = Side::dual;
    else
        throw DimensionMismatch("annihilator: unexpected ambient space");
    MonomialBasis b(n, d);
    // pairing matrix is diag(I!), so scale columns before taking the kernel
    QMatrix scaled = A.basis;
    for (std::size_t j = 0; j < b.size(); ++j) {
        Rational f(mi_factorial(b.mono(j)));
        for (std::size_t i = 0; i < scaled.rows(); ++i)
            if (scaled.at(i, j) != 0) scaled.at(i, j) *= f;
    }
    Side other = side == Side::primal ? Side::dual : Side::primal;
    if (A.dim() == 0) return full_space(poly_space_label(n, d, other), b.size());
    return kernel_subspace(poly_space_label(n, d, other), scaled);
}

Subspace mult_span_dual(const Subspace& G, unsigned n, unsigned a, unsigned t) {
    if (G.ambient_label != poly_space_label(n, a, Side::dual))
        throw DimensionMismatch("mult_span_dual: ambient is not the dual space");
    MonomialBasis src(n, a), mons(n, t), dst(n, a + t);
    QMatrix rows(G.dim() * mons.size(), dst.size());
    std::size_t r = 0;
    for (std::size_t i = 0; i < G.dim(); ++i) {
        QPoly g = from_coords(G.basis.row(i), src, Side::dual);
        for (std::size_t m = 0; m < mons.size(); ++m) {
            QPoly prod = multiply(g, QPoly::monomial(n + 1, Side::dual, mons.mono(m)));
            std::vector<Rational> c = coords(prod, dst);
            for (std::size_t j = 0; j < c.size(); ++j) rows.at(r, j) = c[j];
            ++r;
        }
    }
    return make_subspace(poly_space_label(n, a + t, Side::dual), dst.size(), std::move(rows));
}

Subspace tensor_with_left(const Subspace& T, unsigned n, unsigned chi, unsigned d) {
    if (T.ambient_label != poly_space_label(n, d, Side::primal))
        throw DimensionMismatch("tensor_with_left: ambient is not S^dU");
    TensorSpace space(n, chi, d);
    QMatrix rows(space.first.size() * T.dim(), space.dim());
    std::size_t r = 0;
    for (std::size_t ia = 0; ia < space.first.size(); ++ia)
        for (std::size_t i = 0; i < T.dim(); ++i) {
            for (std::size_t j = 0; j < space.second.size(); ++j)
                rows.at(r, space.index(ia, j)) = T.basis.at(i, j);
            ++r;
        }
    return make_subspace(space.label(), space.dim(), std::move(rows));
}

} // namespace verocohom
