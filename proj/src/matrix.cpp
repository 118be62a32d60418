#include "verocohom/matrix.hpp"

#include <utility>

namespace verocohom {

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
    QMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
    QMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj != 0) m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

std::vector<std::size_t> rref_inplace(QMatrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && m.at(p, c) == 0) ++p;
        if (p == nr) continue;
        if (p != r)
            for (std::size_t j = c; j < nc; ++j) std::swap(m.at(p, j), m.at(r, j));
        if (m.at(r, c) != 1) {
            Rational inv = 1 / m.at(r, c);
            m.at(r, c) = 1;
            for (std::size_t j = c + 1; j < nc; ++j)
                if (m.at(r, j) != 0) m.at(r, j) *= inv;
        }
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r) continue;
            const Rational f = m.at(i, c);
            if (f == 0) continue;
            m.at(i, c) = 0;
            for (std::size_t j = c + 1; j < nc; ++j)
                if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(QMatrix m) { return rref_inplace(m).size(); }

QMatrix kernel(const QMatrix& m) {
    QMatrix red = m;
    std::vector<std::size_t> pivots = rref_inplace(red);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    QMatrix ker(nc - pivots.size(), nc);
    std::size_t kr = 0;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        ker.at(kr, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (red.at(i, f) != 0) ker.at(kr, pivots[i]) = -red.at(i, f);
        ++kr;
    }
    rref_inplace(ker);
    return ker;
}

Subspace make_subspace(std::string ambient_label, std::size_t ambient_dim, QMatrix spanning_rows) {
    if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient_dim)
        throw DimensionMismatch("make_subspace: row length differs from ambient dimension");
    std::size_t r = rref_inplace(spanning_rows).size();
    QMatrix basis(r, ambient_dim);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) basis.at(i, j) = spanning_rows.at(i, j);
    return Subspace{std::move(ambient_label), ambient_dim, std::move(basis)};
}

Subspace zero_space(std::string ambient_label, std::size_t ambient_dim) {
    return Subspace{std::move(ambient_label), ambient_dim, QMatrix(0, ambient_dim)};
}

Subspace full_space(std::string ambient_label, std::size_t ambient_dim) {
    return Subspace{std::move(ambient_label), ambient_dim, QMatrix::identity(ambient_dim)};
}

Subspace kernel_subspace(std::string ambient_label, const QMatrix& m) {
    return Subspace{std::move(ambient_label), m.cols(), kernel(m)};
}

QMatrix coordinate_annihilator(const Subspace& a) {
    if (a.dim() == 0) return QMatrix::identity(a.ambient_dim);
    return kernel(a.basis);
}

static void check_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
    if (a.ambient_dim != b.ambient_dim || a.ambient_label != b.ambient_label)
        throw DimensionMismatch(std::string(what) + ": ambient spaces differ (" + a.ambient_label +
                                " vs " + b.ambient_label + ")");
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b, "intersect");
    QMatrix constraints = vstack(coordinate_annihilator(a), coordinate_annihilator(b));
    return kernel_subspace(a.ambient_label, constraints);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b, "sum");
    return make_subspace(a.ambient_label, a.ambient_dim, vstack(a.basis, b.basis));
}

bool contains(const Subspace& a, const std::vector<Rational>& v) {
    if (v.size() != a.ambient_dim) throw DimensionMismatch("contains: vector length differs");
    std::vector<Rational> w = v;
    for (std::size_t i = 0; i < a.basis.rows(); ++i) {
        // basis is RREF: locate this row's pivot and cancel it in w
        std::size_t p = 0;
        while (p < a.ambient_dim && a.basis.at(i, p) == 0) ++p;
        if (p == a.ambient_dim || w[p] == 0) continue;
        const Rational f = w[p];
        for (std::size_t j = p; j < a.ambient_dim; ++j)
            if (a.basis.at(i, j) != 0) w[j] -= f * a.basis.at(i, j);
    }
    for (const Rational& x : w)
        if (x != 0) return false;
    return true;
}

bool contains_subspace(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b, "contains_subspace");
    for (std::size_t i = 0; i < b.basis.rows(); ++i)
        if (!contains(a, b.basis.row(i))) return false;
    return true;
}

bool same_space(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b, "same_space");
    return a.basis == b.basis;
}

} // namespace verocohom
