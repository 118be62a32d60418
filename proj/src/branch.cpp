#include "verocohom/branch.hpp"

namespace verocohom {

PolyMatrix jacobian(const std::vector<QPoly>& forms) {
    if (forms.size() != 4) throw DimensionMismatch("jacobian: expected four forms");
    int d = -1;
    for (const QPoly& f : forms) {
        if (f.nvars() != 3 || f.side() != Side::primal)
            throw DimensionMismatch("jacobian: forms must be primal in three variables");
        if (!f.is_homogeneous()) throw DimensionMismatch("jacobian: forms must be homogeneous");
        if (!f.is_zero()) {
            if (d >= 0 && f.degree() != d)
                throw DimensionMismatch("jacobian: forms have different degrees");
            d = f.degree();
        }
    }
    PolyMatrix F;
    F.rows = 4;
    F.cols = 3;
    for (const QPoly& f : forms)
        for (unsigned j = 0; j < 3; ++j) F.entries.push_back(derive(f, j));
    return F;
}

static QPoly det3(const PolyMatrix& F, const std::vector<std::size_t>& r) {
    QPoly det(3, Side::primal);
    const int sign[6] = {1, -1, -1, 1, 1, -1};
    const unsigned perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int p = 0; p < 6; ++p) {
        QPoly term = multiply(multiply(F.at(r[0], perms[p][0]), F.at(r[1], perms[p][1])),
                              F.at(r[2], perms[p][2]));
        if (sign[p] < 0) term *= Rational(-1);
        det += term;
    }
    return det;
}

std::vector<QPoly> maximal_minors(const PolyMatrix& F) {
    if (F.rows != 4 || F.cols != 3) throw DimensionMismatch("maximal_minors: expected a 4x3 matrix");
    std::vector<QPoly> minors;
    for (std::size_t drop = 0; drop < 4; ++drop) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != drop) rows.push_back(i);
        QPoly m = det3(F, rows);
        if (drop % 2 == 1) m *= Rational(-1);
        minors.push_back(m);
    }
    return minors;
}

unsigned divisorial_degree(const std::vector<QPoly>& minors) {
    std::vector<QPoly> nonzero;
    for (const QPoly& m : minors)
        if (!m.is_zero()) nonzero.push_back(m);
    if (nonzero.empty())
        throw DegenerateMap("divisorial_degree: the differential drops rank everywhere");
    QPoly g = poly_gcd(nonzero, 3, Side::primal);
    return static_cast<unsigned>(g.degree());
}

static long h2_normal(const MapSpec& spec, long k) {
    long value = 4 * static_cast<long>(h_line(2, k - spec.d - 3, 0)) -
                 3 * static_cast<long>(h_line(2, k - 4, 0)) +
                 static_cast<long>(h1_normal(spec, k));
    if (value < 0) throw InternalInconsistency("h2_normal: negative dimension");
    return value;
}

unsigned h_N_from_tail(const MapSpec& spec) {
    if (spec.n != 2 || spec.s != 3)
        throw DimensionMismatch("h_N_from_tail: needs a P^2 -> P^3 map");
    const long d = spec.d;
    for (long k = d + 1; k <= 4 * d; ++k) {
        long h2 = h2_normal(spec, k);
        if (h2 > 0) {
            if (h2 != 1)
                throw InternalInconsistency("h_N_from_tail: first positive h^2 is not 1");
            return static_cast<unsigned>(4 * d - k);
        }
    }
    throw InternalInconsistency("h_N_from_tail: no positive h^2 up to 4d");
}

unsigned long deg_zprime_bound(const MapSpec& spec, unsigned h_N) {
    if (spec.n != 2 || spec.s != 3)
        throw DimensionMismatch("deg_zprime_bound: needs a P^2 -> P^3 map");
    long q = 4L * spec.d - 3 - h_N;
    return 1 + h1_normal(spec, q);
}

BranchReport branch_report(const MapSpec& spec) {
    if (spec.n != 2 || spec.s != 3)
        throw DimensionMismatch("branch_report: needs a P^2 -> P^3 map");
    BranchReport rep;
    rep.minors = maximal_minors(jacobian(spec.forms));
    std::vector<QPoly> nonzero;
    for (const QPoly& m : rep.minors)
        if (!m.is_zero()) nonzero.push_back(m);
    if (nonzero.empty())
        throw DegenerateMap("branch_report: the differential drops rank everywhere");
    rep.gcd_poly = poly_gcd(nonzero, 3, Side::primal);
    rep.h_N_gcd = static_cast<unsigned>(rep.gcd_poly.degree());
    rep.h_N_tail = h_N_from_tail(spec);
    if (rep.h_N_gcd != rep.h_N_tail)
        throw InternalInconsistency("branch_report: the two h_N computations disagree");
    if (rep.h_N_gcd > 3 * (spec.d - 1))
        throw InternalInconsistency("branch_report: h_N exceeds 3(d-1)");
    rep.q = 4L * spec.d - 3 - rep.h_N_gcd;
    rep.deg_zprime_upper = deg_zprime_bound(spec, rep.h_N_gcd);
    return rep;
}

} // namespace verocohom
