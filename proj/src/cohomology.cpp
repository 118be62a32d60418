#include "verocohom/cohomology.hpp"

namespace verocohom {

unsigned long h_line(unsigned n, long m, unsigned i) {
    if (i > n) return 0;
    if (i == 0) return m >= 0 ? binomial(static_cast<unsigned long>(m + n), n).get_ui() : 0;
    if (i == n) {
        long top = -m - 1;
        return top >= static_cast<long>(n) ? binomial(static_cast<unsigned long>(top), n).get_ui()
                                           : 0;
    }
    return 0;
}

long chi_line(unsigned n, long m) { return chi_binomial(m, n).get_si(); }

unsigned long MapSpec::N() const {
    return binomial(d + n, n).get_ui() - 1;
}

static QPoly primal_to_dual(const QPoly& p) {
    QPoly g(p.nvars(), Side::dual);
    for (const auto& [mi, c] : p.terms()) g.add_term(mi, c);
    return g;
}

static QPoly dual_to_primal(const QPoly& g) {
    QPoly p(g.nvars(), Side::primal);
    for (const auto& [mi, c] : g.terms()) p.add_term(mi, c);
    return p;
}

// For a monomial center, the map is base point free iff every coordinate
// support carries some complement monomial; anything else stays unverified.
static BasePointCheck check_base_points(unsigned n, unsigned d, const Subspace& T) {
    MonomialBasis b(n, d);
    std::vector<bool> in_T(b.size(), false);
    for (std::size_t i = 0; i < T.dim(); ++i) {
        std::size_t nonzero = 0, pos = 0;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (T.basis.at(i, j) != 0) {
                ++nonzero;
                pos = j;
            }
        if (nonzero != 1) return BasePointCheck::not_verified;
        in_T[pos] = true;
    }
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        bool covered = false;
        for (std::size_t j = 0; j < b.size() && !covered; ++j) {
            if (in_T[j]) continue;
            const MultiIndex& mi = b.mono(j);
            bool inside = true;
            for (unsigned v = 0; v <= n; ++v)
                if (mi[v] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) covered = true;
        }
        if (!covered) return BasePointCheck::fails;
    }
    return BasePointCheck::verified;
}

MapSpec make_spec_from_center(unsigned n, unsigned d, const Subspace& T) {
    if (T.ambient_label != poly_space_label(n, d, Side::primal))
        throw DimensionMismatch("make_spec_from_center: center must live in S^dU");
    if (T.dim() >= T.ambient_dim)
        throw InconsistentSpec("make_spec_from_center: center fills the whole space of forms");
    MapSpec spec;
    spec.n = n;
    spec.d = d;
    spec.T = T;
    spec.Tperp = annihilator(T, n, d);
    MonomialBasis b(n, d);
    for (std::size_t i = 0; i < spec.Tperp.dim(); ++i) {
        QPoly g = from_coords(spec.Tperp.basis.row(i), b, Side::dual);
        spec.dual_forms.push_back(g);
        spec.forms.push_back(dual_to_primal(g));
    }
    spec.s = static_cast<unsigned>(spec.Tperp.dim()) - 1;
    spec.base_points = check_base_points(n, d, T);
    return spec;
}

MapSpec make_spec_from_forms(unsigned n, unsigned d, const std::vector<QPoly>& forms_primal) {
    if (forms_primal.empty()) throw InconsistentSpec("no defining forms given");
    std::vector<QPoly> duals;
    for (const QPoly& f : forms_primal) {
        if (f.nvars() != n + 1 || !f.is_homogeneous() || f.degree() != static_cast<int>(d))
            throw InconsistentSpec("defining forms must be homogeneous of degree d");
        duals.push_back(primal_to_dual(f));
    }
    Subspace G = span_of(duals, n, d, Side::dual);
    if (G.dim() != forms_primal.size())
        throw InconsistentSpec("defining forms are linearly dependent");
    MapSpec spec;
    spec.n = n;
    spec.d = d;
    spec.Tperp = G;
    spec.T = annihilator(G, n, d);
    spec.forms = forms_primal;
    spec.dual_forms = duals;
    spec.s = static_cast<unsigned>(forms_primal.size()) - 1;
    spec.base_points = check_base_points(n, d, spec.T);
    return spec;
}

QMatrix normal_hn_matrix(const MapSpec& spec, long k) {
    const unsigned n = spec.n;
    const long src_deg = k - n - 2;
    const long dst_deg = k - spec.d - n - 1;
    const std::size_t ncols =
        src_deg < 0 ? 0 : (n + 1) * MonomialBasis(n, static_cast<unsigned>(src_deg)).size();
    const std::size_t nrows =
        dst_deg < 0 ? 0 : (spec.s + 1) * MonomialBasis(n, static_cast<unsigned>(dst_deg)).size();
    QMatrix m(nrows, ncols);
    if (nrows == 0 || ncols == 0) return m;
    MonomialBasis src(n, static_cast<unsigned>(src_deg));
    MonomialBasis dst(n, static_cast<unsigned>(dst_deg));
    for (std::size_t i = 0; i <= spec.s; ++i)
        for (unsigned j = 0; j <= n; ++j) {
            QPoly dg = derive(spec.dual_forms[i], j);
            if (dg.is_zero()) continue;
            for (std::size_t c = 0; c < src.size(); ++c) {
                QPoly img = contract(dg, QPoly::monomial(n + 1, Side::primal, src.mono(c)));
                for (const auto& [mi, coeff] : img.terms())
                    m.at(i * dst.size() + dst.index_of(mi), j * src.size() + c) = coeff;
            }
        }
    return m;
}

QMatrix tangent_hn_matrix(const MapSpec& spec, long k) {
    const unsigned n = spec.n;
    const long src_deg = k - n - 1;
    const long dst_deg = k - spec.d - n - 1;
    const std::size_t ncols =
        src_deg < 0 ? 0 : MonomialBasis(n, static_cast<unsigned>(src_deg)).size();
    const std::size_t nrows =
        dst_deg < 0 ? 0 : (spec.s + 1) * MonomialBasis(n, static_cast<unsigned>(dst_deg)).size();
    QMatrix m(nrows, ncols);
    if (nrows == 0 || ncols == 0) return m;
    MonomialBasis src(n, static_cast<unsigned>(src_deg));
    MonomialBasis dst(n, static_cast<unsigned>(dst_deg));
    for (std::size_t i = 0; i <= spec.s; ++i)
        for (std::size_t c = 0; c < src.size(); ++c) {
            QPoly img =
                contract(spec.dual_forms[i], QPoly::monomial(n + 1, Side::primal, src.mono(c)));
            for (const auto& [mi, coeff] : img.terms())
                m.at(i * dst.size() + dst.index_of(mi), c) = coeff;
        }
    return m;
}

QMatrix normal_section_matrix(const MapSpec& spec, long k) {
    const unsigned n = spec.n;
    const long src_deg = 1 - k;
    const long dst_deg = spec.d - k;
    const std::size_t ncols =
        src_deg < 0 ? 0 : (n + 1) * MonomialBasis(n, static_cast<unsigned>(src_deg)).size();
    const std::size_t nrows =
        dst_deg < 0 ? 0 : (spec.s + 1) * MonomialBasis(n, static_cast<unsigned>(dst_deg)).size();
    QMatrix m(nrows, ncols);
    if (nrows == 0 || ncols == 0) return m;
    MonomialBasis src(n, static_cast<unsigned>(src_deg));
    MonomialBasis dst(n, static_cast<unsigned>(dst_deg));
    for (std::size_t i = 0; i <= spec.s; ++i)
        for (unsigned j = 0; j <= n; ++j) {
            QPoly dg = derive(spec.dual_forms[i], j);
            if (dg.is_zero()) continue;
            for (std::size_t c = 0; c < src.size(); ++c) {
                QPoly prod = multiply(dg, QPoly::monomial(n + 1, Side::dual, src.mono(c)));
                for (const auto& [mi, coeff] : prod.terms())
                    m.at(i * dst.size() + dst.index_of(mi), j * src.size() + c) = coeff;
            }
        }
    return m;
}

QMatrix tangent_section_matrix(const MapSpec& spec, long k) {
    const unsigned n = spec.n;
    const long src_deg = -k;
    const long dst_deg = spec.d - k;
    const std::size_t ncols =
        src_deg < 0 ? 0 : MonomialBasis(n, static_cast<unsigned>(src_deg)).size();
    const std::size_t nrows =
        dst_deg < 0 ? 0 : (spec.s + 1) * MonomialBasis(n, static_cast<unsigned>(dst_deg)).size();
    QMatrix m(nrows, ncols);
    if (nrows == 0 || ncols == 0) return m;
    MonomialBasis src(n, static_cast<unsigned>(src_deg));
    MonomialBasis dst(n, static_cast<unsigned>(dst_deg));
    for (std::size_t i = 0; i <= spec.s; ++i)
        for (std::size_t c = 0; c < src.size(); ++c) {
            QPoly prod =
                multiply(spec.dual_forms[i], QPoly::monomial(n + 1, Side::dual, src.mono(c)));
            for (const auto& [mi, coeff] : prod.terms())
                m.at(i * dst.size() + dst.index_of(mi), c) = coeff;
        }
    return m;
}

QMatrix tangent_phi_matrix(const MapSpec& spec, long k) {
    const unsigned n = spec.n;
    const long chi = k - spec.d - n - 1;
    if (chi < 0) throw RouteNotApplicable("tangent_phi_matrix: needs chi >= 0");
    MonomialBasis chib(n, static_cast<unsigned>(chi));
    MonomialBasis dst(n, static_cast<unsigned>(k - n - 1));
    QMatrix m(dst.size(), spec.Tperp.dim() * chib.size());
    MonomialBasis db(n, spec.d);
    for (std::size_t i = 0; i < spec.Tperp.dim(); ++i) {
        QPoly g = from_coords(spec.Tperp.basis.row(i), db, Side::dual);
        for (std::size_t c = 0; c < chib.size(); ++c) {
            QPoly prod = multiply(g, QPoly::monomial(n + 1, Side::dual, chib.mono(c)));
            for (const auto& [mi, coeff] : prod.terms())
                m.at(dst.index_of(mi), i * chib.size() + c) = coeff;
        }
    }
    return m;
}

unsigned long h1_normal(const MapSpec& spec, long k) {
    QMatrix m = normal_hn_matrix(spec, k);
    if (m.cols() == 0) return 0;
    return m.cols() - rank(m);
}

unsigned long h1_normal_kernel_route(const MapSpec& spec, long k) {
    const long chi = k - spec.d - spec.n - 1;
    if (chi < 1) throw RouteNotApplicable("h1_normal_kernel_route: needs chi >= 1");
    if (spec.T.dim() == 0) return 0;
    Subspace left = tensor_with_left(spec.T, spec.n, static_cast<unsigned>(chi), spec.d);
    Subspace ker = skew2_kernel(spec.n, static_cast<unsigned>(chi), spec.d);
    return intersect(left, ker).dim();
}

unsigned long h1_tangent(const MapSpec& spec, long k) {
    const long chi = k - spec.d - spec.n - 1;
    if (chi >= 0)
        return partials_preimage(spec.T, spec.n, spec.d, static_cast<unsigned>(chi)).dim();
    QMatrix m = tangent_hn_matrix(spec, k);
    if (m.cols() == 0) return 0;
    return m.cols() - rank(m);
}

unsigned long h1_tangent_remark_route(const MapSpec& spec, long k) {
    const long chi = k - spec.d - spec.n - 1;
    if (chi < 1) throw RouteNotApplicable("h1_tangent_remark_route: needs chi >= 1");
    if (spec.T.dim() == 0) return 0;
    Subspace left = tensor_with_left(spec.T, spec.n, static_cast<unsigned>(chi), spec.d);
    Subspace ker = skew_kernel(spec.n, static_cast<unsigned>(chi), spec.d);
    return intersect(left, ker).dim();
}

unsigned long tangent_phi_corank(const MapSpec& spec, long k) {
    QMatrix m = tangent_phi_matrix(spec, k);
    return m.rows() - rank(m);
}

long predicted_chi(const MapSpec& spec, SheafKind sheaf, long k) {
    long middle = static_cast<long>(spec.s + 1) * chi_line(spec.n, spec.d - k);
    if (sheaf == SheafKind::normal)
        return middle - static_cast<long>(spec.n + 1) * chi_line(spec.n, 1 - k);
    return middle - chi_line(spec.n, -k);
}

CohomTable table(const MapSpec& spec, SheafKind sheaf, long kmin, long kmax) {
    if (kmin > kmax) throw DimensionMismatch("table: kmin exceeds kmax");
    const unsigned n = spec.n;
    CohomTable t;
    t.sheaf = sheaf;
    t.kmin = kmin;
    t.kmax = kmax;
    for (long k = kmin; k <= kmax; ++k) {
        TableRow row;
        row.k = k;
        row.h.assign(n + 1, 0);
        row.routes.assign(n + 1, "vanishing");

        const bool normal = sheaf == SheafKind::normal;
        const long chi_excess = k - spec.d - n - 1;
        const long B0 = static_cast<long>((spec.s + 1) * h_line(n, spec.d - k, 0));
        const long Bn = static_cast<long>((spec.s + 1) * h_line(n, spec.d - k, n));
        const long An =
            static_cast<long>(normal ? (n + 1) * h_line(n, 1 - k, n) : h_line(n, -k, n));

        long sect_rank = 0;
        if (B0 > 0) {
            QMatrix sm = normal ? normal_section_matrix(spec, k) : tangent_section_matrix(spec, k);
            sect_rank = sm.cols() == 0 ? 0 : static_cast<long>(rank(sm));
        }
        const long h0 = B0 - sect_rank;

        // dim ker of the top-cohomology matrix; its column count equals An
        long ker_mu;
        if (normal) {
            ker_mu = static_cast<long>(h1_normal(spec, k));
        } else {
            QMatrix m = tangent_hn_matrix(spec, k);
            ker_mu = m.cols() == 0 ? 0 : static_cast<long>(m.cols() - rank(m));
        }

        long hn1 = ker_mu;
        std::string hn1_route = "euler-seq";
        if (normal && chi_excess >= 0) hn1_route = "theorem2-mu";
        if (!normal && chi_excess >= 0) {
            hn1 = static_cast<long>(h1_tangent(spec, k));
            hn1_route = "theorem1";
        }
        const long hn = Bn - An + hn1;
        if (hn < 0 || h0 < 0) throw InternalInconsistency("table: negative dimension");

        if (n == 1) {
            row.h[0] = static_cast<unsigned long>(h0 + ker_mu);
            row.h[1] = static_cast<unsigned long>(hn);
            row.routes[0] = "euler-seq";
            row.routes[1] = "euler-seq";
        } else {
            row.h[0] = static_cast<unsigned long>(h0);
            row.routes[0] = "euler-seq";
            row.h[n - 1] = static_cast<unsigned long>(hn1);
            row.routes[n - 1] = hn1_route;
            row.h[n] = static_cast<unsigned long>(hn);
            row.routes[n] = "euler-seq";
        }

        row.chi = 0;
        for (unsigned i = 0; i <= n; ++i)
            row.chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(row.h[i]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace verocohom
