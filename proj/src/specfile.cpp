#include "verocohom/specfile.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace verocohom {

using ordered_json = nlohmann::ordered_json;

static QPoly parse_poly(const ordered_json& j, unsigned nvars) {
    if (!j.is_array() || j.empty()) throw ParseError("polynomial must be a nonempty term array");
    QPoly p(nvars, Side::primal);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3)
            throw ParseError("term must be [numerator, denominator, exponents]");
        if (!term[0].is_number_integer() || !term[1].is_number_integer())
            throw ParseError("term coefficients must be integers");
        long num = term[0].get<long>();
        long den = term[1].get<long>();
        if (den <= 0) throw ParseError("term denominator must be positive");
        if (!term[2].is_array() || term[2].size() != nvars)
            throw ParseError("term exponent array has wrong length");
        MultiIndex mi;
        for (const auto& e : term[2]) {
            if (!e.is_number_integer() || e.get<long>() < 0)
                throw ParseError("exponents must be non-negative integers");
            mi.push_back(e.get<unsigned>());
        }
        p.add_term(mi, make_rational(num, den));
    }
    return p;
}

SpecFile parse_specfile_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top-level document must be an object");
    if (!j.contains("n") || !j.contains("d")) throw ParseError("missing n or d");
    if (!j["n"].is_number_integer() || !j["d"].is_number_integer())
        throw ParseError("n and d must be integers");
    SpecFile f;
    long n = j["n"].get<long>(), d = j["d"].get<long>();
    if (n < 1) throw InconsistentSpec("need n >= 1");
    if (d < 2) throw InconsistentSpec("need d >= 2");
    f.n = static_cast<unsigned>(n);
    f.d = static_cast<unsigned>(d);

    int sources = 0;
    if (j.contains("T_monomials")) {
        ++sources;
        std::vector<MultiIndex> mis;
        if (!j["T_monomials"].is_array() || j["T_monomials"].empty())
            throw ParseError("T_monomials must be a nonempty array");
        for (const auto& m : j["T_monomials"]) {
            if (!m.is_array() || m.size() != f.n + 1)
                throw ParseError("T_monomials entries must be exponent arrays of length n+1");
            MultiIndex mi;
            for (const auto& e : m) {
                if (!e.is_number_integer() || e.get<long>() < 0)
                    throw ParseError("exponents must be non-negative integers");
                mi.push_back(e.get<unsigned>());
            }
            if (mi_degree(mi) != f.d) throw InconsistentSpec("T_monomials entry has degree != d");
            mis.push_back(mi);
        }
        f.T_monomials = mis;
    }
    if (j.contains("T_polynomials")) {
        ++sources;
        std::vector<QPoly> ps;
        if (!j["T_polynomials"].is_array() || j["T_polynomials"].empty())
            throw ParseError("T_polynomials must be a nonempty array");
        for (const auto& p : j["T_polynomials"]) {
            QPoly q = parse_poly(p, f.n + 1);
            if (q.is_zero() || !q.is_homogeneous() || q.degree() != static_cast<int>(f.d))
                throw InconsistentSpec("T_polynomials entries must be homogeneous of degree d");
            ps.push_back(q);
        }
        f.T_polynomials = ps;
    }
    if (j.contains("map_polynomials")) {
        ++sources;
        std::vector<QPoly> ps;
        if (!j["map_polynomials"].is_array() || j["map_polynomials"].empty())
            throw ParseError("map_polynomials must be a nonempty array");
        for (const auto& p : j["map_polynomials"]) {
            QPoly q = parse_poly(p, f.n + 1);
            if (q.is_zero() || !q.is_homogeneous() || q.degree() != static_cast<int>(f.d))
                throw InconsistentSpec("map_polynomials entries must be homogeneous of degree d");
            ps.push_back(q);
        }
        f.map_polynomials = ps;
    }
    if (sources != 1)
        throw ParseError("exactly one of T_monomials, T_polynomials, map_polynomials is required");
    if (j.contains("declared_dim_T")) {
        if (!j["declared_dim_T"].is_number_integer() || j["declared_dim_T"].get<long>() < 0)
            throw ParseError("declared_dim_T must be a non-negative integer");
        f.declared_dim_T = j["declared_dim_T"].get<unsigned>();
    }
    return f;
}

SpecFile parse_specfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_specfile_text(ss.str());
}

MapSpec build_spec(const SpecFile& file) {
    if (file.map_polynomials) return make_spec_from_forms(file.n, file.d, *file.map_polynomials);
    std::vector<QPoly> gens;
    if (file.T_monomials) {
        for (const MultiIndex& mi : *file.T_monomials)
            gens.push_back(QPoly::monomial(file.n + 1, Side::primal, mi));
    } else {
        gens = *file.T_polynomials;
    }
    Subspace T = span_of(gens, file.n, file.d, Side::primal);
    if (T.dim() != gens.size()) throw InconsistentSpec("center generators are linearly dependent");
    MonomialBasis b(file.n, file.d);
    if (T.dim() >= b.size()) throw InconsistentSpec("center fills the whole space of forms");
    return make_spec_from_center(file.n, file.d, T);
}

static long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw ParseError("coefficient too large for the JSON encoding");
    return z.get_si();
}

static ordered_json poly_json(const QPoly& p) {
    ordered_json terms = ordered_json::array();
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        ordered_json exps = ordered_json::array();
        for (unsigned e : it->first) exps.push_back(e);
        Rational c = it->second;
        terms.push_back(
            ordered_json::array({to_long(c.get_num()), to_long(c.get_den()), exps}));
    }
    return terms;
}

static ordered_json spec_json_obj(const SpecFile& file, const MapSpec& spec) {
    ordered_json j;
    j["n"] = spec.n;
    j["d"] = spec.d;
    j["N"] = spec.N();
    j["s"] = spec.s;
    j["dim_T"] = spec.dim_T();
    if (file.T_monomials) {
        ordered_json arr = ordered_json::array();
        for (const MultiIndex& mi : *file.T_monomials) {
            ordered_json m = ordered_json::array();
            for (unsigned e : mi) m.push_back(e);
            arr.push_back(m);
        }
        j["T_monomials"] = arr;
    } else if (file.T_polynomials) {
        ordered_json arr = ordered_json::array();
        for (const QPoly& p : *file.T_polynomials) arr.push_back(poly_json(p));
        j["T_polynomials"] = arr;
    } else if (file.map_polynomials) {
        ordered_json arr = ordered_json::array();
        for (const QPoly& p : *file.map_polynomials) arr.push_back(poly_json(p));
        j["map_polynomials"] = arr;
    }
    return j;
}

static bool center_is_monomial(const MapSpec& spec) {
    for (std::size_t i = 0; i < spec.T.dim(); ++i) {
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < spec.T.basis.cols(); ++j)
            if (spec.T.basis.at(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

InfoReport make_info(const SpecFile& file, const MapSpec& spec) {
    InfoReport info;
    info.n = spec.n;
    info.d = spec.d;
    info.N = spec.N();
    info.s = spec.s;
    info.dim_T = spec.dim_T();
    switch (spec.base_points) {
        case BasePointCheck::verified: info.base_points = "verified"; break;
        case BasePointCheck::fails: info.base_points = "FAILS"; break;
        case BasePointCheck::not_verified: info.base_points = "not verified"; break;
    }
    if (spec.n == 2 && center_is_monomial(spec)) {
        TriangleT t;
        t.d = spec.d;
        MonomialBasis b(2, spec.d);
        for (std::size_t i = 0; i < spec.T.dim(); ++i) {
            std::size_t j = 0;
            while (spec.T.basis.at(i, j) == 0) ++j;
            const MultiIndex& mi = b.mono(j);
            t.triples.push_back(Triple{mi[0], mi[1], mi[2]});
        }
        info.smoothness_bad = smoothness_violations(t);
        info.smoothness_ok = info.smoothness_bad.empty();
    }
    if (file.declared_dim_T && *file.declared_dim_T != spec.dim_T())
        info.declared_dim_T = file.declared_dim_T;
    return info;
}

static const char* sheaf_name(SheafKind s) {
    return s == SheafKind::normal ? "normal" : "tangent";
}

std::string table_to_text(const MapSpec& spec, const CohomTable& t) {
    std::ostringstream os;
    os << "# " << sheaf_name(t.sheaf) << " sheaf twists, n=" << spec.n << " d=" << spec.d
       << " s=" << spec.s << "\n";
    os << std::setw(6) << "k";
    for (unsigned i = 0; i <= spec.n; ++i) os << std::setw(8) << ("h" + std::to_string(i));
    os << std::setw(8) << "chi" << "\n";
    for (const TableRow& r : t.rows) {
        os << std::setw(6) << r.k;
        for (unsigned long h : r.h) os << std::setw(8) << h;
        os << std::setw(8) << r.chi << "\n";
    }
    return os.str();
}

std::string table_to_csv(const MapSpec& spec, const CohomTable& t) {
    std::ostringstream os;
    os << "k";
    for (unsigned i = 0; i <= spec.n; ++i) os << ",h" << i;
    os << ",chi\n";
    for (const TableRow& r : t.rows) {
        os << r.k;
        for (unsigned long h : r.h) os << "," << h;
        os << "," << r.chi << "\n";
    }
    return os.str();
}

std::string table_to_json(const SpecFile& file, const MapSpec& spec, const CohomTable& t) {
    ordered_json j;
    j["spec"] = spec_json_obj(file, spec);
    j["sheaf"] = sheaf_name(t.sheaf);
    ordered_json rows = ordered_json::array();
    for (const TableRow& r : t.rows) {
        ordered_json row;
        row["k"] = r.k;
        row["h"] = r.h;
        row["chi"] = r.chi;
        row["routes"] = r.routes;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string branch_to_text(const MapSpec& spec, const BranchReport& rep) {
    std::ostringstream os;
    os << "branch report for a degree-" << spec.d << " map P^2 -> P^3\n";
    os << "  minors:";
    for (const QPoly& m : rep.minors) os << " [" << to_string(m) << "]";
    os << "\n";
    os << "  gcd of minors: " << to_string(rep.gcd_poly) << "\n";
    os << "  h_N (gcd route):  " << rep.h_N_gcd << "\n";
    os << "  h_N (tail route): " << rep.h_N_tail << "\n";
    os << "  agreement: " << (rep.h_N_gcd == rep.h_N_tail ? "yes" : "NO") << "\n";
    os << "  q = 4d-3-h_N: " << rep.q << "\n";
    os << "  deg Z' upper bound: " << rep.deg_zprime_upper << "\n";
    return os.str();
}

std::string branch_to_json(const SpecFile& file, const MapSpec& spec, const BranchReport& rep) {
    ordered_json j;
    j["spec"] = spec_json_obj(file, spec);
    j["h_N"] = rep.h_N_gcd;
    j["h_N_gcd"] = rep.h_N_gcd;
    j["h_N_tail"] = rep.h_N_tail;
    j["q"] = rep.q;
    j["deg_zprime_upper"] = rep.deg_zprime_upper;
    ordered_json minors = ordered_json::array();
    for (const QPoly& m : rep.minors) minors.push_back(poly_json(m));
    j["minors"] = minors;
    j["gcd"] = poly_json(rep.gcd_poly);
    return j.dump(2) + "\n";
}

std::string info_to_text(const InfoReport& info) {
    std::ostringstream os;
    os << "n: " << info.n << "\n";
    os << "d: " << info.d << "\n";
    os << "N: " << info.N << "\n";
    os << "s: " << info.s << "\n";
    os << "dim T: " << info.dim_T << "\n";
    if (info.declared_dim_T)
        os << "note: declared_dim_T = " << *info.declared_dim_T
           << " disagrees with the derived dim T = " << info.dim_T << "\n";
    os << "base points (monomial check): " << info.base_points << "\n";
    if (info.smoothness_ok.has_value()) {
        if (*info.smoothness_ok) {
            os << "smoothness necessary condition: pass\n";
        } else {
            os << "smoothness necessary condition: FAIL at";
            for (const Triple& t : info.smoothness_bad)
                os << " (" << t.a << "," << t.b << "," << t.c << ")";
            os << "\n";
        }
    } else {
        os << "smoothness necessary condition: n/a\n";
    }
    return os.str();
}

std::string info_to_json(const InfoReport& info) {
    ordered_json j;
    j["n"] = info.n;
    j["d"] = info.d;
    j["N"] = info.N;
    j["s"] = info.s;
    j["dim_T"] = info.dim_T;
    if (info.declared_dim_T) j["declared_dim_T_mismatch"] = *info.declared_dim_T;
    j["base_points"] = info.base_points;
    if (info.smoothness_ok.has_value()) {
        j["smoothness_necessary"] = *info.smoothness_ok ? "pass" : "fail";
        ordered_json bad = ordered_json::array();
        for (const Triple& t : info.smoothness_bad)
            bad.push_back(ordered_json::array({t.a, t.b, t.c}));
        j["smoothness_violations"] = bad;
    } else {
        j["smoothness_necessary"] = "n/a";
    }
    return j.dump(2) + "\n";
}

} // namespace verocohom
