#include "verocohom/polygcd.hpp"

namespace verocohom {

static bool mi_divides(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

QPoly divide_exact(const QPoly& p, const QPoly& q) {
    if (p.nvars() != q.nvars() || p.side() != q.side())
        throw DimensionMismatch("divide_exact: incompatible polynomials");
    if (q.is_zero()) throw DimensionMismatch("divide_exact: division by zero");
    QPoly rem = p;
    QPoly quot(p.nvars(), p.side());
    const auto& qlead = *q.terms().rbegin(); // deg-lex descending leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        if (!mi_divides(qlead.first, rlead.first))
            throw DimensionMismatch("divide_exact: not divisible");
        MultiIndex mi(rlead.first);
        for (std::size_t i = 0; i < mi.size(); ++i) mi[i] -= qlead.first[i];
        Rational c = rlead.second / qlead.second;
        QPoly t = QPoly::monomial(p.nvars(), p.side(), mi, c);
        quot += t;
        rem -= multiply(t, q);
    }
    return quot;
}

bool divides(const QPoly& q, const QPoly& p) {
    try {
        divide_exact(p, q);
        return true;
    } catch (const DimensionMismatch&) {
        return false;
    }
}

QPoly normalize_primitive(const QPoly& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& [mi, c] : p.terms()) {
        Integer den = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    QPoly scaled = Rational(den_lcm) * p;
    for (const auto& [mi, c] : scaled.terms()) {
        Integer num = c.get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    QPoly out = (Rational(1) / Rational(num_gcd)) * scaled;
    if (out.terms().rbegin()->second < 0) out *= Rational(-1);
    return out;
}

static bool uses_var(const QPoly& p, std::size_t v) {
    for (const auto& [mi, c] : p.terms())
        if (mi[v] > 0) return true;
    return false;
}

static unsigned deg_in(const QPoly& p, std::size_t v) {
    unsigned d = 0;
    for (const auto& [mi, c] : p.terms()) d = std::max(d, mi[v]);
    return d;
}

// coefficient of v^e, with the v-exponent stripped
static QPoly coeff_of(const QPoly& p, std::size_t v, unsigned e) {
    QPoly out(p.nvars(), p.side());
    for (const auto& [mi, c] : p.terms()) {
        if (mi[v] != e) continue;
        MultiIndex m(mi);
        m[v] = 0;
        out.add_term(m, c);
    }
    return out;
}

static QPoly shift_var(const QPoly& p, std::size_t v, unsigned e) {
    QPoly out(p.nvars(), p.side());
    for (const auto& [mi, c] : p.terms()) {
        MultiIndex m(mi);
        m[v] += e;
        out.add_term(m, c);
    }
    return out;
}

// content with respect to v: gcd of the v-coefficients
static QPoly content_in(const QPoly& p, std::size_t v) {
    QPoly cont(p.nvars(), p.side());
    for (unsigned e = 0; e <= deg_in(p, v); ++e) {
        QPoly c = coeff_of(p, v, e);
        if (c.is_zero()) continue;
        cont = cont.is_zero() ? c : poly_gcd(cont, c);
    }
    return cont;
}

// one pseudo-division step sequence: reduce a mod b in the variable v
static QPoly pseudo_rem(QPoly a, const QPoly& b, std::size_t v) {
    const unsigned db = deg_in(b, v);
    QPoly lb = coeff_of(b, v, db);
    while (!a.is_zero()) {
        unsigned da = deg_in(a, v);
        if (da < db) break;
        QPoly la = coeff_of(a, v, da);
        a = multiply(lb, a) - multiply(shift_var(la, v, da - db), b);
    }
    return a;
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    if (a.nvars() != b.nvars() || a.side() != b.side())
        throw DimensionMismatch("poly_gcd: incompatible polynomials");
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);

    std::size_t v = a.nvars();
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (uses_var(a, i) || uses_var(b, i)) {
            v = i;
            break;
        }
    if (v == a.nvars()) // both constants
        return QPoly::monomial(a.nvars(), a.side(), MultiIndex(a.nvars(), 0), 1);

    if (deg_in(a, v) == 0) return poly_gcd(content_in(b, v), a);
    if (deg_in(b, v) == 0) return poly_gcd(content_in(a, v), b);

    QPoly ca = content_in(a, v), cb = content_in(b, v);
    QPoly pa = divide_exact(a, ca), pb = divide_exact(b, cb);
    while (!pb.is_zero()) {
        QPoly r = pseudo_rem(pa, pb, v);
        pa = pb;
        pb = r.is_zero() ? r : divide_exact(r, content_in(r, v));
    }
    return normalize_primitive(multiply(poly_gcd(ca, cb), pa));
}

QPoly poly_gcd(const std::vector<QPoly>& polys, std::size_t nvars, Side side) {
    QPoly g(nvars, side);
    for (const QPoly& p : polys) g = g.is_zero() ? normalize_primitive(p) : poly_gcd(g, p);
    return g;
}

} // namespace verocohom
