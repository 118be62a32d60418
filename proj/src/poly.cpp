#include "verocohom/poly.hpp"

#include <sstream>

namespace verocohom {

unsigned mi_degree(const MultiIndex& mi) {
    unsigned d = 0;
    for (unsigned e : mi) d += e;
    return d;
}

Integer mi_factorial(const MultiIndex& mi) {
    Integer r = 1;
    for (unsigned e : mi) r *= factorial(e);
    return r;
}

Integer multinomial(unsigned k, const MultiIndex& mi) {
    return factorial(k) / mi_factorial(mi);
}

QPoly QPoly::monomial(std::size_t nvars, Side side, MultiIndex mi, Rational coeff) {
    QPoly p(nvars, side);
    p.add_term(mi, coeff);
    return p;
}

void QPoly::add_term(const MultiIndex& mi, const Rational& c) {
    if (c == 0) return;
    if (mi.size() != nvars_) throw DimensionMismatch("add_term: wrong multi-index length");
    auto it = terms_.find(mi);
    if (it == terms_.end()) {
        terms_.emplace(mi, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool QPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = mi_degree(terms_.begin()->first);
    for (const auto& [mi, c] : terms_)
        if (mi_degree(mi) != d) return false;
    return true;
}

int QPoly::degree() const {
    int d = -1;
    for (const auto& [mi, c] : terms_) d = std::max(d, static_cast<int>(mi_degree(mi)));
    return d;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.nvars_ != nvars_ || o.side_ != side_) throw DimensionMismatch("+=: incompatible polynomials");
    for (const auto& [mi, c] : o.terms_) add_term(mi, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.nvars_ != nvars_ || o.side_ != side_) throw DimensionMismatch("-=: incompatible polynomials");
    for (const auto& [mi, c] : o.terms_) add_term(mi, -c);
    return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mi, v] : terms_) v *= c;
    return *this;
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
QPoly operator*(const Rational& c, QPoly p) { return p *= c; }

QPoly multiply(const QPoly& p, const QPoly& q) {
    if (p.nvars() != q.nvars() || p.side() != q.side())
        throw DimensionMismatch("multiply: incompatible polynomials");
    QPoly out(p.nvars(), p.side());
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) {
            MultiIndex m(mp);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mq[i];
            out.add_term(m, cp * cq);
        }
    return out;
}

QPoly derive(const QPoly& p, std::size_t var) {
    if (var >= p.nvars()) throw DimensionMismatch("derive: variable index out of range");
    QPoly out(p.nvars(), p.side());
    for (const auto& [mi, c] : p.terms()) {
        if (mi[var] == 0) continue;
        MultiIndex m(mi);
        --m[var];
        out.add_term(m, c * Rational(mi[var]));
    }
    return out;
}

QPoly derive_multi(const QPoly& p, const MultiIndex& mi) {
    QPoly out = p;
    for (std::size_t v = 0; v < mi.size(); ++v)
        for (unsigned rep = 0; rep < mi[v]; ++rep) out = derive(out, v);
    return out;
}

QPoly contract(const QPoly& g, const QPoly& p) {
    if (g.side() != Side::dual || p.side() != Side::primal)
        throw DimensionMismatch("contract: expects dual operator and primal operand");
    if (g.nvars() != p.nvars()) throw DimensionMismatch("contract: variable counts differ");
    if (!g.is_homogeneous() || !p.is_homogeneous())
        throw DimensionMismatch("contract: inputs must be homogeneous");
    if (!g.is_zero() && !p.is_zero() && g.degree() > p.degree())
        throw DimensionMismatch("contract: operator degree exceeds operand degree");
    QPoly out(p.nvars(), Side::primal);
    for (const auto& [J, cg] : g.terms())
        for (const auto& [K, cp] : p.terms()) {
            bool ok = true;
            Integer scale = 1;
            MultiIndex R(K);
            for (std::size_t r = 0; r < K.size(); ++r) {
                if (K[r] < J[r]) {
                    ok = false;
                    break;
                }
                for (unsigned s = 0; s < J[r]; ++s) scale *= Integer(K[r] - s);
                R[r] = K[r] - J[r];
            }
            if (ok) out.add_term(R, cg * cp * Rational(scale));
        }
    return out;
}

Rational apolar_pair(const QPoly& p, const QPoly& g) {
    QPoly c = contract(g, p);
    if (c.is_zero()) return 0;
    if (c.degree() != 0) throw DimensionMismatch("apolar_pair: degrees differ");
    return c.terms().begin()->second;
}

static void gen_monomials(unsigned nvars, unsigned d, MultiIndex& cur, std::size_t pos,
                          std::vector<MultiIndex>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int e = static_cast<int>(d); e >= 0; --e) {
        cur[pos] = static_cast<unsigned>(e);
        gen_monomials(nvars, d - static_cast<unsigned>(e), cur, pos + 1, out);
    }
}

MonomialBasis::MonomialBasis(unsigned n, unsigned d) : n_(n), d_(d) {
    MultiIndex cur(n + 1, 0);
    gen_monomials(n + 1, d, cur, 0, order_);
    for (std::size_t i = 0; i < order_.size(); ++i) index_.emplace(order_[i], i);
}

std::size_t MonomialBasis::index_of(const MultiIndex& mi) const {
    auto it = index_.find(mi);
    if (it == index_.end()) throw DimensionMismatch("index_of: multi-index not in basis");
    return it->second;
}

std::vector<Rational> coords(const QPoly& p, const MonomialBasis& b) {
    if (p.nvars() != b.n() + 1) throw DimensionMismatch("coords: variable counts differ");
    if (!p.is_homogeneous() || (!p.is_zero() && p.degree() != static_cast<int>(b.d())))
        throw DimensionMismatch("coords: polynomial is not homogeneous of the basis degree");
    std::vector<Rational> v(b.size());
    for (const auto& [mi, c] : p.terms()) v[b.index_of(mi)] = c;
    return v;
}

QPoly from_coords(const std::vector<Rational>& v, const MonomialBasis& b, Side side) {
    if (v.size() != b.size()) throw DimensionMismatch("from_coords: wrong length");
    QPoly p(b.n() + 1, side);
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(b.mono(i), v[i]);
    return p;
}

std::string poly_space_label(unsigned n, unsigned d, Side side) {
    std::string s = "S" + std::to_string(d);
    if (side == Side::dual) s += "*";
    return s + "|n=" + std::to_string(n);
}

Subspace span_of(const std::vector<QPoly>& polys, unsigned n, unsigned d, Side side) {
    MonomialBasis b(n, d);
    QMatrix m(polys.size(), b.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].side() != side) throw DimensionMismatch("span_of: wrong side");
        std::vector<Rational> v = coords(polys[i], b);
        for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = v[j];
    }
    return make_subspace(poly_space_label(n, d, side), b.size(), std::move(m));
}

static void append_var(std::ostream& os, std::size_t nvars, Side side, std::size_t v, unsigned e) {
    static const char* surface_names[3] = {"x", "y", "u"};
    std::string name = (nvars == 3) ? surface_names[v] : "x" + std::to_string(v);
    if (side == Side::dual) name = "D" + name;
    os << name;
    if (e > 1) os << "^" << e;
}

std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading (deg-lex descending) terms first
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const Rational& c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        bool constant = mi_degree(it->first) == 0;
        if (a != 1 || constant) {
            os << a.get_str();
            if (!constant) os << "*";
        }
        bool firstvar = true;
        for (std::size_t v = 0; v < it->first.size(); ++v) {
            if (it->first[v] == 0) continue;
            if (!firstvar) os << "*";
            firstvar = false;
            append_var(os, it->first.size(), p.side(), v, it->first[v]);
        }
    }
    return os.str();
}

} // namespace verocohom
