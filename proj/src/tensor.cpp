#include "verocohom/tensor.hpp"

namespace verocohom {

void TensorElem::add_term(const MultiIndex& left, const MultiIndex& right, const Rational& c) {
    if (c == 0) return;
    if (left.size() != n_ + 1 || right.size() != n_ + 1)
        throw DimensionMismatch("TensorElem::add_term: wrong multi-index length");
    if (mi_degree(left) != a_ || mi_degree(right) != b_)
        throw DimensionMismatch("TensorElem::add_term: wrong degrees");
    auto key = std::make_pair(left, right);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    if (o.n_ != n_ || o.a_ != a_ || o.b_ != b_)
        throw DimensionMismatch("TensorElem +=: space mismatch");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    if (o.n_ != n_ || o.a_ != a_ || o.b_ != b_)
        throw DimensionMismatch("TensorElem -=: space mismatch");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

TensorElem& TensorElem::operator*=(const Rational& c) {
    if (c == 0) {
        *this = TensorElem(n_, a_, b_);
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

TensorElem operator*(const Rational& c, TensorElem e) { return e *= c; }
TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }

TensorElem tensor_product(const QPoly& p, const QPoly& q) {
    if (p.nvars() != q.nvars()) throw DimensionMismatch("tensor_product: variable counts differ");
    if (!p.is_homogeneous() || !q.is_homogeneous())
        throw DimensionMismatch("tensor_product: factors must be homogeneous");
    unsigned n = static_cast<unsigned>(p.nvars()) - 1;
    unsigned a = p.is_zero() ? 0 : static_cast<unsigned>(p.degree());
    unsigned b = q.is_zero() ? 0 : static_cast<unsigned>(q.degree());
    TensorElem out(n, a, b);
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) out.add_term(mp, mq, cp * cq);
    return out;
}

TensorElem polarize(const QPoly& q, unsigned k) {
    if (q.side() != Side::primal) throw DimensionMismatch("polarize: operand must be primal");
    if (!q.is_homogeneous()) throw DimensionMismatch("polarize: operand must be homogeneous");
    unsigned n = static_cast<unsigned>(q.nvars()) - 1;
    unsigned total = q.is_zero() ? k : static_cast<unsigned>(q.degree());
    if (total < k) throw DimensionMismatch("polarize: splitting exceeds degree");
    unsigned d = total - k;
    TensorElem out(n, k, d);
    Rational prefactor = Rational(factorial(d)) / Rational(factorial(total));
    MonomialBasis kb(n, k);
    for (std::size_t i = 0; i < kb.size(); ++i) {
        const MultiIndex& I = kb.mono(i);
        QPoly dq = derive_multi(q, I);
        if (dq.is_zero()) continue;
        Rational c = prefactor * Rational(multinomial(k, I));
        for (const auto& [J, cj] : dq.terms()) out.add_term(I, J, c * cj);
    }
    return out;
}

TensorElem delta(const TensorElem& e) {
    if (e.a() == 0) throw DimensionMismatch("delta: left degree is zero");
    TensorElem out(e.n(), e.a() - 1, e.b() + 1);
    for (const auto& [key, c] : e.terms()) {
        const auto& [I, J] = key;
        for (std::size_t j = 0; j <= e.n(); ++j) {
            if (I[j] == 0) continue;
            MultiIndex l(I), r(J);
            --l[j];
            ++r[j];
            out.add_term(l, r, c * Rational(I[j]));
        }
    }
    return out;
}

TensorElem theta(const TensorElem& e) {
    if (e.b() == 0) throw DimensionMismatch("theta: right degree is zero");
    TensorElem out(e.n(), e.a() + 1, e.b() - 1);
    for (const auto& [key, c] : e.terms()) {
        const auto& [I, J] = key;
        for (std::size_t j = 0; j <= e.n(); ++j) {
            if (J[j] == 0) continue;
            MultiIndex l(I), r(J);
            ++l[j];
            --r[j];
            out.add_term(l, r, c * Rational(J[j]));
        }
    }
    return out;
}

TensorElem xi(unsigned i, unsigned j, const TensorElem& e) {
    if (i >= j || j > e.n()) throw DimensionMismatch("xi: needs variable indices i < j");
    TensorElem out(e.n(), e.a() + 1, e.b() + 1);
    for (const auto& [key, c] : e.terms()) {
        MultiIndex l(key.first), r(key.second);
        ++l[i];
        ++r[j];
        out.add_term(l, r, c);
        --l[i];
        --r[j];
        ++l[j];
        ++r[i];
        out.add_term(l, r, -c);
    }
    return out;
}

TensorElem dop(unsigned i, unsigned j, const TensorElem& e) {
    if (i >= j || j > e.n()) throw DimensionMismatch("dop: needs variable indices i < j");
    if (e.a() == 0 || e.b() == 0) throw DimensionMismatch("dop: degrees must be positive");
    TensorElem out(e.n(), e.a() - 1, e.b() - 1);
    for (const auto& [key, c] : e.terms()) {
        const auto& [I, J] = key;
        if (I[i] > 0 && J[j] > 0) {
            MultiIndex l(I), r(J);
            --l[i];
            --r[j];
            out.add_term(l, r, c * Rational(Integer(I[i]) * Integer(J[j])));
        }
        if (I[j] > 0 && J[i] > 0) {
            MultiIndex l(I), r(J);
            --l[j];
            --r[i];
            out.add_term(l, r, -c * Rational(Integer(I[j]) * Integer(J[i])));
        }
    }
    return out;
}

TensorElem second_multiply(const TensorElem& e, unsigned j) {
    if (j > e.n()) throw DimensionMismatch("second_multiply: variable index out of range");
    TensorElem out(e.n(), e.a(), e.b() + 1);
    for (const auto& [key, c] : e.terms()) {
        MultiIndex r(key.second);
        ++r[j];
        out.add_term(key.first, r, c);
    }
    return out;
}

std::vector<Rational> coords(const TensorElem& e, const TensorSpace& space) {
    if (e.n() != space.n || e.a() != space.a || e.b() != space.b)
        throw DimensionMismatch("coords: tensor space mismatch");
    std::vector<Rational> v(space.dim());
    for (const auto& [key, c] : e.terms())
        v[space.index(space.first.index_of(key.first), space.second.index_of(key.second))] = c;
    return v;
}

TensorElem from_coords(const std::vector<Rational>& v, const TensorSpace& space) {
    if (v.size() != space.dim()) throw DimensionMismatch("from_coords: wrong length");
    TensorElem e(space.n, space.a, space.b);
    for (std::size_t ia = 0; ia < space.first.size(); ++ia)
        for (std::size_t ib = 0; ib < space.second.size(); ++ib)
            e.add_term(space.first.mono(ia), space.second.mono(ib), v[space.index(ia, ib)]);
    return e;
}

QMatrix operator_matrix(const TensorSpace& src, const TensorSpace& dst,
                        const std::function<TensorElem(const TensorElem&)>& op) {
    QMatrix m(dst.dim(), src.dim());
    for (std::size_t ia = 0; ia < src.first.size(); ++ia)
        for (std::size_t ib = 0; ib < src.second.size(); ++ib) {
            TensorElem e(src.n, src.a, src.b);
            e.add_term(src.first.mono(ia), src.second.mono(ib), 1);
            TensorElem r = op(e);
            std::size_t col = src.index(ia, ib);
            for (const auto& [key, c] : r.terms())
                m.at(dst.index(dst.first.index_of(key.first), dst.second.index_of(key.second)),
                     col) = c;
        }
    return m;
}

} // namespace verocohom
