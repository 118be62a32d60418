#pragma once

#include <functional>
#include <map>
#include <utility>

#include "verocohom/poly.hpp"

namespace verocohom {

/// The tensor space S^aU (x) S^bU with its ordered monomial-pair basis.
/// Pairs are ordered lexicographically on (index in S^aU basis, index in S^bU basis).
struct TensorSpace {
    unsigned n, a, b;
    MonomialBasis first;
    MonomialBasis second;

    TensorSpace(unsigned n_, unsigned a_, unsigned b_)
        : n(n_), a(a_), b(b_), first(n_, a_), second(n_, b_) {}

    std::size_t dim() const { return first.size() * second.size(); }
    std::size_t index(std::size_t ia, std::size_t ib) const { return ia * second.size() + ib; }
    std::string label() const {
        return "S" + std::to_string(a) + "xS" + std::to_string(b) + "|n=" + std::to_string(n);
    }
};

/// Sparse element of S^aU (x) S^bU.
class TensorElem {
public:
    TensorElem(unsigned n, unsigned a, unsigned b) : n_(n), a_(a), b_(b) {}

    unsigned n() const { return n_; }
    unsigned a() const { return a_; }
    unsigned b() const { return b_; }
    const std::map<std::pair<MultiIndex, MultiIndex>, Rational>& terms() const { return terms_; }

    void add_term(const MultiIndex& left, const MultiIndex& right, const Rational& c);
    bool is_zero() const { return terms_.empty(); }

    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    TensorElem& operator*=(const Rational& c);

    bool operator==(const TensorElem&) const = default;

private:
    unsigned n_, a_, b_;
    std::map<std::pair<MultiIndex, MultiIndex>, Rational> terms_;
};

TensorElem operator*(const Rational& c, TensorElem e);
TensorElem operator+(TensorElem a, const TensorElem& b);
TensorElem operator-(TensorElem a, const TensorElem& b);

/// Pure tensor p (x) q.
TensorElem tensor_product(const QPoly& p, const QPoly& q);

/// Canonical splitting S^{d+k}U -> S^kU (x) S^dU,
///   q |-> (d!/(d+k)!) sum_{|I|=k} multinomial(k,I) x^I (x) d^I q,
/// normalized so that powers of linear forms split as l^{d+k} |-> l^k (x) l^d.
TensorElem polarize(const QPoly& q, unsigned k);

/// a (x) b |-> sum_j d_j(a) (x) x_j b  (lowers the left degree).
TensorElem delta(const TensorElem& e);

/// a (x) b |-> sum_j x_j a (x) d_j(b)  (raises the left degree).
TensorElem theta(const TensorElem& e);

/// Multiplication by x_i (x) x_j - x_j (x) x_i, i < j.
TensorElem xi(unsigned i, unsigned j, const TensorElem& e);

/// Derivation by d_i (x) d_j - d_j (x) d_i, i < j.
TensorElem dop(unsigned i, unsigned j, const TensorElem& e);

/// Multiply x_j into the right factor.
TensorElem second_multiply(const TensorElem& e, unsigned j);

std::vector<Rational> coords(const TensorElem& e, const TensorSpace& space);
TensorElem from_coords(const std::vector<Rational>& v, const TensorSpace& space);

/// Matrix of a linear operator defined on basis pure tensors.
QMatrix operator_matrix(const TensorSpace& src, const TensorSpace& dst,
                        const std::function<TensorElem(const TensorElem&)>& op);

} // namespace verocohom
