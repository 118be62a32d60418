#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "verocohom/errors.hpp"
#include "verocohom/matrix.hpp"
#include "verocohom/rational.hpp"

namespace verocohom {

/// Exponent vector of length n+1.
using MultiIndex = std::vector<unsigned>;

unsigned mi_degree(const MultiIndex& mi);
Integer mi_factorial(const MultiIndex& mi);                  // product of coordinate factorials
Integer multinomial(unsigned k, const MultiIndex& mi);       // k! / (i_0! ... i_n!)

/// Which polynomial ring an element lives in: S^*U (variables x_j) or
/// S^*U-dual (variables are the dual derivations).
enum class Side { primal, dual };

/// Sparse polynomial over Q in n+1 variables. No zero coefficients are stored.
class QPoly {
public:
    QPoly(std::size_t nvars, Side side) : nvars_(nvars), side_(side) {}

    static QPoly monomial(std::size_t nvars, Side side, MultiIndex mi, Rational coeff = 1);

    std::size_t nvars() const { return nvars_; }
    Side side() const { return side_; }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    void add_term(const MultiIndex& mi, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const Rational& c);

    bool operator==(const QPoly&) const = default;

private:
    std::size_t nvars_;
    Side side_;
    std::map<MultiIndex, Rational> terms_;
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(const Rational& c, QPoly p);

QPoly multiply(const QPoly& p, const QPoly& q);
QPoly derive(const QPoly& p, std::size_t var);
QPoly derive_multi(const QPoly& p, const MultiIndex& mi);

/// g (dual, degree i) acting on p (primal, degree j >= i) as a constant
/// coefficient differential operator of order i. Result is primal of degree j-i.
QPoly contract(const QPoly& g, const QPoly& p);

/// Apolarity pairing <p, g>; p primal and g dual, both homogeneous of one degree.
/// In monomial bases the pairing matrix is diag(I!).
Rational apolar_pair(const QPoly& p, const QPoly& g);

/// Ordered monomial basis of S^dU (or its dual): all multi-indices of degree d
/// in degree-lex descending order, so (d,0,...,0) comes first.
class MonomialBasis {
public:
    MonomialBasis(unsigned n, unsigned d);

    unsigned n() const { return n_; }
    unsigned d() const { return d_; }
    std::size_t size() const { return order_.size(); }
    const MultiIndex& mono(std::size_t i) const { return order_[i]; }
    std::size_t index_of(const MultiIndex& mi) const;
    const std::vector<MultiIndex>& order() const { return order_; }

private:
    unsigned n_, d_;
    std::vector<MultiIndex> order_;
    std::map<MultiIndex, std::size_t> index_;
};

std::vector<Rational> coords(const QPoly& p, const MonomialBasis& b);
QPoly from_coords(const std::vector<Rational>& v, const MonomialBasis& b, Side side);

/// Ambient label for Subspaces of S^dU / S^dU-dual; fixes basis ordering too.
std::string poly_space_label(unsigned n, unsigned d, Side side);

/// Subspace spanned by polynomials inside S^dU (or the dual space).
Subspace span_of(const std::vector<QPoly>& polys, unsigned n, unsigned d, Side side);

std::string to_string(const QPoly& p);

} // namespace verocohom
