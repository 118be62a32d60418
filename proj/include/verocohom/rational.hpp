#pragma once

#include <gmpxx.h>

namespace verocohom {

// All arithmetic in this project is exact over Q. GMP's canonical
// fraction type already maintains the lowest-terms / positive-denominator
// invariants we rely on for deterministic output.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// binomial(m+n, n) extended to every integer m as the polynomial
// (m+1)...(m+n)/n!; this is chi(O(m)) on P^n.
inline Integer chi_binomial(long m, unsigned n) {
    Integer p = 1;
    for (unsigned j = 1; j <= n; ++j) p *= Integer(m + static_cast<long>(j));
    return p / factorial(n);
}

} // namespace verocohom
