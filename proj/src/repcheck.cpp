#include "verocohom/repcheck.hpp"

#include <random>
#include <sstream>

namespace verocohom {

static QPoly sample_poly(std::mt19937_64& rng, unsigned n, unsigned deg) {
    MonomialBasis b(n, deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    QPoly p(n + 1, Side::primal);
    for (std::size_t i = 0; i < b.size(); ++i) p.add_term(b.mono(i), Rational(coeff(rng)));
    if (p.is_zero()) p.add_term(b.mono(0), 1);
    return p;
}

RepcheckResult repcheck(unsigned n, unsigned d, unsigned k) {
    if (n < 1 || k < 1 || k > d) throw DimensionMismatch("repcheck: needs n >= 1, 1 <= k <= d");
    const unsigned long dim_k = binomial(k + n, n).get_ui();
    const unsigned long dim_d = binomial(d + n, n).get_ui();
    if (dim_k * dim_d > 20000) throw BudgetExceeded("repcheck: space dimension beyond the budget");

    RepcheckResult res;
    std::ostringstream line;

    std::vector<Subspace> summands;
    unsigned long total = 0;
    QMatrix stacked(0, dim_k * dim_d);
    for (unsigned t = 0; t <= k; ++t) {
        Subspace a = pieri_summand(t, k, d, n);
        total += a.dim();
        res.summand_dims.push_back(a.dim());
        stacked = vstack(stacked, a.basis);
        summands.push_back(std::move(a));
    }
    bool direct = rank(stacked) == total && total == dim_k * dim_d;
    res.ok &= direct;
    line << dim_k * dim_d << " = " << res.summand_dims[0];
    for (std::size_t t = 1; t < res.summand_dims.size(); ++t) line << " + " << res.summand_dims[t];
    line << (direct ? ", direct sum OK" : ", direct sum FAILED");
    res.lines.push_back(line.str());

    bool kerD = same_space(skew_kernel(n, k, d), summands[0]);
    res.ok &= kerD;
    res.lines.push_back(std::string("skew-derivation kernel = polarization image: ") +
                        (kerD ? "OK" : "FAILED"));

    Subspace im = psi_image(n, k, d + k - 1);
    bool kerDD = same_space(skew2_kernel(n, k, d), im);
    res.ok &= kerDD;
    res.lines.push_back(std::string("double skew-derivation kernel = psi image: ") +
                        (kerDD ? "OK" : "FAILED"));

    std::mt19937_64 rng(20260809);
    bool identities = true;
    for (int trial = 0; trial < 3; ++trial) {
        QPoly q = sample_poly(rng, n, d + k);
        TensorElem pk = polarize(q, k);
        identities &= theta(pk) == Rational(d) * polarize(q, k + 1);
        identities &= delta(polarize(q, k + 1)) == Rational(k + 1) * polarize(q, k);
        identities &= delta(theta(pk)) == Rational(static_cast<long>(d) * (k + 1)) * pk;
        identities &= delta(xi(0, 1, pk)) == xi(0, 1, delta(pk));
        identities &= theta(xi(0, 1, pk)) == xi(0, 1, theta(pk));
    }
    res.ok &= identities;
    res.lines.push_back(std::string("polarization shift identities: ") +
                        (identities ? "OK" : "FAILED"));
    return res;
}

} // namespace verocohom
