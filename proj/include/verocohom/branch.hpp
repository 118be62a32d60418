#pragma once

#include "verocohom/cohomology.hpp"
#include "verocohom/polygcd.hpp"

namespace verocohom {

/// Matrix of homogeneous polynomials; the Jacobian instance is 4x3 with
/// entries of common degree d-1.
struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<QPoly> entries; // row-major

    const QPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Homogeneous Jacobian (df_i/dx_j) of four degree-d forms in three variables.
PolyMatrix jacobian(const std::vector<QPoly>& forms);

/// The four 3x3 minors with the fixed sign convention (-1)^i * det(drop row i).
std::vector<QPoly> maximal_minors(const PolyMatrix& F);

/// Degree of the gcd of the nonzero minors = degree of the divisorial part of
/// the rank-drop locus. Throws DegenerateMap when every minor vanishes.
unsigned divisorial_degree(const std::vector<QPoly>& minors);

/// h_N through the top-cohomology tail: the first twist k in (d, 4d] with
/// h^2(N_f(-k)) > 0 must have value 1 and pins h_N = 4d - k.
unsigned h_N_from_tail(const MapSpec& spec);

/// Upper bound 1 + h^1(N_f(-q)) for the degree of the 0-dimensional residual
/// part, with q = 4d-3-h_N. Exact when the torsion contributes nothing at -q.
unsigned long deg_zprime_bound(const MapSpec& spec, unsigned h_N);

struct BranchReport {
    unsigned h_N_gcd = 0;
    unsigned h_N_tail = 0;
    long q = 0; // 4d-3-h_N
    unsigned long deg_zprime_upper = 0;
    std::vector<QPoly> minors;
    QPoly gcd_poly{3, Side::primal};
};

/// Runs both h_N computations, checks their agreement and the bound
/// 0 <= h_N <= 3(d-1), and fills in the residual-degree bound.
BranchReport branch_report(const MapSpec& spec);

} // namespace verocohom
