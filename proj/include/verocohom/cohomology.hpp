#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verocohom/operators.hpp"

namespace verocohom {

/// h^i(P^n, O(m)).
unsigned long h_line(unsigned n, long m, unsigned i);

/// chi(O(m)) on P^n as a signed integer, valid for every m.
long chi_line(unsigned n, long m);

enum class BasePointCheck { verified, fails, not_verified };

/// The data of the map f = (projection with center P(T)) o (degree-d embedding):
/// n, d, the center T in S^dU, its annihilator, and the s+1 defining forms.
struct MapSpec {
    unsigned n = 0;
    unsigned d = 0;
    Subspace T;                    // in S^dU
    Subspace Tperp;                // in S^dU-dual
    std::vector<QPoly> forms;      // primal view of the defining forms, fixed order
    std::vector<QPoly> dual_forms; // the same coefficients read in the dual variables
    unsigned s = 0;                // target dimension
    BasePointCheck base_points = BasePointCheck::not_verified;

    unsigned long N() const;       // dim of the ambient Veronese target
    std::size_t dim_T() const { return T.dim(); }
};

MapSpec make_spec_from_center(unsigned n, unsigned d, const Subspace& T);
MapSpec make_spec_from_forms(unsigned n, unsigned d, const std::vector<QPoly>& forms_primal);

enum class SheafKind { tangent, normal };

struct TableRow {
    long k = 0;
    std::vector<unsigned long> h; // h^0 .. h^n
    long chi = 0;                 // alternating sum
    std::vector<std::string> routes;
};

struct CohomTable {
    SheafKind sheaf = SheafKind::normal;
    long kmin = 0, kmax = 0;
    std::vector<TableRow> rows;
};

/// Matrix whose kernel is H^{n-1}(N_f(-k)): U (x) S^{k-n-2}U -> Tperp-dual (x) S^{k-d-n-1}U,
/// x_j (x) q |-> sum_i g_i-dual (x) (d g_i / d D_j)(q). Degenerate twists give
/// empty source/target blocks (S^mU = 0 for m < 0).
QMatrix normal_hn_matrix(const MapSpec& spec, long k);

/// Matrix whose kernel is H^{n-1}(T_f(-k)) at the top of the sequence:
/// S^{k-n-1}U -> Tperp-dual (x) S^{k-d-n-1}U, q |-> sum_i g_i-dual (x) g_i(q).
QMatrix tangent_hn_matrix(const MapSpec& spec, long k);

/// Global-section matrices of the two defining sequences.
QMatrix normal_section_matrix(const MapSpec& spec, long k);
QMatrix tangent_section_matrix(const MapSpec& spec, long k);

/// Multiplication matrix Tperp (x) S^{chi}U-dual -> S^{k-n-1}U-dual (chi = k-d-n-1 >= 0).
QMatrix tangent_phi_matrix(const MapSpec& spec, long k);

/// dim ker of normal_hn_matrix; equals h^{n-1}(N_f(-k)) for n >= 2 and every k.
unsigned long h1_normal(const MapSpec& spec, long k);

/// dim( S^{chi}U (x) T  intersect  skew2_kernel ); requires chi >= 1.
unsigned long h1_normal_kernel_route(const MapSpec& spec, long k);

/// h^{n-1}(T_f(-k)): dim of the iterated partials preimage for chi >= 0,
/// kernel of tangent_hn_matrix for smaller k.
unsigned long h1_tangent(const MapSpec& spec, long k);

/// dim( S^{chi}U (x) T  intersect  skew_kernel ); requires chi >= 1.
unsigned long h1_tangent_remark_route(const MapSpec& spec, long k);

/// corank of tangent_phi_matrix; requires chi >= 0.
unsigned long tangent_phi_corank(const MapSpec& spec, long k);

CohomTable table(const MapSpec& spec, SheafKind sheaf, long kmin, long kmax);

/// Predicted Euler characteristic of the twisted sheaf from its defining sequence.
long predicted_chi(const MapSpec& spec, SheafKind sheaf, long k);

} // namespace verocohom
