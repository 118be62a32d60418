#pragma once

#include <optional>

#include "verocohom/operators.hpp"

namespace verocohom {

/// Exponent triple (a,b,c) with a+b+c = d: a monomial x^a y^b u^c on the
/// degree-d lattice triangle.
struct Triple {
    unsigned a = 0, b = 0, c = 0;

    unsigned degree() const { return a + b + c; }
    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;

    bool is_corner() const { return a == degree() || b == degree() || c == degree(); }
    bool on_boundary() const { return a == 0 || b == 0 || c == 0; }
};

/// A monomial projection center for n = 2, as a set of distinct triples.
struct TriangleT {
    unsigned d = 0;
    std::vector<Triple> triples;
};

/// Distance in the degree-d triangle graph: one edge moves a unit from one
/// coordinate to another. Triples must have the same degree.
unsigned graph_distance(const Triple& s, const Triple& t);

/// Triples violating the necessary embedding bounds a,b,c <= d-2.
/// This is a necessary condition only, returned as an advisory.
std::vector<Triple> smoothness_violations(const TriangleT& t);

/// dim of the span of first partials via the count 3a+2b (a interior triples,
/// b boundary ones), valid when all pairwise distances are >= 2 and no corner
/// is present; nullopt when the hypothesis fails.
std::optional<unsigned> fast_dim_partials(const TriangleT& t);

/// dim of the one-step partials preimage by pattern matching: 0 for isolated
/// monomials, h+k for a disjoint union of h interior down-triangles and k
/// adjacent boundary pairs; nullopt on anything unrecognized.
std::optional<unsigned> fast_dim_partials_preimage(const TriangleT& t);

/// The corresponding subspace of S^dU (for the general fallback routes).
Subspace triangle_subspace(const TriangleT& t);

} // namespace verocohom
