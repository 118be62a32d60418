#pragma once

#include "verocohom/tensor.hpp"

namespace verocohom {

/// Matrix of d/dx_var : S^dU -> S^{d-1}U in the monomial bases.
QMatrix derivation_matrix(unsigned n, unsigned d, unsigned var);

/// Matrix of the map U (x) S^tU -> S^kU (x) S^{t-k+1}U obtained by splitting
/// the right factor with polarize and multiplying the U factor into the tail.
QMatrix psi_matrix(unsigned n, unsigned k, unsigned t);

/// Image of psi_matrix as a subspace of S^kU (x) S^{t-k+1}U.
Subspace psi_image(unsigned n, unsigned k, unsigned t);

/// The summand A_t = sum xi...xi polarize(S^{d+k-2t}U) of S^kU (x) S^dU,
/// the span over all multisets of t index pairs. A_0 is the polarization image.
Subspace pieri_summand(unsigned t, unsigned k, unsigned d, unsigned n);

/// Intersection of the kernels of all skew derivations D_{i,j} on S^kU (x) S^dU.
/// For k = 0 or d = 0 every D_{i,j} is the zero map and the kernel is everything.
Subspace skew_kernel(unsigned n, unsigned k, unsigned d);

/// Intersection of the kernels of all composites D_{i,j} o D_{r,s}.
/// For k < 2 or d < 2 every composite is the zero map and the kernel is everything.
Subspace skew2_kernel(unsigned n, unsigned k, unsigned d);

/// Span of all first partials of T in S^{d-1}U.
Subspace partials_span(const Subspace& T, unsigned n, unsigned d);

/// The space of q in S^{d+t}U all of whose order-t partials land in T,
/// computed by t successive one-step preimages. t = 0 returns T.
Subspace partials_preimage(const Subspace& T, unsigned n, unsigned d, unsigned t);

/// The same space through the dual side: ann(ann(T) * S^tU-dual).
/// Kept as an independent route; the two implementations cross-check each other.
Subspace partials_preimage_dual(const Subspace& T, unsigned n, unsigned d, unsigned t);

/// Annihilator under the apolarity pairing; flips between S^dU and its dual.
Subspace annihilator(const Subspace& A, unsigned n, unsigned d);

/// Multiplication span G * S^tU-dual inside S^{a+t}U-dual.
Subspace mult_span_dual(const Subspace& G, unsigned n, unsigned a, unsigned t);

/// S^chiU (x) T embedded in S^chiU (x) S^dU.
Subspace tensor_with_left(const Subspace& T, unsigned n, unsigned chi, unsigned d);

} // namespace verocohom
