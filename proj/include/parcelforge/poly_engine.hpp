#ifndef PARCELFORGE_POLY_ENGINE_HPP
#define PARCELFORGE_POLY_ENGINE_HPP

#include <parcelforge/matroid.hpp>
#include <parcelforge/poly.hpp>

namespace parcelforge {

/*
 * R(M; lambda, x) = sum over subsets B of lambda^(r - rk B) x^(|B| - rk B).
 * Subset expansion up to |E| = 20; a memoized deletion-contraction walk over
 * GF(p) column lists above that (p = 2 suffices for TU input, whose matroid
 * survives reduction mod any prime).
 */
BiPoly rank_gen_poly(const Matroid& m);

// T(M; u, v) = R(M; u-1, v-1).
BiPoly tutte(const Matroid& m);

// chi(M; lambda) = (-1)^r R(M; -lambda, -1); independently recomputed as the
// signed subset sum when the ground set is small enough, and the two must
// agree.
UniPoly char_poly(const Matroid& m);

// W(x) = sum_k N_k x^k where N_k counts flows with kernel size k, for any
// group of order q.  Division-free regrouping of (x-1)^r R(q/(x-1), x-1);
// certified to have nonnegative coefficients summing to q^r.
UniPoly flow_census_poly(const Matroid& m, long q);

// sum over flats U of chi(M/U; q) x^|U|; equals flow_census_poly.
UniPoly crapo_tutte_convolution(const Matroid& m, long q);

// Graph specializations: P(Gamma; lambda) = lambda^c chi(M(vertex side));
// F(Gamma; lambda) = chi(M(cycle side)).
UniPoly chromatic_poly(const OrientedGraph& g);
UniPoly flow_poly(const OrientedGraph& g);

} // namespace parcelforge

#endif
