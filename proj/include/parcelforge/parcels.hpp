#ifndef PARCELFORGE_PARCELS_HPP
#define PARCELFORGE_PARCELS_HPP

#include <map>
#include <string>

#include <parcelforge/cyclotomic.hpp>
#include <parcelforge/group.hpp>

namespace parcelforge {

/*
 * A parcel census: counts of function pairs/tuples with flow-valued
 * differences, binned by a congruence statistic.  sigma = 0 stands for the
 * "infinite modulus" (enumerator) case where bins are keyed by the exact
 * integer statistic.
 *
 * Tiers: 1 = brute force over all function tuples filtered by flow
 * membership (the trusted oracle); 2 = per-flow factored counting via
 * per-edge generating products (the workhorse).  Tier 0 requests the
 * default (tier 2).
 */
struct Census {
    std::string family;
    long sigma = 1;
    std::map<long long, Int> bins;
    int tier = 0;
    Int universe = 0;

    Int count(long long k) const {
        auto it = bins.find(k);
        return it == bins.end() ? Int(0) : it->second;
    }
    Int total() const;
    bool same_counts(const Census& o) const { return bins == o.bins; }
};

long long normalize_residue(long long k, long sigma);

// Pairs (f,g) with f-g a flow, binned by |supp(f-g)| mod sigma; the nonzero
// flag restricts f, g to nowhere-zero functions.
Census hamming_census(const Instance& inst, const GroupSpec& a, long sigma,
                      bool nonzero, int tier = 0);

// Pairs binned by alpha |supp f| + beta |supp g| mod sigma.
Census support_census(const Instance& inst, const GroupSpec& a, long alpha,
                      long beta, long sigma, int tier = 0);

enum class SetOp { Union, Intersect, SymDiff, Stroke, Implies };
const char* setop_name(SetOp op);

// Pairs binned by |supp(f) o supp(g)| mod sigma.
Census setop_census(const Instance& inst, const GroupSpec& a, SetOp op,
                    long sigma, int tier = 0);

// Pairs binned by the GF(p) inner product <f,g>; bins keyed by field
// element, sigma = p.
Census inner_product_census(const Instance& inst, int p, int tier = 0);

// (m+1)-tuples with consecutive differences flows, binned by the total
// support size mod sigma.
Census tuple_census(const Instance& inst, const GroupSpec& a, int m, long sigma,
                    int tier = 0);

// The odd-q three-parcel census (bins -1, 0, +1) for pairs whose difference
// is a flow of the orthogonal dual of inst.
Census prop25_census(const Instance& inst, long q, int tier = 0);

// Flows binned by support size mod sigma (sigma = 0: exact sizes).  Not a
// parcel census, but pair censuses are q^|E| times these.
Census flow_support_census(const Instance& inst, const GroupSpec& a, long sigma);

// sum_k |M_{1,-1}(k, infinity)| X^k
LaurentPoly support_diff_enumerator(const Instance& inst, const GroupSpec& a);

CycElem gauss_sum(int p);                      // Omega in Z[omega_p], p odd prime
CycElem quadratic_flow_sum(const Instance& inst);  // sum over flows of omega^<h,h>
int bicycle_dimension(const Instance& inst);       // dim(row space ^ dual row space)

// sum_k omega^(rho k) bins[k] as an exact element of Z[omega_sigma].
CycElem census_transform(const Census& c, long sigma, long rho = 1);

} // namespace parcelforge

#endif
