#ifndef PARCELFORGE_GROUP_HPP
#define PARCELFORGE_GROUP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <parcelforge/cyclotomic.hpp>
#include <parcelforge/instance.hpp>

namespace parcelforge {

// A group element is its index in the mixed-radix encoding of the moduli
// list (coordinate 0 least significant).
using GElem = std::uint64_t;

/*
 * A finite abelian coefficient group: cyclic Z_q, prime-field vectors
 * GF(p)^d, or an m-fold product of either.  All of these are products of
 * cyclic groups, so one moduli vector covers every case; the gfp flag
 * additionally permits mod-p scalar action by matrix entries.
 */
class GroupSpec {
public:
    static GroupSpec cyclic(long q);
    static GroupSpec gfp_vector(int p, int d);
    GroupSpec power(int m) const;  // m-fold product of *this

    // "cyclic:q" | "gfp:p:d" | "product:<base...>:m"
    static GroupSpec parse(const std::string& text);

    std::uint64_t order() const { return order_; }
    const std::vector<int>& moduli() const { return moduli_; }
    int gfp_prime() const { return p_; }  // 0 unless a GF(p)-vector group
    std::string name() const { return name_; }

    bool compatible_with(const Instance& inst) const;

    std::vector<int> decode(GElem a) const;
    GElem encode(const std::vector<int>& coords) const;

    GElem add(GElem a, GElem b) const;
    GElem neg(GElem a) const;
    GElem smul(int c, GElem a) const;  // coordinate-wise (c * a_i) mod m_i
    bool is_zero(GElem a) const { return a == 0; }

    // Split an element of the m-fold product into its m components, and back.
    std::vector<GElem> split(GElem a, int m) const;
    GElem join(const std::vector<GElem>& parts, const GroupSpec& base) const;

private:
    std::vector<int> moduli_;
    std::uint64_t order_ = 1;
    int p_ = 0;
    std::string name_;
};

using FunctionVector = std::vector<GElem>;  // one value per ground element

int support_size(const FunctionVector& f);

// The row space {a.G : a in A^rows}, deduplicated and sorted.  Cost
// order^rows, capped by enumeration_budget().
std::vector<FunctionVector> enumerate_flows(const Instance& inst, const GroupSpec& a);

// kernel size |h^-1(0)| -> number of flows
std::map<int, Int> kernel_census(const Instance& inst, const GroupSpec& a);

// Sum over flows h of prod_e w[h(e)], with w indexed by group element.
CycElem weighted_profile_census(const Instance& inst, const GroupSpec& a,
                                const std::vector<CycElem>& w);

// Kernels of flows are closed sets.
bool closure_of_kernel_property(const Instance& inst, const GroupSpec& a);

/*
 * Whether the restriction M|B of a binary instance is affine, decided three
 * independent ways (affine linear system, all-circuits-even, chi(M|B;2)=1);
 * throws std::logic_error if the criteria disagree.
 */
bool is_binary_affine(const Instance& inst, std::uint32_t b_mask);

struct SupportClassification {
    bool even_degrees = false;   // supp(h) induces an all-even-degree subgraph
    bool cutset_union = false;   // supp(h) = delta(W) for some vertex set W
    bool in_cycle_space = false; // h is a GF(2) flow of the cycle side
    bool in_cut_space = false;   // h is a GF(2) tension (vertex side)
};

// GF(2) support dichotomy for graphs; h given as a 0/1 vector over E.
SupportClassification graph_support_property(const OrientedGraph& g,
                                             const std::vector<int>& h);

} // namespace parcelforge

#endif
