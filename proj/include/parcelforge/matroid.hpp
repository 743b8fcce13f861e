#ifndef PARCELFORGE_MATROID_HPP
#define PARCELFORGE_MATROID_HPP

#include <cstdint>
#include <vector>

#include <parcelforge/instance.hpp>

namespace parcelforge {

/*
 * Column matroid of an instance, as a memoized rank oracle on bitmask
 * subsets.  Ground sets are capped at 32 elements (masks are uint32_t);
 * flats enumeration is capped tighter because it walks all subsets.
 */
class Matroid {
public:
    explicit Matroid(Instance inst);

    const Instance& instance() const { return inst_; }
    int ground() const { return inst_.ground; }
    int full_rank() const { return inst_.rank_full; }
    std::uint32_t full_mask() const {
        return inst_.ground == 32 ? ~std::uint32_t{0}
                                  : (std::uint32_t{1} << inst_.ground) - 1;
    }

    int rank(std::uint32_t mask) const;

    // Rank of S in the contraction M/U: rk(S | U) = rk(S u U) - rk(U).
    int contract_rank(std::uint32_t s, std::uint32_t u) const {
        return rank(s | u) - rank(u);
    }

    std::uint32_t closure(std::uint32_t mask) const;
    std::vector<std::uint32_t> flats() const;  // ground <= 16

private:
    Instance inst_;
    mutable std::vector<signed char> memo_;  // ground <= 20; -1 = unset
};

} // namespace parcelforge

#endif
