#include <parcelforge/matroid.hpp>

namespace parcelforge {

Matroid::Matroid(Instance inst) : inst_(std::move(inst)) {
    if (inst_.ground > 32) throw SizeCapError("matroid: ground set larger than 32");
    if (inst_.ground <= 20) memo_.assign(std::size_t{1} << inst_.ground, -1);
}

int Matroid::rank(std::uint32_t mask) const {
    mask &= full_mask();
    if (!memo_.empty()) {
        signed char& slot = memo_[mask];
        if (slot < 0) slot = static_cast<signed char>(subset_rank(inst_, mask));
        return slot;
    }
    return subset_rank(inst_, mask);
}

std::uint32_t Matroid::closure(std::uint32_t mask) const {
    mask &= full_mask();
    const int rk = rank(mask);
    std::uint32_t cl = mask;
    for (int e = 0; e < inst_.ground; ++e) {
        const std::uint32_t bit = std::uint32_t{1} << e;
        if ((mask & bit) == 0 && rank(mask | bit) == rk) cl |= bit;
    }
    return cl;
}

std::vector<std::uint32_t> Matroid::flats() const {
    if (inst_.ground > 16) throw SizeCapError("flats: ground set larger than 16");
    std::vector<std::uint32_t> out;
    const std::uint32_t all = full_mask();
    for (std::uint32_t s = 0;; ++s) {
        if (closure(s) == s) out.push_back(s);
        if (s == all) break;
    }
    return out;
}

} // namespace parcelforge
