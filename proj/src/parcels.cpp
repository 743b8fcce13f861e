#include <parcelforge/parcels.hpp>

#include <functional>
#include <set>
#include <stdexcept>

namespace parcelforge {

Int Census::total() const {
    Int t = 0;
    for (const auto& [k, c] : bins) t += c;
    return t;
}

long long normalize_residue(long long k, long sigma) {
    if (sigma <= 0) return k;
    return ((k % sigma) + sigma) % sigma;
}

namespace {

using Bins = std::map<long long, Int>;

Bins mul_bins(const Bins& a, const Bins& b, long sigma) {
    Bins out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out[normalize_residue(ka + kb, sigma)] += ca * cb;
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

// All functions E -> A in odometer order.
std::vector<FunctionVector> all_functions(const GroupSpec& a, int ground,
                                          bool nonzero) {
    const std::uint64_t budget = enumeration_budget();
    if (checked_pow(a.order(), ground, budget) > budget)
        throw BudgetError("function space exceeds budget");
    std::vector<FunctionVector> out;
    FunctionVector f(ground, 0);
    for (;;) {
        bool ok = true;
        if (nonzero)
            for (GElem v : f)
                if (v == 0) { ok = false; break; }
        if (ok) out.push_back(f);
        int pos = 0;
        while (pos < ground) {
            if (++f[pos] < a.order()) break;
            f[pos] = 0;
            ++pos;
        }
        if (pos == ground) break;
    }
    return out;
}

using EdgeStat = std::function<long long(GElem f, GElem g)>;

Census pair_census(const Instance& inst, const GroupSpec& a, long sigma,
                   const std::string& family, bool nonzero, const EdgeStat& stat,
                   int tier) {
    if (!a.compatible_with(inst))
        throw std::invalid_argument("group incompatible with instance");
    Census out;
    out.family = family;
    out.sigma = sigma;
    if (tier == 1) {
        const std::uint64_t budget = enumeration_budget();
        if (checked_pow(a.order(), 2 * inst.ground, budget) > budget)
            throw BudgetError("tier 1 pair universe exceeds budget");
        std::set<FunctionVector> flowset;
        for (auto& h : enumerate_flows(inst, a)) flowset.insert(std::move(h));
        auto fns = all_functions(a, inst.ground, nonzero);
        for (const auto& f : fns)
            for (const auto& g : fns) {
                FunctionVector h(inst.ground);
                for (int e = 0; e < inst.ground; ++e) h[e] = a.add(f[e], a.neg(g[e]));
                if (!flowset.count(h)) continue;
                long long s = 0;
                for (int e = 0; e < inst.ground; ++e) s += stat(f[e], g[e]);
                out.bins[normalize_residue(s, sigma)] += 1;
            }
        out.tier = 1;
    } else {
        for (const auto& h : enumerate_flows(inst, a)) {
            Bins acc{{0, Int(1)}};
            for (int e = 0; e < inst.ground; ++e) {
                Bins fac;
                for (GElem fe = 0; fe < a.order(); ++fe) {
                    if (nonzero && fe == 0) continue;
                    const GElem ge = a.add(fe, a.neg(h[e]));
                    if (nonzero && ge == 0) continue;
                    fac[normalize_residue(stat(fe, ge), sigma)] += 1;
                }
                acc = mul_bins(acc, fac, sigma);
            }
            for (const auto& [k, c] : acc)
                if (c != 0) out.bins[k] += c;
        }
        out.tier = 2;
    }
    out.universe = out.total();
    return out;
}

} // namespace

Census hamming_census(const Instance& inst, const GroupSpec& a, long sigma,
                      bool nonzero, int tier) {
    EdgeStat stat = [](GElem f, GElem g) -> long long { return f != g ? 1 : 0; };
    return pair_census(inst, a, sigma, nonzero ? "hamming-nonzero" : "hamming",
                       nonzero, stat, tier);
}

Census support_census(const Instance& inst, const GroupSpec& a, long alpha,
                      long beta, long sigma, int tier) {
    EdgeStat stat = [alpha, beta](GElem f, GElem g) -> long long {
        return alpha * (f != 0) + beta * (g != 0);
    };
    return pair_census(inst, a, sigma,
                       "support(" + std::to_string(alpha) + "," +
                           std::to_string(beta) + ")",
                       false, stat, tier);
}

const char* setop_name(SetOp op) {
    switch (op) {
        case SetOp::Union: return "union";
        case SetOp::Intersect: return "intersect";
        case SetOp::SymDiff: return "symdiff";
        case SetOp::Stroke: return "stroke";
        case SetOp::Implies: return "implies";
    }
    return "?";
}

Census setop_census(const Instance& inst, const GroupSpec& a, SetOp op,
                    long sigma, int tier) {
    EdgeStat stat = [op](GElem f, GElem g) -> long long {
        const bool x = f != 0, y = g != 0;
        switch (op) {
            case SetOp::Union: return x || y;
            case SetOp::Intersect: return x && y;
            case SetOp::SymDiff: return x != y;
            case SetOp::Stroke: return !x && !y;
            case SetOp::Implies: return !x || y;
        }
        return 0;
    };
    return pair_census(inst, a, sigma, std::string("setop-") + setop_name(op),
                       false, stat, tier);
}

Census inner_product_census(const Instance& inst, int p, int tier) {
    if (!is_prime(p)) throw std::invalid_argument("inner_product_census: p not prime");
    GroupSpec a = inst.is_gfp() ? GroupSpec::gfp_vector(p, 1) : GroupSpec::cyclic(p);
    EdgeStat stat = [p](GElem f, GElem g) -> long long {
        return static_cast<long long>(f) * static_cast<long long>(g) % p;
    };
    return pair_census(inst, a, p, "inner-product", false, stat, tier);
}

Census tuple_census(const Instance& inst, const GroupSpec& a, int m, long sigma,
                    int tier) {
    if (m < 2) throw std::invalid_argument("tuple_census: m must be >= 2");
    if (!a.compatible_with(inst))
        throw std::invalid_argument("group incompatible with instance");
    Census out;
    out.family = "tuple(" + std::to_string(m) + ")";
    out.sigma = sigma;
    if (tier == 1) {
        const std::uint64_t budget = enumeration_budget();
        if (checked_pow(a.order(), (m + 1) * inst.ground, budget) > budget)
            throw BudgetError("tier 1 tuple universe exceeds budget");
        std::set<FunctionVector> flowset;
        for (auto& h : enumerate_flows(inst, a)) flowset.insert(std::move(h));
        auto fns = all_functions(a, inst.ground, false);
        std::vector<std::size_t> idx(m + 1, 0);
        for (;;) {
            bool ok = true;
            for (int j = 0; j < m && ok; ++j) {
                FunctionVector h(inst.ground);
                for (int e = 0; e < inst.ground; ++e)
                    h[e] = a.add(fns[idx[j]][e], a.neg(fns[idx[j + 1]][e]));
                if (!flowset.count(h)) ok = false;
            }
            if (ok) {
                long long s = 0;
                for (int j = 0; j <= m; ++j) s += support_size(fns[idx[j]]);
                out.bins[normalize_residue(s, sigma)] += 1;
            }
            int pos = 0;
            while (pos <= m) {
                if (++idx[pos] < fns.size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos > m) break;
        }
        out.tier = 1;
    } else {
        const GroupSpec prod = a.power(m);
        for (const auto& hv : enumerate_flows(inst, prod)) {
            Bins acc{{0, Int(1)}};
            for (int e = 0; e < inst.ground; ++e) {
                const auto parts = prod.split(hv[e], m);  // (h_1(e), ..., h_m(e))
                Bins fac;
                for (GElem c = 0; c < a.order(); ++c) {
                    long long s = (c != 0) ? 1 : 0;  // f_{m+1}(e) = c
                    GElem cur = c;
                    for (int j = m - 1; j >= 0; --j) {
                        cur = a.add(parts[j], cur);  // f_{j+1}(e)
                        if (cur != 0) ++s;
                    }
                    fac[normalize_residue(s, sigma)] += 1;
                }
                acc = mul_bins(acc, fac, sigma);
            }
            for (const auto& [k, c] : acc)
                if (c != 0) out.bins[k] += c;
        }
        out.tier = 2;
    }
    out.universe = out.total();
    return out;
}

namespace {

// weight of a single value pair in the odd-q three-parcel construction:
// 0 on (0,0), +1 on the diagonal, off the diagonal -1 when Rem(b+c, q) is
// even and +1 when odd
int parcel_weight(long b, long c, long q) {
    if (b == 0 && c == 0) return 0;
    if (b == c) return 1;
    return ((b + c) % q) % 2 == 0 ? -1 : 1;
}

} // namespace

Census prop25_census(const Instance& inst, long q, int tier) {
    if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("prop25_census: q must be odd and >= 3");
    if (inst.is_gfp())
        throw std::invalid_argument("prop25_census: TU or graph instance required");
    const Instance dual = orthogonal_dual_tu(inst);
    const GroupSpec a = GroupSpec::cyclic(q);
    Census out;
    out.family = "prop25";
    out.sigma = 2;
    if (tier == 1) {
        const std::uint64_t budget = enumeration_budget();
        if (checked_pow(a.order(), 2 * inst.ground, budget) > budget)
            throw BudgetError("tier 1 pair universe exceeds budget");
        std::set<FunctionVector> flowset;
        for (auto& h : enumerate_flows(dual, a)) flowset.insert(std::move(h));
        auto fns = all_functions(a, inst.ground, false);
        for (const auto& f : fns)
            for (const auto& g : fns) {
                FunctionVector h(inst.ground);
                for (int e = 0; e < inst.ground; ++e) h[e] = a.add(f[e], a.neg(g[e]));
                if (!flowset.count(h)) continue;
                int w = 1;
                for (int e = 0; e < inst.ground && w != 0; ++e)
                    w *= parcel_weight(static_cast<long>(f[e]),
                                       static_cast<long>(g[e]), q);
                out.bins[w] += 1;
            }
        out.tier = 1;
    } else {
        const Int qE = ipow(q, inst.ground);
        for (const auto& h : enumerate_flows(dual, a)) {
            Int nz = 1, diff = 1;
            for (int e = 0; e < inst.ground; ++e) {
                long np = 0, nm = 0;
                for (long c = 0; c < q; ++c) {
                    const long b = static_cast<long>(
                        a.add(static_cast<GElem>(c), h[e]));
                    const int w = parcel_weight(b, c, q);
                    if (w > 0) ++np;
                    if (w < 0) ++nm;
                }
                nz *= np + nm;
                diff *= np - nm;
            }
            if (qE != nz) out.bins[0] += qE - nz;
            if (nz + diff != 0) out.bins[1] += (nz + diff) / 2;
            if (nz - diff != 0) out.bins[-1] += (nz - diff) / 2;
        }
        out.tier = 2;
    }
    out.universe = out.total();
    return out;
}

Census flow_support_census(const Instance& inst, const GroupSpec& a, long sigma) {
    Census out;
    out.family = "flow-support";
    out.sigma = sigma;
    for (const auto& h : enumerate_flows(inst, a))
        out.bins[normalize_residue(support_size(h), sigma)] += 1;
    out.tier = 2;
    out.universe = out.total();
    return out;
}

LaurentPoly support_diff_enumerator(const Instance& inst, const GroupSpec& a) {
    Census c = support_census(inst, a, 1, -1, /*sigma=*/0);
    LaurentPoly out;
    for (const auto& [k, v] : c.bins) out.add_term(static_cast<long>(k), v);
    return out;
}

CycElem gauss_sum(int p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("gauss_sum: p must be an odd prime");
    CycElem omega_sum(p, Int(1));
    std::set<long> squares;
    for (long b = 1; b < p; ++b) squares.insert(b * b % p);
    for (long b : squares)
        omega_sum = omega_sum + CycElem::root_pow(p, b) * Int(2);
    return omega_sum;
}

CycElem quadratic_flow_sum(const Instance& inst) {
    if (!inst.is_gfp())
        throw std::invalid_argument("quadratic_flow_sum: GF(p) instance required");
    const int p = inst.p;
    CycElem total(p);
    for (const auto& h : enumerate_flows(inst, GroupSpec::gfp_vector(p, 1))) {
        long ip = 0;
        for (GElem v : h) ip = (ip + static_cast<long>(v) * static_cast<long>(v)) % p;
        total = total + CycElem::root_pow(p, ip);
    }
    return total;
}

int bicycle_dimension(const Instance& inst) {
    if (!inst.is_gfp())
        throw std::invalid_argument("bicycle_dimension: GF(p) instance required");
    const Instance dual = orthogonal_dual_gfp(inst);
    std::vector<std::vector<int>> stacked = inst.rows;
    stacked.insert(stacked.end(), dual.rows.begin(), dual.rows.end());
    Instance joint = make_gfp_instance(inst.name + "-stack", inst.p, std::move(stacked));
    return inst.ground - joint.rank_full;
}

CycElem census_transform(const Census& c, long sigma, long rho) {
    CycElem out(sigma);
    for (const auto& [k, v] : c.bins)
        out = out + CycElem::root_pow(sigma, rho * k) * v;
    return out;
}

} // namespace parcelforge
