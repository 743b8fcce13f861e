#include <parcelforge/verify.hpp>

#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <parcelforge/poly_engine.hpp>

namespace parcelforge {

namespace {

CycElem rootp(long sigma, long k) { return CycElem::root_pow(sigma, k); }

std::string istr(const Int& v) { return v.get_str(); }

IdentityReport rep0(const std::string& id, const Instance& inst, std::string params,
                    int tier = 2) {
    IdentityReport r;
    r.theorem = id;
    r.instance = inst.name;
    r.params = std::move(params);
    r.tier = tier;
    return r;
}

IdentityReport skipped(const std::string& id, const Instance& inst, std::string params,
                       std::string note) {
    IdentityReport r = rep0(id, inst, std::move(params), 0);
    r.applicable = false;
    r.note = std::move(note);
    return r;
}

void set_cyc(IdentityReport& r, const CycElem& lhs, const CycElem& rhs) {
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.equal = (lhs == rhs);
}

void set_int(IdentityReport& r, const Int& lhs, const Int& rhs) {
    r.lhs = istr(lhs);
    r.rhs = istr(rhs);
    r.equal = (lhs == rhs);
}

// Shared per-instance computations for one check run.
struct Ctx {
    Matroid m;
    int n;
    int r;
    BiPoly R;

    explicit Ctx(const Instance& inst)
        : m(inst), n(inst.ground), r(inst.rank_full), R(rank_gen_poly(m)) {}

    UniPoly flowN(long q) const { return flow_census_poly(m, q); }
    Int chi(long q) const { return char_poly(m).eval(Int(q)); }
};

CycElem eval_cleared_cyc(const BiPoly& rg, const CycElem& A, const CycElem& B,
                         const CycElem& C, const CycElem& D, int r, int n) {
    CycElem acc(A.sigma());
    for (const auto& [key, c] : rg.terms()) {
        const auto [i, j] = key;
        acc = acc + A.pow(i) * B.pow(r - i) * C.pow(j) * D.pow(n - r - j) * c;
    }
    return acc;
}

CycElem eval_bipoly_cyc(const BiPoly& rg, const CycElem& L, const CycElem& X) {
    CycElem acc(L.sigma());
    for (const auto& [key, c] : rg.terms())
        acc = acc + L.pow(key.first) * X.pow(key.second) * c;
    return acc;
}

/*
 * The workhorse identity shape: a parcel transform on the left, and on the
 * right the flow-kernel distribution N_k (recovered from the rank generating
 * polynomial, never from enumeration) paired with the per-edge inner sums
 * (z on kernel edges, nz elsewhere):
 *
 *     sum_k omega^k (census)_k  ==  sum_k N_k z^k nz^(n-k).
 *
 * Whenever z - nz and nz are nonzero the right side also equals the cleared
 * literal form (z-nz)^r nz^(n-r) R(q nz/(z-nz), (z-nz)/nz), which is checked
 * as well; degenerate cells collapse to z^n and are flagged exceptional.
 */
void homog_check(IdentityReport& rep, const Ctx& cx, const Census& cen, long sigma,
                 long rho, long q, const CycElem& z, const CycElem& nz) {
    rep.tier = cen.tier;
    const CycElem lhs = census_transform(cen, sigma, rho);
    const UniPoly N = cx.flowN(q);
    CycElem rhs(sigma);
    for (const auto& [k, c] : N.terms())
        rhs = rhs + z.pow(k) * nz.pow(cx.n - k) * c;
    set_cyc(rep, lhs, rhs);
    const CycElem diff = z - nz;
    if (!diff.is_zero() && !nz.is_zero()) {
        const CycElem literal =
            eval_cleared_cyc(cx.R, nz * Int(q), diff, diff, nz, cx.r, cx.n);
        if (literal != rhs) {
            rep.equal = false;
            rep.note = "cleared literal form disagrees with kernel-distribution form";
        }
    } else {
        rep.exceptional = true;
        if (rep.note.empty()) rep.note = "degenerate cell: right side collapses to z^|E|";
    }
}

bool binary_ok(const Instance& inst) { return !inst.is_gfp() || inst.p == 2; }

GroupSpec binary_group(const Instance& inst) {
    return inst.is_gfp() ? GroupSpec::gfp_vector(2, 1) : GroupSpec::cyclic(2);
}

long inv_mod(long a, long p) {  // p prime, a != 0 mod p
    long t = 1, base = a % p;
    for (long e = p - 2; e > 0; e >>= 1) {
        if (e & 1) t = t * base % p;
        base = base * base % p;
    }
    return t;
}

std::string fmt_sqr(long sigma, long q, long rho) {
    std::ostringstream os;
    os << "sigma=" << sigma << " q=" << q << " rho=" << rho;
    return os.str();
}

using Handler = std::function<std::vector<IdentityReport>(const Instance&, const VerifyParams&)>;

// ---------------------------------------------------------------------------
// Section 1: subset pairs whose symmetric difference is a disjoint union of
// minimal cutsets (cut space) or of cycles (cycle space), binned mod 4.
// ---------------------------------------------------------------------------

std::vector<IdentityReport> check_thm1_1(const Instance& inst, const VerifyParams&) {
    if (!inst.is_graph())
        return {skipped("thm1.1", inst, "", "graph instances only")};
    const OrientedGraph& g = *inst.graph;
    const int n = g.edge_count();
    const int c = g.component_count();
    if (n > 12) return {skipped("thm1.1", inst, "", "2^(2|E|) pair sweep over budget")};

    std::vector<IdentityReport> out;
    for (int side = 0; side < 2; ++side) {
        const bool cut_side = (side == 0);
        Instance si = make_graph_instance(inst.name, g, /*cycle_side=*/!cut_side);
        // the GF(2) row space, as edge masks
        std::set<std::uint32_t> space;
        for (const FunctionVector& h : enumerate_flows(si, GroupSpec::cyclic(2))) {
            std::uint32_t mask = 0;
            for (int e = 0; e < n; ++e)
                if (h[e]) mask |= std::uint32_t{1} << e;
            space.insert(mask);
        }

        // tier 1: all subset pairs (A, B), binned by |A| + |B| - |E| mod 4
        std::vector<Int> bins1(4, Int(0));
        for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a)
            for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b)
                if (space.count(a ^ b))
                    bins1[(std::popcount(a) + std::popcount(b) + 4 * n - n) % 4] += 1;

        // tier 2: per space member D, pairs with ADB = D contribute
        // 2^|D| x^|D| (1 + x^2)^(|E|-|D|)
        std::vector<Int> bins2(4, Int(0));
        for (std::uint32_t d : space) {
            const int dsz = std::popcount(d);
            for (int a2 = 0; a2 <= n - dsz; ++a2) {
                Int binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - dsz),
                             static_cast<unsigned long>(a2));
                bins2[(dsz + 2 * a2 + 4 * n - n) % 4] += binom << dsz;
            }
        }

        // census route: the sigma = 4 support census over Z_2 on the same side
        Census cen = support_census(si, GroupSpec::cyclic(2), 1, 1, 4);

        IdentityReport rep =
            rep0("thm1.1", inst, cut_side ? "side=cutset" : "side=cycle", 1);
        bool ok = (bins1 == bins2);
        if (!ok) rep.note = "pair sweep disagrees with factored route";
        for (int k = 0; k < 4 && ok; ++k)
            if (bins1[k] != cen.count((n + k) % 4)) {
                ok = false;
                rep.note = "pair sweep disagrees with support census route";
            }
        if (ok && bins1[1] != bins1[3]) {
            ok = false;
            rep.note = "odd parcels differ";
        }
        const Int lhs = bins1[0] - bins1[2];
        const Int rhs = cut_side ? ipow(2, n - c) * chromatic_poly(g).eval(Int(2))
                                 : ipow(2, n) * flow_poly(g).eval(Int(2));
        set_int(rep, lhs, rhs);
        rep.equal = rep.equal && ok;
        out.push_back(rep);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Section 2: the odd-q three-parcel identity over the orthogonal dual.
// ---------------------------------------------------------------------------

std::vector<IdentityReport> check_prop2_5(const Instance& inst, const VerifyParams& p) {
    std::ostringstream os;
    os << "q=" << p.q;
    if (inst.is_gfp())
        return {skipped("prop2.5", inst, os.str(), "needs an integer orthogonal dual")};
    if (p.q < 3 || p.q % 2 == 0)
        return {skipped("prop2.5", inst, os.str(), "odd q >= 3 only")};
    Ctx cx(inst);
    Census cen = prop25_census(inst, p.q, p.tier);
    IdentityReport rep = rep0("prop2.5", inst, os.str(), cen.tier);
    set_int(rep, cen.count(1) - cen.count(-1), ipow(p.q, cx.n - cx.r) * cx.chi(p.q));
    return {rep};
}

// ---------------------------------------------------------------------------
// Section 3: Hamming-distance parcels.
// ---------------------------------------------------------------------------

std::vector<IdentityReport> check_thm3_1(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    if (!a) return {skipped("thm3.1", inst, fmt_sqr(p.sigma, p.q, p.rho), "no group of this order")};
    Ctx cx(inst);
    Census cen = hamming_census(inst, *a, p.sigma, false, p.tier);
    IdentityReport rep = rep0("thm3.1", inst, fmt_sqr(p.sigma, p.q, p.rho));
    homog_check(rep, cx, cen, p.sigma, p.rho, p.q, CycElem(p.sigma, p.q),
                rootp(p.sigma, p.rho) * Int(p.q));
    return {rep};
}

std::vector<IdentityReport> check_cor3_2(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "q=" << p.q;
    if (!a) return {skipped("cor3.2", inst, os.str(), "no group of this order")};
    Ctx cx(inst);
    Census cen = hamming_census(inst, *a, 2, false, p.tier);
    IdentityReport rep = rep0("cor3.2", inst, os.str(), cen.tier);
    const Int rhs = Int(sign_pow(cx.n - cx.r)) * ipow(p.q, cx.n) *
                    eval_cleared(cx.R, Int(-p.q), 2, -2, 1, cx.r, cx.n);
    set_int(rep, cen.count(0) - cen.count(1), rhs);
    return {rep};
}

std::vector<IdentityReport> check_thm3_3(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    if (!a) return {skipped("thm3.3", inst, fmt_sqr(p.sigma, p.q, p.rho), "no group of this order")};
    Census cen = hamming_census(inst, *a, p.sigma, true, p.tier);
    IdentityReport rep = rep0("thm3.3", inst, fmt_sqr(p.sigma, p.q, p.rho), cen.tier);
    if (p.q == 2) {
        // only the all-ones pair survives, so the transform is 1
        rep.exceptional = true;
        rep.note = "q=2: single nowhere-zero pair";
        set_cyc(rep, census_transform(cen, p.sigma, p.rho), CycElem(p.sigma, 1));
        return {rep};
    }
    Ctx cx(inst);
    homog_check(rep, cx, cen, p.sigma, p.rho, p.q, CycElem(p.sigma, p.q - 1),
                rootp(p.sigma, p.rho) * Int(p.q - 2));
    return {rep};
}

std::vector<IdentityReport> check_cor3_4(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "q=" << p.q;
    if (!a || p.q == 2) return {skipped("cor3.4", inst, os.str(), "needs q > 2")};
    Ctx cx(inst);
    Census cen = hamming_census(inst, *a, 1, true, p.tier);
    IdentityReport rep = rep0("cor3.4", inst, os.str(), cen.tier);
    set_int(rep, cen.total(),
            eval_cleared(cx.R, Int(p.q) * (p.q - 2), 1, 1, Int(p.q - 2), cx.r, cx.n));
    return {rep};
}

std::vector<IdentityReport> check_cor3_5(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "q=" << p.q;
    if (!a || p.q == 2) return {skipped("cor3.5", inst, os.str(), "needs q > 2")};
    Ctx cx(inst);
    Census cen = hamming_census(inst, *a, 2, true, p.tier);
    std::vector<IdentityReport> out;
    IdentityReport rep = rep0("cor3.5", inst, os.str(), cen.tier);
    const Int lhs = cen.count(0) - cen.count(1);
    const Int rhs = Int(sign_pow(cx.n - cx.r)) *
                    eval_cleared(cx.R, Int(-p.q) * (p.q - 2), Int(2 * p.q - 3),
                                 Int(-(2 * p.q - 3)), Int(p.q - 2), cx.r, cx.n);
    set_int(rep, lhs, rhs);
    out.push_back(rep);
    if (p.q == 3 && !inst.is_gfp()) {
        IdentityReport rep2 = rep0("cor3.5", inst, os.str() + " eq=dual", cen.tier);
        Ctx dx(dual_of(inst));
        set_int(rep2, lhs, ipow(3, cx.r) * dx.chi(3));
        out.push_back(rep2);
    }
    return out;
}

std::vector<IdentityReport> check_cor3_6(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, 3);
    std::ostringstream os;
    os << "rho=" << p.rho;
    if (!a) return {skipped("cor3.6", inst, os.str(), "needs a group of order 3")};
    Ctx cx(inst);
    Census cen = hamming_census(inst, *a, 6, true, p.tier);
    IdentityReport rep = rep0("cor3.6", inst, os.str(), cen.tier);
    // omega^(|E|-r) (2-omega)^r R(3 omega/(2-omega), (2-omega)/omega)
    const CycElem w6 = rootp(6, p.rho);
    const CycElem rhs = eval_cleared_cyc(cx.R, w6 * Int(3), CycElem(6, 2) - w6,
                                         CycElem(6, 2) - w6, w6, cx.r, cx.n);
    set_cyc(rep, census_transform(cen, 6, p.rho), rhs);
    // must also match the generic nowhere-zero route
    IdentityReport rep2 = rep0("cor3.6", inst, os.str() + " eq=homog", cen.tier);
    homog_check(rep2, cx, cen, 6, p.rho, 3, CycElem(6, 2), w6);
    return {rep, rep2};
}

// ---------------------------------------------------------------------------
// Section 4: weighted-support parcels.
// ---------------------------------------------------------------------------

std::string fmt_ab(long sigma, long q, long rho, long alpha, long beta) {
    std::ostringstream os;
    os << fmt_sqr(sigma, q, rho) << " alpha=" << alpha << " beta=" << beta;
    return os.str();
}

std::vector<IdentityReport> support_pair_check(const std::string& id, const Instance& inst,
                                               const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    const std::string params = fmt_ab(p.sigma, p.q, p.rho, p.alpha, p.beta);
    if (!a) return {skipped(id, inst, params, "no group of this order")};
    if (p.alpha % p.sigma == 0 || p.beta % p.sigma == 0)
        return {skipped(id, inst, params, "weights must be nonzero mod sigma")};
    Ctx cx(inst);
    Census cen = support_census(inst, *a, p.alpha, p.beta, p.sigma, p.tier);
    IdentityReport rep = rep0(id, inst, params);
    const CycElem wa = rootp(p.sigma, p.rho * p.alpha);
    const CycElem wb = rootp(p.sigma, p.rho * p.beta);
    const CycElem wab = rootp(p.sigma, p.rho * (p.alpha + p.beta));
    homog_check(rep, cx, cen, p.sigma, p.rho, p.q, CycElem(p.sigma, 1) + wab * Int(p.q - 1),
                wa + wb + wab * Int(p.q - 2));
    return {rep};
}

std::vector<IdentityReport> check_thm4_1(const Instance& inst, const VerifyParams& p) {
    return support_pair_check("thm4.1", inst, p);
}

std::vector<IdentityReport> check_thm4_2(const Instance& inst, const VerifyParams& pin) {
    VerifyParams p = pin;
    p.alpha = p.beta = 1;
    auto out = support_pair_check("thm4.2", inst, p);
    // pin the stated constant on the exceptional cell
    if (p.sigma == 2 && p.q == 4 && out.size() == 1 && out[0].applicable) {
        auto a = group_of_order(inst, 4);
        if (a) {
            Census cen = support_census(inst, *a, 1, 1, 2, p.tier);
            IdentityReport rep = rep0("thm4.2", inst, fmt_ab(2, 4, p.rho, 1, 1) + " eq=const",
                                      cen.tier);
            rep.exceptional = true;
            set_int(rep, cen.count(0) - cen.count(1), ipow(4, inst.ground));
            out.push_back(rep);
        }
    }
    return out;
}

std::vector<IdentityReport> check_cor4_3(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "q=" << p.q;
    if (!a || p.q == 4) return {skipped("cor4.3", inst, os.str(), "needs q != 4")};
    Ctx cx(inst);
    Census cen = support_census(inst, *a, 1, 1, 2, p.tier);
    std::vector<IdentityReport> out;
    IdentityReport rep = rep0("cor4.3", inst, os.str(), cen.tier);
    const Int lhs = cen.count(0) - cen.count(1);
    set_int(rep, lhs,
            eval_cleared(cx.R, Int(p.q) * (p.q - 4), 4, 4, Int(p.q - 4), cx.r, cx.n));
    out.push_back(rep);
    if (p.q == 2) {
        IdentityReport rep2 = rep0("cor4.3", inst, os.str() + " eq=dual", cen.tier);
        Ctx dx(dual_of(inst));
        set_int(rep2, lhs, ipow(2, cx.n + cx.r) * dx.chi(2));
        out.push_back(rep2);
    }
    return out;
}

std::vector<IdentityReport> check_cor4_4(const Instance& inst, const VerifyParams& pin) {
    if (!binary_ok(inst))
        return {skipped("cor4.4", inst, fmt_sqr(pin.sigma, 2, pin.rho), "binary only")};
    VerifyParams p = pin;
    p.q = 2;
    p.alpha = p.beta = 1;
    auto out = support_pair_check("cor4.4", inst, p);
    return out;
}

std::vector<IdentityReport> check_cor4_5(const Instance& inst, const VerifyParams& p) {
    if (!binary_ok(inst)) return {skipped("cor4.5", inst, "", "binary only")};
    const GroupSpec a = binary_group(inst);
    Ctx cx(inst);
    std::vector<IdentityReport> out;
    {
        Census cen = support_census(inst, a, 1, 1, 3, p.tier);
        IdentityReport rep = rep0("cor4.5", inst, "sigma=3", cen.tier);
        const Int cleared = eval_cleared(cx.R, -4, 3, -3, 2, cx.r, cx.n);
        set_cyc(rep, census_transform(cen, 3, 1),
                rootp(3, cx.n) * (cleared * sign_pow(cx.r)));
        out.push_back(rep);
    }
    {
        Census cen = support_census(inst, a, 1, 1, 4, p.tier);
        IdentityReport rep = rep0("cor4.5", inst, "sigma=4", cen.tier);
        set_cyc(rep, census_transform(cen, 4, 1),
                rootp(4, cx.n) * (ipow(2, cx.n) * cx.chi(2)));
        out.push_back(rep);
    }
    {
        Census cen = support_census(inst, a, 1, 1, 6, p.tier);
        IdentityReport rep = rep0("cor4.5", inst, "sigma=6", cen.tier);
        const Int cleared = eval_cleared(cx.R, -4, 1, -1, 2, cx.r, cx.n);
        set_cyc(rep, census_transform(cen, 6, 1),
                rootp(6, cx.n) * (cleared * sign_pow(cx.r)));
        out.push_back(rep);
    }
    return out;
}

std::vector<IdentityReport> check_cor4_6(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, 3);
    std::ostringstream os;
    os << "rho=" << p.rho;
    if (!a) return {skipped("cor4.6", inst, os.str(), "needs a group of order 3")};
    Ctx cx(inst);
    Census cen = support_census(inst, *a, 1, 1, 3, p.tier);
    IdentityReport rep = rep0("cor4.6", inst, os.str(), cen.tier);
    // (-1)^(|E|-r) (1-omega)^(|E|+r) R(3/(omega-1), omega-1)
    //   == (omega-1)^|E| . (omega-1)^r R(3/(omega-1), omega-1)
    const CycElem wm1 = rootp(3, p.rho) - CycElem(3, 1);
    const CycElem rhs = wm1.pow(cx.n) * eval_cleared_cyc(cx.R, CycElem(3, 3), wm1, wm1,
                                                         CycElem(3, 1), cx.r, cx.n);
    set_cyc(rep, census_transform(cen, 3, p.rho), rhs);
    return {rep};
}

std::vector<IdentityReport> check_thm4_7(const Instance& inst, const VerifyParams& pin) {
    VerifyParams p = pin;
    p.alpha = 1;
    p.beta = p.sigma - 1;
    auto out = support_pair_check("thm4.7", inst, p);
    if (out.size() == 1 && out[0].applicable && out[0].exceptional) {
        // the three stated exceptional cells collapse to q^|E|
        const bool named = (p.sigma == 2 && p.q == 4) || (p.sigma == 3 && p.q == 3) ||
                           (p.sigma == 4 && p.q == 2);
        if (named) out[0].note += "; constant cell q^|E|";
    }
    return out;
}

std::vector<IdentityReport> check_cor4_8(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    const std::string params = fmt_sqr(p.sigma, p.q, p.rho);
    if (!a) return {skipped("cor4.8", inst, params, "no group of this order")};
    Census cen = support_census(inst, *a, 1, -1, p.sigma, p.tier);
    IdentityReport rep = rep0("cor4.8", inst, params, cen.tier);
    const CycElem lhs = census_transform(cen, p.sigma, p.rho);
    set_cyc(rep, lhs, lhs.conj());  // vanishing imaginary part
    return {rep};
}

std::vector<IdentityReport> check_prop4_9(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "sigma=" << p.sigma << " q=" << p.q;
    if (!a) return {skipped("prop4.9", inst, os.str(), "no group of this order")};
    Census cen = support_census(inst, *a, 1, -1, p.sigma, p.tier);
    IdentityReport rep = rep0("prop4.9", inst, os.str(), cen.tier);
    bool sym = true;
    for (long k = 1; k < p.sigma; ++k)
        if (cen.count(k) != cen.count(p.sigma - k)) sym = false;
    rep.lhs = sym ? "symmetric" : "asymmetric";
    rep.rhs = "symmetric";
    rep.equal = sym;
    return {rep};
}

std::vector<IdentityReport> check_cor4_10(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "q=" << p.q;
    if (!a || p.q == 3) return {skipped("cor4.10", inst, os.str(), "needs q != 3")};
    Ctx cx(inst);
    Census cen = support_census(inst, *a, 1, -1, 3, p.tier);
    std::vector<IdentityReport> out;
    IdentityReport rep = rep0("cor4.10", inst, os.str(), cen.tier);
    const Int lhs = cen.count(0) - cen.count(1);
    set_int(rep, lhs,
            eval_cleared(cx.R, Int(p.q) * (p.q - 3), 3, 3, Int(p.q - 3), cx.r, cx.n));
    out.push_back(rep);
    if (p.q == 2) {
        IdentityReport rep2 = rep0("cor4.10", inst, os.str() + " eq=binary", cen.tier);
        set_int(rep2, lhs,
                Int(sign_pow(cx.n - cx.r)) * eval_cleared(cx.R, -2, 3, -3, 1, cx.r, cx.n));
        out.push_back(rep2);
    }
    return out;
}

std::vector<IdentityReport> check_cor4_11(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "q=" << p.q;
    if (!a || p.q == 2) return {skipped("cor4.11", inst, os.str(), "needs q != 2")};
    Ctx cx(inst);
    Census cen = support_census(inst, *a, 1, -1, 4, p.tier);
    IdentityReport rep = rep0("cor4.11", inst, os.str(), cen.tier);
    set_int(rep, cen.count(0) - cen.count(2),
            eval_cleared(cx.R, Int(p.q) * (p.q - 2), 2, 2, Int(p.q - 2), cx.r, cx.n));
    return {rep};
}

std::vector<IdentityReport> check_cor4_12(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "q=" << p.q;
    if (!a) return {skipped("cor4.12", inst, os.str(), "no group of this order")};
    Ctx cx(inst);
    Census cen = support_census(inst, *a, 1, -1, 6, p.tier);
    IdentityReport rep = rep0("cor4.12", inst, os.str(), cen.tier);
    set_int(rep, cen.count(0) + cen.count(1) - cen.count(2) - cen.count(3),
            eval_cleared(cx.R, Int(p.q) * (p.q - 1), 1, 1, Int(p.q - 1), cx.r, cx.n));
    return {rep};
}

std::vector<IdentityReport> check_thm4_13(const Instance& inst, const VerifyParams& pin) {
    VerifyParams p = pin;
    const long tau = p.sigma / 2;
    p.alpha = 1;
    p.beta = tau - 1;
    if (p.sigma % 2 != 0 || tau < 2)
        return {skipped("thm4.13", inst, fmt_sqr(p.sigma, p.q, p.rho), "even sigma = 2 tau only")};
    return support_pair_check("thm4.13", inst, p);
}

std::vector<IdentityReport> check_cor4_14(const Instance& inst, const VerifyParams& p) {
    const long tau = p.sigma / 2;
    const std::string params = fmt_sqr(p.sigma, 2, p.rho);
    if (!binary_ok(inst)) return {skipped("cor4.14", inst, params, "binary only")};
    if (p.sigma % 2 != 0 || tau < 2)
        return {skipped("cor4.14", inst, params, "even sigma = 2 tau only")};
    Ctx cx(inst);
    Census cen = support_census(inst, binary_group(inst), 1, tau - 1, p.sigma, p.tier);
    IdentityReport rep = rep0("cor4.14", inst, params, cen.tier);
    const CycElem twosin = rootp(p.sigma, p.rho) - rootp(p.sigma, -p.rho);
    set_cyc(rep, census_transform(cen, p.sigma, p.rho), twosin.pow(cx.n) * cx.chi(2));
    return {rep};
}

std::vector<IdentityReport> check_cor4_15(const Instance& inst, const VerifyParams& p) {
    if (!binary_ok(inst)) return {skipped("cor4.15", inst, "", "binary only")};
    Ctx cx(inst);
    Census cen = support_census(inst, binary_group(inst), 1, 1, 4, p.tier);
    std::vector<IdentityReport> out;
    const Int chi2 = cx.chi(2);
    {
        IdentityReport rep = rep0("cor4.15", inst, "eq=difference", cen.tier);
        set_int(rep, cen.count(cx.n % 4) - cen.count((cx.n + 2) % 4),
                ipow(2, cx.n) * chi2);
        out.push_back(rep);
    }
    {
        IdentityReport rep = rep0("cor4.15", inst, "eq=odd-parcels", cen.tier);
        set_int(rep, cen.count((cx.n + 1) % 4), cen.count((cx.n + 3) % 4));
        out.push_back(rep);
    }
    {
        IdentityReport rep = rep0("cor4.15", inst, "eq=affine", cen.tier);
        const Instance bin = inst.is_gfp() ? inst : reduce_mod_p(inst, 2);
        const bool affine = is_binary_affine(bin, cx.m.full_mask());
        rep.lhs = (cen.count(cx.n % 4) != cen.count((cx.n + 2) % 4)) ? "affine" : "not-affine";
        rep.rhs = affine ? "affine" : "not-affine";
        rep.equal = (rep.lhs == rep.rhs) && ((chi2 != 0) == affine);
        out.push_back(rep);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Set-operation parcels.
// ---------------------------------------------------------------------------

struct SetopShape {
    SetOp op;
    // inner sums as functions of (sigma, rho, q)
    CycElem z, nz;
};

SetopShape setop_shape(SetOp op, long sigma, long rho, long q) {
    const CycElem one(sigma, 1);
    const CycElem w = rootp(sigma, rho);
    switch (op) {
        case SetOp::Union: return {op, one + w * Int(q - 1), w * Int(q)};
        case SetOp::Intersect: return {op, one + w * Int(q - 1), CycElem(sigma, 2) + w * Int(q - 2)};
        case SetOp::SymDiff: return {op, CycElem(sigma, q), w * Int(2) + CycElem(sigma, q - 2)};
        case SetOp::Stroke: return {op, w + CycElem(sigma, q - 1), CycElem(sigma, q)};
        case SetOp::Implies: return {op, w * Int(q), one + w * Int(q - 1)};
    }
    throw std::logic_error("setop_shape: bad op");
}

std::vector<IdentityReport> check_thm4_16(const std::string& id, SetOp op,
                                          const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    const std::string params = fmt_sqr(p.sigma, p.q, p.rho);
    if (!a) return {skipped(id, inst, params, "no group of this order")};
    Ctx cx(inst);
    Census cen = setop_census(inst, *a, op, p.sigma, p.tier);
    IdentityReport rep = rep0(id, inst, params);
    const SetopShape s = setop_shape(op, p.sigma, p.rho, p.q);
    homog_check(rep, cx, cen, p.sigma, p.rho, p.q, s.z, s.nz);
    return {rep};
}

std::vector<IdentityReport> check_cor4_17(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "q=" << p.q;
    if (!a) return {skipped("cor4.17", inst, os.str(), "no group of this order")};
    Ctx cx(inst);
    const long q = p.q;
    std::vector<IdentityReport> out;
    auto one = [&](SetOp op, const char* tag, bool applicable_cell, const Int& rhs) {
        Census cen = setop_census(inst, *a, op, 2, p.tier);
        IdentityReport rep = rep0("cor4.17", inst, os.str() + " eq=" + tag, cen.tier);
        if (!applicable_cell) {
            rep.applicable = false;
            rep.note = "excluded q for this operation";
            out.push_back(rep);
            return;
        }
        set_int(rep, cen.count(0) - cen.count(1), rhs);
        out.push_back(rep);
    };
    const Int e_unionstroke = eval_cleared(cx.R, Int(-q) * q, 2, -2, Int(q), cx.r, cx.n);
    one(SetOp::Union, "union", true, Int(sign_pow(cx.n + cx.r)) * e_unionstroke);
    one(SetOp::Stroke, "stroke", true, Int(sign_pow(cx.r)) * e_unionstroke);
    one(SetOp::Intersect, "intersect", q != 4,
        Int(sign_pow(cx.r)) *
            eval_cleared(cx.R, Int(-q) * (4 - q), 2, -2, Int(4 - q), cx.r, cx.n));
    one(SetOp::SymDiff, "symdiff", q != 4,
        eval_cleared(cx.R, Int(q) * (q - 4), 4, 4, Int(q - 4), cx.r, cx.n));
    one(SetOp::Implies, "implies", q != 2,
        Int(sign_pow(cx.n)) *
            eval_cleared(cx.R, Int(q) * (q - 2), 2, 2, Int(q - 2), cx.r, cx.n));
    return out;
}

std::vector<IdentityReport> check_cor4_18(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, 3);
    if (!a) return {skipped("cor4.18", inst, "", "needs a group of order 3")};
    Ctx cx(inst);
    Census cen = setop_census(inst, *a, SetOp::Implies, 3, p.tier);
    IdentityReport rep = rep0("cor4.18", inst, "", cen.tier);
    // sqrt3^|E| e^((3|E|+2r) pi i / 6) R(3 e^(-pi i/3), e^(pi i/3)) in Z[omega_12].
    // The phase exponent is the one forced by the general implication identity
    // with q = 3: (omega-1)^r (1+2 omega)^(|E|-r) = sqrt3^|E| e^((3|E|+2r) pi i/6).
    const CycElem sqrt3 = rootp(12, 1) + rootp(12, -1);
    const CycElem rhs = sqrt3.pow(cx.n) * rootp(12, 3 * cx.n + 2 * cx.r) *
                        eval_bipoly_cyc(cx.R, rootp(12, -2) * Int(3), rootp(12, 2));
    set_cyc(rep, census_transform(cen, 3, 1).lift(12), rhs);
    rep.note = "phase corrected to (3|E|+2r) pi/6; the stated 5r phase contradicts "
               "the general implication identity";
    return {rep};
}

// ---------------------------------------------------------------------------
// Section 5: tuple parcels.
// ---------------------------------------------------------------------------

std::vector<IdentityReport> check_thm5_1(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    const std::string params = fmt_sqr(p.sigma, p.q, 1);
    if (!a) return {skipped("thm5.1", inst, params, "no group of this order")};
    Census cen = tuple_census(inst, *a, 2, p.sigma, p.tier);
    IdentityReport rep = rep0("thm5.1", inst, params, cen.tier);
    const CycElem lhs = census_transform(cen, p.sigma, 1);
    // flow-pair sum with per-edge factors from direct association
    const auto flows = enumerate_flows(inst, *a);
    CycElem rhs(p.sigma);
    for (const FunctionVector& h1 : flows)
        for (const FunctionVector& h2 : flows) {
            CycElem term(p.sigma, 1);
            for (int e = 0; e < inst.ground; ++e) {
                CycElem factor(p.sigma);
                for (GElem c = 0; c < a->order(); ++c) {
                    const GElem f2 = a->add(h2[e], c);
                    const GElem f1 = a->add(h1[e], f2);
                    const int stat = (!a->is_zero(f1)) + (!a->is_zero(f2)) + (!a->is_zero(c));
                    factor = factor + rootp(p.sigma, stat);
                }
                term = term * factor;
            }
            rhs = rhs + term;
        }
    set_cyc(rep, lhs, rhs);
    return {rep};
}

std::vector<IdentityReport> check_thm5_2(const Instance& inst, const VerifyParams& p) {
    const std::string params = fmt_sqr(p.sigma, 2, p.rho);
    if (!binary_ok(inst)) return {skipped("thm5.2", inst, params, "binary only")};
    if (p.sigma <= 2) return {skipped("thm5.2", inst, params, "sigma > 2 only")};
    Ctx cx(inst);
    Census cen = tuple_census(inst, binary_group(inst), 2, p.sigma, p.tier);
    IdentityReport rep = rep0("thm5.2", inst, params, cen.tier);
    // pair flows form a group of order 4; inner sums (1 + w^3, w + w^2)
    const CycElem one(p.sigma, 1);
    homog_check(rep, cx, cen, p.sigma, p.rho, 4, one + rootp(p.sigma, 3 * p.rho),
                rootp(p.sigma, p.rho) + rootp(p.sigma, 2 * p.rho));
    return {rep};
}

std::vector<IdentityReport> check_cor5_3(const Instance& inst, const VerifyParams& p) {
    if (!binary_ok(inst)) return {skipped("cor5.3", inst, "", "binary only")};
    Ctx cx(inst);
    Census cen = tuple_census(inst, binary_group(inst), 2, 3, p.tier);
    IdentityReport rep = rep0("cor5.3", inst, "", cen.tier);
    // doubled to stay over Z
    set_int(rep, 2 * cen.count(0) - cen.count(1) - cen.count(2),
            Int(2 * sign_pow(cx.n - cx.r)) * eval_cleared(cx.R, -4, 3, -3, 1, cx.r, cx.n));
    return {rep};
}

std::vector<IdentityReport> check_cor5_4(const Instance& inst, const VerifyParams& p) {
    if (!binary_ok(inst)) return {skipped("cor5.4", inst, "", "binary only")};
    Ctx cx(inst);
    Census cen = tuple_census(inst, binary_group(inst), 2, 4, p.tier);
    IdentityReport rep = rep0("cor5.4", inst, "", cen.tier);
    const CycElem onemi = CycElem(4, 1) - rootp(4, 1);
    set_cyc(rep, census_transform(cen, 4, 1),
            onemi.pow(cx.n) *
                (Int(sign_pow(cx.n - cx.r)) * ipow(2, cx.r) * cx.R.eval(-2, -2)));
    return {rep};
}

std::vector<IdentityReport> check_cor5_5(const Instance& inst, const VerifyParams& p) {
    if (!binary_ok(inst)) return {skipped("cor5.5", inst, "", "binary only")};
    Ctx cx(inst);
    Census cen = tuple_census(inst, binary_group(inst), 2, 6, p.tier);
    std::vector<IdentityReport> out;
    const Int chi4 = cx.chi(4);
    const Int t0 = cen.count(0), t1 = cen.count(1), t2 = cen.count(2);
    const Int t3 = cen.count(3), t4 = cen.count(4), t5 = cen.count(5);
    {
        // sum_k e^(k pi i/3) |T(k,6)| = (sqrt3 i)^|E| chi(M;4), in Z[omega_12]
        IdentityReport rep = rep0("cor5.5", inst, "eq=base", cen.tier);
        const CycElem s3i = rootp(12, 2) + rootp(12, 4);
        set_cyc(rep, census_transform(cen, 6, 1).lift(12), s3i.pow(cx.n) * chi4);
        out.push_back(rep);
    }
    if (cx.n % 2 == 0) {
        IdentityReport rep = rep0("cor5.5", inst, "eq=real", cen.tier);
        set_int(rep, t0 + t1 - t3 - t4, ipow(-3, cx.n / 2) * chi4);
        out.push_back(rep);
        IdentityReport rep2 = rep0("cor5.5", inst, "eq=imag", cen.tier);
        set_int(rep2, t1 + t2 - t4 - t5, 0);
        out.push_back(rep2);
    } else {
        const Int scale = ipow(-3, (cx.n - 1) / 2) * chi4;
        IdentityReport rep = rep0("cor5.5", inst, "eq=real", cen.tier);
        set_int(rep, t0 + t1 - t3 - t4, scale);
        out.push_back(rep);
        IdentityReport rep2 = rep0("cor5.5", inst, "eq=imag", cen.tier);
        set_int(rep2, t1 + t2 - t4 - t5, 2 * scale);
        out.push_back(rep2);
        IdentityReport rep3 = rep0("cor5.5", inst, "eq=balance", cen.tier);
        set_int(rep3, 2 * t0 + t1 - t2 - 2 * t3 - t4 + t5, 0);
        out.push_back(rep3);
    }
    return out;
}

std::vector<IdentityReport> check_thm5_6(const Instance& inst, const VerifyParams& p) {
    std::ostringstream os;
    os << "m=" << p.m;
    if (!binary_ok(inst)) return {skipped("thm5.6", inst, os.str(), "binary only")};
    if (p.m < 2) return {skipped("thm5.6", inst, os.str(), "m >= 2 only")};
    Ctx cx(inst);
    const long sigma = 2 * p.m + 2;
    Census cen = tuple_census(inst, binary_group(inst), p.m, sigma, p.tier);
    IdentityReport rep = rep0("thm5.6", inst, os.str(), cen.tier);
    const CycElem lhs = census_transform(cen, sigma, 1);
    const Int chiq = cx.chi(1L << p.m);
    rep.lhs = lhs.is_zero() ? "zero" : "nonzero";
    rep.rhs = (chiq == 0) ? "zero" : "nonzero";
    rep.equal = (lhs.is_zero() == (chiq == 0));
    rep.note = "transform " + lhs.to_string() + ", chi(M;2^m) = " + istr(chiq);
    return {rep};
}

// ---------------------------------------------------------------------------
// Section 6: inner-product parcels over GF(p).
// ---------------------------------------------------------------------------

std::vector<IdentityReport> check_thm6_1(const Instance& inst, const VerifyParams& p) {
    std::ostringstream os;
    os << "rho=" << p.rho;
    if (!inst.is_gfp() || inst.p == 2)
        return {skipped("thm6.1", inst, os.str(), "odd prime fields only")};
    const int pp = inst.p;
    Census cen = inner_product_census(inst, pp, p.tier);
    IdentityReport rep = rep0("thm6.1", inst, os.str(), cen.tier);
    const CycElem lhs = census_transform(cen, pp, p.rho);
    // Omega^|E| sum_h omega^(-<h,h>/4)
    const long inv4 = inv_mod(4 % pp, pp);
    std::vector<CycElem> wts;
    wts.reserve(pp);
    for (long v = 0; v < pp; ++v)
        wts.push_back(rootp(pp, -p.rho * ((inv4 * ((v * v) % pp)) % pp)));
    const CycElem hsum = weighted_profile_census(inst, GroupSpec::gfp_vector(pp, 1), wts);
    set_cyc(rep, lhs, gauss_sum(pp).galois(p.rho).pow(inst.ground) * hsum);
    return {rep};
}

std::vector<IdentityReport> check_cor6_2(const Instance& inst, const VerifyParams& p) {
    std::ostringstream os;
    os << "rho=" << p.rho;
    if (!inst.is_gfp() || inst.p != 3)
        return {skipped("cor6.2", inst, os.str(), "GF(3) only")};
    Ctx cx(inst);
    Census cen = inner_product_census(inst, 3, p.tier);
    IdentityReport rep = rep0("cor6.2", inst, os.str(), cen.tier);
    // Omega^|E| omega^(-|E|) (omega-1)^r R(3/(omega-1), omega-1)
    const CycElem wm1 = rootp(3, p.rho) - CycElem(3, 1);
    const CycElem rhs = gauss_sum(3).galois(p.rho).pow(cx.n) * rootp(3, -p.rho * cx.n) *
                        eval_cleared_cyc(cx.R, CycElem(3, 3), wm1, wm1, CycElem(3, 1),
                                         cx.r, cx.n);
    set_cyc(rep, census_transform(cen, 3, p.rho), rhs);
    return {rep};
}

std::vector<IdentityReport> check_sec6_p2(const Instance& inst, const VerifyParams& p) {
    if (!inst.is_gfp() || inst.p != 2)
        return {skipped("sec6-p2", inst, "", "GF(2) only")};
    Ctx cx(inst);
    Census cen = inner_product_census(inst, 2, p.tier);
    Census cap = setop_census(inst, GroupSpec::gfp_vector(2, 1), SetOp::Intersect, 2, p.tier);
    std::vector<IdentityReport> out;
    {
        IdentityReport rep = rep0("sec6-p2", inst, "eq=intersect", cen.tier);
        rep.lhs = "inner-product bins";
        rep.rhs = "intersection bins";
        rep.equal = cen.same_counts(cap);
        out.push_back(rep);
    }
    {
        IdentityReport rep = rep0("sec6-p2", inst, "eq=difference", cen.tier);
        set_int(rep, cen.count(0) - cen.count(1), ipow(2, cx.n) * cx.chi(2));
        out.push_back(rep);
    }
    return out;
}

std::vector<IdentityReport> check_sec6_modulus(const Instance& inst, const VerifyParams&) {
    if (!inst.is_gfp() || inst.p == 2)
        return {skipped("sec6-modulus", inst, "", "odd prime fields only")};
    IdentityReport rep = rep0("sec6-modulus", inst, "", 2);
    const CycElem s = quadratic_flow_sum(inst);
    const int d = bicycle_dimension(inst);
    set_cyc(rep, s * s.conj(), CycElem(inst.p, ipow(inst.p, inst.rank_full + d)));
    std::ostringstream os;
    os << "bicycle dimension " << d;
    rep.note = os.str();
    return {rep};
}

std::vector<IdentityReport> check_gauss_sum(const Instance& inst, const VerifyParams&) {
    if (!inst.is_gfp() || inst.p == 2)
        return {skipped("gauss-sum", inst, "", "odd prime fields only")};
    IdentityReport rep = rep0("gauss-sum", inst, "", 2);
    const CycElem om = gauss_sum(inst.p);
    set_cyc(rep, om * om.conj(), CycElem(inst.p, inst.p));
    return {rep};
}

// ---------------------------------------------------------------------------
// Section 7: the integer-statistic enumerator and the flow-support census.
// ---------------------------------------------------------------------------

std::vector<IdentityReport> check_thm7_1(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    std::ostringstream os;
    os << "q=" << p.q;
    if (!a) return {skipped("thm7.1", inst, os.str(), "no group of this order")};
    Ctx cx(inst);
    const LaurentPoly lhs = support_diff_enumerator(inst, *a);
    const UniPoly N = cx.flowN(p.q);
    const ZPoly base = ZPoly::monomial(1) + ZPoly::monomial(-1) + ZPoly(Int(p.q - 2));
    ZPoly rhs;
    for (const auto& [k, c] : N.terms())
        rhs = rhs + base.pow(cx.n - k) * (c * ipow(p.q, k));
    std::vector<IdentityReport> out;
    IdentityReport rep = rep0("thm7.1", inst, os.str(), 2);
    rep.lhs = lhs.to_string("X");
    rep.rhs = rhs.to_string("X");
    rep.equal = (lhs == rhs);
    out.push_back(rep);
    IdentityReport rep2 = rep0("thm7.1", inst, os.str() + " eq=palindrome", 2);
    bool sym = true;
    for (const auto& [k, c] : lhs.terms())
        if (lhs.coeff(-k) != c) sym = false;
    rep2.lhs = sym ? "symmetric" : "asymmetric";
    rep2.rhs = "symmetric";
    rep2.equal = sym;
    out.push_back(rep2);
    return out;
}

std::vector<IdentityReport> check_cor7_2(const Instance& inst, const VerifyParams& p) {
    const long q = inst.is_gfp() ? inst.p : 3;
    auto a = group_of_order(inst, q);
    std::ostringstream os;
    os << "q=" << q;
    if (!a) return {skipped("cor7.2", inst, os.str(), "no group of this order")};
    const Census base_h = hamming_census(inst, *a, 4, false, p.tier);
    const Census base_s = support_census(inst, *a, 1, -1, 3, p.tier);

    std::vector<Instance> variants;
    variants.push_back(negate_column(inst, 0));
    std::vector<int> perm(inst.ground);
    for (int i = 0; i < inst.ground; ++i) perm[i] = inst.ground - 1 - i;
    variants.push_back(permute_columns(inst, perm));
    if (inst.is_graph()) variants.push_back(reorient_edge(inst, 0));

    IdentityReport rep = rep0("cor7.2", inst, os.str(), base_h.tier);
    bool ok = true;
    for (const Instance& v : variants) {
        // permuting relabels the statistic per edge but not its distribution
        if (!hamming_census(v, *a, 4, false, p.tier).same_counts(base_h)) ok = false;
        if (!support_census(v, *a, 1, -1, 3, p.tier).same_counts(base_s)) ok = false;
    }
    rep.lhs = ok ? "invariant" : "changed";
    rep.rhs = "invariant";
    rep.equal = ok;
    return {rep};
}

std::vector<IdentityReport> check_thm7_3(const Instance& inst, const VerifyParams& p) {
    auto a = group_of_order(inst, p.q);
    const std::string params = fmt_sqr(p.sigma, p.q, p.rho);
    if (!a) return {skipped("thm7.3", inst, params, "no group of this order")};
    Ctx cx(inst);
    const UniPoly N = cx.flowN(p.q);
    std::vector<IdentityReport> out;
    {
        Census cen = flow_support_census(inst, *a, p.sigma);
        IdentityReport rep = rep0("thm7.3", inst, params, cen.tier);
        CycElem rhs(p.sigma);
        for (const auto& [k, c] : N.terms())
            rhs = rhs + rootp(p.sigma, p.rho * (cx.n - k)) * c;
        set_cyc(rep, census_transform(cen, p.sigma, p.rho), rhs);
        out.push_back(rep);
    }
    {
        Census cen = flow_support_census(inst, *a, 0);
        IdentityReport rep = rep0("thm7.3", inst, params + " eq=enumerator", cen.tier);
        ZPoly lhs, rhs;
        for (const auto& [k, c] : cen.bins) lhs.add_term(k, c);
        for (const auto& [k, c] : N.terms()) rhs.add_term(cx.n - k, c);
        rep.lhs = lhs.to_string("X");
        rep.rhs = rhs.to_string("X");
        rep.equal = (lhs == rhs);
        out.push_back(rep);
    }
    {
        Census flows = flow_support_census(inst, *a, p.sigma);
        Census pairs = hamming_census(inst, *a, p.sigma, false, p.tier);
        IdentityReport rep = rep0("thm7.3", inst, params + " eq=pair-scaling", pairs.tier);
        const Int qn = ipow(p.q, cx.n);
        bool ok = true;
        for (long k = 0; k < std::max<long>(p.sigma, 1); ++k)
            if (pairs.count(k) != qn * flows.count(k)) ok = false;
        rep.lhs = ok ? "q^|E| multiple" : "mismatch";
        rep.rhs = "q^|E| multiple";
        rep.equal = ok;
        out.push_back(rep);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Registry and grids.
// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string, Handler>>& handlers() {
    static const std::vector<std::pair<std::string, Handler>> table = [] {
        std::vector<std::pair<std::string, Handler>> t;
        t.emplace_back("thm1.1", check_thm1_1);
        t.emplace_back("prop2.5", check_prop2_5);
        t.emplace_back("thm3.1", check_thm3_1);
        t.emplace_back("cor3.2", check_cor3_2);
        t.emplace_back("thm3.3", check_thm3_3);
        t.emplace_back("cor3.4", check_cor3_4);
        t.emplace_back("cor3.5", check_cor3_5);
        t.emplace_back("cor3.6", check_cor3_6);
        t.emplace_back("thm4.1", check_thm4_1);
        t.emplace_back("thm4.2", check_thm4_2);
        t.emplace_back("cor4.3", check_cor4_3);
        t.emplace_back("cor4.4", check_cor4_4);
        t.emplace_back("cor4.5", check_cor4_5);
        t.emplace_back("cor4.6", check_cor4_6);
        t.emplace_back("thm4.7", check_thm4_7);
        t.emplace_back("cor4.8", check_cor4_8);
        t.emplace_back("prop4.9", check_prop4_9);
        t.emplace_back("cor4.10", check_cor4_10);
        t.emplace_back("cor4.11", check_cor4_11);
        t.emplace_back("cor4.12", check_cor4_12);
        t.emplace_back("thm4.13", check_thm4_13);
        t.emplace_back("cor4.14", check_cor4_14);
        t.emplace_back("cor4.15", check_cor4_15);
        t.emplace_back("thm4.16a", [](const Instance& i, const VerifyParams& p) {
            return check_thm4_16("thm4.16a", SetOp::Union, i, p);
        });
        t.emplace_back("thm4.16b", [](const Instance& i, const VerifyParams& p) {
            return check_thm4_16("thm4.16b", SetOp::Intersect, i, p);
        });
        t.emplace_back("thm4.16c", [](const Instance& i, const VerifyParams& p) {
            return check_thm4_16("thm4.16c", SetOp::SymDiff, i, p);
        });
        t.emplace_back("thm4.16d", [](const Instance& i, const VerifyParams& p) {
            return check_thm4_16("thm4.16d", SetOp::Stroke, i, p);
        });
        t.emplace_back("thm4.16e", [](const Instance& i, const VerifyParams& p) {
            return check_thm4_16("thm4.16e", SetOp::Implies, i, p);
        });
        t.emplace_back("cor4.17", check_cor4_17);
        t.emplace_back("cor4.18", check_cor4_18);
        t.emplace_back("thm5.1", check_thm5_1);
        t.emplace_back("thm5.2", check_thm5_2);
        t.emplace_back("cor5.3", check_cor5_3);
        t.emplace_back("cor5.4", check_cor5_4);
        t.emplace_back("cor5.5", check_cor5_5);
        t.emplace_back("thm5.6", check_thm5_6);
        t.emplace_back("thm6.1", check_thm6_1);
        t.emplace_back("cor6.2", check_cor6_2);
        t.emplace_back("sec6-p2", check_sec6_p2);
        t.emplace_back("sec6-modulus", check_sec6_modulus);
        t.emplace_back("gauss-sum", check_gauss_sum);
        t.emplace_back("thm7.1", check_thm7_1);
        t.emplace_back("cor7.2", check_cor7_2);
        t.emplace_back("thm7.3", check_thm7_3);
        return t;
    }();
    return table;
}

std::vector<long> qs_for(const Instance& inst, std::initializer_list<long> wanted) {
    std::vector<long> out;
    for (long q : wanted)
        if (group_of_order(inst, q)) out.push_back(q);
    return out;
}

void push_sqr_grid(std::vector<VerifyParams>& out, const Instance& inst,
                   std::initializer_list<long> sigmas, std::initializer_list<long> qs,
                   bool sweep_rho) {
    for (long s : sigmas)
        for (long q : qs_for(inst, qs))
            for (long rho : sweep_rho ? units_mod(s) : std::vector<long>{1}) {
                VerifyParams p;
                p.sigma = s;
                p.q = q;
                p.rho = rho;
                out.push_back(p);
            }
}

} // namespace

const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, h] : handlers()) v.push_back(id);
        return v;
    }();
    return ids;
}

std::optional<GroupSpec> group_of_order(const Instance& inst, long q) {
    if (q < 1) return std::nullopt;
    if (!inst.is_gfp()) return GroupSpec::cyclic(q);
    long t = q;
    int d = 0;
    while (t % inst.p == 0) {
        t /= inst.p;
        ++d;
    }
    if (t != 1 || d == 0) return std::nullopt;
    return GroupSpec::gfp_vector(inst.p, d);
}

Instance dual_of(const Instance& inst) {
    return inst.is_gfp() ? orthogonal_dual_gfp(inst) : orthogonal_dual_tu(inst);
}

std::vector<IdentityReport> run_check(const std::string& id, const Instance& inst,
                                      const VerifyParams& p) {
    for (const auto& [hid, h] : handlers())
        if (hid == id) {
            const auto start = std::chrono::steady_clock::now();
            std::vector<IdentityReport> out;
            try {
                out = h(inst, p);
            } catch (const BudgetError& e) {
                out = {skipped(id, inst, "", std::string("over budget: ") + e.what())};
            } catch (const SizeCapError& e) {
                out = {skipped(id, inst, "", std::string("over size cap: ") + e.what())};
            }
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
            for (IdentityReport& r : out) r.seconds = dt.count();
            return out;
        }
    throw ParseError("unknown identity id \"" + id + "\"");
}

std::vector<VerifyParams> default_grid(const std::string& id, const Instance& inst) {
    std::vector<VerifyParams> out;
    auto single = [&] { out.emplace_back(); };
    auto qgrid = [&](std::initializer_list<long> qs) {
        for (long q : qs_for(inst, qs)) {
            VerifyParams p;
            p.q = q;
            out.push_back(p);
        }
    };

    if (id == "thm1.1") {
        if (inst.is_graph()) single();
    } else if (id == "prop2.5") {
        if (!inst.is_gfp()) qgrid({3, 5});
    } else if (id == "thm3.1" || id == "thm3.3") {
        push_sqr_grid(out, inst, {2, 3, 4, 6}, {2, 3, 4, 5}, true);
    } else if (id == "cor3.2") {
        qgrid({2, 3, 4, 5});
    } else if (id == "cor3.4" || id == "cor3.5") {
        qgrid({3, 4, 5});
    } else if (id == "cor3.6" || id == "cor4.6") {
        if (group_of_order(inst, 3))
            for (long rho : units_mod(id == "cor3.6" ? 6 : 3)) {
                VerifyParams p;
                p.rho = rho;
                out.push_back(p);
            }
    } else if (id == "thm4.1") {
        for (auto [al, be] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {2, 1}, {1, -1}, {2, 3}})
            for (long s : {2L, 3L, 4L, 6L}) {
                if (al % s == 0 || be % s == 0 || (be + s) % s == 0) continue;
                for (long q : qs_for(inst, {2, 3, 4}))
                    for (long rho : units_mod(s)) {
                        VerifyParams p;
                        p.sigma = s;
                        p.q = q;
                        p.rho = rho;
                        p.alpha = al;
                        p.beta = be < 0 ? s + be : be;
                        out.push_back(p);
                    }
            }
    } else if (id == "thm4.2") {
        push_sqr_grid(out, inst, {2, 3, 4, 6, 12}, {2, 3, 4, 5}, false);
    } else if (id == "cor4.3") {
        qgrid({2, 3, 5, 6});
    } else if (id == "cor4.4") {
        if (binary_ok(inst)) push_sqr_grid(out, inst, {3, 4, 6, 8}, {2}, true);
    } else if (id == "cor4.5" || id == "cor4.15" || id == "cor5.3" || id == "cor5.4" ||
               id == "cor5.5") {
        if (binary_ok(inst)) single();
    } else if (id == "thm4.7") {
        push_sqr_grid(out, inst, {2, 3, 4, 6}, {2, 3, 4, 5}, true);
    } else if (id == "cor4.8" || id == "prop4.9") {
        push_sqr_grid(out, inst, {3, 4, 6}, {2, 3, 4}, id == "cor4.8");
    } else if (id == "cor4.10") {
        qgrid({2, 4, 5});
    } else if (id == "cor4.11") {
        qgrid({3, 4, 5});
    } else if (id == "cor4.12") {
        qgrid({2, 3, 4, 5});
    } else if (id == "thm4.13") {
        push_sqr_grid(out, inst, {4, 6}, {2, 3, 4}, true);
    } else if (id == "cor4.14") {
        if (binary_ok(inst)) push_sqr_grid(out, inst, {4, 6, 8}, {2}, true);
    } else if (id.rfind("thm4.16", 0) == 0) {
        push_sqr_grid(out, inst, {2, 3, 4, 6}, {2, 3, 4}, true);
    } else if (id == "cor4.17") {
        qgrid({2, 3, 5});
    } else if (id == "cor4.18") {
        if (group_of_order(inst, 3)) single();
    } else if (id == "thm5.1") {
        push_sqr_grid(out, inst, {2, 3, 6}, {2, 3}, false);
    } else if (id == "thm5.2") {
        if (binary_ok(inst)) push_sqr_grid(out, inst, {3, 4, 6}, {2}, true);
    } else if (id == "thm5.6") {
        if (binary_ok(inst))
            for (int m : {2, 3}) {
                VerifyParams p;
                p.m = m;
                out.push_back(p);
            }
    } else if (id == "thm6.1" || id == "cor6.2") {
        if (inst.is_gfp() && inst.p % 2 == 1 && (id == "thm6.1" || inst.p == 3))
            for (long rho : units_mod(inst.p)) {
                VerifyParams p;
                p.rho = rho;
                out.push_back(p);
            }
    } else if (id == "sec6-p2") {
        if (inst.is_gfp() && inst.p == 2) single();
    } else if (id == "sec6-modulus" || id == "gauss-sum") {
        if (inst.is_gfp() && inst.p % 2 == 1) single();
    } else if (id == "thm7.1") {
        qgrid({2, 3, 4});
    } else if (id == "cor7.2") {
        single();
    } else if (id == "thm7.3") {
        push_sqr_grid(out, inst, {2, 3, 4, 6}, {2, 3, 4}, false);
    }
    return out;
}

void VerifySummary::absorb(const std::vector<IdentityReport>& rs) {
    for (const IdentityReport& r : rs) {
        if (!r.applicable)
            ++skipped;
        else if (r.equal)
            ++passed;
        else
            ++failed;
        reports.push_back(r);
    }
}

VerifySummary verify_instance(const std::string& id, const Instance& inst) {
    VerifySummary s;
    for (const VerifyParams& p : default_grid(id, inst)) s.absorb(run_check(id, inst, p));
    return s;
}

VerifySummary verify_corpus_all() {
    VerifySummary s;
    for (const std::string& id : registry_ids())
        for (const Instance& inst : corpus()) {
            VerifySummary part = verify_instance(id, inst);
            s.reports.insert(s.reports.end(), part.reports.begin(), part.reports.end());
            s.passed += part.passed;
            s.failed += part.failed;
            s.skipped += part.skipped;
        }
    return s;
}

} // namespace parcelforge
