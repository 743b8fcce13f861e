#include <parcelforge/poly_engine.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace parcelforge {

namespace {

BiPoly subset_expansion(const Matroid& m) {
    if (m.ground() > 20) throw SizeCapError("rank_gen_poly: subset expansion cap is 20");
    const int r = m.full_rank();
    BiPoly out;
    const std::uint32_t all = m.full_mask();
    for (std::uint32_t b = 0;; ++b) {
        const int rk = m.rank(b);
        out.add_term(r - rk, static_cast<int>(std::popcount(b)) - rk, Int(1));
        if (b == all) break;
    }
    return out;
}

// --- deletion-contraction over GF(p) column lists ---

struct DcMatrix {
    int p;
    std::vector<std::vector<int>> cols;  // each column a GF(p) vector
};

int col_rank(const DcMatrix& m) {
    std::vector<std::vector<int>> work = m.cols;
    const int dim = work.empty() ? 0 : static_cast<int>(work[0].size());
    int rank = 0;
    for (int i = 0; i < dim && rank < static_cast<int>(work.size()); ++i) {
        int piv = -1;
        for (int c = rank; c < static_cast<int>(work.size()); ++c)
            if (work[c][i] != 0) { piv = c; break; }
        if (piv < 0) continue;
        std::swap(work[rank], work[piv]);
        int inv = 1;
        for (int t = 1; t < m.p; ++t)
            if (work[rank][i] * t % m.p == 1) { inv = t; break; }
        for (int j = 0; j < dim; ++j) work[rank][j] = work[rank][j] * inv % m.p;
        for (int c = 0; c < static_cast<int>(work.size()); ++c) {
            if (c == rank || work[c][i] == 0) continue;
            int f = work[c][i];
            for (int j = 0; j < dim; ++j)
                work[c][j] = ((work[c][j] - f * work[rank][j]) % m.p + m.p) % m.p;
        }
        ++rank;
    }
    return rank;
}

// Canonical key: sort columns, row-reduce, sort again, serialize.  Matrices
// with equal keys present the same matroid (up to element relabeling, which
// R does not see).
std::string canonical_key(DcMatrix m) {
    std::sort(m.cols.begin(), m.cols.end());
    const int n = static_cast<int>(m.cols.size());
    const int dim = m.cols.empty() ? 0 : static_cast<int>(m.cols[0].size());
    // RREF acting on rows = columns of the transposed view; reduce the
    // row space basis while keeping column entries aligned.
    int rank = 0;
    for (int c = 0; c < n && rank < dim; ++c) {
        int piv = -1;
        for (int i = rank; i < dim; ++i)
            if (m.cols[c][i] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (auto& col : m.cols) std::swap(col[piv], col[rank]);
        int inv = 1;
        for (int t = 1; t < m.p; ++t)
            if (m.cols[c][rank] * t % m.p == 1) { inv = t; break; }
        // scale row `rank` so the pivot becomes 1, then clear the rest of
        // the pivot column's row entries
        for (auto& col : m.cols) col[rank] = col[rank] * inv % m.p;
        for (int i = 0; i < dim; ++i) {
            if (i == rank || m.cols[c][i] == 0) continue;
            const int f = m.cols[c][i];
            for (auto& col : m.cols)
                col[i] = ((col[i] - f * col[rank]) % m.p + m.p) % m.p;
        }
        ++rank;
    }
    for (auto& col : m.cols) col.resize(rank);
    std::sort(m.cols.begin(), m.cols.end());
    std::ostringstream os;
    os << m.p << "#";
    for (const auto& col : m.cols) {
        for (int v : col) os << v << ",";
        os << ";";
    }
    return os.str();
}

BiPoly dc_rank_gen(const DcMatrix& m, std::map<std::string, BiPoly>& memo) {
    if (m.cols.empty()) return BiPoly(Int(1));
    const std::string key = canonical_key(m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    DcMatrix rest{m.p, {m.cols.begin(), m.cols.end() - 1}};
    const auto& e = m.cols.back();
    const bool loop = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    BiPoly out;
    if (loop) {
        BiPoly x1;
        x1.add_term(0, 0, Int(1));
        x1.add_term(0, 1, Int(1));
        out = dc_rank_gen(rest, memo) * x1;
    } else {
        // contract e: pivot on a nonzero coordinate, project the rest
        int pi = 0;
        while (e[pi] == 0) ++pi;
        int inv = 1;
        for (int t = 1; t < m.p; ++t)
            if (e[pi] * t % m.p == 1) { inv = t; break; }
        DcMatrix contr{m.p, {}};
        for (const auto& col : rest.cols) {
            std::vector<int> v;
            const int f = col[pi] * inv % m.p;
            for (std::size_t i = 0; i < col.size(); ++i) {
                if (static_cast<int>(i) == pi) continue;
                v.push_back(((col[i] - f * e[i]) % m.p + m.p) % m.p);
            }
            contr.cols.push_back(std::move(v));
        }
        const bool coloop = col_rank(rest) < col_rank(m);
        if (coloop) {
            BiPoly l1;
            l1.add_term(0, 0, Int(1));
            l1.add_term(1, 0, Int(1));
            out = dc_rank_gen(contr, memo) * l1;
        } else {
            out = dc_rank_gen(rest, memo) + dc_rank_gen(contr, memo);
        }
    }
    memo.emplace(key, out);
    return out;
}

} // namespace

BiPoly rank_gen_poly(const Matroid& m) {
    if (m.ground() <= 20) return subset_expansion(m);
    if (m.ground() > 28) throw SizeCapError("rank_gen_poly: ground set larger than 28");
    const Instance* gi = &m.instance();
    Instance reduced;
    if (!gi->is_gfp()) {
        reduced = reduce_mod_p(*gi, 2);
        gi = &reduced;
    }
    DcMatrix dm{gi->p, {}};
    for (int e = 0; e < gi->ground; ++e) {
        std::vector<int> col;
        for (int i = 0; i < gi->row_count(); ++i) col.push_back(gi->rows[i][e]);
        dm.cols.push_back(std::move(col));
    }
    std::map<std::string, BiPoly> memo;
    return dc_rank_gen(dm, memo);
}

BiPoly tutte(const Matroid& m) {
    BiPoly r = rank_gen_poly(m);
    BiPoly out;
    for (const auto& [key, c] : r.terms()) {
        const auto& [le, xe] = key;
        ZPoly u = binomial_power(-1, le);  // (u - 1)^le
        ZPoly v = binomial_power(-1, xe);
        for (const auto& [ue, uc] : u.terms())
            for (const auto& [ve, vc] : v.terms())
                out.add_term(static_cast<int>(ue), static_cast<int>(ve), c * uc * vc);
    }
    return out;
}

UniPoly char_poly(const Matroid& m) {
    BiPoly r = rank_gen_poly(m);
    const int rank = m.full_rank();
    UniPoly via_eq1;
    // (-1)^r R(-lambda, -1): the term c lambda^i x^j maps to
    // c (-1)^(r + i + j) lambda^i.
    for (const auto& [key, c] : r.terms()) {
        const auto& [le, xe] = key;
        via_eq1.add_term(le, c * sign_pow(rank + le + xe));
    }
    if (m.ground() <= 20) {
        UniPoly direct;
        const std::uint32_t all = m.full_mask();
        for (std::uint32_t b = 0;; ++b) {
            direct.add_term(rank - m.rank(b),
                            Int(sign_pow(static_cast<int>(std::popcount(b)))));
            if (b == all) break;
        }
        if (!(direct == via_eq1))
            throw std::logic_error("char_poly: computation paths disagree");
    }
    return via_eq1;
}

UniPoly flow_census_poly(const Matroid& m, long q) {
    if (q < 1) throw std::invalid_argument("flow_census_poly: q must be >= 1");
    BiPoly r = rank_gen_poly(m);
    const int rank = m.full_rank();
    // The subset B with rank rk contributes q^(r - rk) (x-1)^|B|; in the
    // (i, j) = (r - rk, |B| - rk) indexing, |B| = j + r - i.
    UniPoly w;
    for (const auto& [key, c] : r.terms()) {
        const auto& [le, xe] = key;
        w = w + binomial_power(-1, xe + rank - le) * (c * ipow(q, le));
    }
    // Coefficients are honest counts only when the matroid carries flows over
    // a group of order q; for other q the polynomial is still well defined
    // (and can go negative), so no sign check here.
    Int total = 0;
    for (const auto& [e, c] : w.terms()) total += c;
    if (total != ipow(q, rank))
        throw std::logic_error("flow_census_poly: coefficients do not sum to q^r");
    return w;
}

UniPoly crapo_tutte_convolution(const Matroid& m, long q) {
    UniPoly out;
    for (std::uint32_t u : m.flats()) {
        // chi(M/U; q) by the signed subset sum over E \ U
        std::vector<int> free_elems;
        for (int e = 0; e < m.ground(); ++e)
            if ((u & (std::uint32_t{1} << e)) == 0) free_elems.push_back(e);
        const int nf = static_cast<int>(free_elems.size());
        const int rank_contr = m.contract_rank(m.full_mask(), u);
        Int chi = 0;
        for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << nf); ++sub) {
            std::uint32_t s = 0;
            for (int i = 0; i < nf; ++i)
                if (sub & (std::uint32_t{1} << i)) s |= std::uint32_t{1} << free_elems[i];
            chi += Int(sign_pow(static_cast<int>(std::popcount(sub)))) *
                   ipow(q, rank_contr - m.contract_rank(s, u));
        }
        out.add_term(static_cast<int>(std::popcount(u)), chi);
    }
    return out;
}

UniPoly chromatic_poly(const OrientedGraph& g) {
    Matroid m(make_graph_instance("vertex-side", g, /*cycle_side=*/false));
    return UniPoly::monomial(g.component_count()) * char_poly(m);
}

UniPoly flow_poly(const OrientedGraph& g) {
    Matroid m(make_graph_instance("cycle-side", g, /*cycle_side=*/true));
    return char_poly(m);
}

} // namespace parcelforge
