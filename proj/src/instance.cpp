#include <parcelforge/instance.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace parcelforge {

using nlohmann::json;

std::uint64_t enumeration_budget() {
    static std::uint64_t budget = [] {
        if (const char* env = std::getenv("PARCELFORGE_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1} << 24;
    }();
    return budget;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

int mod_p_rank(const std::vector<std::vector<int>>& rows, const std::vector<int>& cols, int p) {
    const int nr = static_cast<int>(rows.size());
    const int nc = static_cast<int>(cols.size());
    std::vector<std::vector<int>> m(nr, std::vector<int>(nc));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            m[i][j] = ((rows[i][cols[j]] % p) + p) % p;
    int rank = 0;
    for (int j = 0; j < nc && rank < nr; ++j) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (m[i][j] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        // normalize pivot to 1
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (m[rank][j] * t % p == 1) { inv = t; break; }
        for (int c = j; c < nc; ++c) m[rank][c] = m[rank][c] * inv % p;
        for (int i = 0; i < nr; ++i) {
            if (i == rank || m[i][j] == 0) continue;
            int f = m[i][j];
            for (int c = j; c < nc; ++c)
                m[i][c] = ((m[i][c] - f * m[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Fraction-free Bareiss rank over Z.  Entries of corpus-scale TU matrices
// keep intermediate values tiny; guard against overflow anyway.
int bareiss_rank(const std::vector<std::vector<int>>& rows, const std::vector<int>& cols) {
    const int nr = static_cast<int>(rows.size());
    const int nc = static_cast<int>(cols.size());
    std::vector<std::vector<long long>> m(nr, std::vector<long long>(nc));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m[i][j] = rows[i][cols[j]];
    long long prev = 1;
    int rank = 0;
    for (int j = 0; j < nc && rank < nr; ++j) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (m[i][j] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        const long long pivval = m[rank][j];
        for (int i = rank + 1; i < nr; ++i) {
            for (int c = j + 1; c < nc; ++c) {
                __int128 num = static_cast<__int128>(pivval) * m[i][c] -
                               static_cast<__int128>(m[i][j]) * m[rank][c];
                __int128 q = num / prev;
                if (q > INT64_MAX || q < INT64_MIN)
                    throw std::overflow_error("bareiss_rank: coefficient overflow");
                m[i][c] = static_cast<long long>(q);
            }
            m[i][j] = 0;
        }
        prev = pivval;
        ++rank;
    }
    return rank;
}

std::vector<int> all_columns(int n) {
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return cols;
}

int full_rank(const Instance& inst) {
    if (inst.ground == 0 || inst.rows.empty()) return 0;
    auto cols = all_columns(inst.ground);
    return inst.is_gfp() ? mod_p_rank(inst.rows, cols, inst.p)
                         : bareiss_rank(inst.rows, cols);
}

} // namespace

Instance make_graph_instance(std::string name, const OrientedGraph& g, bool cycle_side) {
    Instance inst;
    inst.name = std::move(name);
    inst.repr = cycle_side ? Repr::GraphCycle : Repr::GraphVertex;
    inst.graph = g;
    inst.rows = cycle_side ? fundamental_cycle_matrix(g) : vertex_edge_matrix(g);
    inst.ground = g.edge_count();
    inst.rank_full = full_rank(inst);
    return inst;
}

Instance make_tu_instance(std::string name, std::vector<std::vector<int>> rows, bool trust_tu) {
    Instance inst;
    inst.name = std::move(name);
    inst.repr = Repr::TuMatrix;
    inst.ground = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != inst.ground)
            throw ParseError("row " + std::to_string(i) + ": ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] < -1 || rows[i][j] > 1)
                throw ParseError("row " + std::to_string(i) + ", column " + std::to_string(j) +
                                 ": entry " + std::to_string(rows[i][j]) + " not in {-1,0,1}");
    }
    inst.rows = std::move(rows);
    if (!trust_tu && inst.ground <= 10 && inst.row_count() <= 10 &&
        !is_totally_unimodular(inst.rows))
        throw ParseError("matrix is not totally unimodular");
    inst.rank_full = full_rank(inst);
    return inst;
}

Instance make_gfp_instance(std::string name, int p, std::vector<std::vector<int>> rows) {
    if (!is_prime(p)) throw ParseError("p = " + std::to_string(p) + " is not prime");
    Instance inst;
    inst.name = std::move(name);
    inst.repr = Repr::GfpMatrix;
    inst.p = p;
    inst.ground = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != inst.ground)
            throw ParseError("row " + std::to_string(i) + ": ragged matrix");
        for (auto& v : rows[i]) v = ((v % p) + p) % p;
    }
    inst.rows = std::move(rows);
    inst.rank_full = full_rank(inst);
    return inst;
}

Instance parse_instance(const std::string& text, const std::string& name, bool trust_tu) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("instance must be an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "graph") {
        OrientedGraph g;
        g.vertex_count = j.at("vertices").get<int>();
        if (g.vertex_count < 0) throw ParseError("vertices must be nonnegative");
        int idx = 0;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("edge " + std::to_string(idx) + ": expected [tail, head]");
            int t = e[0].get<int>(), h = e[1].get<int>();
            if (t < 0 || t >= g.vertex_count || h < 0 || h >= g.vertex_count)
                throw ParseError("edge " + std::to_string(idx) + ": vertex index out of range");
            g.edges.push_back({t, h});
            ++idx;
        }
        const std::string side = j.value("side", "cycle");
        if (side != "cycle" && side != "vertex")
            throw ParseError("side must be \"cycle\" or \"vertex\"");
        return make_graph_instance(name, g, side == "cycle");
    }
    if (kind == "matrix") {
        const auto& ring = j.at("ring");
        std::vector<std::vector<int>> rows;
        for (const auto& r : j.at("rows")) rows.push_back(r.get<std::vector<int>>());
        const std::string type = ring.at("type").get<std::string>();
        if (type == "int-tu") return make_tu_instance(name, std::move(rows), trust_tu);
        if (type == "gfp") return make_gfp_instance(name, ring.at("p").get<int>(), std::move(rows));
        throw ParseError("unknown ring type \"" + type + "\"");
    }
    throw ParseError("unknown kind \"" + kind + "\"");
}

int subset_rank(const Instance& inst, std::uint32_t mask) {
    std::vector<int> cols;
    for (int e = 0; e < inst.ground; ++e)
        if (mask & (1u << e)) cols.push_back(e);
    if (cols.empty() || inst.rows.empty()) return 0;
    return inst.is_gfp() ? mod_p_rank(inst.rows, cols, inst.p) : bareiss_rank(inst.rows, cols);
}

namespace {

// Row-reduce to RREF.  Over GF(p) when p > 0; over Z assuming unit pivots
// (valid for TU input, where pivoting preserves total unimodularity).
std::vector<std::vector<int>> rref(std::vector<std::vector<int>> m, int p,
                                   std::vector<int>* pivot_cols = nullptr) {
    const int nr = static_cast<int>(m.size());
    const int nc = nr ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int j = 0; j < nc && rank < nr; ++j) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (m[i][j] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        if (p > 0) {
            int inv = 1;
            for (int t = 1; t < p; ++t)
                if (m[rank][j] * t % p == 1) { inv = t; break; }
            for (int c = 0; c < nc; ++c) m[rank][c] = ((m[rank][c] * inv) % p + p) % p;
        } else {
            if (m[rank][j] != 1 && m[rank][j] != -1)
                throw std::logic_error("rref: non-unit pivot in TU matrix");
            if (m[rank][j] == -1)
                for (int c = 0; c < nc; ++c) m[rank][c] = -m[rank][c];
        }
        for (int i = 0; i < nr; ++i) {
            if (i == rank || m[i][j] == 0) continue;
            int f = m[i][j];
            for (int c = 0; c < nc; ++c) {
                m[i][c] -= f * m[rank][c];
                if (p > 0) m[i][c] = ((m[i][c]) % p + p) % p;
            }
        }
        if (pivot_cols) pivot_cols->push_back(j);
        ++rank;
    }
    m.resize(rank);
    return m;
}

} // namespace

Instance orthogonal_dual_gfp(const Instance& inst) {
    if (!inst.is_gfp()) throw std::invalid_argument("orthogonal_dual_gfp: GF(p) instance required");
    std::vector<int> pivots;
    auto red = rref(inst.rows, inst.p, &pivots);
    const int r = static_cast<int>(red.size());
    const int n = inst.ground;
    std::vector<bool> is_pivot(n, false);
    for (int j : pivots) is_pivot[j] = true;
    std::vector<std::vector<int>> dual;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<int> row(n, 0);
        row[j] = 1;
        for (int i = 0; i < r; ++i)
            row[pivots[i]] = ((-red[i][j]) % inst.p + inst.p) % inst.p;
        dual.push_back(std::move(row));
    }
    return make_gfp_instance(inst.name + "-dual", inst.p, std::move(dual));
}

Instance orthogonal_dual_tu(const Instance& inst) {
    if (inst.is_graph())
        return make_graph_instance(inst.name + "-dual", *inst.graph,
                                   inst.repr == Repr::GraphVertex);
    if (inst.is_gfp()) throw std::invalid_argument("orthogonal_dual_tu: TU instance required");
    std::vector<int> pivots;
    auto red = rref(inst.rows, 0, &pivots);
    const int r = static_cast<int>(red.size());
    const int n = inst.ground;
    std::vector<bool> is_pivot(n, false);
    for (int j : pivots) is_pivot[j] = true;
    std::vector<std::vector<int>> dual;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<int> row(n, 0);
        row[j] = 1;
        for (int i = 0; i < r; ++i) row[pivots[i]] = -red[i][j];
        dual.push_back(std::move(row));
    }
    return make_tu_instance(inst.name + "-dual", std::move(dual), /*trust_tu=*/true);
}

Instance reduce_mod_p(const Instance& inst, int p) {
    if (inst.is_gfp()) {
        if (inst.p != p) throw std::invalid_argument("reduce_mod_p: prime mismatch");
        return inst;
    }
    if (!is_prime(p)) throw ParseError("p = " + std::to_string(p) + " is not prime");
    std::vector<std::vector<int>> rows = inst.rows;
    for (auto& r : rows)
        for (auto& v : r) v = ((v % p) + p) % p;
    // built by hand so a rowless matrix keeps its ground set
    Instance out;
    out.name = inst.name + "-mod" + std::to_string(p);
    out.repr = Repr::GfpMatrix;
    out.p = p;
    out.rows = std::move(rows);
    out.ground = inst.ground;
    out.rank_full = inst.rank_full;  // TU subdeterminants survive reduction
    return out;
}

bool is_totally_unimodular(const std::vector<std::vector<int>>& rows) {
    const int nr = static_cast<int>(rows.size());
    const int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    const int kmax = std::min(nr, nc);
    std::vector<int> ridx, cidx;

    // determinant of the selected square minor by Bareiss
    auto det = [&]() -> long long {
        const int k = static_cast<int>(ridx.size());
        std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = rows[ridx[i]][cidx[j]];
        long long prev = 1, sign = 1;
        for (int c = 0; c < k; ++c) {
            int piv = -1;
            for (int i = c; i < k; ++i)
                if (m[i][c] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            if (piv != c) { std::swap(m[piv], m[c]); sign = -sign; }
            for (int i = c + 1; i < k; ++i)
                for (int j = c + 1; j < k; ++j)
                    m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            prev = m[c][c];
        }
        return sign * m[k - 1][k - 1];
    };

    std::function<bool(int, int, int)> pick_cols;
    std::function<bool(int, int, int)> pick_rows = [&](int k, int start, int left) -> bool {
        if (left == 0) {
            cidx.clear();
            return pick_cols(k, 0, k);
        }
        for (int i = start; i <= nr - left; ++i) {
            ridx.push_back(i);
            if (!pick_rows(k, i + 1, left - 1)) return false;
            ridx.pop_back();
        }
        return true;
    };
    pick_cols = [&](int k, int start, int left) -> bool {
        if (left == 0) {
            long long d = det();
            return d >= -1 && d <= 1;
        }
        for (int j = start; j <= nc - left; ++j) {
            cidx.push_back(j);
            if (!pick_cols(k, j + 1, left - 1)) return false;
            cidx.pop_back();
        }
        return true;
    };

    for (int k = 1; k <= kmax; ++k) {
        ridx.clear();
        if (!pick_rows(k, 0, k)) return false;
    }
    return true;
}

Instance negate_column(const Instance& inst, int col) {
    if (inst.is_graph()) return reorient_edge(inst, col);
    auto rows = inst.rows;
    for (auto& r : rows)
        r[col] = inst.is_gfp() ? ((-r[col]) % inst.p + inst.p) % inst.p : -r[col];
    Instance out = inst;
    out.rows = std::move(rows);
    out.name += "-neg" + std::to_string(col);
    return out;
}

Instance permute_columns(const Instance& inst, const std::vector<int>& perm) {
    if (inst.is_graph()) {
        OrientedGraph g = *inst.graph;
        std::vector<std::pair<int, int>> edges(g.edges.size());
        for (std::size_t e = 0; e < perm.size(); ++e) edges[e] = g.edges[perm[e]];
        g.edges = std::move(edges);
        return make_graph_instance(inst.name + "-perm", g, inst.repr == Repr::GraphCycle);
    }
    auto rows = inst.rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t e = 0; e < perm.size(); ++e) rows[i][e] = inst.rows[i][perm[e]];
    Instance out = inst;
    out.rows = std::move(rows);
    out.name += "-perm";
    return out;
}

Instance reorient_edge(const Instance& inst, int edge) {
    if (!inst.is_graph()) return negate_column(inst, edge);
    OrientedGraph g = *inst.graph;
    std::swap(g.edges[edge].first, g.edges[edge].second);
    return make_graph_instance(inst.name + "-flip" + std::to_string(edge), g,
                               inst.repr == Repr::GraphCycle);
}

} // namespace parcelforge
