#include <parcelforge/group.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <parcelforge/matroid.hpp>

namespace parcelforge {

GroupSpec GroupSpec::cyclic(long q) {
    if (q < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    GroupSpec g;
    g.moduli_ = {static_cast<int>(q)};
    g.order_ = static_cast<std::uint64_t>(q);
    g.name_ = "cyclic:" + std::to_string(q);
    return g;
}

GroupSpec GroupSpec::gfp_vector(int p, int d) {
    if (!is_prime(p)) throw std::invalid_argument("gfp group: p must be prime");
    if (d < 1) throw std::invalid_argument("gfp group: d must be >= 1");
    GroupSpec g;
    g.moduli_.assign(d, p);
    g.order_ = 1;
    for (int i = 0; i < d; ++i) g.order_ *= static_cast<std::uint64_t>(p);
    g.p_ = p;
    g.name_ = "gfp:" + std::to_string(p) + ":" + std::to_string(d);
    return g;
}

GroupSpec GroupSpec::power(int m) const {
    if (m < 1) throw std::invalid_argument("product group: m must be >= 1");
    GroupSpec g;
    for (int i = 0; i < m; ++i)
        g.moduli_.insert(g.moduli_.end(), moduli_.begin(), moduli_.end());
    g.order_ = 1;
    for (int i = 0; i < m; ++i) g.order_ *= order_;
    g.p_ = p_;
    g.name_ = "product:" + name_ + ":" + std::to_string(m);
    return g;
}

GroupSpec GroupSpec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    auto as_long = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ParseError("group: bad integer \"" + s + "\" in \"" + text + "\"");
        }
    };
    try {
        if (parts.size() == 2 && parts[0] == "cyclic") return cyclic(as_long(parts[1]));
        if (parts.size() == 3 && parts[0] == "gfp")
            return gfp_vector(static_cast<int>(as_long(parts[1])),
                              static_cast<int>(as_long(parts[2])));
        if (parts.size() >= 3 && parts[0] == "product") {
            std::string base;
            for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
                if (i > 1) base += ":";
                base += parts[i];
            }
            return parse(base).power(static_cast<int>(as_long(parts.back())));
        }
    } catch (const std::invalid_argument& e) {
        // factory validation (order bounds, primality) counts as a parse error
        throw ParseError("group: " + std::string(e.what()) + " in \"" + text + "\"");
    }
    throw ParseError("group: unrecognized syntax \"" + text + "\"");
}

bool GroupSpec::compatible_with(const Instance& inst) const {
    // Cyclic and gfp-vector groups act on TU/graph columns through {-1,0,1}
    // entries; a GF(p) matrix needs matching characteristic.
    if (inst.is_gfp()) return p_ == inst.p;
    return true;
}

std::vector<int> GroupSpec::decode(GElem a) const {
    std::vector<int> coords(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        coords[i] = static_cast<int>(a % static_cast<std::uint64_t>(moduli_[i]));
        a /= static_cast<std::uint64_t>(moduli_[i]);
    }
    return coords;
}

GElem GroupSpec::encode(const std::vector<int>& coords) const {
    GElem a = 0;
    for (std::size_t i = moduli_.size(); i-- > 0;)
        a = a * static_cast<std::uint64_t>(moduli_[i]) +
            static_cast<std::uint64_t>(coords[i]);
    return a;
}

GElem GroupSpec::add(GElem a, GElem b) const {
    GElem out = 0;
    std::uint64_t place = 1;
    for (int m : moduli_) {
        const std::uint64_t mu = static_cast<std::uint64_t>(m);
        out += ((a % mu + b % mu) % mu) * place;
        a /= mu;
        b /= mu;
        place *= mu;
    }
    return out;
}

GElem GroupSpec::neg(GElem a) const { return smul(-1, a); }

GElem GroupSpec::smul(int c, GElem a) const {
    GElem out = 0;
    std::uint64_t place = 1;
    for (int m : moduli_) {
        const std::uint64_t mu = static_cast<std::uint64_t>(m);
        long long digit = static_cast<long long>(a % mu) * c;
        digit = ((digit % m) + m) % m;
        out += static_cast<std::uint64_t>(digit) * place;
        a /= mu;
        place *= mu;
    }
    return out;
}

std::vector<GElem> GroupSpec::split(GElem a, int m) const {
    if (moduli_.size() % m != 0) throw std::invalid_argument("split: bad arity");
    const std::size_t block = moduli_.size() / m;
    std::vector<GElem> parts(m, 0);
    auto coords = decode(a);
    for (int j = 0; j < m; ++j) {
        std::uint64_t place = 1;
        for (std::size_t i = 0; i < block; ++i) {
            parts[j] += static_cast<std::uint64_t>(coords[j * block + i]) * place;
            place *= static_cast<std::uint64_t>(moduli_[j * block + i]);
        }
    }
    return parts;
}

GElem GroupSpec::join(const std::vector<GElem>& parts, const GroupSpec& base) const {
    std::vector<int> coords;
    for (const GElem& part : parts) {
        auto c = base.decode(part);
        coords.insert(coords.end(), c.begin(), c.end());
    }
    return encode(coords);
}

int support_size(const FunctionVector& f) {
    int s = 0;
    for (GElem v : f)
        if (v != 0) ++s;
    return s;
}

std::vector<FunctionVector> enumerate_flows(const Instance& inst, const GroupSpec& a) {
    if (!a.compatible_with(inst))
        throw std::invalid_argument("group incompatible with instance");
    const int rows = inst.row_count();
    const std::uint64_t budget = enumeration_budget();
    std::uint64_t tuples = 1;
    for (int i = 0; i < rows; ++i) {
        if (a.order() != 0 && tuples > budget / a.order() + 1)
            throw BudgetError("enumerate_flows: coefficient space exceeds budget");
        tuples *= a.order();
    }
    if (tuples > budget)
        throw BudgetError("enumerate_flows: coefficient space exceeds budget");

    std::set<FunctionVector> seen;
    std::vector<GElem> coeffs(rows, 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::uint64_t rem = t;
        for (int i = 0; i < rows; ++i) {
            coeffs[i] = rem % a.order();
            rem /= a.order();
        }
        FunctionVector f(inst.ground, 0);
        for (int i = 0; i < rows; ++i) {
            if (coeffs[i] == 0) continue;
            for (int e = 0; e < inst.ground; ++e) {
                const int entry = inst.rows.empty() ? 0 : inst.rows[i][e];
                if (entry != 0) f[e] = a.add(f[e], a.smul(entry, coeffs[i]));
            }
        }
        seen.insert(std::move(f));
    }
    if (seen.empty()) seen.insert(FunctionVector(inst.ground, 0));
    return {seen.begin(), seen.end()};
}

std::map<int, Int> kernel_census(const Instance& inst, const GroupSpec& a) {
    std::map<int, Int> out;
    for (const auto& f : enumerate_flows(inst, a))
        out[inst.ground - support_size(f)] += 1;
    return out;
}

CycElem weighted_profile_census(const Instance& inst, const GroupSpec& a,
                                const std::vector<CycElem>& w) {
    if (w.size() != a.order())
        throw std::invalid_argument("weighted_profile_census: weight table size mismatch");
    const long sigma = w.empty() ? 1 : w[0].sigma();
    CycElem total(sigma);
    for (const auto& f : enumerate_flows(inst, a)) {
        CycElem prod(sigma, Int(1));
        for (GElem v : f) prod = prod * w[v];
        total = total + prod;
    }
    return total;
}

bool closure_of_kernel_property(const Instance& inst, const GroupSpec& a) {
    Matroid m(inst);
    for (const auto& f : enumerate_flows(inst, a)) {
        std::uint32_t kernel = 0;
        for (int e = 0; e < inst.ground; ++e)
            if (f[e] == 0) kernel |= std::uint32_t{1} << e;
        if (m.closure(kernel) != kernel) return false;
    }
    return true;
}

bool is_binary_affine(const Instance& inst, std::uint32_t b_mask) {
    if (!inst.is_gfp() || inst.p != 2)
        throw std::invalid_argument("is_binary_affine: GF(2) instance required");
    Matroid m(inst);
    b_mask &= m.full_mask();
    std::vector<int> elems;
    for (int e = 0; e < inst.ground; ++e)
        if (b_mask & (std::uint32_t{1} << e)) elems.push_back(e);
    const int nb = static_cast<int>(elems.size());
    if (nb > 20) throw SizeCapError("is_binary_affine: restriction too large");

    // Route 1: some functional takes value 1 on every column of B.  One
    // GF(2) equation per element; solvable iff the all-ones augmentation
    // does not raise the rank.
    const int rows = inst.row_count();
    auto gf2_rank = [](std::vector<std::vector<int>> sys) {
        int rank = 0;
        const int nc = sys.empty() ? 0 : static_cast<int>(sys[0].size());
        for (int j = 0; j < nc && rank < static_cast<int>(sys.size()); ++j) {
            int piv = -1;
            for (int i = rank; i < static_cast<int>(sys.size()); ++i)
                if (sys[i][j]) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(sys[rank], sys[piv]);
            for (int i = 0; i < static_cast<int>(sys.size()); ++i)
                if (i != rank && sys[i][j])
                    for (int c = 0; c < nc; ++c) sys[i][c] ^= sys[rank][c];
            ++rank;
        }
        return rank;
    };
    std::vector<std::vector<int>> plain, aug;
    for (int e : elems) {
        std::vector<int> eq(rows), eqa(rows + 1);
        for (int i = 0; i < rows; ++i) eq[i] = eqa[i] = inst.rows[i][e] & 1;
        eqa[rows] = 1;
        plain.push_back(eq);
        aug.push_back(eqa);
    }
    const bool affine = elems.empty() || gf2_rank(plain) == gf2_rank(aug);

    // Route 2: every circuit inside B has even size.
    bool all_even = true;
    for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << nb); ++sub) {
        std::uint32_t s_mask = 0;
        int size = 0;
        for (int i = 0; i < nb; ++i)
            if (sub & (std::uint32_t{1} << i)) {
                s_mask |= std::uint32_t{1} << elems[i];
                ++size;
            }
        if (m.rank(s_mask) >= size) continue;  // independent
        bool circuit = true;
        for (int i = 0; i < nb && circuit; ++i)
            if (sub & (std::uint32_t{1} << i)) {
                std::uint32_t t = s_mask & ~(std::uint32_t{1} << elems[i]);
                if (m.rank(t) < size - 1) circuit = false;
            }
        if (circuit && size % 2 != 0) { all_even = false; break; }
    }

    // Route 3: chi(M|B; 2) = 1.
    Int chi = 0;
    const int rb = m.rank(b_mask);
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << nb); ++sub) {
        std::uint32_t s_mask = 0;
        int size = 0;
        for (int i = 0; i < nb; ++i)
            if (sub & (std::uint32_t{1} << i)) {
                s_mask |= std::uint32_t{1} << elems[i];
                ++size;
            }
        chi += Int(sign_pow(size)) * ipow(2, rb - m.rank(s_mask));
        if (sub + 1 == 0) break;
    }
    const bool chi_one = (chi == 1);

    if (affine != all_even || all_even != chi_one)
        throw std::logic_error("is_binary_affine: criteria disagree");
    return affine;
}

namespace {

// h in the GF(2) row space of rows?
bool gf2_member(const std::vector<std::vector<int>>& rows, const std::vector<int>& h) {
    const int nc = static_cast<int>(h.size());
    std::vector<std::vector<int>> m;
    for (const auto& r : rows) {
        std::vector<int> v(nc);
        for (int j = 0; j < nc; ++j) v[j] = r[j] & 1;
        m.push_back(std::move(v));
    }
    std::vector<int> target(nc);
    for (int j = 0; j < nc; ++j) target[j] = h[j] & 1;
    for (int j = 0; j < nc; ++j) {
        int piv = -1;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i][j]) { piv = static_cast<int>(i); break; }
        if (piv < 0) continue;
        std::swap(m[0], m[piv]);
        auto pivot = m[0];
        std::vector<std::vector<int>> rest;
        for (std::size_t i = 1; i < m.size(); ++i) {
            if (m[i][j])
                for (int c = 0; c < nc; ++c) m[i][c] ^= pivot[c];
            rest.push_back(std::move(m[i]));
        }
        if (target[j])
            for (int c = 0; c < nc; ++c) target[c] ^= pivot[c];
        m = std::move(rest);
    }
    for (int c = 0; c < nc; ++c)
        if (target[c]) return false;
    return true;
}

} // namespace

SupportClassification graph_support_property(const OrientedGraph& g,
                                             const std::vector<int>& h) {
    if (static_cast<int>(h.size()) != g.edge_count())
        throw std::invalid_argument("graph_support_property: length mismatch");
    SupportClassification out;

    std::vector<int> degree(g.vertex_count, 0);
    bool has_loop = false;
    for (int e = 0; e < g.edge_count(); ++e) {
        if ((h[e] & 1) == 0) continue;
        if (g.is_loop(e)) { has_loop = true; continue; }
        ++degree[g.edges[e].first];
        ++degree[g.edges[e].second];
    }
    out.even_degrees = true;
    for (int d : degree)
        if (d % 2 != 0) { out.even_degrees = false; break; }

    // A disjoint union of minimal cutsets is exactly an edge cut delta(W);
    // loops never lie in a cut.
    out.cutset_union = false;
    if (!has_loop) {
        if (g.vertex_count > 20)
            throw SizeCapError("graph_support_property: too many vertices");
        for (std::uint32_t w = 0; w < (std::uint32_t{1} << g.vertex_count); ++w) {
            bool match = true;
            for (int e = 0; e < g.edge_count() && match; ++e) {
                if (g.is_loop(e)) {
                    if (h[e] & 1) match = false;
                    continue;
                }
                const bool crosses = ((w >> g.edges[e].first) & 1) !=
                                     ((w >> g.edges[e].second) & 1);
                if (crosses != ((h[e] & 1) != 0)) match = false;
            }
            if (match) { out.cutset_union = true; break; }
        }
    }

    out.in_cycle_space = gf2_member(fundamental_cycle_matrix(g), h);
    out.in_cut_space = gf2_member(vertex_edge_matrix(g), h);
    return out;
}

} // namespace parcelforge
