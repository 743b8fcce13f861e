#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <parcelforge/corpus.hpp>
#include <parcelforge/matroid.hpp>
#include <parcelforge/poly_engine.hpp>

using namespace parcelforge;

TEST_CASE("graph incidence structure") {
    OrientedGraph g;
    g.vertex_count = 3;
    g.edges = {{0, 1}, {1, 2}, {2, 0}};
    CHECK(g.edge_count() == 3);
    CHECK(g.component_count() == 1);

    auto vem = vertex_edge_matrix(g);
    REQUIRE(vem.size() == 3);
    // column sums vanish: each edge leaves one vertex and enters another
    for (int e = 0; e < 3; ++e) {
        int s = 0;
        for (int v = 0; v < 3; ++v) s += vem[v][e];
        CHECK(s == 0);
    }

    // fundamental cycle rows are orthogonal to incidence rows
    auto cyc = fundamental_cycle_matrix(g);
    REQUIRE(cyc.size() == 1);
    for (const auto& vr : vem) {
        int dot = 0;
        for (int e = 0; e < 3; ++e) dot += vr[e] * cyc[0][e];
        CHECK(dot == 0);
    }
}

TEST_CASE("loops get zero incidence columns and unit cycle rows") {
    OrientedGraph g;
    g.vertex_count = 1;
    g.edges = {{0, 0}};
    CHECK(g.is_loop(0));
    auto vem = vertex_edge_matrix(g);
    CHECK(vem[0][0] == 0);
    auto cyc = fundamental_cycle_matrix(g);
    REQUIRE(cyc.size() == 1);
    CHECK(cyc[0][0] != 0);
}

TEST_CASE("ranks of the corpus sides") {
    CHECK(corpus_instance("k4-cycle").rank_full == 3);
    CHECK(corpus_instance("k4-vertex").rank_full == 3);
    CHECK(corpus_instance("triangle-cycle").rank_full == 1);
    CHECK(corpus_instance("triangle-vertex").rank_full == 2);
    CHECK(corpus_instance("fano-gf2").rank_full == 3);
    CHECK(corpus_instance("hamming74-gf2").rank_full == 4);
    CHECK(corpus_instance("single-edge").rank_full == 0);  // bridge has no cycles
    CHECK(corpus_instance("path3").rank_full == 0);
}

TEST_CASE("rank is monotone and submodular on small instances") {
    for (const char* name : {"k4-cycle", "fano-gf2", "ternary-whirl", "bowtie"}) {
        Matroid m(corpus_instance(name));
        const std::uint32_t full = m.full_mask();
        for (std::uint32_t a = 0; a <= full; ++a) {
            for (int e = 0; e < m.ground(); ++e) {
                const std::uint32_t b = a | (std::uint32_t{1} << e);
                CHECK(m.rank(a) <= m.rank(b));
                CHECK(m.rank(b) <= m.rank(a) + 1);
            }
        }
        // submodularity on a pseudo-random sample of pairs
        std::uint32_t x = 0x9e3779b9u;
        for (int trial = 0; trial < 200; ++trial) {
            x = x * 1664525u + 1013904223u;
            const std::uint32_t a = x & full;
            x = x * 1664525u + 1013904223u;
            const std::uint32_t b = x & full;
            CHECK(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
        }
    }
}

TEST_CASE("closure and flats") {
    Matroid m(corpus_instance("triangle-vertex"));
    // any two triangle edges span the third
    CHECK(m.closure(0b011) == 0b111);
    auto fl = m.flats();
    // flats: empty set, three single edges, the whole ground set
    CHECK(fl.size() == 5);
}

TEST_CASE("the two graph sides are orthogonal duals") {
    for (const char* name : {"triangle-cycle", "c4", "k4-cycle", "bowtie"}) {
        const Instance inst = corpus_instance(name);
        const Instance dual = orthogonal_dual_tu(inst);
        CHECK(dual.rank_full == inst.ground - inst.rank_full);
        // R(M^perp; l, x) = R(M; x, l)
        const BiPoly rp = rank_gen_poly(Matroid(inst));
        const BiPoly rd = rank_gen_poly(Matroid(dual));
        BiPoly swapped;
        for (const auto& [key, c] : rp.terms()) swapped.add_term(key.second, key.first, c);
        CHECK(rd == swapped);
    }
}

TEST_CASE("GF(p) orthogonal dual") {
    const Instance fano = corpus_instance("fano-gf2");
    const Instance dual = orthogonal_dual_gfp(fano);
    CHECK(dual.rank_full == 4);
    // every dual row is orthogonal to every primal row mod 2
    for (const auto& dr : dual.rows)
        for (const auto& pr : fano.rows) {
            int dot = 0;
            for (int e = 0; e < 7; ++e) dot += dr[e] * pr[e];
            CHECK(dot % 2 == 0);
        }
    CHECK(orthogonal_dual_gfp(dual).rank_full == 3);
}

TEST_CASE("instance parsing") {
    const Instance g = parse_instance(
        R"({"kind":"graph","vertices":3,"edges":[[0,1],[1,2],[2,0]],"side":"cycle"})");
    CHECK(g.is_graph());
    CHECK(g.ground == 3);
    CHECK(g.rank_full == 1);

    const Instance m = parse_instance(
        R"({"kind":"matrix","ring":{"type":"gfp","p":3},"rows":[[1,0,1],[0,1,2]]})");
    CHECK(m.is_gfp());
    CHECK(m.p == 3);
    CHECK(m.rank_full == 2);

    const Instance t = parse_instance(
        R"({"kind":"matrix","ring":{"type":"int-tu"},"rows":[[1,-1,0],[0,1,-1]]})");
    CHECK_FALSE(t.is_gfp());
    CHECK(t.rank_full == 2);

    CHECK_THROWS_AS(parse_instance("{"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"widget"})"), ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"kind":"graph","vertices":2,"edges":[[0,5]],"side":"cycle"})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"kind":"matrix","ring":{"type":"gfp","p":6},"rows":[[1]]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"kind":"matrix","ring":{"type":"int-tu"},"rows":[[2]]})"),
        ParseError);
}

TEST_CASE("total unimodularity check") {
    const OrientedGraph k4 = *corpus_instance("k4-cycle").graph;
    CHECK(is_totally_unimodular(vertex_edge_matrix(k4)));
    CHECK(is_totally_unimodular(fundamental_cycle_matrix(k4)));
    // the 0/1 Fano matrix has a minor of determinant +-2
    CHECK_FALSE(is_totally_unimodular(corpus_instance("fano-gf2").rows));
    CHECK_THROWS_AS(make_tu_instance("fano", corpus_instance("fano-gf2").rows), ParseError);
}

TEST_CASE("ground-set symmetries preserve the matroid") {
    for (const char* name : {"k4-cycle", "ternary-whirl", "hamming74-gf2"}) {
        const Instance inst = corpus_instance(name);
        CHECK(negate_column(inst, 0).rank_full == inst.rank_full);
        std::vector<int> perm(inst.ground);
        for (int i = 0; i < inst.ground; ++i) perm[i] = inst.ground - 1 - i;
        const Instance p = permute_columns(inst, perm);
        CHECK(p.rank_full == inst.rank_full);
        CHECK(rank_gen_poly(Matroid(p)) == rank_gen_poly(Matroid(inst)));
    }
    const Instance k4 = corpus_instance("k4-cycle");
    CHECK(rank_gen_poly(Matroid(reorient_edge(k4, 2))) == rank_gen_poly(Matroid(k4)));
}

TEST_CASE("mod-p reduction keeps the column matroid") {
    for (const char* name : {"k4-cycle", "k23", "bowtie"}) {
        const Instance inst = corpus_instance(name);
        for (int p : {2, 3, 5}) {
            const Instance red = reduce_mod_p(inst, p);
            CHECK(red.ground == inst.ground);
            CHECK(red.rank_full == inst.rank_full);
            Matroid a(inst), b(red);
            for (std::uint32_t mask = 0; mask <= a.full_mask(); ++mask)
                CHECK(a.rank(mask) == b.rank(mask));
        }
    }
    // rowless instances keep their ground set
    const Instance p3 = reduce_mod_p(corpus_instance("path3"), 2);
    CHECK(p3.ground == 3);
    CHECK(p3.rank_full == 0);
}
