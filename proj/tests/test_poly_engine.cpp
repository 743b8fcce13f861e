#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <parcelforge/corpus.hpp>
#include <parcelforge/poly_engine.hpp>

using namespace parcelforge;

TEST_CASE("rank generating polynomial of the triangle") {
    // vertex side: rank 2 on three elements; R = l^2 + 3l + 3 + x
    BiPoly expect;
    expect.add_term(2, 0, 1);
    expect.add_term(1, 0, 3);
    expect.add_term(0, 0, 3);
    expect.add_term(0, 1, 1);
    CHECK(rank_gen_poly(Matroid(corpus_instance("triangle-vertex"))) == expect);

    // cycle side: a rank-1 parallel triple; R = l + 3 + 3x + x^2
    BiPoly dual;
    dual.add_term(1, 0, 1);
    dual.add_term(0, 0, 3);
    dual.add_term(0, 1, 3);
    dual.add_term(0, 2, 1);
    CHECK(rank_gen_poly(Matroid(corpus_instance("triangle-cycle"))) == dual);
}

TEST_CASE("R(1,1) counts all subsets") {
    for (const Instance& inst : corpus())
        CHECK(rank_gen_poly(Matroid(inst)).eval(1, 1) == ipow(2, inst.ground));
}

TEST_CASE("Tutte specializations") {
    const Matroid k4(corpus_instance("k4-cycle"));
    const BiPoly t = tutte(k4);
    CHECK(t.eval(1, 1) == 16);  // bases = complements of the 16 spanning trees
    CHECK(t.eval(2, 2) == 64);  // all subsets
    CHECK(t.eval(1, 2) == rank_gen_poly(k4).eval(0, 1));
}

TEST_CASE("characteristic polynomials") {
    UniPoly chi = char_poly(Matroid(corpus_instance("triangle-vertex")));
    UniPoly expect;  // q^2 - 3q + 2
    expect.add_term(2, 1);
    expect.add_term(1, -3);
    expect.add_term(0, 2);
    CHECK(chi == expect);
    // cycle side of a loop graph: a coloop, so chi = q - 1
    UniPoly cl = char_poly(Matroid(corpus_instance("loop")));
    UniPoly qm1;
    qm1.add_term(1, 1);
    qm1.add_term(0, -1);
    CHECK(cl == qm1);
    // vertex side: a genuine rank-zero element kills the polynomial
    OrientedGraph lg;
    lg.vertex_count = 1;
    lg.edges = {{0, 0}};
    CHECK(char_poly(Matroid(make_graph_instance("loop-v", lg, false))).is_zero());
}

TEST_CASE("chromatic and flow polynomials of K4") {
    const OrientedGraph k4 = *corpus_instance("k4-cycle").graph;
    const UniPoly p = chromatic_poly(k4);
    // P(K4; l) = l(l-1)(l-2)(l-3)
    CHECK(p.eval(2) == 0);
    CHECK(p.eval(3) == 0);
    CHECK(p.eval(4) == 24);
    const UniPoly f = flow_poly(k4);
    // F(K4; l) = (l-1)(l-2)(l-3)
    CHECK(f.eval(2) == 0);
    CHECK(f.eval(3) == 0);
    CHECK(f.eval(4) == 6);
    CHECK(f.eval(5) == 24);
}

TEST_CASE("flow census polynomial") {
    const Matroid tri(corpus_instance("triangle-cycle"));
    // Z_2: the zero flow (kernel 3) and the all-ones flow (kernel 0)
    UniPoly w2;
    w2.add_term(3, 1);
    w2.add_term(0, 1);
    CHECK(flow_census_poly(tri, 2) == w2);
    // Z_3: zero flow plus two nowhere-zero flows
    UniPoly w3;
    w3.add_term(3, 1);
    w3.add_term(0, 2);
    CHECK(flow_census_poly(tri, 3) == w3);
}

TEST_CASE("flow census equals the Tutte-style flats convolution") {
    for (const Instance& inst : corpus()) {
        const Matroid m(inst);
        for (long q : {2L, 3L, 4L, 5L})
            CHECK(flow_census_poly(m, q) == crapo_tutte_convolution(m, q));
    }
}

TEST_CASE("flow census coefficients count flows when a group exists") {
    auto positive = [](const char* name, std::initializer_list<long> qs) {
        const Matroid m(corpus_instance(name));
        for (long q : qs) {
            const UniPoly w = flow_census_poly(m, q);
            for (const auto& [k, c] : w.terms()) CHECK(c > 0);
            CHECK(w.sum_coeffs() == ipow(q, m.full_rank()));
        }
    };
    positive("k4-vertex", {2, 3, 5});
    positive("bridge", {2, 3, 5});
    positive("fano-gf2", {2, 4});  // binary matroid: only 2-power orders count
    // at a non-realizable order the polynomial can go negative, but the
    // coefficients still sum to q^r
    const UniPoly w = flow_census_poly(Matroid(corpus_instance("fano-gf2")), 3);
    bool saw_negative = false;
    for (const auto& [k, c] : w.terms()) saw_negative |= c < 0;
    CHECK(saw_negative);
    CHECK(w.sum_coeffs() == 27);
}

TEST_CASE("deletion-contraction path agrees with subset expansion") {
    // a 12-edge multigraph evaluated by subset expansion ...
    OrientedGraph small;
    small.vertex_count = 4;
    for (auto [t, h] : std::vector<std::pair<int, int>>{
             {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
        for (int copy = 0; copy < 2; ++copy) small.edges.emplace_back(t, h);
    const BiPoly base = rank_gen_poly(Matroid(make_graph_instance("2k4", small, true)));

    // ... and its disjoint double (24 edges), which must use the
    // deletion-contraction walk and factor as the square
    OrientedGraph doubled = small;
    doubled.vertex_count = 8;
    for (auto [t, h] : small.edges) doubled.edges.emplace_back(t + 4, h + 4);
    const BiPoly big = rank_gen_poly(Matroid(make_graph_instance("2k4+2k4", doubled, true)));
    CHECK(big == base * base);
}

TEST_CASE("char_poly counts nowhere-zero flows") {
    for (const char* name : {"k4-cycle", "c5", "bowtie", "ternary-whirl"}) {
        const Matroid m(corpus_instance(name));
        const UniPoly chi = char_poly(m);
        for (long q : {2L, 3L, 4L, 5L}) {
            const UniPoly w = flow_census_poly(m, q);
            CHECK(chi.eval(Int(q)) == w.coeff(0));
        }
    }
}
