#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <parcelforge/corpus.hpp>
#include <parcelforge/group.hpp>
#include <parcelforge/poly_engine.hpp>
#include <parcelforge/verify.hpp>

using namespace parcelforge;

TEST_CASE("group parsing and arithmetic") {
    const GroupSpec z6 = GroupSpec::parse("cyclic:6");
    CHECK(z6.order() == 6);
    CHECK(z6.add(4, 5) == 3);
    CHECK(z6.neg(2) == 4);
    CHECK(z6.smul(4, 5) == 2);

    const GroupSpec f4 = GroupSpec::parse("gfp:2:2");
    CHECK(f4.order() == 4);
    CHECK(f4.gfp_prime() == 2);
    // elementary abelian: everything is an involution
    for (GElem a = 0; a < 4; ++a) CHECK(f4.add(a, a) == 0);

    const GroupSpec prod = GroupSpec::parse("product:cyclic:3:2");
    CHECK(prod.order() == 9);
    const auto parts = prod.split(prod.encode({2, 1}), 2);
    CHECK(parts.size() == 2);
    CHECK(prod.join(parts, GroupSpec::cyclic(3)) == prod.encode({2, 1}));

    CHECK_THROWS_AS(GroupSpec::parse("cyclic:0"), ParseError);
    CHECK_THROWS_AS(GroupSpec::parse("gfp:4:1"), ParseError);
    CHECK_THROWS_AS(GroupSpec::parse("ring:5"), ParseError);
}

TEST_CASE("group compatibility with instances") {
    const Instance fano = corpus_instance("fano-gf2");
    CHECK(GroupSpec::gfp_vector(2, 2).compatible_with(fano));
    CHECK_FALSE(GroupSpec::gfp_vector(3, 1).compatible_with(fano));
    CHECK_FALSE(GroupSpec::cyclic(4).compatible_with(fano));
    const Instance k4 = corpus_instance("k4-cycle");
    CHECK(GroupSpec::cyclic(6).compatible_with(k4));
    CHECK(GroupSpec::gfp_vector(3, 1).compatible_with(k4));
}

TEST_CASE("flow spaces have q^r elements") {
    for (const char* name : {"triangle-cycle", "triangle-vertex", "c4", "k4-cycle",
                             "k23", "bowtie", "single-edge"}) {
        const Instance inst = corpus_instance(name);
        for (long q : {2L, 3L, 4L}) {
            const auto flows = enumerate_flows(inst, GroupSpec::cyclic(q));
            CHECK(Int(flows.size()) == ipow(q, inst.rank_full));
        }
    }
    const Instance fano = corpus_instance("fano-gf2");
    CHECK(enumerate_flows(fano, GroupSpec::gfp_vector(2, 1)).size() == 8);
    CHECK(enumerate_flows(fano, GroupSpec::gfp_vector(2, 2)).size() == 64);
}

TEST_CASE("fundamental cycles span the same flow space as all simple cycles") {
    for (const char* name : {"triangle-cycle", "c4", "k4-cycle", "bowtie"}) {
        const Instance inst = corpus_instance(name);
        const Instance full = make_tu_instance(
            std::string(name) + "-allcycles", all_simple_cycle_rows(*inst.graph),
            /*trust_tu=*/true);
        for (long q : {2L, 3L, 4L}) {
            auto a = enumerate_flows(inst, GroupSpec::cyclic(q));
            auto b = enumerate_flows(full, GroupSpec::cyclic(q));
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }
}

TEST_CASE("kernel census counts only depend on the group order") {
    // Z_4 and GF(2)^2 give the same kernel distribution on a TU instance
    for (const char* name : {"triangle-cycle", "k4-cycle", "k23"}) {
        const Instance inst = corpus_instance(name);
        CHECK(kernel_census(inst, GroupSpec::cyclic(4)) ==
              kernel_census(inst, GroupSpec::gfp_vector(2, 2)));
    }
}

TEST_CASE("kernel census matches the flow census polynomial") {
    for (const char* name : {"k4-cycle", "bowtie", "ternary-whirl"}) {
        const Instance inst = corpus_instance(name);
        for (long q : {2L, 3L, 4L}) {
            auto a = group_of_order(inst, q);
            if (!a) continue;
            const auto kc = kernel_census(inst, *a);
            const UniPoly w = flow_census_poly(Matroid(inst), q);
            Int total = 0;
            for (const auto& [k, c] : kc) {
                CHECK(w.coeff(k) == c);
                total += c;
            }
            CHECK(total == w.sum_coeffs());
        }
    }
}

TEST_CASE("kernels of flows are closed sets") {
    for (const char* name : {"triangle-cycle", "k4-cycle", "fano-gf2"}) {
        const Instance inst = corpus_instance(name);
        const GroupSpec a =
            inst.is_gfp() ? GroupSpec::gfp_vector(inst.p, 1) : GroupSpec::cyclic(3);
        CHECK(closure_of_kernel_property(inst, a));
    }
}

TEST_CASE("weighted profile census generalizes counting") {
    const Instance k4 = corpus_instance("k4-cycle");
    const GroupSpec a = GroupSpec::cyclic(3);
    std::vector<CycElem> ones(3, CycElem(1, 1));
    Int total;
    CHECK(weighted_profile_census(k4, a, ones).is_integer(&total));
    CHECK(total == 27);
}

TEST_CASE("binary affineness: three routes agree") {
    // cycle matroid of C4 is a single even circuit: affine
    CHECK(is_binary_affine(reduce_mod_p(corpus_instance("c4"), 2), 0b1111));
    // K4 contains triangles: not affine
    CHECK_FALSE(is_binary_affine(reduce_mod_p(corpus_instance("k4-cycle"), 2), 0b111111));
    // the Fano plane has three-point lines: not affine
    CHECK_FALSE(is_binary_affine(corpus_instance("fano-gf2"), 0b1111111));
    // a bridge is a one-element circuit on the cycle side: not affine
    CHECK_FALSE(is_binary_affine(reduce_mod_p(corpus_instance("single-edge"), 2), 0b1));
    CHECK_THROWS(is_binary_affine(corpus_instance("ternary-2x4"), 0b1111));
}

TEST_CASE("GF(2) support dichotomy on graphs") {
    const OrientedGraph g = *corpus_instance("k4-cycle").graph;
    // a triangle of K4 is a cycle, and also a cutset (complement of a star)
    const std::vector<int> tri = {0, 1, 0, 1, 0, 1};  // edges 01,02,03,12,13,23
    SUBCASE("triangle 02,12,23 is in the cycle space") {
        const std::vector<int> c = {0, 1, 0, 1, 0, 1};
        auto cl = graph_support_property(g, c);
        CHECK(cl.even_degrees == cl.in_cycle_space);
    }
    // star at vertex 0 is a minimal cutset
    const std::vector<int> star = {1, 1, 1, 0, 0, 0};
    auto cl = graph_support_property(g, star);
    CHECK(cl.cutset_union);
    CHECK(cl.in_cut_space);
    CHECK_FALSE(cl.in_cycle_space);
    // single edge: neither
    const std::vector<int> one = {1, 0, 0, 0, 0, 0};
    auto cl1 = graph_support_property(g, one);
    CHECK_FALSE(cl1.in_cut_space);
    CHECK_FALSE(cl1.in_cycle_space);
    CHECK_FALSE(cl1.even_degrees);
}
