#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <parcelforge/corpus.hpp>
#include <parcelforge/verify.hpp>

using namespace parcelforge;

TEST_CASE("the identity registry is pinned") {
    const std::vector<std::string> expect = {
        "thm1.1",   "prop2.5", "thm3.1",   "cor3.2",   "thm3.3",   "cor3.4",
        "cor3.5",   "cor3.6",  "thm4.1",   "thm4.2",   "cor4.3",   "cor4.4",
        "cor4.5",   "cor4.6",  "thm4.7",   "cor4.8",   "prop4.9",  "cor4.10",
        "cor4.11",  "cor4.12", "thm4.13",  "cor4.14",  "cor4.15",  "thm4.16a",
        "thm4.16b", "thm4.16c", "thm4.16d", "thm4.16e", "cor4.17", "cor4.18",
        "thm5.1",   "thm5.2",  "cor5.3",   "cor5.4",   "cor5.5",   "thm5.6",
        "thm6.1",   "cor6.2",  "sec6-p2",  "sec6-modulus", "gauss-sum",
        "thm7.1",   "cor7.2",  "thm7.3",
    };
    CHECK(registry_ids() == expect);
}

TEST_CASE("unknown identity ids are rejected") {
    CHECK_THROWS_AS(run_check("thm9.9", corpus_instance("c4"), VerifyParams{}),
                    ParseError);
}

TEST_CASE("a single transform check") {
    VerifyParams p;
    p.sigma = 4;
    p.q = 3;
    p.rho = 1;
    const auto reps = run_check("thm3.1", corpus_instance("triangle-cycle"), p);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].applicable);
    CHECK(reps[0].equal);
    CHECK(reps[0].theorem == "thm3.1");
    CHECK(reps[0].seconds >= 0.0);
}

TEST_CASE("checks hold for every primitive root choice") {
    // conjugating the root of unity permutes nothing essential: the identity
    // must hold verbatim for each rho coprime to sigma
    for (long rho : units_mod(6)) {
        VerifyParams p;
        p.sigma = 6;
        p.q = 3;
        p.rho = rho;
        for (const auto& r : run_check("thm4.7", corpus_instance("k4-cycle"), p)) {
            CHECK(r.applicable);
            CHECK(r.equal);
        }
    }
}

TEST_CASE("exceptional cells are flagged and still checked") {
    VerifyParams p;
    p.sigma = 2;
    p.q = 4;
    p.rho = 1;
    const auto reps = run_check("thm4.2", corpus_instance("c4"), p);
    REQUIRE_FALSE(reps.empty());
    bool saw_exceptional = false;
    for (const auto& r : reps) {
        CHECK(r.equal);
        saw_exceptional |= r.exceptional;
    }
    CHECK(saw_exceptional);
}

TEST_CASE("vanishing criterion distinguishes flow-positive from bridged") {
    VerifyParams p;
    p.m = 2;
    const auto pos = run_check("thm5.6", corpus_instance("k4-cycle"), p);
    REQUIRE(pos.size() == 1);
    CHECK(pos[0].equal);
    CHECK(pos[0].lhs == "nonzero");  // K4 has nowhere-zero 4-flows
    const auto neg = run_check("thm5.6", corpus_instance("bridge"), p);
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].equal);
    CHECK(neg[0].lhs == "zero");  // a bridge kills every nowhere-zero flow
}

TEST_CASE("the excluded set operation cell is skipped, not failed") {
    VerifyParams p;
    p.q = 2;
    const auto reps = run_check("cor4.17", corpus_instance("triangle-cycle"), p);
    int inapplicable = 0;
    for (const auto& r : reps) {
        CHECK(r.ok());
        if (!r.applicable) ++inapplicable;
    }
    CHECK(inapplicable == 1);  // only the implication bin identity excludes q = 2
}

TEST_CASE("default grids respect instance categories") {
    CHECK_FALSE(default_grid("thm1.1", corpus_instance("k4-cycle")).empty());
    CHECK(default_grid("thm1.1", corpus_instance("fano-gf2")).empty());
    CHECK(default_grid("thm6.1", corpus_instance("k4-cycle")).empty());
    CHECK_FALSE(default_grid("thm6.1", corpus_instance("id3-gf3")).empty());
    // GF(2) instances only admit 2-power group orders
    const auto grid = default_grid("thm3.1", corpus_instance("fano-gf2"));
    for (const auto& p : grid) CHECK((p.q == 2 || p.q == 4));
}

TEST_CASE("group selection") {
    const Instance k4 = corpus_instance("k4-cycle");
    REQUIRE(group_of_order(k4, 6).has_value());
    CHECK(group_of_order(k4, 6)->order() == 6);
    const Instance fano = corpus_instance("fano-gf2");
    REQUIRE(group_of_order(fano, 4).has_value());
    CHECK(group_of_order(fano, 4)->gfp_prime() == 2);
    CHECK_FALSE(group_of_order(fano, 6).has_value());
    CHECK_FALSE(group_of_order(fano, 3).has_value());
}

TEST_CASE("duals") {
    CHECK(dual_of(corpus_instance("fano-gf2")).rank_full == 4);
    const Instance k4 = corpus_instance("k4-cycle");
    CHECK(dual_of(k4).rank_full == k4.ground - k4.rank_full);
}

TEST_CASE("per-identity instance sweeps pass") {
    for (const char* id : {"thm3.1", "cor3.2", "prop4.9", "cor4.8"}) {
        const VerifySummary s = verify_instance(id, corpus_instance("triangle-vertex"));
        CHECK(s.all_ok());
        CHECK(s.passed > 0);
        CHECK(s.failed == 0);
    }
}
