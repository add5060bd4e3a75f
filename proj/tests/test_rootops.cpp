#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "polyac/rootops.hpp"
#include "test_util.hpp"

using namespace polyac;
using namespace polyac::testutil;

namespace {
FieldCtx F(1000003);
FpRing ring(F);

// brute-force split on a known profile
struct ProfileSplit {
    FpPoly in, out;
};
}  // namespace

TEST_CASE("filter examples") {
    FpPoly f = from_roots(F, {{1, 1}, {2, 1}});
    auto r = filter_common_roots(F, f, {poly_from_ints(F, {-1, 1})});
    CHECK(pequal(ring, r.in, poly_from_ints(F, {-1, 1})));
    CHECK(pequal(ring, r.out, poly_from_ints(F, {-2, 1})));

    // f = x(x-1)(x-2), gs = {x(x-1), x(x-2)}: common root 0 only
    FpPoly f2 = from_roots(F, {{0, 1}, {1, 1}, {2, 1}});
    auto r2 = filter_common_roots(F, f2, {from_roots(F, {{0, 1}, {1, 1}}), from_roots(F, {{0, 1}, {2, 1}})});
    CHECK(pequal(ring, r2.in, poly_from_ints(F, {0, 1})));
    CHECK(pequal(ring, r2.out, poly_from_ints(F, {2, -3, 1})));

    // a nonzero constant has no roots
    auto r3 = filter_common_roots(F, f, {poly_from_ints(F, {1})});
    CHECK(pis_one(ring, r3.in));
    CHECK(pequal(ring, r3.out, f));
}

TEST_CASE("filter on random profiles against the root-set oracle") {
    oracle::Rng rng(67);
    for (int t = 0; t < 60; ++t) {
        auto prof = oracle::random_profile(F, 1000 + t, 2, 4, 4);
        auto polys = oracle::instance_from_profile(F, prof);
        FpPoly f = polys[0], g = polys[1];
        auto r = filter_common_roots(F, f, {g});
        // oracle: split by whether the root appears in g
        FpPoly want_in = pone(ring), want_out = pone(ring);
        for (std::size_t i = 0; i < prof.roots.size(); ++i) {
            if (prof.mults[i][0] == 0) continue;
            FpPoly pw = from_roots(F, {{i64(prof.roots[i]), prof.mults[i][0]}});
            if (prof.mults[i][1] > 0)
                want_in = poly_mul(F, want_in, pw);
            else
                want_out = poly_mul(F, want_out, pw);
        }
        CHECK(pequal(ring, r.in, want_in));
        CHECK(pequal(ring, r.out, want_out));
        CHECK(pequal(ring, poly_mul(F, r.in, r.out), f));
    }
}

TEST_CASE("threshold examples") {
    FpPoly f = from_roots(F, {{1, 2}, {2, 1}});
    auto r = threshold_multiplicity(F, f, {f}, {2});
    CHECK(pequal(ring, r.ge, from_roots(F, {{1, 2}})));
    CHECK(pequal(ring, r.lt, poly_from_ints(F, {-2, 1})));

    // r > deg g forces (1, f)
    auto r2 = threshold_multiplicity(F, f, {poly_from_ints(F, {3, 1})}, {5});
    CHECK(pis_one(ring, r2.ge));
    CHECK(pequal(ring, r2.lt, f));

    // all thresholds 1 is plain filtering
    FpPoly g = from_roots(F, {{1, 1}, {7, 1}});
    auto thr = threshold_multiplicity(F, f, {g}, {1});
    auto fil = filter_common_roots(F, f, {g});
    CHECK(pequal(ring, thr.ge, fil.in));
    CHECK(pequal(ring, thr.lt, fil.out));
}

TEST_CASE("threshold against the profile predicate") {
    oracle::Rng rng(71);
    for (int t = 0; t < 40; ++t) {
        auto prof = oracle::random_profile(F, 2000 + t, 3, 4, 5);
        auto polys = oracle::instance_from_profile(F, prof);
        FpPoly f = polys[0];
        std::vector<FpPoly> gs{polys[1], polys[2]};
        std::vector<std::size_t> rs{1 + rng.below(4), 1 + rng.below(4)};
        auto r = threshold_multiplicity(F, f, gs, rs);
        FpPoly want = pone(ring);
        bool forced_trivial = rs[0] > gs[0].deg() || rs[1] > gs[1].deg();
        for (std::size_t i = 0; i < prof.roots.size() && !forced_trivial; ++i) {
            if (prof.mults[i][0] == 0) continue;
            if (prof.mults[i][1] >= rs[0] && prof.mults[i][2] >= rs[1])
                want = poly_mul(F, want, from_roots(F, {{i64(prof.roots[i]), prof.mults[i][0]}}));
        }
        CHECK(pequal(ring, r.ge, want));
        CHECK(pequal(ring, poly_mul(F, r.ge, r.lt), f));
    }
}

TEST_CASE("derivative characterization of multiplicity") {
    oracle::Rng rng(73);
    for (int t = 0; t < 20; ++t) {
        auto prof = oracle::random_profile(F, 3000 + t, 1, 3, 5);
        FpPoly g = oracle::instance_from_profile(F, prof)[0];
        for (std::size_t i = 0; i < prof.roots.size(); ++i) {
            u64 m = prof.mults[i][0];
            for (std::size_t j = 0; j < m + 1 && j <= g.deg(); ++j) {
                u64 val = poly_eval(F, poly_derivative(F, g, j), prof.roots[i]);
                CHECK((val == 0) == (j < m));
            }
        }
    }
}

TEST_CASE("squarefree decomposition examples") {
    auto d1 = squarefree_decomposition(F, from_roots(F, {{1, 1}, {2, 2}}));
    REQUIRE(d1.parts.size() == 2);
    CHECK(pequal(ring, d1.parts[0], poly_from_ints(F, {-1, 1})));
    CHECK(pequal(ring, d1.parts[1], poly_from_ints(F, {-2, 1})));

    auto d2 = squarefree_decomposition(F, from_roots(F, {{1, 3}}));
    REQUIRE(d2.parts.size() == 3);
    CHECK(pis_one(ring, d2.parts[0]));
    CHECK(pis_one(ring, d2.parts[1]));
    CHECK(pequal(ring, d2.parts[2], poly_from_ints(F, {-1, 1})));

    FpPoly sf = from_roots(F, {{3, 1}, {4, 1}});
    auto d3 = squarefree_decomposition(F, sf);
    REQUIRE(d3.parts.size() == 1);
    CHECK(pequal(ring, d3.parts[0], sf));

    CHECK(squarefree_decomposition(F, poly_from_ints(F, {1})).parts.empty());
}

TEST_CASE("squarefree part") {
    CHECK(pequal(ring, squarefree_part(F, from_roots(F, {{1, 2}, {2, 1}})), poly_from_ints(F, {2, -3, 1})));
    FpPoly sf = from_roots(F, {{5, 1}, {6, 1}});
    CHECK(pequal(ring, squarefree_part(F, sf), sf));
    CHECK(pequal(ring, squarefree_part(F, from_roots(F, {{0, 7}})), poly_from_ints(F, {0, 1})));
}

TEST_CASE("decomposition invariants + Yun agreement on random profiles") {
    oracle::Rng rng(79);
    for (int t = 0; t < 80; ++t) {
        auto prof = oracle::random_profile(F, 4000 + t, 1, 6, 6);
        FpPoly f = oracle::instance_from_profile(F, prof)[0];
        auto dec = squarefree_decomposition(F, f).parts;
        auto yun = oracle::yun_squarefree(F, f);
        REQUIRE(dec.size() == yun.size());
        for (std::size_t i = 0; i < dec.size(); ++i) CHECK(pequal(ring, dec[i], yun[i]));
        // reconstruction, squarefreeness, pairwise coprimality, f_m != 1
        FpPoly rec = pone(ring);
        for (std::size_t i = 0; i < dec.size(); ++i) {
            rec = poly_mul(F, rec, ppow(ring, dec[i], i + 1));
            CHECK(pis_one(ring, oracle::euclid_gcd(F, dec[i], poly_derivative(F, dec[i], 1))));
            for (std::size_t j = i + 1; j < dec.size(); ++j)
                CHECK(pis_one(ring, oracle::euclid_gcd(F, dec[i], dec[j])));
        }
        CHECK(pequal(ring, rec, f));
        if (!dec.empty()) CHECK_FALSE(pis_one(ring, dec.back()));
    }
}
