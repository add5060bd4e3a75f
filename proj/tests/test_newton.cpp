#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "polyac/newton.hpp"
#include "test_util.hpp"

using namespace polyac;
using namespace polyac::testutil;

namespace {
FieldCtx F(1000003);
FpRing ring(F);
}  // namespace

TEST_CASE("to_power_sums examples") {
    FpPoly f = poly_from_ints(F, {2, -3, 1});  // roots 1, 2
    NewtonSeries ns = to_power_sums(F, f, 3);
    CHECK(ns.n == 2);
    CHECK(ns.p == std::vector<u64>{2, 3, 5, 9});
    NewtonSeries one_root = to_power_sums(F, poly_from_ints(F, {-5, 1}), 2);
    CHECK(one_root.p == std::vector<u64>{1, 5, 25});
    NewtonSeries dbl = to_power_sums(F, poly_from_ints(F, {0, 0, 1}), 2);
    CHECK(dbl.p == std::vector<u64>{2, 0, 0});
    CHECK_THROWS_AS(to_power_sums(F, poly_from_ints(F, {1, 2}), 2), NotMonic);
}

TEST_CASE("from_power_sums examples") {
    NewtonSeries ns{2, {2, 3, 5}};
    CHECK(pequal(ring, from_power_sums(F, ns), poly_from_ints(F, {2, -3, 1})));
    CHECK(pequal(ring, from_power_sums(F, NewtonSeries{1, {1, 5}}), poly_from_ints(F, {-5, 1})));
    CHECK(pequal(ring, from_power_sums(F, NewtonSeries{3, {3, 0, 0, 0}}), poly_from_ints(F, {0, 0, 0, 1})));
    CHECK_THROWS_AS(from_power_sums(F, NewtonSeries{2, {3, 3, 5}}), InconsistentSeries);
    CHECK_THROWS_AS(from_power_sums(F, NewtonSeries{2, {2, 3, 5, 17}}), InconsistentSeries);
}

TEST_CASE("round trip and oracle agreement") {
    oracle::Rng rng(23);
    for (std::size_t deg : {1u, 2u, 7u, 23u, 64u}) {
        for (int t = 0; t < 8; ++t) {
            FpPoly f = random_monic(F, rng, deg);
            NewtonSeries ns = to_power_sums(F, f, deg);
            CHECK(ns.p == oracle::newton_recurrence_power_sums(F, f, deg));
            CHECK(pequal(ring, from_power_sums(F, ns), f));
        }
    }
}

TEST_CASE("additivity: Newton(fg) = Newton(f) + Newton(g)") {
    oracle::Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        FpPoly f = random_monic(F, rng, 1 + rng.below(10));
        FpPoly g = random_monic(F, rng, 1 + rng.below(10));
        std::size_t d = 12;
        auto pf = to_power_sums(F, f, d).p;
        auto pg = to_power_sums(F, g, d).p;
        auto pfg = to_power_sums(F, poly_mul(F, f, g), d).p;
        for (std::size_t k = 0; k <= d; ++k) CHECK(pfg[k] == F.add(pf[k], pg[k]));
    }
}

TEST_CASE("exact division") {
    FpPoly f = poly_from_ints(F, {2, 3, 1});
    CHECK(pequal(ring, exact_div(F, f, poly_from_ints(F, {1, 1})), poly_from_ints(F, {2, 1})));
    CHECK(pis_one(ring, exact_div(F, f, f)));
    FpPoly prof = from_roots(F, {{1, 2}, {2, 1}});  // (x-1)^2 (x-2)
    CHECK(pequal(ring, exact_div(F, prof, from_roots(F, {{1, 2}})), poly_from_ints(F, {-2, 1})));
    CHECK_THROWS_AS(exact_div(F, f, poly_from_ints(F, {5, 1})), NotDivisible);
    oracle::Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        FpPoly a = random_monic(F, rng, 1 + rng.below(12));
        FpPoly b = random_monic(F, rng, 1 + rng.below(12));
        CHECK(pequal(ring, exact_div(F, poly_mul(F, a, b), b), a));
    }
}

TEST_CASE("perfect root") {
    CHECK(pequal(ring, perfect_root(F, poly_from_ints(F, {1, -2, 1}), 2), poly_from_ints(F, {-1, 1})));
    CHECK(pequal(ring, perfect_root(F, poly_from_ints(F, {1, 0, 2, 0, 1}), 2), poly_from_ints(F, {1, 0, 1})));
    FpPoly f = poly_from_ints(F, {2, 3, 1});
    CHECK(pequal(ring, perfect_root(F, f, 1), f));
    CHECK_THROWS_AS(perfect_root(F, poly_from_ints(F, {1, 1}), 2), DegreeNotDivisible);
    CHECK_THROWS_AS(perfect_root(F, poly_from_ints(F, {1, 0, 1}), 2), NotAPerfectPower);
    oracle::Rng rng(37);
    for (std::size_t r : {1u, 2u, 3u, 4u}) {
        for (int t = 0; t < 8; ++t) {
            std::size_t dg = 1 + rng.below(64 / r);
            FpPoly g = random_monic(F, rng, dg);
            CHECK(pequal(ring, perfect_root(F, ppow(ring, g, r), r), g));
        }
    }
}
