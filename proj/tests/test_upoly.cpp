#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "polyac/upoly.hpp"
#include "test_util.hpp"

using namespace polyac;
using namespace polyac::testutil;

namespace {
FieldCtx F(1000003);
FpRing ring(F);
}  // namespace

TEST_CASE("arithmetic examples") {
    FpPoly x1 = poly_from_ints(F, {1, 1});  // x+1
    FpPoly x2 = poly_from_ints(F, {2, 1});  // x+2
    CHECK(pequal(ring, poly_mul(F, x1, x2), poly_from_ints(F, {2, 3, 1})));
    CHECK(pequal(ring, poly_derivative(F, poly_from_ints(F, {2, 3, 1}), 1), poly_from_ints(F, {3, 2})));
    FpPoly a = poly_from_ints(F, {-1, 0, 1});
    FpPoly b = poly_from_ints(F, {1, 0, -1});
    CHECK(poly_add(F, a, b).is_zero());  // cancellation trims to the empty polynomial
}

TEST_CASE("evaluation") {
    FpPoly f = poly_from_ints(F, {2, 3, 1});
    CHECK(poly_eval(F, f, 1) == 6);
    CHECK(poly_eval(F, f, F.from_int(-1)) == 0);
    CHECK(poly_eval(F, FpPoly{}, 12345) == 0);
}

TEST_CASE("reversal") {
    FpPoly f = poly_from_ints(F, {2, 3, 1});
    CHECK(pequal(ring, reverse(F, f), poly_from_ints(F, {1, 3, 2})));
    CHECK(pequal(ring, reverse(F, poly_from_ints(F, {0, 1})), poly_from_ints(F, {1})));
    CHECK(pequal(ring, reverse(F, reverse(F, f)), f));  // involution off the origin
    CHECK_THROWS_AS(reverse(F, FpPoly{}), ZeroPolynomial);
    // rev(fg) = rev(f) rev(g) when f(0), g(0) != 0
    oracle::Rng rng(3);
    for (int t = 0; t < 25; ++t) {
        FpPoly f1 = random_poly(F, rng, 1 + rng.below(8));
        FpPoly g1 = random_poly(F, rng, 1 + rng.below(8));
        if (f1.c[0] == 0 || g1.c[0] == 0) continue;
        CHECK(pequal(ring, reverse(F, poly_mul(F, f1, g1)), poly_mul(F, reverse(F, f1), reverse(F, g1))));
    }
}

TEST_CASE("interpolation") {
    FpPoly f = interpolate_coeffs(F, {{0, 2}, {1, 6}, {2, 12}});
    CHECK(pequal(ring, f, poly_from_ints(F, {2, 3, 1})));
    CHECK(pequal(ring, interpolate_coeffs(F, {{5, 7}}), poly_from_ints(F, {7})));
    CHECK(interpolate_coeffs(F, {{0, 0}, {1, 0}, {2, 0}}).is_zero());
    CHECK_THROWS_AS(interpolate_coeffs(F, {{3, 1}, {3, 2}}), DuplicateNode);

    oracle::Rng rng(11);
    for (std::size_t deg : {1u, 5u, 17u, 64u}) {
        FpPoly g = random_poly(F, rng, deg);
        std::vector<std::pair<u64, u64>> pairs;
        for (u64 t = 0; t <= deg; ++t) pairs.push_back({t, poly_eval(F, g, t)});
        CHECK(pequal(ring, interpolate_coeffs(F, pairs), g));
    }
}

TEST_CASE("leading_coeff_select") {
    CHECK(leading_coeff_select(F, {0, 5, 3}) == 5);
    CHECK(leading_coeff_select(F, {0, 0, 0}) == 0);
    CHECK(leading_coeff_select(F, {7}) == 7);
}

TEST_CASE("make_monic") {
    auto [m, lc] = make_monic(F, poly_from_ints(F, {4, 6, 2}));
    CHECK(pequal(ring, m, poly_from_ints(F, {2, 3, 1})));
    CHECK(lc == 2);
    auto [m2, lc2] = make_monic(F, poly_from_ints(F, {2, 3, 1}));
    CHECK(pequal(ring, m2, poly_from_ints(F, {2, 3, 1})));
    CHECK(lc2 == 1);
    auto [m3, lc3] = make_monic(F, poly_from_ints(F, {5}));
    CHECK(pis_one(ring, m3));
    CHECK(lc3 == 5);
    CHECK_THROWS_AS(make_monic(F, FpPoly{}), ZeroPolynomial);
}

TEST_CASE("esym_values") {
    CHECK(esym_values(F, {1, 2, 3}, 2) == 11);
    CHECK(esym_values(F, {1, 2, 3}, 0) == 1);
    CHECK(esym_values(F, {1, 2, 3}, 4) == 0);
    // brute force subset oracle up to 12 values
    oracle::Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        std::size_t n = 1 + rng.below(12);
        std::vector<u64> v(n);
        for (auto& x : v) x = rng.below(50);
        for (std::size_t d = 0; d <= n; ++d) {
            u64 want = 0;
            for (u64 mask = 0; mask < (u64(1) << n); ++mask) {
                if (__builtin_popcountll(mask) != int(d)) continue;
                u64 prod = 1;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1) prod = F.mul(prod, v[i]);
                want = F.add(want, prod);
            }
            CHECK(esym_values(F, v, d) == want);
        }
    }
}

TEST_CASE("degree additivity and the interpolation product path") {
    oracle::Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        FpPoly f = random_poly(F, rng, 1 + rng.below(10));
        FpPoly g = random_poly(F, rng, 1 + rng.below(10));
        FpPoly h = poly_mul(F, f, g);
        CHECK(h.deg() == f.deg() + g.deg());
        CHECK(pequal(ring, h, poly_mul_interp(F, f, g)));
    }
    // above the threshold the two paths must agree bit-exactly
    FpPoly big1 = random_poly(F, rng, 600);
    FpPoly big2 = random_poly(F, rng, 600);
    CHECK(pequal(ring, pmul_schoolbook(ring, big1, big2), poly_mul(F, big1, big2)));
}

TEST_CASE("text format") {
    CHECK(pequal(ring, parse_poly(F, "2,3,1"), poly_from_ints(F, {2, 3, 1})));
    CHECK(pequal(ring, parse_poly(F, "x^2+3*x+2"), poly_from_ints(F, {2, 3, 1})));
    CHECK(pequal(ring, parse_poly(F, "x^2-3x+2"), poly_from_ints(F, {2, -3, 1})));
    CHECK(pequal(ring, parse_poly(F, "-x"), poly_from_ints(F, {0, -1})));
    CHECK(print_poly(F, poly_from_ints(F, {2, 3, 1})) == "x^2+3*x+2");
    CHECK(print_poly(F, poly_from_ints(F, {-1, 1})) == "x-1");
    CHECK(print_poly(F, FpPoly{}) == "0");
    CHECK(print_poly(F, poly_from_ints(F, {0, 0, 5})) == "5*x^2");
    // bit-exact round trip on random polynomials
    oracle::Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        FpPoly f = random_poly(F, rng, rng.below(12));
        CHECK(pequal(ring, parse_poly(F, print_poly(F, f)), f));
    }
    CHECK_THROWS_AS(parse_poly(F, "x^^2"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "2,,3"), ParseError);
}
