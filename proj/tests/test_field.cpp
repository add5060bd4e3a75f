#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "polyac/field.hpp"
#include "polyac/oracle.hpp"

using namespace polyac;

TEST_CASE("arith examples over F_101") {
    FieldCtx F(101);
    FieldElem a7(7, F), a8(8, F), a1(1, F), a2(2, F), a0(0, F), a5(5, F);
    CHECK(arith(a7, a8, ArithKind::Mul).v == 56);
    CHECK(arith(a1, a2, ArithKind::Div).v == 51);  // 2*51 = 102 = 1 mod 101
    CHECK(F.mul(2, 51) == 1);
    CHECK(arith(a0, a5, ArithKind::Add).v == 5);
}

TEST_CASE("inverses") {
    FieldCtx F(101);
    CHECK(F.inv(2) == 51);
    CHECK(F.inv(1) == 1);
    CHECK(F.inv(100) == 100);  // (-1)^2 = 1
    CHECK_THROWS_AS(F.inv(0), DivisionByZero);
    FieldElem z(0, F);
    CHECK_THROWS_AS(arith(FieldElem(1, F), z, ArithKind::Div), DivisionByZero);
}

TEST_CASE("char_guard is strict inequality") {
    FieldCtx F(101);
    CHECK_NOTHROW(F.char_guard(64));
    CHECK_THROWS_AS(F.char_guard(101), CharacteristicTooSmall);
    CHECK_NOTHROW(FieldCtx(1000003).char_guard(2 * 500));
    // exhaustive for small p
    FieldCtx F5(5);
    for (u64 b = 0; b < 10; ++b) {
        if (5 > b)
            CHECK_NOTHROW(F5.char_guard(b));
        else
            CHECK_THROWS_AS(F5.char_guard(b), CharacteristicTooSmall);
    }
    try {
        F.char_guard(200);
        CHECK(false);
    } catch (const CharacteristicTooSmall& e) {
        CHECK(e.p() == 101);
        CHECK(e.bound() == 200);
    }
}

TEST_CASE("modulus constraints") {
    CHECK_THROWS_AS(FieldCtx(4), NotPrime);
    CHECK_THROWS_AS(FieldCtx(2), NotPrime);  // p >= 3
    CHECK_THROWS_AS(FieldCtx(1), NotPrime);
    CHECK_NOTHROW(FieldCtx(3));
    CHECK_NOTHROW(FieldCtx(1000003));
    CHECK_NOTHROW(FieldCtx((u64(1) << 61) - 1));  // Mersenne prime, still < 2^63
    CHECK_THROWS_AS(FieldCtx(u64(1) << 63), NotPrime);
}

TEST_CASE("mixing moduli is an error") {
    FieldCtx F1(101), F2(103);
    FieldElem a(5, F1), b(7, F2);
    CHECK_THROWS_AS(a + b, ModulusMismatch);
    CHECK_THROWS_AS(arith(a, b, ArithKind::Mul), ModulusMismatch);
}

TEST_CASE("field properties on random triples") {
    FieldCtx F(1000003);
    oracle::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        u64 a = rng.below(F.p()), b = rng.below(F.p()), c = rng.below(F.p());
        CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        if (a != 0) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.inv(F.inv(a)) == a);
        }
    }
}

TEST_CASE("primality testing matches trial division") {
    for (u64 n = 0; n < 2000; ++n) {
        bool want = n >= 2;
        for (u64 d = 2; d * d <= n && want; ++d)
            if (n % d == 0) want = false;
        CHECK(is_prime_u64(n) == want);
    }
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(u64(1000003) * 1000003));
}
