/*
   Copyright 2026 The polyac authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYAC_FIELD_HPP
#define POLYAC_FIELD_HPP

#include <cstdint>
#include <vector>

#include "polyac/errors.hpp"

namespace polyac {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

#if !defined(__SIZEOF_INT128__)
#error "polyac requires unsigned __int128 (GCC/Clang)"
#endif

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n) noexcept;

// The prime field F_p. p is an odd prime < 2^63; elements are canonical
// representatives in [0, p). All arithmetic is exact, with 128-bit
// intermediates for products.
class FieldCtx {
   public:
    explicit FieldCtx(u64 prime) : p_(prime) {
        if (p_ < 3 || p_ >= (u64(1) << 63) || !is_prime_u64(p_)) throw NotPrime("modulus " + std::to_string(p_));
    }

    u64 p() const noexcept { return p_; }

    u64 add(u64 a, u64 b) const noexcept {
        u64 t = p_ - b;
        return a >= t ? a - t : a + b;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const noexcept { return u64((u128(a) * b) % p_); }

    u64 pow(u64 a, u64 e) const noexcept {
        u64 r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Fermat inverse a^(p-2); exactness is checked by the caller's algebra,
    // not here.
    u64 inv(u64 a) const {
        if (a == 0) throw DivisionByZero("inverse of 0");
        return pow(a, p_ - 2);
    }
    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

    u64 from_int(i64 x) const noexcept {
        i64 r = x % i64(p_);
        return r < 0 ? u64(r + i64(p_)) : u64(r);
    }
    u64 from_uint(u64 x) const noexcept { return x % p_; }

    // Balanced representative in (-p/2, p/2], used by the text printer.
    i64 balanced(u64 a) const noexcept { return a > p_ / 2 ? i64(a) - i64(p_) : i64(a); }

    // Succeeds iff p > bound. Every theorem-level characteristic hypothesis
    // funnels through here (see the guard_* helpers below).
    void char_guard(u64 bound) const {
        if (p_ <= bound) throw CharacteristicTooSmall(p_, bound);
    }

    // Centralized characteristic-bound table.
    void guard_newton(u64 d) const { char_guard(d); }            // Newton conversions, filters, thresholds, sqfree
    void guard_gcd2(u64 d) const { char_guard(2 * d); }          // gcd of two
    void guard_gcdm(u64 m, u64 d) const { char_guard(m * d); }   // gcd of m
    void guard_lcmm(u64 m, u64 d) const { char_guard(m * m * d); }
    void guard_diamond2(u64 d) const { char_guard(2 * d); }      // two-polynomial diamond
    void guard_diamondm(u64 m, u64 d) const { char_guard(2 * m * d); }

    bool operator==(const FieldCtx& o) const noexcept { return p_ == o.p_; }

   private:
    u64 p_;
};

// A checked field element: value + owning context. Mixing contexts is a
// programming error and throws ModulusMismatch.
struct FieldElem {
    u64 v = 0;
    const FieldCtx* F = nullptr;

    FieldElem() = default;
    FieldElem(u64 value, const FieldCtx& ctx) : v(value % ctx.p()), F(&ctx) {}

    static FieldElem of(const FieldCtx& ctx, i64 x) { return FieldElem(ctx.from_int(x), ctx); }

    bool is_zero() const noexcept { return v == 0; }

    friend FieldElem operator+(FieldElem a, FieldElem b) { return FieldElem(same(a, b).add(a.v, b.v), *a.F); }
    friend FieldElem operator-(FieldElem a, FieldElem b) { return FieldElem(same(a, b).sub(a.v, b.v), *a.F); }
    friend FieldElem operator*(FieldElem a, FieldElem b) { return FieldElem(same(a, b).mul(a.v, b.v), *a.F); }
    friend FieldElem operator/(FieldElem a, FieldElem b) {
        const FieldCtx& F = same(a, b);
        if (b.v == 0) throw DivisionByZero("FieldElem division");
        return FieldElem(F.div(a.v, b.v), F);
    }
    FieldElem operator-() const { return FieldElem(F->neg(v), *F); }
    bool operator==(const FieldElem& o) const { return v == o.v && F && o.F && *F == *o.F; }

    FieldElem inv() const {
        if (v == 0) throw DivisionByZero("FieldElem inverse");
        return FieldElem(F->inv(v), *F);
    }

   private:
    static const FieldCtx& same(const FieldElem& a, const FieldElem& b) {
        if (!a.F || !b.F || !(*a.F == *b.F)) throw ModulusMismatch();
        return *a.F;
    }
};

enum class ArithKind { Add, Sub, Mul, Div };

inline FieldElem arith(FieldElem a, FieldElem b, ArithKind kind) {
    switch (kind) {
        case ArithKind::Add: return a + b;
        case ArithKind::Sub: return a - b;
        case ArithKind::Mul: return a * b;
        default: return a / b;
    }
}

inline FieldElem inv(FieldElem a) { return a.inv(); }

// Coefficient-ring abstraction used by the univariate core. FpRing is the
// scalar instantiation; mpoly provides a lane-vector instantiation whose
// zero test routes through randomized identity testing.
struct FpRing {
    const FieldCtx* F;
    using Elem = u64;

    explicit FpRing(const FieldCtx& ctx) : F(&ctx) {}

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(i64 x) const { return F->from_int(x); }
    Elem from_u64(u64 x) const { return F->from_uint(x); }
    Elem add(Elem a, Elem b) const { return F->add(a, b); }
    Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
    Elem neg(Elem a) const { return F->neg(a); }
    Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
    Elem div(Elem a, Elem b) const { return F->div(a, b); }
    // Multiply by a scalar field constant (interpolation weights, 1/k!, ...).
    Elem scale_fp(Elem a, u64 s) const { return F->mul(a, s); }
    bool is_zero(Elem a) const { return a == 0; }
};

}  // namespace polyac

#endif
