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

#ifndef POLYAC_NEWTON_HPP
#define POLYAC_NEWTON_HPP

#include <vector>

#include "polyac/upoly.hpp"

namespace polyac {

// Truncated Newton series of a degree-n polynomial: p[k] is the k-th power
// sum of the roots (with multiplicity), p[0] = n in the field.
struct NewtonSeries {
    std::size_t n = 0;
    std::vector<u64> p;
};

// ---------------------------------------------------------------------------
// Ring-generic core. The conversions expand the truncated geometric series of
// 1/rev(f) resp. the truncated exponential; the triangular Newton recurrence
// is reserved to the oracle module.
// ---------------------------------------------------------------------------

// p_0..p_d of the root multiset of f (any invertible leading coefficient;
// the series is scale-invariant).
template <class R>
std::vector<typename R::Elem> power_sums_core(const R& ring, const Poly<R>& f, std::size_t d) {
    using E = typename R::Elem;
    if (f.is_zero()) throw ZeroPolynomial("power sums of 0");
    const std::size_t n = f.deg();
    std::vector<E> out(d + 1, ring.zero());
    if (n == 0) return out;  // no roots
    E lcinv = ring.div(ring.one(), f.c.back());

    Poly<R> frev = prev_at(ring, f, n);
    Poly<R> grev = prev_at(ring, pderivative(ring, f, 1), n - 1);
    // h = rev(f)/lc with the constant 1 removed; valuation >= 1
    Poly<R> h;
    h.c.assign(frev.c.begin(), frev.c.end());
    for (auto& x : h.c) x = ring.neg(ring.mul(x, lcinv));
    if (!h.c.empty()) h.c[0] = ring.zero();
    ptrim(ring, h);

    // acc = sum_{k<=d} h^k  (geometric series of 1/rev(f), truncated)
    Poly<R> acc = pone(ring);
    Poly<R> pw = pone(ring);
    for (std::size_t k = 1; k <= d; ++k) {
        pw = pmul_trunc(ring, pw, h, d + 1);
        if (pw.is_zero()) break;
        acc = padd(ring, acc, pw);
    }
    Poly<R> s = pmul_trunc(ring, grev, acc, d + 1);
    for (auto& x : s.c) x = ring.mul(x, lcinv);
    for (std::size_t k = 0; k < s.c.size() && k <= d; ++k) out[k] = s.c[k];
    return out;
}

// Truncated exponential sum_{j<=m} g^j / j! of a series with zero constant
// term, truncated to degree m.
template <class R>
Poly<R> exp_series_trunc(const R& ring, const Poly<R>& g, std::size_t m) {
    const FieldCtx& F = *ring.F;
    Poly<R> acc = pone(ring);
    Poly<R> pw = pone(ring);
    u64 invfact = 1;
    for (std::size_t j = 1; j <= m; ++j) {
        pw = pmul_trunc(ring, pw, g, m + 1);
        if (pw.is_zero()) break;
        invfact = F.mul(invfact, F.inv(F.from_uint(u64(j))));
        Poly<R> term = pw;
        for (auto& x : term.c) x = ring.scale_fp(x, invfact);
        acc = padd(ring, acc, term);
    }
    return acc;
}

// e_0..e_upto from power sums q_1..q_upto (q[k-1] = q_k). Values beyond the
// number of underlying roots come out zero automatically.
template <class R>
std::vector<typename R::Elem> esym_from_power_sums(const R& ring, const std::vector<typename R::Elem>& q,
                                                   std::size_t upto) {
    const FieldCtx& F = *ring.F;
    Poly<R> g;
    g.c.assign(upto + 1, ring.zero());
    for (std::size_t k = 1; k <= upto && k <= q.size(); ++k) {
        u64 w = F.inv(F.from_uint(u64(k)));
        if (k % 2 == 0) w = F.neg(w);
        g.c[k] = ring.scale_fp(q[k - 1], w);
    }
    ptrim(ring, g);
    Poly<R> r = exp_series_trunc(ring, g, upto);
    std::vector<typename R::Elem> e(upto + 1, ring.zero());
    for (std::size_t k = 0; k <= upto && k < r.c.size(); ++k) e[k] = r.c[k];
    return e;
}

// Monic degree-n polynomial from p_0..p_n (entries beyond index n ignored).
template <class R>
Poly<R> from_power_sums_core(const R& ring, const std::vector<typename R::Elem>& ps, std::size_t n) {
    std::vector<typename R::Elem> q(ps.begin() + 1, ps.end());
    auto e = esym_from_power_sums(ring, q, n);
    Poly<R> f;
    f.c.assign(n + 1, ring.zero());
    for (std::size_t k = 0; k <= n; ++k) {
        f.c[n - k] = (k % 2 == 0) ? e[k] : ring.neg(e[k]);
    }
    ptrim(ring, f);
    return f;
}

template <class R>
Poly<R> ppow(const R& ring, Poly<R> base, std::size_t e) {
    Poly<R> r = pone(ring);
    while (e) {
        if (e & 1) r = pmul_schoolbook(ring, r, base);
        e >>= 1;
        if (e) base = pmul_schoolbook(ring, base, base);
    }
    return r;
}

// f / g by power-sum subtraction (both monic, g | f assumed; verified when
// `verify` is set).
template <class R>
Poly<R> exact_div_core(const R& ring, const Poly<R>& f, const Poly<R>& g, bool verify) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("exact_div");
    if (!pis_monic(ring, f) || !pis_monic(ring, g)) throw NotMonic("exact_div expects monic operands");
    if (f.deg() < g.deg()) throw NotDivisible("degree of divisor exceeds dividend");
    const std::size_t m = f.deg() - g.deg();
    if (m == 0) {
        if (verify && !pequal(ring, f, g)) throw NotDivisible();
        return pone(ring);
    }
    auto pf = power_sums_core(ring, f, m);
    auto pg = power_sums_core(ring, g, m);
    for (std::size_t k = 0; k <= m; ++k) pf[k] = ring.sub(pf[k], pg[k]);
    Poly<R> h = from_power_sums_core(ring, pf, m);
    if (verify && !pequal(ring, pmul_schoolbook(ring, g, h), f)) throw NotDivisible();
    return h;
}

// g with g^r = f, via power sums divided by r.
template <class R>
Poly<R> perfect_root_core(const R& ring, const Poly<R>& f, std::size_t r, bool verify) {
    if (r == 0) throw DegreeNotDivisible("r must be >= 1");
    if (f.is_zero()) throw ZeroPolynomial("perfect_root");
    if (!pis_monic(ring, f)) throw NotMonic("perfect_root expects a monic input");
    if (r == 1) return f;
    const std::size_t n = f.deg();
    if (n % r != 0) throw DegreeNotDivisible(std::to_string(r) + " does not divide " + std::to_string(n));
    const std::size_t m = n / r;
    if (m == 0) return pone(ring);
    auto pf = power_sums_core(ring, f, m);
    u64 rinv = ring.F->inv(ring.F->from_uint(u64(r)));
    for (auto& x : pf) x = ring.scale_fp(x, rinv);
    Poly<R> g = from_power_sums_core(ring, pf, m);
    if (verify && !pequal(ring, ppow(ring, g, r), f)) throw NotAPerfectPower();
    return g;
}

// ---------------------------------------------------------------------------
// Scalar spec-level API with characteristic guards.
// ---------------------------------------------------------------------------

inline NewtonSeries to_power_sums(const FieldCtx& F, const FpPoly& f, std::size_t d) {
    if (f.is_zero()) throw ZeroPolynomial("to_power_sums(0)");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("to_power_sums expects a monic polynomial");
    F.guard_newton(std::max(f.deg(), d));
    return NewtonSeries{f.deg(), power_sums_core(ring, f, d)};
}

inline FpPoly from_power_sums(const FieldCtx& F, const NewtonSeries& ns) {
    if (ns.p.size() < ns.n + 1) throw InconsistentSeries("series shorter than the declared degree");
    F.guard_newton(ns.n);
    if (ns.p[0] != F.from_uint(u64(ns.n))) throw InconsistentSeries("p_0 != n");
    FpRing ring(F);
    FpPoly f = from_power_sums_core(ring, ns.p, ns.n);
    if (f.is_zero() || f.deg() != ns.n) throw InconsistentSeries("reconstruction degree mismatch");
    auto back = power_sums_core(ring, f, ns.p.size() - 1);
    for (std::size_t k = 0; k < ns.p.size(); ++k)
        if (back[k] != ns.p[k]) throw InconsistentSeries("round trip mismatch at k = " + std::to_string(k));
    return f;
}

inline FpPoly exact_div(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("exact_div");
    F.guard_newton(f.deg());
    return exact_div_core(FpRing(F), f, g, /*verify=*/true);
}

inline FpPoly perfect_root(const FieldCtx& F, const FpPoly& f, std::size_t r) {
    if (f.is_zero()) throw ZeroPolynomial("perfect_root");
    F.guard_newton(f.deg());
    return perfect_root_core(FpRing(F), f, r, /*verify=*/true);
}

}  // namespace polyac

#endif
