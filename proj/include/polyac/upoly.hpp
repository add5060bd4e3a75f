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

#ifndef POLYAC_UPOLY_HPP
#define POLYAC_UPOLY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyac/field.hpp"

namespace polyac {

// Dense univariate polynomial over a coefficient ring R, ascending order,
// trimmed: the empty coefficient vector is the zero polynomial, and the last
// coefficient of a nonzero polynomial is nonzero. The degree of 0 is an
// explicit sentinel (nullopt), never -1-as-integer.
template <class R>
struct Poly {
    using E = typename R::Elem;
    std::vector<E> c;

    bool is_zero() const noexcept { return c.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (c.empty()) return std::nullopt;
        return c.size() - 1;
    }
    // Degree of a polynomial known to be nonzero.
    std::size_t deg() const {
        if (c.empty()) throw ZeroPolynomial("deg() of the zero polynomial");
        return c.size() - 1;
    }
};

template <class R>
void ptrim(const R& ring, Poly<R>& f) {
    while (!f.c.empty() && ring.is_zero(f.c.back())) f.c.pop_back();
}

template <class R>
Poly<R> pzero(const R&) {
    return {};
}

template <class R>
Poly<R> pconst(const R& ring, typename R::Elem v) {
    Poly<R> f;
    if (!ring.is_zero(v)) f.c.push_back(v);
    return f;
}

template <class R>
Poly<R> pone(const R& ring) {
    return pconst(ring, ring.one());
}

template <class R>
Poly<R> pfrom_ints(const R& ring, const std::vector<i64>& a) {
    Poly<R> f;
    f.c.reserve(a.size());
    for (i64 x : a) f.c.push_back(ring.from_int(x));
    ptrim(ring, f);
    return f;
}

template <class R>
bool pis_one(const R& ring, const Poly<R>& f) {
    return f.c.size() == 1 && ring.is_zero(ring.sub(f.c[0], ring.one()));
}

template <class R>
bool pequal(const R& ring, const Poly<R>& f, const Poly<R>& g) {
    if (f.c.size() != g.c.size()) return false;
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (!ring.is_zero(ring.sub(f.c[i], g.c[i]))) return false;
    return true;
}

template <class R>
Poly<R> padd(const R& ring, const Poly<R>& f, const Poly<R>& g) {
    Poly<R> r;
    r.c.resize(std::max(f.c.size(), g.c.size()), ring.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) r.c[i] = ring.add(r.c[i], g.c[i]);
    ptrim(ring, r);
    return r;
}

template <class R>
Poly<R> psub(const R& ring, const Poly<R>& f, const Poly<R>& g) {
    Poly<R> r;
    r.c.resize(std::max(f.c.size(), g.c.size()), ring.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) r.c[i] = ring.sub(r.c[i], g.c[i]);
    ptrim(ring, r);
    return r;
}

template <class R>
Poly<R> pscale(const R& ring, const Poly<R>& f, const typename R::Elem& s) {
    if (ring.is_zero(s)) return {};
    Poly<R> r = f;
    for (auto& x : r.c) x = ring.mul(x, s);
    ptrim(ring, r);
    return r;
}

template <class R>
Poly<R> pmul_schoolbook(const R& ring, const Poly<R>& f, const Poly<R>& g) {
    if (f.is_zero() || g.is_zero()) return {};
    Poly<R> r;
    r.c.assign(f.c.size() + g.c.size() - 1, ring.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (ring.is_zero(f.c[i])) continue;
        for (std::size_t j = 0; j < g.c.size(); ++j) r.c[i + j] = ring.add(r.c[i + j], ring.mul(f.c[i], g.c[j]));
    }
    ptrim(ring, r);
    return r;
}

// Product truncated to degree < n (power-series arithmetic).
template <class R>
Poly<R> pmul_trunc(const R& ring, const Poly<R>& f, const Poly<R>& g, std::size_t n) {
    if (f.is_zero() || g.is_zero() || n == 0) return {};
    Poly<R> r;
    r.c.assign(std::min(n, f.c.size() + g.c.size() - 1), ring.zero());
    for (std::size_t i = 0; i < f.c.size() && i < n; ++i) {
        if (ring.is_zero(f.c[i])) continue;
        std::size_t jmax = std::min(g.c.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) r.c[i + j] = ring.add(r.c[i + j], ring.mul(f.c[i], g.c[j]));
    }
    ptrim(ring, r);
    return r;
}

// r-fold formal derivative.
template <class R>
Poly<R> pderivative(const R& ring, const Poly<R>& f, std::size_t r) {
    if (f.c.size() <= r) return {};
    Poly<R> d;
    d.c.reserve(f.c.size() - r);
    for (std::size_t j = r; j < f.c.size(); ++j) {
        // falling factorial j(j-1)...(j-r+1) as a scalar
        u64 m = 1;
        for (std::size_t t = 0; t < r; ++t) m = ring.F->mul(m, ring.F->from_uint(j - t));
        d.c.push_back(ring.scale_fp(f.c[j], m));
    }
    ptrim(ring, d);
    return d;
}

template <class R>
typename R::Elem peval(const R& ring, const Poly<R>& f, const typename R::Elem& x) {
    typename R::Elem acc = ring.zero();
    for (std::size_t i = f.c.size(); i-- > 0;) acc = ring.add(ring.mul(acc, x), f.c[i]);
    return acc;
}

// Horner at a scalar point (cheaper for lane rings).
template <class R>
typename R::Elem peval_scalar(const R& ring, const Poly<R>& f, u64 x) {
    typename R::Elem acc = ring.zero();
    for (std::size_t i = f.c.size(); i-- > 0;) acc = ring.add(ring.scale_fp(acc, x), f.c[i]);
    return acc;
}

// Reversal at a declared degree n >= deg f: x^n f(1/x).
template <class R>
Poly<R> prev_at(const R& ring, const Poly<R>& f, std::size_t n) {
    Poly<R> r;
    r.c.assign(n + 1, ring.zero());
    for (std::size_t i = 0; i < f.c.size(); ++i) r.c[n - i] = f.c[i];
    ptrim(ring, r);
    return r;
}

template <class R>
typename R::Elem plc(const R& ring, const Poly<R>& f) {
    if (f.is_zero()) throw ZeroPolynomial("leading coefficient of 0");
    (void)ring;
    return f.c.back();
}

template <class R>
bool pis_monic(const R& ring, const Poly<R>& f) {
    return !f.is_zero() && ring.is_zero(ring.sub(f.c.back(), ring.one()));
}

// Returns (f / lc, lc).
template <class R>
std::pair<Poly<R>, typename R::Elem> pmake_monic(const R& ring, const Poly<R>& f) {
    if (f.is_zero()) throw ZeroPolynomial("make_monic(0)");
    auto lc = f.c.back();
    Poly<R> m = f;
    for (auto& x : m.c) x = ring.div(x, lc);
    return {m, lc};
}

// Lagrange interpolation at pairwise-distinct scalar nodes, values in R.
// The basis polynomials and denominators live in the scalar field, so lane
// rings never divide.
template <class R>
Poly<R> pinterpolate_scalar_nodes(const R& ring, const std::vector<u64>& nodes,
                                  const std::vector<typename R::Elem>& values) {
    const FieldCtx& F = *ring.F;
    const std::size_t k = nodes.size();
    if (k == 0 || values.size() != k) throw ParseError("interpolation arity");
    // master(t) = prod (t - nodes[i]) with scalar coefficients
    std::vector<u64> master(k + 1, 0);
    master[0] = 1;
    for (std::size_t i = 0; i < k; ++i) {
        u64 ni = F.neg(nodes[i]);
        for (std::size_t j = i + 1; j-- > 0;) {
            master[j + 1] = F.add(master[j + 1], master[j]);
            master[j] = F.mul(master[j], ni);
        }
    }
    Poly<R> out;
    out.c.assign(k, ring.zero());
    std::vector<u64> basis(k);
    for (std::size_t j = 0; j < k; ++j) {
        // synthetic division master / (t - nodes[j])
        u64 carry = master[k];
        for (std::size_t i = k; i-- > 0;) {
            basis[i] = carry;
            carry = F.add(master[i], F.mul(carry, nodes[j]));
        }
        u64 denom = 0;
        for (std::size_t i = k; i-- > 0;) denom = F.add(F.mul(denom, nodes[j]), basis[i]);
        if (denom == 0) throw DuplicateNode("interpolation nodes not distinct");
        u64 dinv = F.inv(denom);
        for (std::size_t i = 0; i < k; ++i) {
            if (basis[i] == 0) continue;
            out.c[i] = ring.add(out.c[i], ring.scale_fp(values[j], F.mul(basis[i], dinv)));
        }
    }
    ptrim(ring, out);
    return out;
}

// ---------------------------------------------------------------------------
// Scalar (F_p) convenience layer: the spec-level upoly API.
// ---------------------------------------------------------------------------

using FpPoly = Poly<FpRing>;

inline FpPoly poly_from_ints(const FieldCtx& F, const std::vector<i64>& a) { return pfrom_ints(FpRing(F), a); }

inline FpPoly poly_add(const FieldCtx& F, const FpPoly& f, const FpPoly& g) { return padd(FpRing(F), f, g); }
inline FpPoly poly_sub(const FieldCtx& F, const FpPoly& f, const FpPoly& g) { return psub(FpRing(F), f, g); }

FpPoly poly_mul(const FieldCtx& F, const FpPoly& f, const FpPoly& g);
// Evaluation-interpolation product at nodes 0..deg(fg); must agree with the
// schoolbook path bit-exactly. Used automatically above the size threshold.
FpPoly poly_mul_interp(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

inline FpPoly poly_derivative(const FieldCtx& F, const FpPoly& f, std::size_t r = 1) {
    return pderivative(FpRing(F), f, r);
}
inline u64 poly_eval(const FieldCtx& F, const FpPoly& f, u64 x) { return peval(FpRing(F), f, x % F.p()); }

// rev(f) at the trimmed degree; rejects the zero polynomial.
inline FpPoly reverse(const FieldCtx& F, const FpPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("reverse(0)");
    return prev_at(FpRing(F), f, f.deg());
}

// The unique polynomial of degree < #pairs through the given (point, value)
// pairs; points must be pairwise distinct.
FpPoly interpolate_coeffs(const FieldCtx& F, const std::vector<std::pair<u64, u64>>& pairs);

// select() semantics over an explicit high-to-low coefficient list: the
// first nonzero entry, or 0.
u64 leading_coeff_select(const FieldCtx& F, const std::vector<u64>& coeffs_high_to_low);

inline std::pair<FpPoly, u64> make_monic(const FieldCtx& F, const FpPoly& f) {
    auto [m, lc] = pmake_monic(FpRing(F), f);
    return {m, lc};
}

// e_d at explicit values via Ben-Or's construction: expand prod(1 + y v_i)
// by evaluation at y = 0..n and interpolate the degree-d coefficient.
u64 esym_values(const FieldCtx& F, const std::vector<u64>& values, std::size_t d);

// Text format: ascending comma list "2,3,1" or expression "x^2+3*x+2".
// Printing is descending with balanced (signed) coefficients; parse/print
// round-trips bit-exactly.
FpPoly parse_poly(const FieldCtx& F, const std::string& text);
std::string print_poly(const FieldCtx& F, const FpPoly& f);

}  // namespace polyac

#endif
