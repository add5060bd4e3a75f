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

#include "polyac/symroots.hpp"

namespace polyac {

FpPoly ParamPoly::specialize(const FieldCtx& F, u64 uval, u64 vval) const {
    std::vector<u64> up(du + 1, 1), vp(dv + 1, 1);
    for (std::size_t a = 1; a <= du; ++a) up[a] = F.mul(up[a - 1], uval % F.p());
    for (std::size_t b = 1; b <= dv; ++b) vp[b] = F.mul(vp[b - 1], vval % F.p());
    FpPoly out;
    out.c.assign(coeff.size(), 0);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        u64 acc = 0;
        for (std::size_t a = 0; a <= du; ++a)
            for (std::size_t b = 0; b <= dv; ++b) {
                u64 c = at(i, a, b);
                if (c) acc = F.add(acc, F.mul(c, F.mul(up[a], vp[b])));
            }
        out.c[i] = acc;
    }
    ptrim(FpRing(F), out);
    return out;
}

FpPoly ParamValue::u_slice(const FieldCtx& F, std::size_t a) const {
    FpPoly out;
    out.c.assign(dv + 1, 0);
    for (std::size_t b = 0; b <= dv; ++b) out.c[b] = at(a, b);
    ptrim(FpRing(F), out);
    return out;
}

u64 sum_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero()) throw ZeroPolynomial("sum_over_roots");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("sum_over_roots expects a monic polynomial");
    const std::size_t dg = g.is_zero() ? 0 : g.deg();
    F.guard_newton(std::max<u64>(f.deg(), dg));
    if (g.is_zero() || f.deg() == 0) return 0;
    auto p = power_sums_core(ring, f, dg);
    u64 acc = 0;
    for (std::size_t j = 0; j < g.c.size(); ++j) acc = F.add(acc, F.mul(g.c[j], p[j]));
    return acc;
}

namespace {

// q_k = sum_i g(alpha_i)^k for k = 1..upto, given power sums of f.
std::vector<u64> value_power_sums(const FieldCtx& F, const std::vector<u64>& P, const FpPoly& g, std::size_t upto) {
    FpRing ring(F);
    std::vector<u64> q(upto, 0);
    FpPoly gk = pone(ring);
    for (std::size_t k = 1; k <= upto; ++k) {
        gk = pmul_schoolbook(ring, gk, g);
        u64 acc = 0;
        for (std::size_t j = 0; j < gk.c.size(); ++j) acc = F.add(acc, F.mul(gk.c[j], P[j]));
        q[k - 1] = acc;
    }
    return q;
}

}  // namespace

u64 esym_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g, std::size_t d) {
    if (f.is_zero()) throw ZeroPolynomial("esym_over_roots");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("esym_over_roots expects a monic polynomial");
    F.guard_newton(f.deg());
    const std::size_t n = f.deg();
    if (d == 0) return 1;
    if (d > n) return 0;
    if (g.is_zero()) return 0;  // e_d over all-zero values, d >= 1
    auto P = power_sums_core(ring, f, d * g.deg());
    auto q = value_power_sums(F, P, g, d);
    return esym_from_power_sums(ring, q, d)[d];
}

ParamValue esym_over_roots_param(const FieldCtx& F, const FpPoly& f, const ParamPoly& g, std::size_t d) {
    if (f.is_zero()) throw ZeroPolynomial("esym_over_roots_param");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("esym_over_roots_param expects a monic polynomial");
    F.guard_newton(f.deg());
    const std::size_t n = f.deg();
    if (d == 0) return ParamValue::scalar(1);
    if (d > n) return ParamValue::scalar(0);
    const std::size_t Du = d * g.du, Dv = d * g.dv;
    F.char_guard(std::max<u64>({Du, Dv, n}));
    auto P = power_sums_core(ring, f, d * g.tdeg_bound());
    // evaluate e_d on the parameter grid
    std::vector<u64> grid((Du + 1) * (Dv + 1));
    for (std::size_t a = 0; a <= Du; ++a)
        for (std::size_t b = 0; b <= Dv; ++b) {
            FpPoly G = g.specialize(F, a, b);
            auto q = value_power_sums(F, P, G, d);
            grid[a * (Dv + 1) + b] = esym_from_power_sums(ring, q, d)[d];
        }
    // interpolate rows (v direction), then columns (u direction)
    ParamValue out = ParamValue::make(Du, Dv);
    std::vector<u64> vnodes(Dv + 1), unodes(Du + 1);
    for (std::size_t b = 0; b <= Dv; ++b) vnodes[b] = b;
    for (std::size_t a = 0; a <= Du; ++a) unodes[a] = a;
    std::vector<std::vector<u64>> rows(Du + 1);
    for (std::size_t a = 0; a <= Du; ++a) {
        std::vector<u64> vals(grid.begin() + a * (Dv + 1), grid.begin() + (a + 1) * (Dv + 1));
        FpPoly row = pinterpolate_scalar_nodes(ring, vnodes, vals);
        rows[a].assign(Dv + 1, 0);
        for (std::size_t b = 0; b < row.c.size(); ++b) rows[a][b] = row.c[b];
    }
    for (std::size_t b = 0; b <= Dv; ++b) {
        std::vector<u64> vals(Du + 1);
        for (std::size_t a = 0; a <= Du; ++a) vals[a] = rows[a][b];
        FpPoly col = pinterpolate_scalar_nodes(ring, unodes, vals);
        for (std::size_t a = 0; a < col.c.size(); ++a) out.at(a, b) = col.c[a];
    }
    return out;
}

u64 rational_sum_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g, const FpPoly& h) {
    if (f.is_zero() || h.is_zero()) throw ZeroPolynomial("rational_sum_over_roots");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("rational_sum_over_roots expects a monic polynomial");
    const std::size_t n = f.deg();
    u64 dmax = std::max<u64>({u64(n), h.deg(), g.is_zero() ? 0 : g.deg()});
    F.guard_newton(dmax);
    if (n == 0) return 0;
    u64 denom = esym_over_roots(F, f, h, n);  // prod h(alpha_i)
    if (denom == 0) throw SharedRoot("h vanishes at a root of f");
    if (g.is_zero()) return 0;
    // numerator = [y^1] prod(g(alpha_i) y + h(alpha_i))
    ParamPoly gy = ParamPoly::make(std::max(g.c.size(), h.c.size()), 1, 0);
    for (std::size_t i = 0; i < g.c.size(); ++i) gy.at(i, 1, 0) = g.c[i];
    for (std::size_t i = 0; i < h.c.size(); ++i) gy.at(i, 0, 0) = h.c[i];
    ParamValue r = esym_over_roots_param(F, f, gy, n);
    u64 numer = r.du >= 1 ? r.at(1, 0) : 0;
    return F.div(numer, denom);
}

u64 rational_esym_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g, const FpPoly& h, std::size_t d) {
    if (f.is_zero() || h.is_zero()) throw ZeroPolynomial("rational_esym_over_roots");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("rational_esym_over_roots expects a monic polynomial");
    const std::size_t n = f.deg();
    if (d == 0) return 1;
    if (d > n) return 0;
    // power sums of the ratios via g^k / h^k
    std::vector<u64> sig(d, 0);
    FpPoly gk = pone(ring), hk = pone(ring);
    for (std::size_t k = 1; k <= d; ++k) {
        gk = g.is_zero() ? pzero(ring) : pmul_schoolbook(ring, gk, g);
        hk = pmul_schoolbook(ring, hk, h);
        sig[k - 1] = rational_sum_over_roots(F, f, gk, hk);
        if (g.is_zero()) break;  // all later power sums are 0 as well
    }
    return esym_from_power_sums(ring, sig, d)[d];
}

u64 nonzero_product_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero()) throw ZeroPolynomial("nonzero_product_over_roots");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("nonzero_product_over_roots expects a monic polynomial");
    F.guard_newton(f.deg());
    const std::size_t n = f.deg();
    if (n == 0 || g.is_zero()) return 1;  // empty product
    auto P = power_sums_core(ring, f, n * (g.deg() ? g.deg() : 1));
    auto q = value_power_sums(F, P, g, n);
    auto e = esym_from_power_sums(ring, q, n);
    for (std::size_t k = n + 1; k-- > 1;)
        if (e[k] != 0) return e[k];
    return 1;  // select fell through every e_k: all g(alpha_i) = 0
}

ParamValue nonzero_product_over_roots_param(const FieldCtx& F, const FpPoly& f, const ParamPoly& g) {
    if (f.is_zero()) throw ZeroPolynomial("nonzero_product_over_roots_param");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("nonzero_product_over_roots_param expects a monic polynomial");
    F.guard_newton(f.deg());
    const std::size_t n = f.deg();
    if (n == 0) return ParamValue::scalar(1);
    for (std::size_t k = n + 1; k-- > 1;) {
        ParamValue e = esym_over_roots_param(F, f, g, k);
        if (!e.is_zero()) return e;
    }
    return ParamValue::scalar(1);
}

}  // namespace polyac
