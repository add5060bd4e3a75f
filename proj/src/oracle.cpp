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

#include "polyac/oracle.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace polyac::oracle {

DivResult long_division(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (g.is_zero()) throw DivisionByZero("long_division by 0");
    FpRing ring(F);
    DivResult out;
    out.r = f;
    if (f.is_zero() || f.deg() < g.deg()) return out;  // q = 0
    const std::size_t dg = g.deg();
    u64 lcinv = F.inv(g.c.back());
    std::vector<u64> rem = f.c;
    std::vector<u64> q(f.deg() - dg + 1, 0);
    for (std::size_t k = f.deg();; --k) {
        if (rem[k] != 0) {
            u64 factor = F.mul(rem[k], lcinv);
            q[k - dg] = factor;
            for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] = F.sub(rem[k - dg + j], F.mul(factor, g.c[j]));
        }
        if (k == dg) break;
    }
    out.q.c = std::move(q);
    ptrim(ring, out.q);
    out.r.c = std::move(rem);
    ptrim(ring, out.r);
    return out;
}

FpPoly euclid_gcd(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    FpPoly a = f, b = g;
    while (!b.is_zero()) {
        FpPoly r = long_division(F, a, b).r;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) throw ZeroPolynomial("gcd(0, 0)");
    return make_monic(F, a).first;
}

FpPoly euclid_gcd_many(const FieldCtx& F, const std::vector<FpPoly>& fs) {
    if (fs.empty()) throw ZeroPolynomial("gcd of nothing");
    FpPoly g = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) g = euclid_gcd(F, g, fs[i]);
    return make_monic(F, g).first;
}

FpPoly euclid_lcm_many(const FieldCtx& F, const std::vector<FpPoly>& fs) {
    if (fs.empty()) throw ZeroPolynomial("lcm of nothing");
    FpPoly l = make_monic(F, fs[0]).first;
    for (std::size_t i = 1; i < fs.size(); ++i) {
        FpPoly g = euclid_gcd(F, l, fs[i]);
        FpPoly prod = poly_mul(F, l, fs[i]);
        l = make_monic(F, long_division(F, prod, g).q).first;
    }
    return l;
}

std::vector<EuclidRow> extended_euclid(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    std::vector<EuclidRow> rows;
    FpRing ring(F);
    rows.push_back({f, pone(ring), pzero(ring)});
    rows.push_back({g, pzero(ring), pone(ring)});
    while (!rows.back().r.is_zero()) {
        const EuclidRow& prev = rows[rows.size() - 2];
        const EuclidRow& cur = rows.back();
        DivResult d = long_division(F, prev.r, cur.r);
        EuclidRow next;
        next.r = d.r;
        next.s = poly_sub(F, prev.s, poly_mul(F, d.q, cur.s));
        next.t = poly_sub(F, prev.t, poly_mul(F, d.q, cur.t));
        rows.push_back(std::move(next));
    }
    return rows;
}

std::vector<u64> newton_recurrence_power_sums(const FieldCtx& F, const FpPoly& f, std::size_t d) {
    if (f.is_zero()) throw ZeroPolynomial("power sums of 0");
    const std::size_t n = f.deg();
    // e_k = (-1)^k a_{n-k} for monic f
    std::vector<u64> e(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        u64 v = f.c[n - k];
        e[k] = (k % 2 == 0) ? v : F.neg(v);
    }
    std::vector<u64> p(d + 1, 0);
    p[0] = F.from_uint(u64(n));
    for (std::size_t k = 1; k <= d; ++k) {
        // p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{k-1+i} e_{k-i} p_i
        u64 acc = 0;
        if (k <= n) {
            u64 t = F.mul(F.from_uint(u64(k)), e[k]);
            acc = (k % 2 == 1) ? t : F.neg(t);
        }
        for (std::size_t i = 1; i < k; ++i) {
            if (k - i > n) continue;
            u64 t = F.mul(e[k - i], p[i]);
            acc = ((k - 1 + i) % 2 == 0) ? F.add(acc, t) : F.sub(acc, t);
        }
        p[k] = acc;
    }
    return p;
}

std::vector<FpPoly> yun_squarefree(const FieldCtx& F, const FpPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("yun(0)");
    F.guard_newton(f.deg());
    FpPoly fm = make_monic(F, f).first;
    FpRing ring(F);
    std::vector<FpPoly> parts;
    if (fm.deg() == 0) return parts;
    FpPoly fp = poly_derivative(F, fm, 1);
    FpPoly a = euclid_gcd(F, fm, fp);
    FpPoly b = long_division(F, fm, a).q;
    FpPoly c = long_division(F, fp, a).q;
    FpPoly d = poly_sub(F, c, poly_derivative(F, b, 1));
    while (!(b.c.size() == 1)) {
        FpPoly part = euclid_gcd(F, b, d);
        parts.push_back(part);
        b = long_division(F, b, part).q;
        c = long_division(F, d, part).q;
        d = poly_sub(F, c, poly_derivative(F, b, 1));
    }
    while (!parts.empty() && pis_one(ring, parts.back())) parts.pop_back();
    return parts;
}

u64 bareiss_det(const FieldCtx& F, const Matrix& m) {
    if (m.rows != m.cols) throw SingularMatrix("determinant of a non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    Matrix w = m;
    u64 sign = 1;
    u64 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && w.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.a[k * n + j], w.a[piv * n + j]);
            sign = F.neg(sign);
        }
        u64 prev_inv = F.inv(prev);
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                u64 t = F.sub(F.mul(w.at(i, j), w.at(k, k)), F.mul(w.at(i, k), w.at(k, j)));
                w.at(i, j) = F.mul(t, prev_inv);
            }
        prev = w.at(k, k);
        if (prev == 0) return 0;
    }
    return F.mul(sign, w.at(n - 1, n - 1));
}

std::vector<FpPoly> instance_from_profile(const FieldCtx& F, const MultiplicityProfile& prof) {
    std::set<u64> seen;
    for (u64 r : prof.roots) {
        if (!seen.insert(r % F.p()).second) throw FieldTooSmall("profile roots collide mod p");
    }
    const std::size_t m = prof.npolys();
    std::vector<FpPoly> out;
    FpRing ring(F);
    for (std::size_t j = 0; j < m; ++j) {
        FpPoly f = pone(ring);
        for (std::size_t i = 0; i < prof.roots.size(); ++i) {
            FpPoly lin = poly_from_ints(F, {0, 1});
            lin.c[0] = F.neg(prof.roots[i] % F.p());
            for (u64 t = 0; t < prof.mults[i][j]; ++t) f = poly_mul(F, f, lin);
        }
        out.push_back(std::move(f));
    }
    return out;
}

MultiplicityProfile random_profile(const FieldCtx& F, u64 seed, std::size_t m, std::size_t max_roots,
                                   std::size_t max_mult) {
    Rng rng(seed);
    MultiplicityProfile prof;
    std::size_t nroots = 1 + rng.below(max_roots);
    std::set<u64> used;
    while (prof.roots.size() < nroots) {
        u64 r = rng.below(F.p());
        if (used.insert(r).second) prof.roots.push_back(r);
    }
    prof.mults.assign(nroots, std::vector<u64>(m, 0));
    for (std::size_t i = 0; i < nroots; ++i)
        for (std::size_t j = 0; j < m; ++j) prof.mults[i][j] = rng.below(max_mult + 1);
    // every polynomial gets at least one factor, every root at least one use
    for (std::size_t j = 0; j < m; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < nroots; ++i) any = any || prof.mults[i][j] > 0;
        if (!any) prof.mults[rng.below(nroots)][j] = 1 + rng.below(max_mult);
    }
    for (std::size_t i = 0; i < nroots; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < m; ++j) any = any || prof.mults[i][j] > 0;
        if (!any) prof.mults[i][rng.below(m)] = 1 + rng.below(max_mult);
    }
    return prof;
}

std::string profile_to_json(const MultiplicityProfile& prof) {
    nlohmann::json roots = nlohmann::json::array();
    for (std::size_t i = 0; i < prof.roots.size(); ++i) {
        roots.push_back({{"root", prof.roots[i]}, {"mults", prof.mults[i]}});
    }
    return nlohmann::json{{"roots", roots}}.dump();
}

MultiplicityProfile profile_from_json(const std::string& text) {
    MultiplicityProfile prof;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        for (const auto& e : j.at("roots")) {
            prof.roots.push_back(e.at("root").get<u64>());
            prof.mults.push_back(e.at("mults").get<std::vector<u64>>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("profile JSON: ") + e.what());
    }
    if (!prof.mults.empty())
        for (const auto& ms : prof.mults)
            if (ms.size() != prof.mults[0].size()) throw ParseError("profile JSON: ragged mults");
    return prof;
}

}  // namespace polyac::oracle
