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

#ifndef POLYAC_ROOTOPS_HPP
#define POLYAC_ROOTOPS_HPP

#include <vector>

#include "polyac/newton.hpp"

namespace polyac {

// Split of a monic f along the zero set of g: f = vanish * keep, where
// vanish collects the factors (x - alpha)^a of f with g(alpha) = 0 and keep
// the others.
template <class R>
struct FilterSplit {
    Poly<R> vanish, keep;
};

// The filter gadget: e-vector of the values lambda_i = (y - alpha_i) g(alpha_i)
// over the roots of f, top nonzero index K selected, e_K(y) normalized to
// monic = keep, vanish = f / keep. Power sums of the lambda_i are assembled
// from the mixed moments sum_i alpha_i^v g(alpha_i)^k, so g^k is expanded
// once rather than per interpolation node.
template <class R>
FilterSplit<R> filter_split(const R& ring, const Poly<R>& f, const Poly<R>& g) {
    using E = typename R::Elem;
    const FieldCtx& F = *ring.F;
    if (f.is_zero()) throw ZeroPolynomial("filter_split");
    if (!pis_monic(ring, f)) throw NotMonic("filter_split expects a monic polynomial");
    const std::size_t n = f.deg();
    FilterSplit<R> out;
    if (n == 0) {
        out.vanish = pone(ring);
        out.keep = pone(ring);
        return out;
    }
    if (g.is_zero()) {  // every root is a root of 0
        out.vanish = f;
        out.keep = pone(ring);
        return out;
    }
    if (g.deg() == 0) {  // a nonzero constant has no roots
        out.vanish = pone(ring);
        out.keep = f;
        return out;
    }
    const std::size_t d = g.deg();

    auto P = power_sums_core(ring, f, n * (d + 1));

    // moments[k-1][v] = sum_i alpha_i^v g(alpha_i)^k for 1 <= k <= n, v <= k
    std::vector<std::vector<E>> moments(n);
    {
        Poly<R> gk = pone(ring);
        for (std::size_t k = 1; k <= n; ++k) {
            gk = pmul_schoolbook(ring, gk, g);
            moments[k - 1].assign(k + 1, ring.zero());
            for (std::size_t v = 0; v <= k; ++v) {
                E acc = ring.zero();
                for (std::size_t j = 0; j < gk.c.size(); ++j)
                    acc = ring.add(acc, ring.mul(gk.c[j], P[j + v]));
                moments[k - 1][v] = acc;
            }
        }
    }

    // Pascal triangle mod p
    std::vector<std::vector<u64>> C(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        C[k].assign(k + 1, 1);
        for (std::size_t u = 1; u < k; ++u) C[k][u] = F.add(C[k - 1][u - 1], C[k - 1][u]);
    }

    // q_k(eta) = sum_u C(k,u) eta^u (-1)^{k-u} moments[k][k-u]
    auto q_at = [&](u64 eta) {
        std::vector<E> q(n);
        std::vector<u64> etapow(n + 1, 1);
        for (std::size_t u = 1; u <= n; ++u) etapow[u] = F.mul(etapow[u - 1], eta);
        for (std::size_t k = 1; k <= n; ++k) {
            E acc = ring.zero();
            for (std::size_t u = 0; u <= k; ++u) {
                u64 w = F.mul(C[k][u], etapow[u]);
                E term = ring.scale_fp(moments[k - 1][k - u], w);
                acc = ((k - u) % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
            }
            q[k - 1] = acc;
        }
        return q;
    };

    // K := number of lambda_i != 0 (with multiplicity), read off the top
    // nonzero e_k at a point that is not a root of f.
    u64 eta_star = 0;
    while (ring.is_zero(peval_scalar(ring, f, eta_star))) ++eta_star;
    auto e_star = esym_from_power_sums(ring, q_at(eta_star), n);
    std::size_t K = 0;
    for (std::size_t k = n + 1; k-- > 1;) {
        if (!ring.is_zero(e_star[k])) {
            K = k;
            break;
        }
    }

    if (K == 0) {
        out.keep = pone(ring);
        out.vanish = f;
        return out;
    }
    if (K == n) {
        out.keep = f;
        out.vanish = pone(ring);
        return out;
    }

    std::vector<u64> nodes(K + 1);
    std::vector<E> values(K + 1);
    for (std::size_t j = 0; j <= K; ++j) {
        nodes[j] = F.from_uint(u64(j));
        values[j] = esym_from_power_sums(ring, q_at(nodes[j]), K)[K];
    }
    Poly<R> eK = pinterpolate_scalar_nodes(ring, nodes, values);
    out.keep = pmake_monic(ring, eK).first;
    out.vanish = exact_div_core(ring, f, out.keep, /*verify=*/true);
    return out;
}

// Iterated filtering: the factors of f whose roots are common roots of every
// g in gs (set intersection composes across single filters).
template <class R>
Poly<R> filter_vanish_all(const R& ring, Poly<R> f, const std::vector<Poly<R>>& gs) {
    for (const auto& g : gs) {
        if (f.deg() == 0) break;
        f = filter_split(ring, f, g).vanish;
    }
    return f;
}

// Chain C_1 = f, C_{r+1} = factors of C_r whose roots have multiplicity
// >= r+1 in f. C_{r+1} needs only one filter against f^{(r)} because C_r
// already enforces vanishing of the lower derivatives.
template <class R>
std::vector<Poly<R>> squarefree_chain(const R& ring, const Poly<R>& f) {
    std::vector<Poly<R>> chain;
    chain.push_back(f);
    for (std::size_t r = 1; !(chain.back().deg() == 0); ++r) {
        Poly<R> der = pderivative(ring, f, r);
        if (der.is_zero()) break;  // r > deg f; cannot happen under the guards
        chain.push_back(filter_split(ring, chain.back(), der).vanish);
    }
    return chain;
}

// Unique squarefree decomposition (f_1, ..., f_m), f = prod f_r^r.
template <class R>
std::vector<Poly<R>> squarefree_decomposition_core(const R& ring, const Poly<R>& f) {
    std::vector<Poly<R>> parts;
    if (f.deg() == 0) return parts;
    auto chain = squarefree_chain(ring, f);
    chain.push_back(pone(ring));
    for (std::size_t r = 1; r < chain.size(); ++r) {
        Poly<R> exact = exact_div_core(ring, chain[r - 1], chain[r], /*verify=*/false);
        parts.push_back(perfect_root_core(ring, exact, r, /*verify=*/false));
    }
    while (!parts.empty() && pis_one(ring, parts.back())) parts.pop_back();
    return parts;
}

template <class R>
Poly<R> squarefree_part_core(const R& ring, const Poly<R>& f) {
    Poly<R> s = pone(ring);
    for (const auto& part : squarefree_decomposition_core(ring, f)) s = pmul_schoolbook(ring, s, part);
    return s;
}

// ---------------------------------------------------------------------------
// Scalar spec-level API.
// ---------------------------------------------------------------------------

struct SquarefreeDecomposition {
    std::vector<FpPoly> parts;  // parts[r-1] = f_r, trailing ones removed
};

struct RootFilterResult {
    FpPoly in;   // factors whose roots are common roots of all gs
    FpPoly out;  // complementary factor; in * out = f
};

inline RootFilterResult filter_common_roots(const FieldCtx& F, const FpPoly& f, const std::vector<FpPoly>& gs) {
    if (f.is_zero()) throw ZeroPolynomial("filter_common_roots");
    if (gs.empty()) throw ParseError("filter_common_roots: empty filter list");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("filter_common_roots expects a monic polynomial");
    u64 budget = f.deg();
    for (const auto& g : gs)
        if (!g.is_zero()) budget = std::max<u64>(budget, g.deg());
    F.guard_newton(budget);
    RootFilterResult r;
    r.in = filter_vanish_all(ring, f, gs);
    r.out = exact_div_core(ring, f, r.in, /*verify=*/true);
    return r;
}

// f_ge: factors of f whose root has multiplicity >= rs[j] in gs[j] for every
// j; f_lt: the complement. Implemented by filtering against the derivative
// lists g_j, g_j', ..., g_j^(r_j - 1).
struct ThresholdResult {
    FpPoly ge, lt;
};

inline ThresholdResult threshold_multiplicity(const FieldCtx& F, const FpPoly& f, const std::vector<FpPoly>& gs,
                                              const std::vector<std::size_t>& rs) {
    if (f.is_zero()) throw ZeroPolynomial("threshold_multiplicity");
    if (gs.empty() || gs.size() != rs.size()) throw ParseError("threshold_multiplicity: bad filter/threshold lists");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("threshold_multiplicity expects a monic polynomial");
    u64 budget = f.deg();
    for (const auto& g : gs) {
        if (g.is_zero()) throw ZeroPolynomial("threshold filter polynomial is 0");
        budget = std::max<u64>(budget, g.deg());
    }
    F.guard_newton(budget);
    ThresholdResult out;
    for (std::size_t j = 0; j < gs.size(); ++j) {
        if (rs[j] == 0) throw ParseError("threshold_multiplicity: thresholds must be >= 1");
        if (rs[j] > gs[j].deg()) {  // f_{g >= r} = 1, f_{g < r} = f
            out.ge = pone(ring);
            out.lt = f;
            return out;
        }
    }
    FpPoly cur = f;
    for (std::size_t j = 0; j < gs.size() && cur.deg() > 0; ++j)
        for (std::size_t t = 0; t < rs[j] && cur.deg() > 0; ++t)
            cur = filter_split(ring, cur, poly_derivative(F, gs[j], t)).vanish;
    out.ge = cur;
    out.lt = exact_div_core(ring, f, cur, /*verify=*/true);
    return out;
}

inline SquarefreeDecomposition squarefree_decomposition(const FieldCtx& F, const FpPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree_decomposition");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("squarefree_decomposition expects a monic polynomial");
    F.guard_newton(f.is_zero() ? 0 : f.deg());
    return SquarefreeDecomposition{squarefree_decomposition_core(ring, f)};
}

inline FpPoly squarefree_part(const FieldCtx& F, const FpPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree_part");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("squarefree_part expects a monic polynomial");
    F.guard_newton(f.deg());
    return squarefree_part_core(ring, f);
}

}  // namespace polyac

#endif
