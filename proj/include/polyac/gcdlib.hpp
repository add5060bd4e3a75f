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

#ifndef POLYAC_GCDLIB_HPP
#define POLYAC_GCDLIB_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyac/rootops.hpp"

namespace polyac {

// ---------------------------------------------------------------------------
// Ring-generic cores (reused by the multivariate pipeline).
// ---------------------------------------------------------------------------

// Squarefree part of the product of the fs, built incrementally: one filter
// per input instead of decomposing the full product.
template <class R>
Poly<R> union_squarefree_part(const R& ring, const std::vector<Poly<R>>& fs) {
    Poly<R> s = pone(ring);
    for (const auto& f : fs) {
        Poly<R> u = squarefree_part_core(ring, f);
        if (pis_one(ring, s))
            s = u;
        else if (!pis_one(ring, u))
            s = pmul_schoolbook(ring, s, filter_split(ring, u, s).keep);
    }
    return s;
}

// gcd = prod_r s_{>=r}: s_{>=r} computed as a telescoping threshold chain
// T_r, one filter pass per level, stopping once T_r = 1.
template <class R>
Poly<R> gcd_core(const R& ring, std::vector<Poly<R>> fs, const Poly<R>* known_s = nullptr) {
    if (fs.empty()) throw ZeroPolynomial("gcd of an empty list");
    for (auto& f : fs) {
        if (f.is_zero()) throw ZeroPolynomial("gcd with a zero operand");
        f = pmake_monic(ring, f).first;
    }
    if (fs.size() == 1) return fs[0];
    std::size_t mindeg = fs[0].deg();
    for (const auto& f : fs) mindeg = std::min(mindeg, f.deg());
    if (mindeg == 0) return pone(ring);

    Poly<R> T = known_s ? *known_s : union_squarefree_part(ring, fs);
    Poly<R> out = pone(ring);
    for (std::size_t r = 1; r <= mindeg; ++r) {
        for (const auto& f : fs) {
            if (T.deg() == 0) break;
            T = filter_split(ring, T, pderivative(ring, f, r - 1)).vanish;
        }
        if (T.deg() == 0) break;
        out = pmul_schoolbook(ring, out, T);
    }
    return out;
}

// lcm via p = prod fs and the gcd of the cofactors p / f_i.
template <class R>
Poly<R> lcm_core(const R& ring, std::vector<Poly<R>> fs) {
    if (fs.empty()) throw ZeroPolynomial("lcm of an empty list");
    for (auto& f : fs) {
        if (f.is_zero()) throw ZeroPolynomial("lcm with a zero operand");
        f = pmake_monic(ring, f).first;
    }
    if (fs.size() == 1) return fs[0];
    Poly<R> p = pone(ring);
    for (const auto& f : fs) p = pmul_schoolbook(ring, p, f);
    std::vector<Poly<R>> cofactors;
    cofactors.reserve(fs.size());
    for (const auto& f : fs) cofactors.push_back(exact_div_core(ring, p, f, /*verify=*/false));
    // prod(cofactors) has the same root set as prod(fs)
    Poly<R> s = union_squarefree_part(ring, fs);
    Poly<R> g = gcd_core(ring, cofactors, &s);
    return exact_div_core(ring, p, g, /*verify=*/false);
}

// ---------------------------------------------------------------------------
// Scalar spec-level API.
// ---------------------------------------------------------------------------

inline FpPoly gcd(const FieldCtx& F, const std::vector<FpPoly>& fs) {
    if (fs.empty()) throw ZeroPolynomial("gcd of an empty list");
    u64 d = 0;
    for (const auto& f : fs) {
        if (f.is_zero()) throw ZeroPolynomial("gcd with a zero operand");
        d = std::max<u64>(d, f.deg());
    }
    if (fs.size() >= 2)
        F.guard_gcdm(fs.size(), d);
    else
        F.guard_newton(d);
    return gcd_core(FpRing(F), fs);
}

inline FpPoly lcm(const FieldCtx& F, const std::vector<FpPoly>& fs) {
    if (fs.empty()) throw ZeroPolynomial("lcm of an empty list");
    u64 d = 0;
    for (const auto& f : fs) {
        if (f.is_zero()) throw ZeroPolynomial("lcm with a zero operand");
        d = std::max<u64>(d, f.deg());
    }
    F.guard_lcmm(fs.size(), d);
    return lcm_core(FpRing(F), fs);
}

// Bezout coefficients for arbitrary monic f, g: divide out the gcd, then the
// coprime construction (structmat). Declared here, defined in gcdlib.cpp.
struct BezoutPair {
    FpPoly a, b;  // a f + b g = gcd(f, g)
};
BezoutPair bezout_general(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// ---------------------------------------------------------------------------
// Arbitrary functions of root multiplicities.
// ---------------------------------------------------------------------------

// P : {0..d}^m -> N in dense representation, nonzero outputs only.
struct DenseMultiplicityFunction {
    std::size_t arity = 0;
    std::size_t degree_cap = 0;
    std::map<std::vector<u64>, u64> table;  // tuple -> P(tuple) >= 1
    std::optional<u64> max_output;
};

// Tropical threshold circuit over N with gates {+, cx, min, max, Thr, nThr}.
// Index space: 0..inputs-1 are the inputs, inputs+i is gates[i].
struct TropicalGate {
    enum class Kind : std::uint8_t { Add, CMul, Min, Max, Thr, NThr };
    Kind kind;
    std::vector<std::uint32_t> args;
    u64 c = 0;               // CMul
    std::vector<u64> r;      // Thr / NThr, one threshold per argument
};

struct TropicalCircuit {
    std::size_t inputs = 0;
    std::vector<TropicalGate> gates;
    std::uint32_t output = 0;

    void validate() const;  // arity/topology checks; throws MalformedCircuit
    // gate count + sum of CMul constants
    u64 size() const;
    std::size_t depth() const;
};

u64 tropical_eval(const TropicalCircuit& c, const std::vector<u64>& inputs);
std::string tropical_to_json(const TropicalCircuit& c);
TropicalCircuit tropical_from_json(const std::string& text);

// Default output-degree cap: 10 * sum of input degrees, overridable.
inline u64 diamond_default_cap(const std::vector<FpPoly>& fs) {
    u64 s = 0;
    for (const auto& f : fs) s += f.is_zero() ? 0 : f.deg();
    return 10 * std::max<u64>(s, 1);
}

FpPoly diamond_dense(const FieldCtx& F, const std::vector<FpPoly>& fs, const DenseMultiplicityFunction& P,
                     std::optional<u64> output_cap = std::nullopt);

FpPoly diamond_tropical(const FieldCtx& F, const std::vector<FpPoly>& fs, const TropicalCircuit& C,
                        std::optional<u64> output_cap = std::nullopt);

}  // namespace polyac

#endif
