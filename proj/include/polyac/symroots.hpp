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

#ifndef POLYAC_SYMROOTS_HPP
#define POLYAC_SYMROOTS_HPP

#include <vector>

#include "polyac/newton.hpp"

namespace polyac {

// Polynomial in the main variable t and at most two auxiliary parameters
// (u, v) — the gadget shape used by filtering, remainders, and the Sylvester
// adjugate. Stored densely: coeff[i] is the (du+1) x (dv+1) parameter table
// of t^i.
struct ParamPoly {
    std::size_t du = 0, dv = 0;
    std::vector<std::vector<u64>> coeff;

    static ParamPoly make(std::size_t tlen, std::size_t du_, std::size_t dv_) {
        ParamPoly g;
        g.du = du_;
        g.dv = dv_;
        g.coeff.assign(tlen, std::vector<u64>((du_ + 1) * (dv_ + 1), 0));
        return g;
    }
    static ParamPoly lift(const FpPoly& f) {
        ParamPoly g = make(f.c.size(), 0, 0);
        for (std::size_t i = 0; i < f.c.size(); ++i) g.coeff[i][0] = f.c[i];
        return g;
    }

    u64& at(std::size_t i, std::size_t a, std::size_t b) { return coeff[i][a * (dv + 1) + b]; }
    u64 at(std::size_t i, std::size_t a, std::size_t b) const { return coeff[i][a * (dv + 1) + b]; }

    std::size_t tdeg_bound() const { return coeff.empty() ? 0 : coeff.size() - 1; }

    // Substitute parameter values; returns a univariate polynomial in t.
    FpPoly specialize(const FieldCtx& F, u64 uval, u64 vval) const;
};

// Dense polynomial in the parameters (u, v); the result type of the
// parameterized symmetric-function operations.
struct ParamValue {
    std::size_t du = 0, dv = 0;
    std::vector<u64> t;  // (du+1) x (dv+1), row-major in u

    static ParamValue make(std::size_t du_, std::size_t dv_) {
        return ParamValue{du_, dv_, std::vector<u64>((du_ + 1) * (dv_ + 1), 0)};
    }
    static ParamValue scalar(u64 x) {
        ParamValue p = make(0, 0);
        p.t[0] = x;
        return p;
    }
    u64& at(std::size_t a, std::size_t b) { return t[a * (dv + 1) + b]; }
    u64 at(std::size_t a, std::size_t b) const { return t[a * (dv + 1) + b]; }
    bool is_zero() const {
        for (u64 x : t)
            if (x) return false;
        return true;
    }
    // Coefficients of u^a as a polynomial in v, and vice versa.
    FpPoly u_slice(const FieldCtx& F, std::size_t a) const;
};

// sum_i g(alpha_i) over the roots of monic f, via sum_j g_j p_j.
u64 sum_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// e_d(g(alpha_1), ..., g(alpha_n)).
u64 esym_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g, std::size_t d);

// Parameterized variant: e_d of g(alpha_i, u, v) as a polynomial in (u, v),
// computed on a parameter grid and interpolated.
ParamValue esym_over_roots_param(const FieldCtx& F, const FpPoly& f, const ParamPoly& g, std::size_t d);

// sum_i g(alpha_i)/h(alpha_i); h must not vanish at any root of f.
u64 rational_sum_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g, const FpPoly& h);

// e_d(g(alpha_1)/h(alpha_1), ..., g(alpha_n)/h(alpha_n)).
u64 rational_esym_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g, const FpPoly& h, std::size_t d);

// prod over { i : g(alpha_i) != 0 } of g(alpha_i): select(e_n, ..., e_1, e_0)
// with the appended e_0 = 1 making the empty product 1.
u64 nonzero_product_over_roots(const FieldCtx& F, const FpPoly& f, const FpPoly& g);
ParamValue nonzero_product_over_roots_param(const FieldCtx& F, const FpPoly& f, const ParamPoly& g);

}  // namespace polyac

#endif
