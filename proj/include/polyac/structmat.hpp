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

#ifndef POLYAC_STRUCTMAT_HPP
#define POLYAC_STRUCTMAT_HPP

#include "polyac/matrix.hpp"
#include "polyac/symroots.hpp"

namespace polyac {

// Sylvester matrix of f (degree n) and g (degree m), (n+m) x (n+m); first m
// columns are shifted f-coefficients, last n columns shifted g-coefficients.
Matrix sylvester_matrix(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// res(f, g) = prod g(alpha_i) over the roots of monic f (e_n of the values).
u64 resultant(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// disc(f) = (-1)^(n choose 2) res(f, f').
u64 discriminant(const FieldCtx& F, const FpPoly& f);

// Remainder of f modulo monic g: disc-scaled Lagrange construction through
// the roots of g, classical synthetic division when disc(g) = 0.
FpPoly remainder(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

struct QuotRem {
    FpPoly q, r;
};
QuotRem div_rem(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// adj(Syl(f,g)), satisfying adj * Syl = res * I. Fast path per side when the
// corresponding discriminant is nonzero; Gaussian fallback otherwise.
Matrix sylvester_adjugate(const FieldCtx& F, const FpPoly& f, const FpPoly& g);
Matrix sylvester_inverse(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// Unique (a, b) with deg a < deg g, deg b < deg f and a f + b g = 1.
struct CoprimeBezout {
    FpPoly a, b;
};
CoprimeBezout bezout_coeffs_coprime(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// Bezout matrix of order n: coefficients of (f(x)g(y) - f(y)g(x)) / (x - y).
Matrix bezout_matrix(const FieldCtx& F, const FpPoly& f, const FpPoly& g, std::size_t n);

// Hankel inverse of Bez_n(f, g) built from p g = 1 (mod f) and the power
// series of x^n p(1/x) / (x^n f(1/x)).
Matrix bezout_inverse(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// Inverse of an invertible upper-triangular Toeplitz matrix, extracted from
// the Sylvester block identity with g = x^n.
Matrix toeplitz_inverse(const FieldCtx& F, const Matrix& A);

enum class ComposeMode { Sum, Product };

// f (+) g = prod (x - (alpha_i + beta_j)), f (*) g = prod (x - alpha_i beta_j),
// via resultants in y with x a grid parameter.
FpPoly composed(const FieldCtx& F, const FpPoly& f, const FpPoly& g, ComposeMode mode);

// Dense bivariate coefficient table r(x, y), r[a][b] the coefficient of
// x^a y^b.
struct Bivar {
    std::size_t dx = 0, dy = 0;
    std::vector<u64> t;
    u64& at(std::size_t a, std::size_t b) { return t[a * (dy + 1) + b]; }
    u64 at(std::size_t a, std::size_t b) const { return t[a * (dy + 1) + b]; }
};

// Implicit equation of the rational plane curve t -> (f/h, g/h):
// res_t(x h - f, y h - g), normalized by its lexicographically-last nonzero
// coefficient.
Bivar implicitize(const FieldCtx& F, const FpPoly& f, const FpPoly& g, const FpPoly& h);

}  // namespace polyac

#endif
