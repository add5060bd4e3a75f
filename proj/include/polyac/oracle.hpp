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

#ifndef POLYAC_ORACLE_HPP
#define POLYAC_ORACLE_HPP

#include <random>
#include <string>
#include <vector>

#include "polyac/matrix.hpp"
#include "polyac/upoly.hpp"

// Classical sequential reference algorithms and instance generation. These
// deliberately share no code with the fast paths they check.
namespace polyac::oracle {

// Seeded deterministic RNG used by tests, generators, and PIT.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(u64 seed) : g(seed) {}
    u64 next() { return g(); }
    u64 below(u64 n) { return n ? g() % n : 0; }
};

struct DivResult {
    FpPoly q, r;
};

// f = q g + r with deg r < deg g; g != 0. Plain long division.
DivResult long_division(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// Monic gcd by the Euclidean algorithm; gcd(f, 0) = monic f.
FpPoly euclid_gcd(const FieldCtx& F, const FpPoly& f, const FpPoly& g);
FpPoly euclid_gcd_many(const FieldCtx& F, const std::vector<FpPoly>& fs);
FpPoly euclid_lcm_many(const FieldCtx& F, const std::vector<FpPoly>& fs);

// Full extended Euclidean scheme: rows (r_i, s_i, t_i) with s_i f + t_i g =
// r_i, starting from (f,1,0), (g,0,1), down to the zero remainder.
struct EuclidRow {
    FpPoly r, s, t;
};
std::vector<EuclidRow> extended_euclid(const FieldCtx& F, const FpPoly& f, const FpPoly& g);

// Power sums p_0..p_d of the roots of monic f via the triangular
// Girard-Newton recurrence (the oracle twin of newton::to_power_sums).
std::vector<u64> newton_recurrence_power_sums(const FieldCtx& F, const FpPoly& f, std::size_t d);

// Yun's squarefree decomposition (classical gcd chain), char > deg f.
std::vector<FpPoly> yun_squarefree(const FieldCtx& F, const FpPoly& f);

// Exact determinant by Bareiss fraction-free elimination.
u64 bareiss_det(const FieldCtx& F, const Matrix& m);

// Test-side ground truth: distinct roots with one multiplicity vector per
// generated polynomial.
struct MultiplicityProfile {
    std::vector<u64> roots;
    std::vector<std::vector<u64>> mults;  // mults[i][j]: multiplicity of roots[i] in polynomial j
    std::size_t npolys() const { return mults.empty() ? 0 : mults[0].size(); }
};

std::vector<FpPoly> instance_from_profile(const FieldCtx& F, const MultiplicityProfile& prof);
MultiplicityProfile random_profile(const FieldCtx& F, u64 seed, std::size_t m, std::size_t max_roots,
                                   std::size_t max_mult);

// Profile JSON: {"roots": [{"root": int, "mults": [int, ...]}, ...]}
std::string profile_to_json(const MultiplicityProfile& prof);
MultiplicityProfile profile_from_json(const std::string& text);

}  // namespace polyac::oracle

#endif
