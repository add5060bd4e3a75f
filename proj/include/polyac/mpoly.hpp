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

#ifndef POLYAC_MPOLY_HPP
#define POLYAC_MPOLY_HPP

#include <vector>

#include "polyac/circuit.hpp"

namespace polyac {

// A multivariate polynomial presented as a select- and division-free
// arithmetic circuit with a declared total-degree bound.
struct MPolyCircuit {
    ArithCircuit circuit;  // single output
    std::size_t nvars = 0;
    std::size_t degree_bound = 0;

    void validate() const;
};

// The top-degree homogeneous component (true degree found by PIT).
MPolyCircuit top_homogeneous(const FieldCtx& F, const MPolyCircuit& f, u64 seed);

struct MonicTransform {
    MPolyCircuit fhat;        // f(x + y a) / c, monic in the fresh last input y
    std::vector<u64> alpha;   // shift direction, f_top(alpha) != 0
    u64 scalar = 1;           // c = f_top(alpha)
    std::size_t ydeg = 0;     // true total degree of f = y-degree of fhat
};
MonicTransform monic_transform(const FieldCtx& F, const MPolyCircuit& f, u64 seed);

// Squarefree decomposition: part j (1-based) appears with exponent j in f,
// normalized so that the shifted image is monic in y. Output circuits are
// dense, select- and division-free.
std::vector<MPolyCircuit> msqfree(const FieldCtx& F, const MPolyCircuit& f, u64 seed);

MPolyCircuit mgcd(const FieldCtx& F, const std::vector<MPolyCircuit>& fs, u64 seed);
MPolyCircuit mlcm(const FieldCtx& F, const std::vector<MPolyCircuit>& fs, u64 seed);

}  // namespace polyac

#endif
