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

#ifndef POLYAC_CIRCUIT_HPP
#define POLYAC_CIRCUIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyac/field.hpp"

namespace polyac {

enum class GateOp : std::uint8_t { Input, Const, Add, Mul, Div, Select };

struct Gate {
    GateOp op;
    std::uint32_t args_begin = 0;
    std::uint32_t args_count = 0;
    u64 value = 0;         // Const
    std::uint32_t index = 0;  // Input
};

struct CircuitMetrics {
    std::size_t size = 0;   // number of wires (total argument count)
    std::size_t depth = 0;  // longest input-to-output path
    std::size_t n_gates = 0;
    std::size_t counts[6] = {0, 0, 0, 0, 0, 0};  // per GateOp
};

// DAG of Input/Const/+/x/division/select gates in topological order, with a
// flat argument arena. Size is the wire count, depth the longest path.
struct ArithCircuit {
    std::size_t n_inputs = 0;
    std::vector<Gate> gates;
    std::vector<std::uint32_t> args;
    std::vector<std::uint32_t> outputs;

    std::uint32_t push(GateOp op, const std::vector<std::uint32_t>& as, u64 value = 0, std::uint32_t index = 0);
    std::uint32_t input(std::uint32_t i) { return push(GateOp::Input, {}, 0, i); }
    std::uint32_t konst(u64 v) { return push(GateOp::Const, {}, v); }

    void validate() const;  // topology + arity; throws MalformedCircuit
    CircuitMetrics metrics() const;
    bool has_op(GateOp op) const;

    // Per-gate syntactic degree bound (Input 1, Add max, Mul sum, Div
    // num+den, Select max), saturating.
    std::vector<u64> degree_bounds() const;

    // Gate-by-gate evaluation; Select yields its first nonzero argument.
    std::vector<u64> eval(const FieldCtx& F, const std::vector<u64>& inputs) const;
    // Evaluation of every gate (used for subcircuit identity tests).
    std::vector<u64> eval_all_gates(const FieldCtx& F, const std::vector<u64>& inputs) const;
};

std::string circuit_to_json(const ArithCircuit& c);
ArithCircuit circuit_from_json(const std::string& text);

// ------------------------------- builders ----------------------------------
// Each builder emits the paper-style constant-depth construction; depth is a
// per-kind constant independent of the size parameters.

// e_d(x_1..x_n); the Ben-Or product/interpolation circuit, depth 3 for d >= 1.
ArithCircuit build_esym(const FieldCtx& F, std::size_t n, std::size_t d);

// Inputs a_0..a_{n-1} of monic f; outputs p_0..p_d of its Newton series.
ArithCircuit build_power_sums(const FieldCtx& F, std::size_t n, std::size_t d);

// Inputs p_1..p_n; outputs a_0..a_{n-1} of the monic degree-n polynomial.
ArithCircuit build_coeffs_from_power_sums(const FieldCtx& F, std::size_t n);

// Inputs a_0..a_{n-1} (monic f) then b_0..b_m (g); output res(f, g).
ArithCircuit build_resultant(const FieldCtx& F, std::size_t n, std::size_t m);

// Piecewise gcd circuit for *squarefree* monic inputs a_0..a_{n-1},
// b_0..b_{m-1}. Outputs: first min(n,m)+1 select-chain-normalized monic gcd
// coefficients (ascending, zero-padded above the true degree), then
// min(n,m)+1 unnormalized candidate blocks of min(n,m)+1 coefficients each
// (block delta is identically zero unless delta = deg gcd).
ArithCircuit build_gcd(const FieldCtx& F, std::size_t n, std::size_t m);

enum class BuilderKind { Esym, PowerSums, CoeffsFromPowerSums, Resultant, Gcd };
ArithCircuit build_circuit(const FieldCtx& F, BuilderKind kind, std::size_t n, std::size_t m_or_d);

// -------------------------- circuit transforms -----------------------------

// The d+1 coefficient circuits of C seen as a polynomial in the designated
// input variable (substitute nodes 0..d, fixed linear combinations). Adds at
// most two levels of depth (scale, then sum).
std::vector<ArithCircuit> coefficient_circuits(const FieldCtx& F, const ArithCircuit& c, std::uint32_t y_input,
                                               std::size_t d);

// Homogeneous components 0..d via the t-scaling substitution; select- and
// division-free circuits only.
std::vector<ArithCircuit> homogeneous_components(const FieldCtx& F, const ArithCircuit& c, std::size_t d);

// Strassen division elimination for a select-free circuit computing a
// polynomial of degree <= d (single output).
ArithCircuit eliminate_divisions(const FieldCtx& F, const ArithCircuit& c, std::size_t d, u64 seed);

struct PitResult {
    bool zero;
    std::vector<u64> witness;  // nonempty iff nonzero; eval(C, witness) != 0
};

// Randomized identity test over S = {0..2d-1}, k independent rounds.
PitResult pit(const FieldCtx& F, const ArithCircuit& c, u64 degree_bound, u64 seed, std::size_t rounds = 40);

// Coordinate-by-coordinate search-to-decision reduction; throws ZeroCircuit
// when the circuit is identically zero.
std::vector<u64> find_nonzero_point(const FieldCtx& F, const ArithCircuit& c, u64 degree_bound, u64 seed);

// Replace every select gate, in topological order, by its first child that
// computes a nonzero polynomial (PIT-decided), or by 0.
ArithCircuit remove_selects(const FieldCtx& F, const ArithCircuit& c, u64 seed);

}  // namespace polyac

#endif
