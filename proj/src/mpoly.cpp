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

#include "polyac/mpoly.hpp"

#include <random>

#include "polyac/gcdlib.hpp"

namespace polyac {

void MPolyCircuit::validate() const {
    circuit.validate();
    if (circuit.outputs.size() != 1) throw MalformedCircuit("MPolyCircuit needs a single output");
    if (circuit.n_inputs != nvars) throw MalformedCircuit("MPolyCircuit arity mismatch");
    if (circuit.has_op(GateOp::Select) || circuit.has_op(GateOp::Div))
        throw MalformedCircuit("MPolyCircuit must be select- and division-free");
}

namespace {

// Rational-pair coefficient ring evaluated over a fixed set of lanes: the
// leading lanes are random witness points (PIT zero tests), the rest the
// output interpolation grid. Division never executes pointwise; pairs
// cross-multiply, and a lane whose denominator vanished is simply dead.
struct LaneRing {
    const FieldCtx* F;
    std::size_t width = 0;
    std::size_t nwitness = 0;

    struct Elem {
        std::vector<u64> num;
        std::vector<u64> den;  // empty = all ones
    };

    Elem broadcast(u64 v) const { return Elem{std::vector<u64>(width, v % F->p()), {}}; }
    Elem zero() const { return broadcast(0); }
    Elem one() const { return broadcast(1); }
    Elem from_int(i64 x) const { return broadcast(F->from_int(x)); }

    Elem add(const Elem& a, const Elem& b) const { return combine(a, b, false); }
    Elem sub(const Elem& a, const Elem& b) const { return combine(a, b, true); }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& x : r.num) x = F->neg(x);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r;
        r.num.resize(width);
        for (std::size_t i = 0; i < width; ++i) r.num[i] = F->mul(a.num[i], b.num[i]);
        if (!a.den.empty() || !b.den.empty()) {
            r.den.resize(width);
            for (std::size_t i = 0; i < width; ++i)
                r.den[i] = F->mul(a.den.empty() ? 1 : a.den[i], b.den.empty() ? 1 : b.den[i]);
        }
        return r;
    }
    Elem div(const Elem& a, const Elem& b) const {
        Elem r;
        r.num.resize(width);
        r.den.resize(width);
        for (std::size_t i = 0; i < width; ++i) {
            r.num[i] = F->mul(a.num[i], b.den.empty() ? 1 : b.den[i]);
            r.den[i] = F->mul(a.den.empty() ? 1 : a.den[i], b.num[i]);
        }
        bool ones = true;
        for (u64 x : r.den) ones = ones && x == 1;
        if (ones) r.den.clear();
        return r;
    }
    Elem scale_fp(const Elem& a, u64 s) const {
        Elem r = a;
        s %= F->p();
        for (auto& x : r.num) x = F->mul(x, s);
        return r;
    }
    bool is_zero(const Elem& a) const {
        std::size_t live = 0;
        for (std::size_t i = 0; i < nwitness; ++i) {
            if (!a.den.empty() && a.den[i] == 0) continue;
            ++live;
            if (a.num[i] != 0) return false;
        }
        if (live == 0) throw FieldTooSmall("every witness lane hit a pole");
        return true;
    }

   private:
    Elem combine(const Elem& a, const Elem& b, bool minus) const {
        Elem r;
        r.num.resize(width);
        if (a.den.empty() && b.den.empty()) {
            for (std::size_t i = 0; i < width; ++i)
                r.num[i] = minus ? F->sub(a.num[i], b.num[i]) : F->add(a.num[i], b.num[i]);
            return r;
        }
        r.den.resize(width);
        for (std::size_t i = 0; i < width; ++i) {
            u64 ad = a.den.empty() ? 1 : a.den[i];
            u64 bd = b.den.empty() ? 1 : b.den[i];
            u64 x = F->mul(a.num[i], bd), y = F->mul(b.num[i], ad);
            r.num[i] = minus ? F->sub(x, y) : F->add(x, y);
            r.den[i] = F->mul(ad, bd);
        }
        return r;
    }
};

constexpr std::size_t kWitnessLanes = 12;

struct LaneWorld {
    LaneRing ring;
    std::vector<std::vector<u64>> points;      // points[lane][var]
    std::vector<std::vector<u64>> grid_nodes;  // per-variable interpolation nodes
    std::size_t grid_begin = 0;
};

// Witness lanes are random; grid lanes form a shifted tensor grid with
// per-variable node count deg+1.
LaneWorld make_world(const FieldCtx& F, std::size_t nvars, std::size_t deg, u64 seed) {
    LaneWorld w;
    std::mt19937_64 rng(seed);
    std::size_t gridsize = 1;
    w.grid_nodes.assign(nvars, {});
    for (std::size_t v = 0; v < nvars; ++v) {
        u64 off = rng() % F.p();
        for (std::size_t t = 0; t <= deg; ++t) w.grid_nodes[v].push_back(F.add(off, t));
        gridsize *= deg + 1;
    }
    w.grid_begin = kWitnessLanes;
    w.ring.F = &F;
    w.ring.nwitness = kWitnessLanes;
    w.ring.width = kWitnessLanes + gridsize;
    w.points.assign(w.ring.width, std::vector<u64>(nvars));
    for (std::size_t l = 0; l < kWitnessLanes; ++l)
        for (std::size_t v = 0; v < nvars; ++v) w.points[l][v] = rng() % F.p();
    for (std::size_t g = 0; g < gridsize; ++g) {
        std::size_t rest = g;
        for (std::size_t v = 0; v < nvars; ++v) {
            w.points[kWitnessLanes + g][v] = w.grid_nodes[v][rest % (deg + 1)];
            rest /= deg + 1;
        }
    }
    return w;
}

using LanePoly = Poly<LaneRing>;

// Coefficients (in the fresh variable y) of f(x + y alpha)/c over the lanes.
LanePoly lane_coefficients(const FieldCtx& F, const MPolyCircuit& f, const LaneWorld& w,
                           const std::vector<u64>& alpha, u64 cinv, std::size_t ydeg) {
    const LaneRing& ring = w.ring;
    std::vector<u64> ynodes(ydeg + 1);
    for (std::size_t t = 0; t <= ydeg; ++t) ynodes[t] = t;
    // per-lane evaluations at x + ynode * alpha
    std::vector<std::vector<u64>> vals(ydeg + 1, std::vector<u64>(ring.width));
    std::vector<u64> pt(f.nvars);
    for (std::size_t t = 0; t <= ydeg; ++t)
        for (std::size_t l = 0; l < ring.width; ++l) {
            for (std::size_t v = 0; v < f.nvars; ++v) pt[v] = F.add(w.points[l][v], F.mul(ynodes[t], alpha[v]));
            vals[t][l] = F.mul(f.circuit.eval(F, pt)[0], cinv);
        }
    // per-lane Lagrange interpolation in y via shared weights
    std::vector<std::vector<u64>> W(ydeg + 1, std::vector<u64>(ydeg + 1, 0));
    {
        FpRing fr(F);
        for (std::size_t t = 0; t <= ydeg; ++t) {
            std::vector<u64> unit(ydeg + 1, 0);
            unit[t] = 1;
            FpPoly basis = pinterpolate_scalar_nodes(fr, ynodes, unit);
            for (std::size_t k = 0; k < basis.c.size(); ++k) W[t][k] = basis.c[k];
        }
    }
    LanePoly out;
    out.c.assign(ydeg + 1, ring.zero());
    for (std::size_t k = 0; k <= ydeg; ++k)
        for (std::size_t t = 0; t <= ydeg; ++t) {
            if (W[t][k] == 0) continue;
            for (std::size_t l = 0; l < ring.width; ++l)
                out.c[k].num[l] = F.add(out.c[k].num[l], F.mul(W[t][k], vals[t][l]));
        }
    ptrim(ring, out);
    if (out.is_zero() || out.deg() != ydeg || !ring.is_zero(ring.sub(out.c.back(), ring.one())))
        throw ZeroCircuit("monic transform did not produce a monic image");
    out.c.back() = ring.one();  // exactly one, keeps later arithmetic on the fast path
    return out;
}

// Tensor interpolation of the y-constant coefficient of a lane polynomial
// into a dense circuit.
MPolyCircuit densify(const FieldCtx& F, const LaneWorld& w, const LaneRing::Elem& value, std::size_t nvars,
                     std::size_t deg) {
    const LaneRing& ring = w.ring;
    std::size_t gridsize = ring.width - w.grid_begin;
    std::vector<u64> vals(gridsize);
    for (std::size_t g = 0; g < gridsize; ++g) {
        std::size_t l = w.grid_begin + g;
        u64 d = value.den.empty() ? 1 : value.den[l];
        if (d == 0) throw FieldTooSmall("interpolation lane hit a pole");
        vals[g] = F.div(value.num[l], d);
    }
    // fold one variable at a time
    FpRing fr(F);
    std::size_t stride = 1;
    for (std::size_t v = 0; v < nvars; ++v) {
        const auto& nodes = w.grid_nodes[v];
        const std::size_t cnt = nodes.size();
        for (std::size_t base = 0; base < gridsize; ++base) {
            if ((base / stride) % cnt != 0) continue;
            std::vector<u64> line(cnt);
            for (std::size_t t = 0; t < cnt; ++t) line[t] = vals[base + t * stride];
            FpPoly co = pinterpolate_scalar_nodes(fr, nodes, line);
            for (std::size_t t = 0; t < cnt; ++t) vals[base + t * stride] = t < co.c.size() ? co.c[t] : 0;
        }
        stride *= cnt;
    }
    // assemble the dense circuit
    MPolyCircuit out;
    out.nvars = nvars;
    out.degree_bound = deg;
    ArithCircuit& c = out.circuit;
    c.n_inputs = nvars;
    std::vector<std::uint32_t> xin(nvars);
    for (std::size_t v = 0; v < nvars; ++v) xin[v] = c.input(std::uint32_t(v));
    std::vector<std::uint32_t> terms;
    for (std::size_t g = 0; g < gridsize; ++g) {
        if (vals[g] == 0) continue;
        std::vector<std::uint32_t> factors;
        factors.push_back(c.konst(vals[g]));
        std::size_t rest = g;
        for (std::size_t v = 0; v < nvars; ++v) {
            std::size_t e = rest % (deg + 1);
            rest /= deg + 1;
            for (std::size_t t = 0; t < e; ++t) factors.push_back(xin[v]);
        }
        terms.push_back(factors.size() == 1 ? factors[0] : c.push(GateOp::Mul, factors));
    }
    if (terms.empty())
        c.outputs = {c.konst(0)};
    else if (terms.size() == 1)
        c.outputs = {terms[0]};
    else
        c.outputs = {c.push(GateOp::Add, terms)};
    return out;
}

std::size_t true_degree(const FieldCtx& F, const MPolyCircuit& f, u64 seed, std::vector<ArithCircuit>* comps_out) {
    auto comps = homogeneous_components(F, f.circuit, f.degree_bound);
    for (std::size_t j = comps.size(); j-- > 0;) {
        if (!pit(F, comps[j], f.degree_bound, seed + j).zero) {
            if (comps_out) *comps_out = std::move(comps);
            return j;
        }
    }
    throw ZeroCircuit("the circuit computes the zero polynomial");
}

}  // namespace

MPolyCircuit top_homogeneous(const FieldCtx& F, const MPolyCircuit& f, u64 seed) {
    f.validate();
    std::vector<ArithCircuit> comps;
    std::size_t d = true_degree(F, f, seed, &comps);
    MPolyCircuit out;
    out.circuit = std::move(comps[d]);
    out.nvars = f.nvars;
    out.degree_bound = d;
    return out;
}

MonicTransform monic_transform(const FieldCtx& F, const MPolyCircuit& f, u64 seed) {
    f.validate();
    MPolyCircuit ftop = top_homogeneous(F, f, seed);
    MonicTransform mt;
    mt.ydeg = ftop.degree_bound;
    mt.alpha = find_nonzero_point(F, ftop.circuit, f.degree_bound, seed ^ 0x5bf03635ull);
    mt.scalar = ftop.circuit.eval(F, mt.alpha)[0];
    // fhat(x, y) = f(x + y alpha) / c over nvars+1 inputs (y last)
    ArithCircuit c;
    c.n_inputs = f.nvars + 1;
    std::vector<std::uint32_t> feed(f.nvars);
    std::uint32_t y = c.input(std::uint32_t(f.nvars));
    for (std::size_t v = 0; v < f.nvars; ++v) {
        std::uint32_t xi = c.input(std::uint32_t(v));
        std::uint32_t shift = c.push(GateOp::Mul, {c.konst(mt.alpha[v]), y});
        feed[v] = c.push(GateOp::Add, {xi, shift});
    }
    std::vector<std::uint32_t> map(f.circuit.gates.size());
    for (std::size_t i = 0; i < f.circuit.gates.size(); ++i) {
        const Gate& g = f.circuit.gates[i];
        if (g.op == GateOp::Input) {
            map[i] = feed[g.index];
            continue;
        }
        std::vector<std::uint32_t> as(g.args_count);
        for (std::uint32_t a = 0; a < g.args_count; ++a) as[a] = map[f.circuit.args[g.args_begin + a]];
        map[i] = c.push(g.op, as, g.value, g.index);
    }
    c.outputs = {c.push(GateOp::Mul, {c.konst(F.inv(mt.scalar)), map[f.circuit.outputs[0]]})};
    mt.fhat.circuit = std::move(c);
    mt.fhat.nvars = f.nvars + 1;
    mt.fhat.degree_bound = f.degree_bound;
    return mt;
}

std::vector<MPolyCircuit> msqfree(const FieldCtx& F, const MPolyCircuit& f, u64 seed) {
    f.validate();
    F.guard_newton(f.degree_bound);
    for (u64 attempt = 0; attempt < 8; ++attempt) {
        try {
            u64 s = seed + attempt * 0x9e3779b9ull;
            MPolyCircuit ftop = top_homogeneous(F, f, s);
            std::size_t d = ftop.degree_bound;
            if (d == 0) return {};  // constant: empty decomposition
            std::vector<u64> alpha = find_nonzero_point(F, ftop.circuit, f.degree_bound, s ^ 0x2545f491ull);
            u64 c = ftop.circuit.eval(F, alpha)[0];
            LaneWorld w = make_world(F, f.nvars, d, s ^ 0x9d2c5680ull);
            LanePoly fhat = lane_coefficients(F, f, w, alpha, F.inv(c), d);
            auto parts = squarefree_decomposition_core(w.ring, fhat);
            std::vector<MPolyCircuit> out;
            for (std::size_t j = 0; j < parts.size(); ++j) {
                const LaneRing::Elem& g0 = parts[j].c.empty() ? w.ring.one() : parts[j].c[0];
                out.push_back(densify(F, w, g0, f.nvars, d));
            }
            return out;
        } catch (const FieldTooSmall&) {
            continue;  // a lane hit a pole; retry with a fresh grid
        }
    }
    throw FieldTooSmall("msqfree: repeated pole collisions");
}

namespace {

MPolyCircuit mgcd_lcm(const FieldCtx& F, const std::vector<MPolyCircuit>& fs, u64 seed, bool want_lcm) {
    if (fs.empty()) throw ZeroPolynomial("gcd/lcm of an empty list");
    std::size_t nvars = fs[0].nvars;
    u64 dmax = 0;
    for (const auto& f : fs) {
        f.validate();
        if (f.nvars != nvars) throw MalformedCircuit("operand arity mismatch");
        dmax = std::max<u64>(dmax, f.degree_bound);
    }
    if (want_lcm)
        F.guard_lcmm(fs.size(), dmax);
    else
        F.guard_gcdm(std::max<std::size_t>(fs.size(), 2), dmax);

    for (u64 attempt = 0; attempt < 8; ++attempt) {
        try {
            u64 s = seed + attempt * 0x9e3779b9ull;
            // one shared direction: prod f_{i,top}(alpha) != 0
            std::vector<MPolyCircuit> tops;
            std::size_t dsum = 0, dout = 0;
            for (const auto& f : fs) {
                tops.push_back(top_homogeneous(F, f, s));
                dsum += tops.back().degree_bound;
            }
            ArithCircuit prod;
            prod.n_inputs = nvars;
            std::vector<std::uint32_t> feed(nvars);
            for (std::size_t v = 0; v < nvars; ++v) feed[v] = prod.input(std::uint32_t(v));
            std::vector<std::uint32_t> outs;
            for (const auto& t : tops) {
                std::vector<std::uint32_t> map(t.circuit.gates.size());
                for (std::size_t i = 0; i < t.circuit.gates.size(); ++i) {
                    const Gate& g = t.circuit.gates[i];
                    if (g.op == GateOp::Input) {
                        map[i] = feed[g.index];
                        continue;
                    }
                    std::vector<std::uint32_t> as(g.args_count);
                    for (std::uint32_t a = 0; a < g.args_count; ++a) as[a] = map[t.circuit.args[g.args_begin + a]];
                    map[i] = prod.push(g.op, as, g.value, g.index);
                }
                outs.push_back(map[t.circuit.outputs[0]]);
            }
            prod.outputs = {prod.push(GateOp::Mul, outs)};
            std::vector<u64> alpha = find_nonzero_point(F, prod, dsum, s ^ 0x2545f491ull);

            std::size_t dmin = tops[0].degree_bound;
            for (const auto& t : tops) dmin = std::min(dmin, t.degree_bound);
            dout = want_lcm ? dsum : dmin;
            LaneWorld w = make_world(F, nvars, std::max<std::size_t>(dout, 1), s ^ 0x9d2c5680ull);
            std::vector<LanePoly> hats;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                u64 ci = tops[i].circuit.eval(F, alpha)[0];
                hats.push_back(lane_coefficients(F, fs[i], w, alpha, F.inv(ci), tops[i].degree_bound));
            }
            LanePoly res = want_lcm ? lcm_core(w.ring, hats) : gcd_core(w.ring, hats);
            const LaneRing::Elem& g0 = res.c.empty() ? w.ring.one() : res.c[0];
            return densify(F, w, g0, nvars, std::max<std::size_t>(dout, 1));
        } catch (const FieldTooSmall&) {
            continue;
        }
    }
    throw FieldTooSmall("mgcd/mlcm: repeated pole collisions");
}

}  // namespace

MPolyCircuit mgcd(const FieldCtx& F, const std::vector<MPolyCircuit>& fs, u64 seed) {
    return mgcd_lcm(F, fs, seed, false);
}

MPolyCircuit mlcm(const FieldCtx& F, const std::vector<MPolyCircuit>& fs, u64 seed) {
    return mgcd_lcm(F, fs, seed, true);
}

}  // namespace polyac
