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

#include "polyac/gcdlib.hpp"

#include <functional>

#include "json.hpp"
#include "polyac/structmat.hpp"

namespace polyac {

BezoutPair bezout_general(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("bezout_general");
    FpRing ring(F);
    if (!pis_monic(ring, f) || !pis_monic(ring, g)) throw NotMonic("bezout_general expects monic operands");
    u64 d = std::max<u64>(f.deg(), g.deg());
    F.guard_gcd2(d);
    FpPoly g0 = gcd_core(ring, {f, g});
    FpPoly fh = exact_div_core(ring, f, g0, /*verify=*/false);
    FpPoly gh = exact_div_core(ring, g, g0, /*verify=*/false);
    CoprimeBezout cb = bezout_coeffs_coprime(F, fh, gh);
    return BezoutPair{cb.a, cb.b};
}

// ------------------------------ tropical -----------------------------------

void TropicalCircuit::validate() const {
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const TropicalGate& g = gates[i];
        if (g.args.empty()) throw MalformedCircuit("gate " + std::to_string(i) + " has no arguments");
        for (auto a : g.args)
            if (a >= inputs + i) throw MalformedCircuit("gate " + std::to_string(i) + " references a later entry");
        switch (g.kind) {
            case TropicalGate::Kind::CMul:
                if (g.args.size() != 1) throw MalformedCircuit("cmul takes one argument");
                break;
            case TropicalGate::Kind::Thr:
            case TropicalGate::Kind::NThr:
                if (g.r.size() != g.args.size()) throw MalformedCircuit("threshold arity mismatch");
                for (u64 rv : g.r)
                    if (rv == 0) throw MalformedCircuit("thresholds must be >= 1");
                break;
            default: break;
        }
    }
    if (output >= inputs + gates.size()) throw MalformedCircuit("output index out of range");
}

u64 TropicalCircuit::size() const {
    u64 s = gates.size();
    for (const auto& g : gates)
        if (g.kind == TropicalGate::Kind::CMul) s += g.c;
    return s;
}

std::size_t TropicalCircuit::depth() const {
    std::vector<std::size_t> d(inputs + gates.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        std::size_t m = 0;
        for (auto a : gates[i].args) m = std::max(m, d[a]);
        d[inputs + i] = m + 1;
    }
    return d[output];
}

u64 tropical_eval(const TropicalCircuit& c, const std::vector<u64>& in) {
    c.validate();
    if (in.size() != c.inputs) throw MalformedCircuit("input arity mismatch");
    std::vector<u64> val(c.inputs + c.gates.size(), 0);
    for (std::size_t i = 0; i < c.inputs; ++i) val[i] = in[i];
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const TropicalGate& g = c.gates[i];
        u64 v = 0;
        switch (g.kind) {
            case TropicalGate::Kind::Add:
                for (auto a : g.args) v += val[a];
                break;
            case TropicalGate::Kind::CMul: v = g.c * val[g.args[0]]; break;
            case TropicalGate::Kind::Min:
                v = val[g.args[0]];
                for (auto a : g.args) v = std::min(v, val[a]);
                break;
            case TropicalGate::Kind::Max:
                for (auto a : g.args) v = std::max(v, val[a]);
                break;
            case TropicalGate::Kind::Thr: {
                v = 1;
                for (std::size_t j = 0; j < g.args.size(); ++j)
                    if (val[g.args[j]] < g.r[j]) v = 0;
                break;
            }
            case TropicalGate::Kind::NThr: {
                v = 0;
                for (std::size_t j = 0; j < g.args.size(); ++j)
                    if (val[g.args[j]] < g.r[j]) v = 1;
                break;
            }
        }
        val[c.inputs + i] = v;
    }
    return val[c.output];
}

namespace {
const char* kind_name(TropicalGate::Kind k) {
    switch (k) {
        case TropicalGate::Kind::Add: return "add";
        case TropicalGate::Kind::CMul: return "cmul";
        case TropicalGate::Kind::Min: return "min";
        case TropicalGate::Kind::Max: return "max";
        case TropicalGate::Kind::Thr: return "thr";
        default: return "nthr";
    }
}
TropicalGate::Kind kind_from(const std::string& s) {
    if (s == "add") return TropicalGate::Kind::Add;
    if (s == "cmul") return TropicalGate::Kind::CMul;
    if (s == "min") return TropicalGate::Kind::Min;
    if (s == "max") return TropicalGate::Kind::Max;
    if (s == "thr") return TropicalGate::Kind::Thr;
    if (s == "nthr") return TropicalGate::Kind::NThr;
    throw MalformedCircuit("unknown tropical op '" + s + "'");
}
}  // namespace

std::string tropical_to_json(const TropicalCircuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : c.gates) {
        nlohmann::json jg{{"op", kind_name(g.kind)}, {"args", g.args}};
        if (g.kind == TropicalGate::Kind::CMul) jg["c"] = g.c;
        if (g.kind == TropicalGate::Kind::Thr || g.kind == TropicalGate::Kind::NThr) jg["r"] = g.r;
        gates.push_back(jg);
    }
    return nlohmann::json{{"inputs", c.inputs}, {"gates", gates}, {"output", c.output}}.dump();
}

TropicalCircuit tropical_from_json(const std::string& text) {
    TropicalCircuit c;
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        c.inputs = j.at("inputs").get<std::size_t>();
        c.output = j.at("output").get<std::uint32_t>();
        for (const auto& jg : j.at("gates")) {
            TropicalGate g;
            g.kind = kind_from(jg.at("op").get<std::string>());
            g.args = jg.at("args").get<std::vector<std::uint32_t>>();
            if (jg.contains("c")) g.c = jg.at("c").get<u64>();
            if (jg.contains("r")) g.r = jg.at("r").get<std::vector<u64>>();
            c.gates.push_back(std::move(g));
        }
    } catch (const nlohmann::json::exception& e) {
        throw MalformedCircuit(std::string("tropical JSON: ") + e.what());
    }
    c.validate();
    return c;
}

// ------------------------------ diamonds -----------------------------------

namespace {

struct DecompData {
    std::vector<std::vector<FpPoly>> parts;  // parts[i] = squarefree decomposition of fs[i]
    std::vector<FpPoly> zero_part;           // s / sqfp(f_i)
    FpPoly s;
};

DecompData decompose_all(const FieldCtx& F, const std::vector<FpPoly>& fs) {
    FpRing ring(F);
    DecompData d;
    std::vector<FpPoly> monics;
    for (const auto& f : fs) {
        if (f.is_zero()) throw ZeroPolynomial("diamond operand is 0");
        monics.push_back(pmake_monic(ring, f).first);
    }
    d.s = union_squarefree_part(ring, monics);
    for (const auto& f : monics) {
        d.parts.push_back(squarefree_decomposition_core(ring, f));
        FpPoly sf = pone(ring);
        for (const auto& part : d.parts.back()) sf = pmul_schoolbook(ring, sf, part);
        d.zero_part.push_back(exact_div_core(ring, d.s, sf, /*verify=*/false));
    }
    return d;
}

// delta part for one multiplicity tuple: gcd of the tuple-indexed pieces.
FpPoly delta_part(const FieldCtx& F, const DecompData& d, const std::vector<u64>& tuple) {
    FpRing ring(F);
    std::vector<FpPoly> pieces;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        u64 r = tuple[i];
        FpPoly piece;
        if (r == 0)
            piece = d.zero_part[i];
        else if (r <= d.parts[i].size())
            piece = d.parts[i][r - 1];
        else
            piece = pone(ring);
        if (pis_one(ring, piece)) return pone(ring);
        pieces.push_back(std::move(piece));
    }
    if (pieces.size() == 1) return pieces[0];
    return gcd_core(ring, pieces);
}

u64 cap_or_default(const std::vector<FpPoly>& fs, std::optional<u64> cap) {
    return cap ? *cap : diamond_default_cap(fs);
}

}  // namespace

FpPoly diamond_dense(const FieldCtx& F, const std::vector<FpPoly>& fs, const DenseMultiplicityFunction& P,
                     std::optional<u64> output_cap) {
    if (fs.empty() || fs.size() != P.arity) throw ParseError("diamond_dense: arity mismatch");
    FpRing ring(F);
    u64 d = 0;
    for (const auto& f : fs) {
        if (f.is_zero()) throw ZeroPolynomial("diamond operand is 0");
        d = std::max<u64>(d, f.is_zero() ? 0 : f.deg());
    }
    F.guard_diamondm(fs.size(), d);
    const u64 cap = cap_or_default(fs, output_cap);
    DecompData data = decompose_all(F, fs);
    FpPoly out = pone(ring);
    u64 outdeg = 0;
    for (const auto& [tuple, value] : P.table) {
        if (tuple.size() != P.arity) throw ParseError("diamond_dense: tuple arity mismatch");
        if (value == 0) continue;
        if (P.max_output && value > *P.max_output) throw OutputDegreeOverflow("P exceeds its declared output cap");
        FpPoly part = delta_part(F, data, tuple);
        if (pis_one(ring, part)) continue;
        outdeg += value * part.deg();
        if (outdeg > cap) throw OutputDegreeOverflow("output degree " + std::to_string(outdeg) + " exceeds cap");
        out = pmul_schoolbook(ring, out, ppow(ring, part, value));
    }
    F.char_guard(out.is_zero() ? 0 : out.deg());
    return out;
}

FpPoly diamond_tropical(const FieldCtx& F, const std::vector<FpPoly>& fs, const TropicalCircuit& C,
                        std::optional<u64> output_cap) {
    C.validate();
    if (fs.empty() || fs.size() != C.inputs) throw ParseError("diamond_tropical: arity mismatch");
    FpRing ring(F);
    u64 d = 0;
    for (const auto& f : fs) {
        if (f.is_zero()) throw ZeroPolynomial("diamond operand is 0");
        d = std::max<u64>(d, f.deg());
    }
    F.guard_diamondm(fs.size(), d);
    const u64 cap = cap_or_default(fs, output_cap);

    std::vector<FpPoly> val(C.inputs + C.gates.size());
    for (std::size_t i = 0; i < C.inputs; ++i) val[i] = pmake_monic(ring, fs[i]).first;
    auto check_deg = [&](const FpPoly& p) {
        if (!p.is_zero() && p.deg() > cap) throw OutputDegreeOverflow("intermediate degree exceeds cap");
        return p;
    };
    for (std::size_t i = 0; i < C.gates.size(); ++i) {
        const TropicalGate& g = C.gates[i];
        std::vector<FpPoly> args;
        for (auto a : g.args) args.push_back(val[a]);
        FpPoly v;
        switch (g.kind) {
            case TropicalGate::Kind::Add: {
                v = pone(ring);
                for (const auto& a : args) v = pmul_schoolbook(ring, v, a);
                break;
            }
            case TropicalGate::Kind::CMul: {
                u64 degsum = args[0].deg() * g.c;
                if (degsum > cap) throw OutputDegreeOverflow("cmul degree exceeds cap");
                v = ppow(ring, args[0], g.c);
                break;
            }
            case TropicalGate::Kind::Min: v = gcd(F, args); break;
            case TropicalGate::Kind::Max: v = lcm(F, args); break;
            case TropicalGate::Kind::Thr:
            case TropicalGate::Kind::NThr: {
                FpPoly s = union_squarefree_part(ring, args);
                std::vector<std::size_t> rs(g.r.begin(), g.r.end());
                ThresholdResult t = threshold_multiplicity(F, s, args, rs);
                v = (g.kind == TropicalGate::Kind::Thr) ? t.ge : t.lt;
                break;
            }
        }
        val[C.inputs + i] = check_deg(v);
    }
    return val[C.output];
}

}  // namespace polyac
