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

#include "polyac/circuit.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "json.hpp"

namespace polyac {

namespace {
constexpr u64 kDegSat = u64(1) << 50;
u64 sat_add(u64 a, u64 b) { return std::min(kDegSat, a + b); }
}  // namespace

std::uint32_t ArithCircuit::push(GateOp op, const std::vector<std::uint32_t>& as, u64 value, std::uint32_t index) {
    Gate g;
    g.op = op;
    g.args_begin = std::uint32_t(args.size());
    g.args_count = std::uint32_t(as.size());
    g.value = value;
    g.index = index;
    args.insert(args.end(), as.begin(), as.end());
    gates.push_back(g);
    return std::uint32_t(gates.size() - 1);
}

void ArithCircuit::validate() const {
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        switch (g.op) {
            case GateOp::Input:
                if (g.index >= n_inputs) throw MalformedCircuit("input index out of range");
                if (g.args_count != 0) throw MalformedCircuit("input gate with arguments");
                break;
            case GateOp::Const:
                if (g.args_count != 0) throw MalformedCircuit("const gate with arguments");
                break;
            case GateOp::Div:
                if (g.args_count != 2) throw MalformedCircuit("div gate needs exactly two arguments");
                break;
            default:
                if (g.args_count == 0) throw MalformedCircuit("gate with no arguments");
                break;
        }
        for (std::uint32_t a = 0; a < g.args_count; ++a)
            if (args[g.args_begin + a] >= i) throw MalformedCircuit("argument references a later gate");
    }
    for (auto o : outputs)
        if (o >= gates.size()) throw MalformedCircuit("output index out of range");
}

CircuitMetrics ArithCircuit::metrics() const {
    CircuitMetrics m;
    m.n_gates = gates.size();
    m.size = args.size();
    std::vector<std::size_t> depth(gates.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        m.counts[std::size_t(g.op)]++;
        std::size_t d = 0;
        for (std::uint32_t a = 0; a < g.args_count; ++a) d = std::max(d, depth[args[g.args_begin + a]] + 1);
        depth[i] = d;
    }
    for (auto o : outputs) m.depth = std::max(m.depth, depth[o]);
    return m;
}

bool ArithCircuit::has_op(GateOp op) const {
    for (const auto& g : gates)
        if (g.op == op) return true;
    return false;
}

std::vector<u64> ArithCircuit::degree_bounds() const {
    std::vector<u64> deg(gates.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        u64 d = 0;
        switch (g.op) {
            case GateOp::Input: d = 1; break;
            case GateOp::Const: d = 0; break;
            case GateOp::Add:
            case GateOp::Select:
                for (std::uint32_t a = 0; a < g.args_count; ++a) d = std::max(d, deg[args[g.args_begin + a]]);
                break;
            case GateOp::Mul:
                for (std::uint32_t a = 0; a < g.args_count; ++a) d = sat_add(d, deg[args[g.args_begin + a]]);
                break;
            case GateOp::Div:
                d = sat_add(deg[args[g.args_begin]], deg[args[g.args_begin + 1]]);
                break;
        }
        deg[i] = d;
    }
    return deg;
}

std::vector<u64> ArithCircuit::eval_all_gates(const FieldCtx& F, const std::vector<u64>& inputs) const {
    if (inputs.size() != n_inputs) throw MalformedCircuit("input arity mismatch");
    std::vector<u64> v(gates.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        switch (g.op) {
            case GateOp::Input: v[i] = inputs[g.index] % F.p(); break;
            case GateOp::Const: v[i] = g.value % F.p(); break;
            case GateOp::Add: {
                u64 acc = 0;
                for (std::uint32_t a = 0; a < g.args_count; ++a) acc = F.add(acc, v[args[g.args_begin + a]]);
                v[i] = acc;
                break;
            }
            case GateOp::Mul: {
                u64 acc = 1;
                for (std::uint32_t a = 0; a < g.args_count; ++a) acc = F.mul(acc, v[args[g.args_begin + a]]);
                v[i] = acc;
                break;
            }
            case GateOp::Div: {
                u64 den = v[args[g.args_begin + 1]];
                if (den == 0) throw DivisionByZeroAtGate(i);
                v[i] = F.div(v[args[g.args_begin]], den);
                break;
            }
            case GateOp::Select: {
                u64 out = 0;
                for (std::uint32_t a = 0; a < g.args_count; ++a) {
                    u64 x = v[args[g.args_begin + a]];
                    if (x != 0) {
                        out = x;
                        break;
                    }
                }
                v[i] = out;
                break;
            }
        }
    }
    return v;
}

std::vector<u64> ArithCircuit::eval(const FieldCtx& F, const std::vector<u64>& inputs) const {
    auto v = eval_all_gates(F, inputs);
    std::vector<u64> out(outputs.size());
    for (std::size_t i = 0; i < outputs.size(); ++i) out[i] = v[outputs[i]];
    return out;
}

// ------------------------------- JSON ---------------------------------------

std::string circuit_to_json(const ArithCircuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : c.gates) {
        nlohmann::json jg;
        switch (g.op) {
            case GateOp::Input:
                jg = {{"op", "input"}, {"index", g.index}};
                break;
            case GateOp::Const:
                jg = {{"op", "const"}, {"value", g.value}};
                break;
            default: {
                const char* names[] = {"input", "const", "add", "mul", "div", "select"};
                std::vector<std::uint32_t> as(c.args.begin() + g.args_begin,
                                              c.args.begin() + g.args_begin + g.args_count);
                jg = {{"op", names[std::size_t(g.op)]}, {"args", as}};
                break;
            }
        }
        gates.push_back(jg);
    }
    return nlohmann::json{{"inputs", c.n_inputs}, {"gates", gates}, {"outputs", c.outputs}}.dump();
}

ArithCircuit circuit_from_json(const std::string& text) {
    ArithCircuit c;
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        c.n_inputs = j.at("inputs").get<std::size_t>();
        c.outputs = j.at("outputs").get<std::vector<std::uint32_t>>();
        for (const auto& jg : j.at("gates")) {
            std::string op = jg.at("op").get<std::string>();
            if (op == "input")
                c.push(GateOp::Input, {}, 0, jg.at("index").get<std::uint32_t>());
            else if (op == "const")
                c.push(GateOp::Const, {}, jg.at("value").get<u64>());
            else {
                auto as = jg.at("args").get<std::vector<std::uint32_t>>();
                GateOp o;
                if (op == "add")
                    o = GateOp::Add;
                else if (op == "mul")
                    o = GateOp::Mul;
                else if (op == "div")
                    o = GateOp::Div;
                else if (op == "select")
                    o = GateOp::Select;
                else
                    throw MalformedCircuit("unknown op '" + op + "'");
                c.push(o, as);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw MalformedCircuit(std::string("circuit JSON: ") + e.what());
    }
    c.validate();
    return c;
}

// ----------------------------- emit helpers ---------------------------------

namespace {

// Coefficient-extraction weights for integer nodes: coeff_k(f) =
// sum_t W[t][k] f(nodes[t]).
std::vector<std::vector<u64>> coeff_weights(const FieldCtx& F, const std::vector<u64>& nodes) {
    const std::size_t k = nodes.size();
    std::vector<u64> master(k + 1, 0);
    master[0] = 1;
    for (std::size_t i = 0; i < k; ++i) {
        u64 ni = F.neg(nodes[i]);
        for (std::size_t j = i + 1; j-- > 0;) {
            master[j + 1] = F.add(master[j + 1], master[j]);
            master[j] = F.mul(master[j], ni);
        }
    }
    std::vector<std::vector<u64>> W(k, std::vector<u64>(k, 0));
    std::vector<u64> basis(k);
    for (std::size_t t = 0; t < k; ++t) {
        u64 carry = master[k];
        for (std::size_t i = k; i-- > 0;) {
            basis[i] = carry;
            carry = F.add(master[i], F.mul(carry, nodes[t]));
        }
        u64 denom = 0;
        for (std::size_t i = k; i-- > 0;) denom = F.add(F.mul(denom, nodes[t]), basis[i]);
        u64 dinv = F.inv(denom);
        for (std::size_t i = 0; i < k; ++i) W[t][i] = F.mul(basis[i], dinv);
    }
    return W;
}

std::vector<u64> iota_nodes(std::size_t count) {
    std::vector<u64> n(count);
    for (std::size_t i = 0; i < count; ++i) n[i] = i;
    return n;
}

struct Emit {
    ArithCircuit c;
    const FieldCtx* F;
    std::unordered_map<u64, std::uint32_t> consts;
    std::vector<std::uint32_t> in;

    Emit(const FieldCtx& f, std::size_t arity) : F(&f) {
        c.n_inputs = arity;
        in.reserve(arity);
        for (std::size_t i = 0; i < arity; ++i) in.push_back(c.input(std::uint32_t(i)));
    }
    std::uint32_t K(u64 v) {
        v %= F->p();
        auto it = consts.find(v);
        if (it != consts.end()) return it->second;
        std::uint32_t id = c.konst(v);
        consts.emplace(v, id);
        return id;
    }
    std::uint32_t add(std::vector<std::uint32_t> a) {
        if (a.empty()) return K(0);
        if (a.size() == 1) return a[0];
        return c.push(GateOp::Add, a);
    }
    std::uint32_t mul(std::vector<std::uint32_t> a) {
        if (a.empty()) return K(1);
        if (a.size() == 1) return a[0];
        return c.push(GateOp::Mul, a);
    }
    std::uint32_t div(std::uint32_t x, std::uint32_t y) { return c.push(GateOp::Div, {x, y}); }
    std::uint32_t sel(std::vector<std::uint32_t> a) { return c.push(GateOp::Select, a); }

    // constant + sum of w_i * g_i, zero weights skipped, weight 1 unwrapped
    std::uint32_t wsum(u64 constant, const std::vector<std::pair<u64, std::uint32_t>>& terms) {
        std::vector<std::uint32_t> parts;
        if (constant % F->p() != 0) parts.push_back(K(constant));
        for (const auto& [w, g] : terms) {
            u64 ww = w % F->p();
            if (ww == 0) continue;
            parts.push_back(ww == 1 ? g : mul({K(ww), g}));
        }
        return add(parts);
    }

    // k-th power as one k-ary product, optionally scaled by a constant
    std::uint32_t power(std::uint32_t g, std::size_t k, u64 scale = 1) {
        std::vector<std::uint32_t> a;
        if (scale % F->p() != 1) a.push_back(K(scale));
        for (std::size_t i = 0; i < k; ++i) a.push_back(g);
        return mul(a);
    }
};

// Appends a copy of src into dst; src input i reads dst gate feed[i].
// Returns the dst ids of src's gates.
std::vector<std::uint32_t> append_copy(Emit& dst, const ArithCircuit& src, const std::vector<std::uint32_t>& feed) {
    std::vector<std::uint32_t> map(src.gates.size());
    for (std::size_t i = 0; i < src.gates.size(); ++i) {
        const Gate& g = src.gates[i];
        if (g.op == GateOp::Input) {
            map[i] = feed[g.index];
            continue;
        }
        if (g.op == GateOp::Const) {
            map[i] = dst.K(g.value);
            continue;
        }
        std::vector<std::uint32_t> as(g.args_count);
        for (std::uint32_t a = 0; a < g.args_count; ++a) as[a] = map[src.args[g.args_begin + a]];
        map[i] = dst.c.push(g.op, as);
    }
    return map;
}

// Newton-series family p_0..p_d of a monic polynomial presented by gates for
// the tail of rev(f) (rev_tail[i-1] = coefficient of x^i, constant term 1)
// and for rev(f') (revd[i] = coefficient of x^i). Node-interpolated, constant
// depth.
std::vector<std::uint32_t> emit_power_sums_from_rev(Emit& e, const std::vector<std::uint32_t>& rev_tail,
                                                    const std::vector<std::uint32_t>& revd, std::size_t d) {
    const FieldCtx& F = *e.F;
    const std::size_t N = rev_tail.size();
    const std::size_t D = std::max<std::size_t>(d * (N + 1), revd.empty() ? 0 : revd.size() - 1) + 1;
    F.char_guard(D);
    auto nodes = iota_nodes(D + 1);
    auto W = coeff_weights(F, nodes);
    std::vector<std::uint32_t> svals(D + 1);
    for (std::size_t t = 0; t <= D; ++t) {
        u64 xi = nodes[t];
        std::vector<u64> xp(std::max(N, revd.size()) + 1, 1);
        for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = F.mul(xp[i - 1], xi);
        std::vector<std::pair<u64, std::uint32_t>> hterms;
        for (std::size_t i = 1; i <= N; ++i) hterms.push_back({F.neg(xp[i]), rev_tail[i - 1]});
        std::uint32_t negh = e.wsum(0, hterms);  // -h(xi)
        std::vector<std::uint32_t> series{e.K(1)};
        for (std::size_t k = 1; k <= d; ++k) series.push_back(e.power(negh, k));
        std::uint32_t S = e.add(series);
        std::vector<std::pair<u64, std::uint32_t>> gterms;
        for (std::size_t i = 0; i < revd.size(); ++i) gterms.push_back({xp[i], revd[i]});
        std::uint32_t gv = e.wsum(0, gterms);
        svals[t] = e.mul({gv, S});
    }
    std::vector<std::uint32_t> p(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        std::vector<std::pair<u64, std::uint32_t>> terms;
        for (std::size_t t = 0; t <= D; ++t) terms.push_back({W[t][k], svals[t]});
        p[k] = e.wsum(0, terms);
    }
    return p;
}

// Same family from the ascending coefficients a_0..a_{n-1} of a monic f.
std::vector<std::uint32_t> emit_power_sums_monic(Emit& e, const std::vector<std::uint32_t>& a, std::size_t n,
                                                 std::size_t d) {
    const FieldCtx& F = *e.F;
    std::vector<std::uint32_t> rev_tail(n);   // rev(f) = 1 + sum a_{n-i} x^i
    for (std::size_t i = 1; i <= n; ++i) rev_tail[i - 1] = a[n - i];
    std::vector<std::uint32_t> revd(n);       // rev(f') = sum (n-i) a_{n-i} x^i, a_n = 1
    revd[0] = e.K(F.from_uint(u64(n)));
    for (std::size_t i = 1; i < n; ++i) revd[i] = e.mul({e.K(F.from_uint(u64(n - i))), a[n - i]});
    return emit_power_sums_from_rev(e, rev_tail, revd, d);
}

// e_0..e_upto gates from power-sum gates q[0] = q_1, ..., via the truncated
// exponential, node-interpolated.
std::vector<std::uint32_t> emit_esym_from_power_sums(Emit& e, const std::vector<std::uint32_t>& q, std::size_t upto) {
    const FieldCtx& F = *e.F;
    if (upto == 0) return {e.K(1)};
    if (q.empty()) {
        std::vector<std::uint32_t> es(upto + 1, e.K(0));
        es[0] = e.K(1);
        return es;
    }
    const std::size_t L = upto * std::min(upto, q.size());
    F.char_guard(std::max<u64>(L, upto));
    auto nodes = iota_nodes(L + 1);
    auto W = coeff_weights(F, nodes);
    std::vector<u64> invfact(upto + 1, 1);
    for (std::size_t j = 1; j <= upto; ++j) invfact[j] = F.mul(invfact[j - 1], F.inv(F.from_uint(u64(j))));
    std::vector<std::uint32_t> rvals(L + 1);
    for (std::size_t t = 0; t <= L; ++t) {
        u64 tau = nodes[t];
        std::vector<std::pair<u64, std::uint32_t>> gterms;
        u64 tp = 1;
        for (std::size_t k = 1; k <= upto && k <= q.size(); ++k) {
            tp = F.mul(tp, tau);
            u64 w = F.mul(tp, F.inv(F.from_uint(u64(k))));
            if (k % 2 == 0) w = F.neg(w);
            gterms.push_back({w, q[k - 1]});
        }
        std::uint32_t G = e.wsum(0, gterms);
        std::vector<std::uint32_t> terms{e.K(1)};
        for (std::size_t j = 1; j <= upto; ++j) terms.push_back(e.power(G, j, invfact[j]));
        rvals[t] = e.add(terms);
    }
    std::vector<std::uint32_t> es(upto + 1);
    es[0] = e.K(1);
    for (std::size_t k = 1; k <= upto; ++k) {
        std::vector<std::pair<u64, std::uint32_t>> terms;
        for (std::size_t t = 0; t <= L; ++t) terms.push_back({W[t][k], rvals[t]});
        es[k] = e.wsum(0, terms);
    }
    return es;
}

void cap_check(std::size_t n, std::size_t m) {
    if (n == 0 || n > 64 || m > 64) throw CapExceeded("builder parameters out of range (1..64)");
}

}  // namespace

// ------------------------------- builders -----------------------------------

ArithCircuit build_esym(const FieldCtx& F, std::size_t n, std::size_t d) {
    cap_check(n, 0);
    Emit e(F, n);
    if (d == 0 || d > n) {
        e.c.outputs = {e.K(d == 0 ? 1 : 0)};
        return e.c;
    }
    F.char_guard(n);
    // Phi(y) = prod (y + x_i) = sum e_k y^{n-k}; e_d is the coefficient of
    // y^{n-d}. The interpolation weight rides along as an extra argument of
    // the product gate, keeping the depth at exactly 3.
    auto nodes = iota_nodes(n + 1);
    auto W = coeff_weights(F, nodes);
    std::vector<std::uint32_t> prods;
    for (std::size_t t = 0; t <= n; ++t) {
        u64 w = W[t][n - d];
        if (w == 0) continue;
        std::vector<std::uint32_t> factors{e.K(w)};
        for (std::size_t i = 0; i < n; ++i) factors.push_back(e.c.push(GateOp::Add, {e.K(nodes[t]), e.in[i]}));
        prods.push_back(e.c.push(GateOp::Mul, factors));
    }
    e.c.outputs = {e.c.push(GateOp::Add, prods)};
    return e.c;
}

ArithCircuit build_power_sums(const FieldCtx& F, std::size_t n, std::size_t d) {
    cap_check(n, 0);
    if (d > 4096) throw CapExceeded("power-sum order too large");
    Emit e(F, n);
    auto p = emit_power_sums_monic(e, e.in, n, d);
    e.c.outputs = p;
    return e.c;
}

ArithCircuit build_coeffs_from_power_sums(const FieldCtx& F, std::size_t n) {
    cap_check(n, 0);
    Emit e(F, n);  // inputs p_1..p_n
    auto es = emit_esym_from_power_sums(e, e.in, n);
    std::vector<std::uint32_t> out(n);
    for (std::size_t k = 1; k <= n; ++k) {
        // a_{n-k} = (-1)^k e_k
        out[n - k] = (k % 2 == 0) ? es[k] : e.wsum(0, {{F.neg(1), es[k]}});
    }
    e.c.outputs = out;
    return e.c;
}

namespace {

// Coefficient gates of g^k for k = 1..kmax, where g is given by its
// coefficient gates (degree m); shared evaluation grid, per-k interpolation.
std::vector<std::vector<std::uint32_t>> emit_poly_power_coeffs(Emit& e, const std::vector<std::uint32_t>& gcoeff,
                                                               std::size_t m, std::size_t kmax) {
    const FieldCtx& F = *e.F;
    const std::size_t Z = kmax * std::max<std::size_t>(m, 1);
    F.char_guard(Z);
    auto nodes = iota_nodes(Z + 1);
    std::vector<std::uint32_t> gvals(Z + 1);
    for (std::size_t t = 0; t <= Z; ++t) {
        std::vector<std::pair<u64, std::uint32_t>> terms;
        u64 zp = 1;
        for (std::size_t i = 0; i < gcoeff.size(); ++i) {
            terms.push_back({zp, gcoeff[i]});
            zp = F.mul(zp, nodes[t]);
        }
        gvals[t] = e.wsum(0, terms);
    }
    std::vector<std::vector<std::uint32_t>> out(kmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
        const std::size_t deg = k * m;
        std::vector<u64> knodes = iota_nodes(deg + 1);
        auto W = coeff_weights(F, knodes);
        std::vector<std::uint32_t> pw(deg + 1);
        for (std::size_t t = 0; t <= deg; ++t) pw[t] = e.power(gvals[t], k);
        out[k - 1].resize(deg + 1);
        for (std::size_t j = 0; j <= deg; ++j) {
            std::vector<std::pair<u64, std::uint32_t>> terms;
            for (std::size_t t = 0; t <= deg; ++t) terms.push_back({W[t][j], pw[t]});
            out[k - 1][j] = e.wsum(0, terms);
        }
    }
    return out;
}

}  // namespace

ArithCircuit build_resultant(const FieldCtx& F, std::size_t n, std::size_t m) {
    cap_check(n, m);
    Emit e(F, n + m + 1);  // a_0..a_{n-1}, b_0..b_m
    std::vector<std::uint32_t> fin(e.in.begin(), e.in.begin() + n);
    std::vector<std::uint32_t> gin(e.in.begin() + n, e.in.end());
    const std::size_t D = n * std::max<std::size_t>(m, 1);
    auto p = emit_power_sums_monic(e, fin, n, D);
    auto gpow = emit_poly_power_coeffs(e, gin, m, n);
    std::vector<std::uint32_t> q(n);
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint32_t> terms;
        for (std::size_t j = 0; j < gpow[k - 1].size(); ++j) terms.push_back(e.mul({gpow[k - 1][j], p[j]}));
        q[k - 1] = e.add(terms);
    }
    auto es = emit_esym_from_power_sums(e, q, n);
    e.c.outputs = {es[n]};
    return e.c;
}

ArithCircuit build_gcd(const FieldCtx& F, std::size_t n, std::size_t m) {
    cap_check(n, m);
    if (m == 0) throw CapExceeded("gcd builder needs m >= 1");
    Emit e(F, n + m);  // monic squarefree f (a_0..a_{n-1}), monic squarefree g (b_0..b_{m-1})
    std::vector<std::uint32_t> fin(e.in.begin(), e.in.begin() + n);
    std::vector<std::uint32_t> gin(e.in.begin() + n, e.in.end());
    const std::size_t dm = std::min(n, m);

    // 1. power sums of f, far enough for the mixed moments
    const std::size_t D1 = n * (m + 1);
    auto p = emit_power_sums_monic(e, fin, n, D1);

    // 2. coefficient gates of g^k (g monic: append the constant 1 as lc)
    std::vector<std::uint32_t> gfull = gin;
    gfull.push_back(e.K(1));
    auto gpow = emit_poly_power_coeffs(e, gfull, m, n);

    // 3. mixed moments M[k-1][v] = sum_j [g^k]_j p_{j+v}
    std::vector<std::vector<std::uint32_t>> M(n);
    for (std::size_t k = 1; k <= n; ++k) {
        M[k - 1].resize(k + 1);
        for (std::size_t v = 0; v <= k; ++v) {
            std::vector<std::uint32_t> terms;
            for (std::size_t j = 0; j < gpow[k - 1].size(); ++j) terms.push_back(e.mul({gpow[k - 1][j], p[j + v]}));
            M[k - 1][v] = e.add(terms);
        }
    }

    // Pascal triangle
    std::vector<std::vector<u64>> C(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        C[k].assign(k + 1, 1);
        for (std::size_t u = 1; u < k; ++u) C[k][u] = F.add(C[k - 1][u - 1], C[k - 1][u]);
    }

    // 4. e_k(eta) for the filter values lambda_i = (y - alpha_i) g(alpha_i),
    // per y-node eta = 0..n, then coefficient gates e_k[j].
    std::vector<std::vector<std::uint32_t>> e_at(n + 1);
    for (std::size_t eta = 0; eta <= n; ++eta) {
        std::vector<u64> etap(n + 1, 1);
        for (std::size_t u = 1; u <= n; ++u) etap[u] = F.mul(etap[u - 1], u64(eta));
        std::vector<std::uint32_t> q(n);
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<std::pair<u64, std::uint32_t>> terms;
            for (std::size_t u = 0; u <= k; ++u) {
                u64 w = F.mul(C[k][u], etap[u]);
                if ((k - u) % 2 == 1) w = F.neg(w);
                terms.push_back({w, M[k - 1][k - u]});
            }
            q[k - 1] = e.wsum(0, terms);
        }
        e_at[eta] = emit_esym_from_power_sums(e, q, n);
    }
    auto Wy = coeff_weights(F, iota_nodes(n + 1));
    // ecoef[k][j], j <= k
    std::vector<std::vector<std::uint32_t>> ecoef(n + 1);
    ecoef[0] = {e.K(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        ecoef[k].resize(k + 1);
        for (std::size_t j = 0; j <= k; ++j) {
            std::vector<std::pair<u64, std::uint32_t>> terms;
            for (std::size_t eta = 0; eta <= n; ++eta) terms.push_back({Wy[eta][j], e_at[eta][k]});
            ecoef[k][j] = e.wsum(0, terms);
        }
    }

    // 5. piecewise top-index machinery: z_k nonzero iff e_k != 0; chi'_k =
    // u_k - u_{k+1} isolates the top index K; Z = z_K.
    std::vector<std::uint32_t> z(n + 1);
    z[0] = e.K(1);
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint32_t> as(ecoef[k].rbegin(), ecoef[k].rend());
        z[k] = e.sel(as);
    }
    std::vector<std::uint32_t> u(n + 2);
    u[n + 1] = e.K(0);
    for (std::size_t k = n + 1; k-- > 0;) {
        std::vector<std::uint32_t> as;
        for (std::size_t t = n + 1; t-- > k;) as.push_back(z[t]);
        u[k] = e.sel(as);
    }
    std::vector<std::uint32_t> chip(n + 1), chi(n + 1);
    std::uint32_t Z = u[0];
    for (std::size_t k = 0; k <= n; ++k) {
        chip[k] = e.wsum(0, {{1, u[k]}, {F.neg(1), u[k + 1]}});
        chi[k] = e.div(chip[k], Z);
    }

    // 6. keep = f_{g != 0}, monic, padded to degree n
    std::uint32_t den;
    {
        std::vector<std::uint32_t> terms;
        for (std::size_t k = 0; k <= n; ++k) terms.push_back(e.mul({chip[k], ecoef[k][k]}));
        den = e.add(terms);
    }
    std::vector<std::uint32_t> keep(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<std::uint32_t> terms;
        for (std::size_t k = std::max<std::size_t>(j, 1); k <= n; ++k) terms.push_back(e.mul({chip[k], ecoef[k][j]}));
        if (j == 0) terms.push_back(chip[0]);  // e_0[0] = 1
        keep[j] = e.div(e.add(terms), den);
    }

    // 7. gcd = f / keep at the piecewise degree K: power sums of keep via its
    // chi-indexed reversal, Newton subtraction, truncated exponential.
    std::vector<std::uint32_t> rev_tail(n), revd(n);
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::uint32_t> terms;
        for (std::size_t k = i; k <= n; ++k) terms.push_back(e.mul({chi[k], keep[k - i]}));
        rev_tail[i - 1] = e.add(terms);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> terms;
        for (std::size_t k = i + 1; k <= n; ++k) terms.push_back(e.mul({e.K(F.from_uint(u64(k - i))), chi[k], keep[k - i]}));
        revd[i] = e.add(terms);
    }
    auto pkeep = emit_power_sums_from_rev(e, rev_tail, revd, n);
    std::vector<std::uint32_t> pq(n);
    for (std::size_t k = 1; k <= n; ++k) pq[k - 1] = e.wsum(0, {{1, p[k]}, {F.neg(1), pkeep[k]}});
    auto eq = emit_esym_from_power_sums(e, pq, n);

    std::vector<std::uint32_t> out(dm + 1);
    for (std::size_t j = 0; j <= dm; ++j) {
        std::vector<std::uint32_t> terms;
        for (std::size_t k = 0; k + j <= n; ++k) {
            u64 s = ((n - k - j) % 2 == 0) ? 1 : F.neg(1);
            terms.push_back(e.mul({e.K(s), chi[k], eq[n - k - j]}));
        }
        out[j] = e.add(terms);
    }
    e.c.outputs = out;
    // candidate blocks: block delta is chi'_{n-delta}-masked, so it vanishes
    // identically unless delta = deg(gcd)
    for (std::size_t delta = 0; delta <= dm; ++delta)
        for (std::size_t j = 0; j <= dm; ++j) e.c.outputs.push_back(e.mul({chip[n - delta], out[j]}));
    return e.c;
}

ArithCircuit build_circuit(const FieldCtx& F, BuilderKind kind, std::size_t n, std::size_t m_or_d) {
    switch (kind) {
        case BuilderKind::Esym: return build_esym(F, n, m_or_d);
        case BuilderKind::PowerSums: return build_power_sums(F, n, m_or_d);
        case BuilderKind::CoeffsFromPowerSums: return build_coeffs_from_power_sums(F, n);
        case BuilderKind::Resultant: return build_resultant(F, n, m_or_d);
        default: return build_gcd(F, n, m_or_d);
    }
}

// --------------------------- circuit transforms -----------------------------

namespace {

std::uint32_t single_output(const ArithCircuit& c) {
    if (c.outputs.size() != 1) throw MalformedCircuit("expected a single-output circuit");
    return c.outputs[0];
}

}  // namespace

std::vector<ArithCircuit> coefficient_circuits(const FieldCtx& F, const ArithCircuit& c, std::uint32_t y_input,
                                               std::size_t d) {
    c.validate();
    std::uint32_t out = single_output(c);
    if (y_input >= c.n_inputs) throw MalformedCircuit("designated input out of range");
    F.char_guard(d);
    auto nodes = iota_nodes(d + 1);
    auto W = coeff_weights(F, nodes);
    std::vector<ArithCircuit> res;
    for (std::size_t j = 0; j <= d; ++j) {
        Emit e(F, c.n_inputs);
        std::vector<std::pair<u64, std::uint32_t>> terms;
        for (std::size_t t = 0; t <= d; ++t) {
            std::vector<std::uint32_t> feed = e.in;
            feed[y_input] = e.K(nodes[t]);
            auto map = append_copy(e, c, feed);
            terms.push_back({W[t][j], map[out]});
        }
        e.c.outputs = {e.wsum(0, terms)};
        res.push_back(std::move(e.c));
    }
    return res;
}

std::vector<ArithCircuit> homogeneous_components(const FieldCtx& F, const ArithCircuit& c, std::size_t d) {
    c.validate();
    if (c.has_op(GateOp::Div) || c.has_op(GateOp::Select))
        throw MalformedCircuit("homogeneous_components needs a division- and select-free circuit");
    std::uint32_t out = single_output(c);
    u64 D = c.degree_bounds()[out];
    if (D >= kDegSat) throw CapExceeded("degree bound overflow");
    F.char_guard(D);
    auto nodes = iota_nodes(std::size_t(D) + 1);
    auto W = coeff_weights(F, nodes);
    std::vector<ArithCircuit> res;
    for (std::size_t j = 0; j <= d; ++j) {
        Emit e(F, c.n_inputs);
        std::vector<std::pair<u64, std::uint32_t>> terms;
        for (std::size_t t = 0; t < nodes.size(); ++t) {
            std::vector<std::uint32_t> feed(c.n_inputs);
            for (std::size_t i = 0; i < c.n_inputs; ++i) feed[i] = e.mul({e.K(nodes[t]), e.in[i]});
            auto map = append_copy(e, c, feed);
            if (j < W[t].size()) terms.push_back({W[t][j], map[out]});
        }
        e.c.outputs = {e.wsum(0, terms)};
        res.push_back(std::move(e.c));
    }
    return res;
}

// ------------------------------ PIT & selects -------------------------------

PitResult pit(const FieldCtx& F, const ArithCircuit& c, u64 degree_bound, u64 seed, std::size_t rounds) {
    c.validate();
    if (c.has_op(GateOp::Select)) throw MalformedCircuit("pit expects a select-free circuit");
    u64 S = std::max<u64>(2 * std::max<u64>(degree_bound, 1), 2);
    if (F.p() < S) throw CharacteristicTooSmall(F.p(), S);
    std::mt19937_64 rng(seed);
    std::vector<u64> point(c.n_inputs);
    std::size_t attempts = 0;
    for (std::size_t r = 0; r < rounds; ++r) {
        for (auto& x : point) x = rng() % S;
        try {
            auto v = c.eval(F, point);
            bool nz = false;
            for (u64 x : v) nz = nz || (x != 0);
            if (nz) return PitResult{false, point};
        } catch (const DivisionByZeroAtGate&) {
            // outside the circuit's domain; resample
            if (++attempts > 10 * rounds) break;
            --r;
        }
    }
    return PitResult{true, {}};
}

namespace {

ArithCircuit substitute_input(const ArithCircuit& c, std::uint32_t idx, u64 value) {
    ArithCircuit out = c;
    for (auto& g : out.gates)
        if (g.op == GateOp::Input && g.index == idx) {
            g.op = GateOp::Const;
            g.value = value;
        }
    return out;
}

}  // namespace

std::vector<u64> find_nonzero_point(const FieldCtx& F, const ArithCircuit& c, u64 degree_bound, u64 seed) {
    if (pit(F, c, degree_bound, seed).zero) throw ZeroCircuit("find_nonzero_point on the zero circuit");
    u64 S = std::max<u64>(degree_bound + 1, 2);
    if (F.p() < S) throw CharacteristicTooSmall(F.p(), S);
    ArithCircuit cur = c;
    std::vector<u64> point(c.n_inputs, 0);
    for (std::size_t i = 0; i < c.n_inputs; ++i) {
        bool found = false;
        for (u64 a = 0; a < S && !found; ++a) {
            ArithCircuit restricted = substitute_input(cur, std::uint32_t(i), a);
            if (!pit(F, restricted, degree_bound, seed + 7919 * (i + 1) + a).zero) {
                cur = std::move(restricted);
                point[i] = a;
                found = true;
            }
        }
        if (!found) throw NoNonzeroPoint("no value keeps coordinate " + std::to_string(i) + " nonzero");
    }
    // all inputs fixed: the remaining circuit is constant, verify directly
    auto v = cur.eval(F, point);
    bool nz = false;
    for (u64 x : v) nz = nz || (x != 0);
    if (!nz) throw NoNonzeroPoint("verification failed");
    return point;
}

ArithCircuit remove_selects(const FieldCtx& F, const ArithCircuit& c, u64 seed) {
    c.validate();
    ArithCircuit out;
    out.n_inputs = c.n_inputs;
    auto degs = c.degree_bounds();
    std::vector<std::uint32_t> map(c.gates.size());
    u64 round = 0;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        std::vector<std::uint32_t> as(g.args_count);
        for (std::uint32_t a = 0; a < g.args_count; ++a) as[a] = map[c.args[g.args_begin + a]];
        if (g.op != GateOp::Select) {
            map[i] = out.push(g.op, as, g.value, g.index);
            continue;
        }
        // test each child, in order, on the already-rewritten prefix
        std::uint32_t chosen = std::uint32_t(-1);
        for (std::uint32_t a = 0; a < g.args_count && chosen == std::uint32_t(-1); ++a) {
            ArithCircuit sub = out;
            sub.outputs = {as[a]};
            u64 bound = degs[c.args[g.args_begin + a]];
            if (!pit(F, sub, bound, seed + 104729 * (++round)).zero) chosen = as[a];
        }
        map[i] = (chosen == std::uint32_t(-1)) ? out.konst(0) : chosen;
    }
    for (auto o : c.outputs) out.outputs.push_back(map[o]);
    return out;
}

// --------------------------- division elimination ---------------------------

ArithCircuit eliminate_divisions(const FieldCtx& F, const ArithCircuit& c, std::size_t d, u64 seed) {
    c.validate();
    if (c.has_op(GateOp::Select)) throw MalformedCircuit("eliminate_divisions expects a select-free circuit");
    std::uint32_t cout = single_output(c);
    if (!c.has_op(GateOp::Div)) {
        ArithCircuit copy = c;
        return copy;
    }

    // Split every gate into a (numerator, denominator) pair of division-free
    // circuits; the Add numerator is the t-coefficient trick.
    Emit se(F, c.n_inputs);
    std::vector<std::uint32_t> num(c.gates.size()), den(c.gates.size());
    std::vector<u64> dnum(c.gates.size(), 0), dden(c.gates.size(), 0);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        switch (g.op) {
            case GateOp::Input:
                num[i] = se.in[g.index];
                den[i] = se.K(1);
                dnum[i] = 1;
                break;
            case GateOp::Const:
                num[i] = se.K(g.value);
                den[i] = se.K(1);
                break;
            case GateOp::Mul: {
                std::vector<std::uint32_t> ns, ds;
                for (std::uint32_t a = 0; a < g.args_count; ++a) {
                    std::uint32_t arg = c.args[g.args_begin + a];
                    ns.push_back(num[arg]);
                    ds.push_back(den[arg]);
                    dnum[i] = sat_add(dnum[i], dnum[arg]);
                    dden[i] = sat_add(dden[i], dden[arg]);
                }
                num[i] = se.mul(ns);
                den[i] = se.mul(ds);
                break;
            }
            case GateOp::Div: {
                std::uint32_t x = c.args[g.args_begin], y = c.args[g.args_begin + 1];
                num[i] = se.mul({num[x], den[y]});
                den[i] = se.mul({den[x], num[y]});
                dnum[i] = sat_add(dnum[x], dden[y]);
                dden[i] = sat_add(dden[x], dnum[y]);
                break;
            }
            case GateOp::Add: {
                const std::size_t k = g.args_count;
                std::vector<std::uint32_t> ds;
                for (std::uint32_t a = 0; a < k; ++a) {
                    std::uint32_t arg = c.args[g.args_begin + a];
                    ds.push_back(den[arg]);
                    dden[i] = sat_add(dden[i], dden[arg]);
                    dnum[i] = sat_add(dnum[i], std::max(dnum[arg], dden[arg]));
                }
                den[i] = se.mul(ds);
                if (k == 1) {
                    num[i] = num[c.args[g.args_begin]];
                    break;
                }
                // numerator = [t^1] prod_a (den_a + t num_a)
                auto nodes = iota_nodes(k + 1);
                auto W = coeff_weights(F, nodes);
                std::vector<std::pair<u64, std::uint32_t>> terms;
                for (std::size_t t = 0; t <= k; ++t) {
                    std::vector<std::uint32_t> factors;
                    for (std::uint32_t a = 0; a < k; ++a) {
                        std::uint32_t arg = c.args[g.args_begin + a];
                        factors.push_back(t == 0 ? den[arg]
                                                 : se.add({den[arg], se.mul({se.K(nodes[t]), num[arg]})}));
                    }
                    terms.push_back({W[t][1], se.mul(factors)});
                }
                num[i] = se.wsum(0, terms);
                break;
            }
            default: throw MalformedCircuit("unexpected select gate");
        }
        dnum[i] = std::max(dnum[i], u64(1));
    }
    ArithCircuit numc = se.c, denc = se.c;
    numc.outputs = {num[cout]};
    denc.outputs = {den[cout]};

    // A point where the final denominator is nonzero.
    std::vector<u64> alpha = [&] {
        try {
            return find_nonzero_point(F, denc, dden[cout], seed);
        } catch (const ZeroCircuit&) {
            throw NoNonzeroPoint("the final denominator vanishes identically");
        }
    }();
    u64 cval = denc.eval(F, alpha)[0];
    u64 cinv = F.inv(cval);

    const u64 Dsyn = sat_add(dnum[cout], sat_add(u64(d) * std::max<u64>(dden[cout], 1), 0));
    if (Dsyn >= kDegSat) throw CapExceeded("syntactic degree bound overflow");
    F.char_guard(Dsyn);

    Emit e(F, c.n_inputs);
    // x' = x - alpha, copies at t-scaled shifted coordinates
    std::vector<std::uint32_t> xs(c.n_inputs);
    for (std::size_t i = 0; i < c.n_inputs; ++i) xs[i] = e.wsum(F.neg(alpha[i] % F.p()), {{1, e.in[i]}});
    auto nodes = iota_nodes(std::size_t(Dsyn) + 1);
    auto W = coeff_weights(F, nodes);
    std::vector<std::vector<std::pair<u64, std::uint32_t>>> comp_terms(d + 1);
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        std::vector<std::uint32_t> feed(c.n_inputs);
        for (std::size_t i = 0; i < c.n_inputs; ++i)
            feed[i] = e.wsum(alpha[i] % F.p(), {{nodes[t], xs[i]}});  // tau x' + alpha
        auto map = append_copy(e, se.c, feed);
        std::uint32_t gt = map[num[cout]];
        std::uint32_t ht = map[den[cout]];
        // u = 1 - h/c, series = sum_{i<=d} u^i, approx = g/c * series
        std::uint32_t ug = e.wsum(1, {{F.neg(cinv), ht}});
        std::vector<std::uint32_t> series{e.K(1)};
        for (std::size_t i = 1; i <= d; ++i) series.push_back(e.power(ug, i));
        std::uint32_t approx = e.mul({e.K(cinv), gt, e.add(series)});
        for (std::size_t j = 0; j <= d && j < W[t].size(); ++j) comp_terms[j].push_back({W[t][j], approx});
    }
    std::vector<std::uint32_t> comps(d + 1);
    for (std::size_t j = 0; j <= d; ++j) comps[j] = e.wsum(0, comp_terms[j]);
    e.c.outputs = {e.add(comps)};

    // post-hoc polynomiality check on random in-domain points
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::size_t checked = 0, tries = 0;
    while (checked < 20 && tries < 400) {
        ++tries;
        std::vector<u64> pt(c.n_inputs);
        for (auto& x : pt) x = rng() % F.p();
        try {
            u64 want = c.eval(F, pt)[0];
            u64 got = e.c.eval(F, pt)[0];
            if (want != got) throw NotAPolynomial("eliminated circuit disagrees with the original");
            ++checked;
        } catch (const DivisionByZeroAtGate&) {
            continue;
        }
    }
    return e.c;
}

}  // namespace polyac
