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

#include "polyac/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "polyac/gcdlib.hpp"
#include "polyac/mpoly.hpp"
#include "polyac/oracle.hpp"
#include "polyac/rootops.hpp"
#include "polyac/structmat.hpp"

namespace polyac {

namespace {

struct CliConfig {
    u64 prime = 1000003;
    u64 seed = 0;
    bool json = false;
    bool check = false;
};

struct CheckFailure {
    std::string what;
};

// "@file" reads a file, "-" reads stdin, anything else is the literal text.
std::string read_arg(const std::string& a) {
    if (a == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (!a.empty() && a[0] == '@') {
        std::ifstream in(a.substr(1));
        if (!in) throw ParseError("cannot open '" + a.substr(1) + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return a;
}

Matrix matrix_from_json(const FieldCtx& F, const std::string& text) {
    Matrix m;
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        m.rows = j.size();
        for (const auto& row : j) {
            if (m.cols == 0) m.cols = row.size();
            if (row.size() != m.cols) throw ParseError("ragged matrix");
            for (const auto& v : row) m.a.push_back(F.from_int(v.get<i64>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
    return m;
}

std::string poly_out(const FieldCtx& F, const FpPoly& f) { return print_poly(F, f); }

std::string poly_list_out(const FieldCtx& F, const std::vector<FpPoly>& fs) {
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) s += ";";
        s += print_poly(F, fs[i]);
    }
    return s;
}

void expect_args(const std::vector<std::string>& rest, std::size_t at_least, const std::string& usage) {
    if (rest.size() < at_least) throw ParseError("usage: " + usage);
}

u64 parse_u64(const std::string& s) {
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
}

DenseMultiplicityFunction dense_p_from_json(const std::string& text) {
    DenseMultiplicityFunction P;
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        P.arity = j.at("arity").get<std::size_t>();
        P.degree_cap = j.value("cap", std::size_t(64));
        if (j.contains("max")) P.max_output = j.at("max").get<u64>();
        for (const auto& e : j.at("table")) {
            auto tuple = e.at("t").get<std::vector<u64>>();
            u64 v = e.at("v").get<u64>();
            if (v) P.table[tuple] = v;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("dense P JSON: ") + e.what());
    }
    return P;
}

// ----------------------------- check oracles -------------------------------

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure{what};
}

FpPoly oracle_vanishing_part(const FieldCtx& F, const FpPoly& f, const std::vector<FpPoly>& gs) {
    // factors of f supported on the common roots of gs = gcd(f, G^{deg f})
    FpPoly G = gs[0];
    for (std::size_t i = 1; i < gs.size(); ++i) G = oracle::euclid_gcd(F, G, gs[i]);
    if (G.is_zero() || G.deg() == 0) return pone(FpRing(F));
    FpPoly Gp = ppow(FpRing(F), G, f.deg() == 0 ? 1 : f.deg());
    return oracle::euclid_gcd(F, f, Gp);
}

FpPoly oracle_diamond_dense(const FieldCtx& F, const std::vector<FpPoly>& fs, const DenseMultiplicityFunction& P) {
    FpRing ring(F);
    std::vector<std::vector<FpPoly>> parts;
    std::vector<FpPoly> sfparts;
    FpPoly s = pone(ring);
    for (const auto& f : fs) {
        parts.push_back(oracle::yun_squarefree(F, make_monic(F, f).first));
        FpPoly sf = pone(ring);
        for (const auto& p : parts.back()) sf = poly_mul(F, sf, p);
        sfparts.push_back(sf);
        s = oracle::euclid_lcm_many(F, {s, sf});
    }
    FpPoly out = pone(ring);
    for (const auto& [tuple, value] : P.table) {
        FpPoly piece = pone(ring);
        bool first = true;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            FpPoly cur;
            if (tuple[i] == 0)
                cur = oracle::long_division(F, s, sfparts[i]).q;
            else if (tuple[i] <= parts[i].size())
                cur = parts[i][tuple[i] - 1];
            else
                cur = pone(ring);
            piece = first ? cur : oracle::euclid_gcd(F, piece, cur);
            first = false;
        }
        out = poly_mul(F, out, ppow(ring, piece, value));
    }
    return out;
}

// ------------------------------- handlers ----------------------------------

struct Ctx {
    const CliConfig& cfg;
    const FieldCtx& F;
    std::ostream& out;
};

void emit_value(Ctx& c, const std::string& key, const std::string& value) {
    if (c.cfg.json)
        c.out << nlohmann::json{{key, value}}.dump() << "\n";
    else
        c.out << value << "\n";
}

int dispatch(Ctx& c, const std::string& cmd, std::vector<std::string> rest) {
    const FieldCtx& F = c.F;
    FpRing ring(F);
    auto P = [&](const std::string& s) { return parse_poly(F, read_arg(s)); };

    if (cmd == "gcd" || cmd == "lcm") {
        expect_args(rest, 2, cmd + " P1 P2 [P3 ...]");
        std::vector<FpPoly> fs;
        for (const auto& a : rest) fs.push_back(P(a));
        FpPoly r = cmd == "gcd" ? gcd(F, fs) : lcm(F, fs);
        if (c.cfg.check) {
            FpPoly want = cmd == "gcd" ? oracle::euclid_gcd_many(F, fs) : oracle::euclid_lcm_many(F, fs);
            require(pequal(ring, r, want), cmd + " disagrees with the Euclid oracle");
        }
        emit_value(c, cmd, poly_out(F, r));
        return 0;
    }
    if (cmd == "resultant") {
        expect_args(rest, 2, "resultant F G");
        FpPoly f = P(rest[0]), g = P(rest[1]);
        u64 r = resultant(F, f, g);
        if (c.cfg.check && !f.is_zero() && !g.is_zero() && f.deg() >= 1 && g.deg() >= 1) {
            u64 want = oracle::bareiss_det(F, sylvester_matrix(F, f, g));
            require(r == want, "resultant disagrees with the Bareiss determinant");
        }
        emit_value(c, "resultant", std::to_string(r));
        return 0;
    }
    if (cmd == "disc") {
        expect_args(rest, 1, "disc F");
        FpPoly f = P(rest[0]);
        u64 r = discriminant(F, f);
        if (c.cfg.check && !f.is_zero() && f.deg() >= 2) {
            FpPoly fp = poly_derivative(F, f, 1);
            u64 sign = (f.deg() * (f.deg() - 1) / 2) % 2 ? F.neg(1) : 1;
            u64 want = F.mul(sign, oracle::bareiss_det(F, sylvester_matrix(F, f, fp)));
            require(r == want, "disc disagrees with the Bareiss determinant");
        }
        emit_value(c, "disc", std::to_string(r));
        return 0;
    }
    if (cmd == "remainder" || cmd == "divrem") {
        expect_args(rest, 2, cmd + " F G");
        FpPoly f = P(rest[0]), g = P(rest[1]);
        QuotRem qr = div_rem(F, f, g);
        if (c.cfg.check) {
            auto want = oracle::long_division(F, f, g);
            require(pequal(ring, qr.r, want.r) && pequal(ring, qr.q, want.q), cmd + " disagrees with long division");
        }
        if (cmd == "remainder")
            emit_value(c, "remainder", poly_out(F, qr.r));
        else
            emit_value(c, "divrem", poly_out(F, qr.q) + ";" + poly_out(F, qr.r));
        return 0;
    }
    if (cmd == "sqfree" || cmd == "sqpart") {
        expect_args(rest, 1, cmd + " F");
        FpPoly f = P(rest[0]);
        if (cmd == "sqfree") {
            auto dec = squarefree_decomposition(F, f);
            if (c.cfg.check) {
                auto want = oracle::yun_squarefree(F, f);
                require(dec.parts.size() == want.size(), "sqfree: part count differs from Yun");
                for (std::size_t i = 0; i < want.size(); ++i)
                    require(pequal(ring, dec.parts[i], want[i]), "sqfree: part differs from Yun");
            }
            emit_value(c, "sqfree", poly_list_out(F, dec.parts));
        } else {
            FpPoly sp = squarefree_part(F, f);
            if (c.cfg.check) {
                FpPoly want = pone(ring);
                for (const auto& p : oracle::yun_squarefree(F, f)) want = poly_mul(F, want, p);
                require(pequal(ring, sp, want), "sqpart differs from Yun");
            }
            emit_value(c, "sqpart", poly_out(F, sp));
        }
        return 0;
    }
    if (cmd == "bezout") {
        expect_args(rest, 2, "bezout F G");
        FpPoly f = P(rest[0]), g = P(rest[1]);
        BezoutPair ab = bezout_general(F, f, g);
        if (c.cfg.check) {
            FpPoly lhs = poly_add(F, poly_mul(F, ab.a, f), poly_mul(F, ab.b, g));
            require(pequal(ring, lhs, oracle::euclid_gcd(F, f, g)), "bezout identity fails against Euclid");
        }
        emit_value(c, "bezout", poly_out(F, ab.a) + ";" + poly_out(F, ab.b));
        return 0;
    }
    if (cmd == "sylvester") {
        expect_args(rest, 3, "sylvester det|adj|inv F G");
        FpPoly f = P(rest[1]), g = P(rest[2]);
        if (rest[0] == "det") {
            u64 r = resultant(F, f, g);
            if (c.cfg.check && f.deg() >= 1 && g.deg() >= 1)
                require(r == oracle::bareiss_det(F, sylvester_matrix(F, f, g)), "det disagrees with Bareiss");
            emit_value(c, "det", std::to_string(r));
            return 0;
        }
        Matrix m = rest[0] == "adj" ? sylvester_adjugate(F, f, g) : sylvester_inverse(F, f, g);
        if (c.cfg.check) {
            Matrix S = sylvester_matrix(F, f, g);
            Matrix prod = mat_mul(F, m, S);
            Matrix want = rest[0] == "adj" ? mat_scale(F, Matrix::identity(F, S.rows), oracle::bareiss_det(F, S))
                                           : Matrix::identity(F, S.rows);
            require(prod == want, "sylvester " + rest[0] + " identity fails");
        }
        emit_value(c, rest[0], matrix_to_json(F, m));
        return 0;
    }
    if (cmd == "bezmat") {
        expect_args(rest, 3, "bezmat build|inv F G [order]");
        FpPoly f = P(rest[1]), g = P(rest[2]);
        std::size_t order = std::max(f.is_zero() ? 1 : f.deg(), g.is_zero() ? 1 : g.deg());
        if (rest.size() > 3) order = parse_u64(rest[3]);
        if (rest[0] == "build") {
            Matrix B = bezout_matrix(F, f, g, order);
            if (c.cfg.check) {
                // definitional identity at random points
                oracle::Rng rng(c.cfg.seed + 17);
                for (int t = 0; t < 20; ++t) {
                    u64 x = rng.below(F.p()), y = rng.below(F.p());
                    u64 lhs = F.sub(F.mul(poly_eval(F, f, x), poly_eval(F, g, y)),
                                    F.mul(poly_eval(F, f, y), poly_eval(F, g, x)));
                    u64 acc = 0;
                    for (std::size_t i = 0; i < B.rows; ++i)
                        for (std::size_t j = 0; j < B.cols; ++j)
                            acc = F.add(acc, F.mul(B.at(i, j), F.mul(F.pow(x, i), F.pow(y, j))));
                    require(lhs == F.mul(F.sub(x, y), acc), "bezout matrix identity fails");
                }
            }
            emit_value(c, "bezmat", matrix_to_json(F, B));
        } else {
            Matrix Binv = bezout_inverse(F, f, g);
            if (c.cfg.check) {
                Matrix B = bezout_matrix(F, f, g, f.deg());
                require(mat_mul(F, B, Binv) == Matrix::identity(F, B.rows), "bezout inverse identity fails");
            }
            emit_value(c, "bezmat_inv", matrix_to_json(F, Binv));
        }
        return 0;
    }
    if (cmd == "toeplitz-inv") {
        expect_args(rest, 1, "toeplitz-inv MATRIX_JSON");
        Matrix A = matrix_from_json(F, read_arg(rest[0]));
        Matrix Ainv = toeplitz_inverse(F, A);
        if (c.cfg.check) require(mat_mul(F, A, Ainv) == Matrix::identity(F, A.rows), "toeplitz inverse identity fails");
        emit_value(c, "toeplitz_inv", matrix_to_json(F, Ainv));
        return 0;
    }
    if (cmd == "compose") {
        expect_args(rest, 3, "compose sum|prod F G");
        FpPoly f = P(rest[1]), g = P(rest[2]);
        ComposeMode mode = rest[0] == "prod" ? ComposeMode::Product : ComposeMode::Sum;
        FpPoly r = composed(F, f, g, mode);
        if (c.cfg.check && f.deg() >= 1 && g.deg() >= 1) {
            oracle::Rng rng(c.cfg.seed + 23);
            for (int t = 0; t < 5; ++t) {
                u64 xi = rng.below(F.p());
                FpPoly h;
                if (mode == ComposeMode::Sum) {
                    FpPoly lin = poly_from_ints(F, {0, -1});
                    lin.c[0] = xi;
                    h = {};
                    for (std::size_t j = g.c.size(); j-- > 0;) {
                        h = poly_mul(F, h, lin);
                        h = poly_add(F, h, pconst(ring, g.c[j]));
                    }
                } else {
                    h.c.assign(g.deg() + 1, 0);
                    u64 xp = 1;
                    for (std::size_t j = 0; j <= g.deg(); ++j) {
                        h.c[g.deg() - j] = F.mul(g.c[j], xp);
                        xp = F.mul(xp, xi);
                    }
                    ptrim(ring, h);
                }
                u64 want = (h.is_zero() || h.deg() < 1) ? poly_eval(F, r, xi)  // degenerate node, skip
                                                        : oracle::bareiss_det(F, sylvester_matrix(F, f, h));
                require(poly_eval(F, r, xi) == want, "compose disagrees with the Sylvester determinant");
            }
        }
        emit_value(c, "compose", poly_out(F, r));
        return 0;
    }
    if (cmd == "implicitize") {
        expect_args(rest, 3, "implicitize F G H");
        FpPoly f = P(rest[0]), g = P(rest[1]), h = P(rest[2]);
        Bivar r = implicitize(F, f, g, h);
        if (c.cfg.check) {
            oracle::Rng rng(c.cfg.seed + 29);
            int done = 0;
            for (int t = 0; t < 200 && done < 20; ++t) {
                u64 tau = rng.below(F.p());
                u64 hv = poly_eval(F, h, tau);
                if (hv == 0) continue;
                u64 x = F.div(poly_eval(F, f, tau), hv), y = F.div(poly_eval(F, g, tau), hv);
                u64 acc = 0;
                for (std::size_t a = 0; a <= r.dx; ++a)
                    for (std::size_t b = 0; b <= r.dy; ++b)
                        acc = F.add(acc, F.mul(r.at(a, b), F.mul(F.pow(x, a), F.pow(y, b))));
                require(acc == 0, "implicit equation does not vanish on the curve");
                ++done;
            }
        }
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t a = 0; a <= r.dx; ++a) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t b = 0; b <= r.dy; ++b) row.push_back(r.at(a, b));
            rows.push_back(row);
        }
        emit_value(c, "implicit", rows.dump());
        return 0;
    }
    if (cmd == "filter") {
        expect_args(rest, 2, "filter F G1 [G2 ...]");
        FpPoly f = P(rest[0]);
        std::vector<FpPoly> gs;
        for (std::size_t i = 1; i < rest.size(); ++i) gs.push_back(P(rest[i]));
        auto r = filter_common_roots(F, f, gs);
        if (c.cfg.check)
            require(pequal(ring, r.in, oracle_vanishing_part(F, f, gs)), "filter disagrees with the Euclid oracle");
        emit_value(c, "filter", poly_out(F, r.in) + ";" + poly_out(F, r.out));
        return 0;
    }
    if (cmd == "threshold") {
        expect_args(rest, 3, "threshold F G1 R1 [G2 R2 ...]");
        FpPoly f = P(rest[0]);
        std::vector<FpPoly> gs;
        std::vector<std::size_t> rs;
        for (std::size_t i = 1; i + 1 < rest.size(); i += 2) {
            gs.push_back(P(rest[i]));
            rs.push_back(parse_u64(rest[i + 1]));
        }
        auto r = threshold_multiplicity(F, f, gs, rs);
        if (c.cfg.check) {
            std::vector<FpPoly> filters;
            for (std::size_t j = 0; j < gs.size(); ++j) {
                if (rs[j] > gs[j].deg()) filters.push_back(pone(ring));  // forces the empty part
                FpPoly Gj = gs[j];
                for (std::size_t t = 1; t < rs[j]; ++t) Gj = oracle::euclid_gcd(F, Gj, poly_derivative(F, gs[j], t));
                filters.push_back(Gj);
            }
            require(pequal(ring, r.ge, oracle_vanishing_part(F, f, filters)),
                    "threshold disagrees with the Euclid oracle");
        }
        emit_value(c, "threshold", poly_out(F, r.ge) + ";" + poly_out(F, r.lt));
        return 0;
    }
    if (cmd == "diamond") {
        expect_args(rest, 3, "diamond dense|tropical PJSON F1 [F2 ...]");
        std::vector<FpPoly> fs;
        for (std::size_t i = 2; i < rest.size(); ++i) fs.push_back(P(rest[i]));
        FpPoly r;
        if (rest[0] == "dense") {
            DenseMultiplicityFunction Pf = dense_p_from_json(read_arg(rest[1]));
            r = diamond_dense(F, fs, Pf);
            if (c.cfg.check) require(pequal(ring, r, oracle_diamond_dense(F, fs, Pf)), "diamond dense oracle mismatch");
        } else {
            TropicalCircuit tc = tropical_from_json(read_arg(rest[1]));
            r = diamond_tropical(F, fs, tc);
            if (c.cfg.check) {
                // dense table from circuit evaluation, then the Yun/Euclid oracle
                DenseMultiplicityFunction Pf;
                Pf.arity = fs.size();
                u64 dmax = 0;
                for (const auto& f : fs) dmax = std::max<u64>(dmax, f.deg());
                Pf.degree_cap = dmax;
                std::vector<u64> tuple(fs.size(), 0);
                for (;;) {
                    u64 v = tropical_eval(tc, tuple);
                    if (v) Pf.table[tuple] = v;
                    std::size_t k = 0;
                    while (k < tuple.size() && ++tuple[k] > dmax) tuple[k++] = 0;
                    if (k == tuple.size()) break;
                }
                require(pequal(ring, r, oracle_diamond_dense(F, fs, Pf)), "diamond tropical oracle mismatch");
            }
        }
        emit_value(c, "diamond", poly_out(F, r));
        return 0;
    }
    if (cmd == "newton") {
        expect_args(rest, 2, "newton tops F [D] | newton frompos N p0,p1,...");
        if (rest[0] == "tops") {
            FpPoly f = P(rest[1]);
            std::size_t d = rest.size() > 2 ? parse_u64(rest[2]) : (f.is_zero() ? 0 : f.deg());
            NewtonSeries ns = to_power_sums(F, f, d);
            if (c.cfg.check) {
                auto want = oracle::newton_recurrence_power_sums(F, f, d);
                require(ns.p == want, "newton series disagrees with the triangular recurrence");
            }
            std::string s;
            for (std::size_t i = 0; i < ns.p.size(); ++i) s += (i ? "," : "") + std::to_string(ns.p[i]);
            emit_value(c, "power_sums", s);
        } else if (rest[0] == "frompos") {
            expect_args(rest, 3, "newton frompos N p0,p1,...");
            NewtonSeries ns;
            ns.n = parse_u64(rest[1]);
            for (const auto& tok : {rest[2]}) {
                std::stringstream ss(read_arg(tok));
                std::string item;
                while (std::getline(ss, item, ',')) ns.p.push_back(F.from_int(std::stoll(item)));
            }
            FpPoly f = from_power_sums(F, ns);
            if (c.cfg.check) {
                auto want = oracle::newton_recurrence_power_sums(F, f, ns.p.size() - 1);
                require(want == ns.p, "frompos result fails the recurrence oracle");
            }
            emit_value(c, "poly", poly_out(F, f));
        } else {
            throw ParseError("newton: expected tops|frompos");
        }
        return 0;
    }
    if (cmd == "circuit") {
        expect_args(rest, 1, "circuit build|eval|stats|eliminate-div|remove-select|pit ...");
        const std::string& sub = rest[0];
        if (sub == "build") {
            expect_args(rest, 3, "circuit build esym|power-sums|coeffs|resultant|gcd N [D_or_M]");
            std::size_t n = parse_u64(rest[2]);
            std::size_t md = rest.size() > 3 ? parse_u64(rest[3]) : n;
            BuilderKind kind;
            if (rest[1] == "esym")
                kind = BuilderKind::Esym;
            else if (rest[1] == "power-sums")
                kind = BuilderKind::PowerSums;
            else if (rest[1] == "coeffs")
                kind = BuilderKind::CoeffsFromPowerSums;
            else if (rest[1] == "resultant")
                kind = BuilderKind::Resultant;
            else if (rest[1] == "gcd")
                kind = BuilderKind::Gcd;
            else
                throw ParseError("unknown builder kind '" + rest[1] + "'");
            ArithCircuit cc = build_circuit(F, kind, n, md);
            c.out << circuit_to_json(cc) << "\n";
            return 0;
        }
        expect_args(rest, 2, "circuit " + sub + " CIRCUIT_JSON ...");
        ArithCircuit cc = circuit_from_json(read_arg(rest[1]));
        if (sub == "stats") {
            CircuitMetrics m = cc.metrics();
            nlohmann::json j{{"size", m.size},
                             {"depth", m.depth},
                             {"gates", m.n_gates},
                             {"inputs", cc.n_inputs},
                             {"outputs", cc.outputs.size()},
                             {"counts",
                              {{"input", m.counts[0]},
                               {"const", m.counts[1]},
                               {"add", m.counts[2]},
                               {"mul", m.counts[3]},
                               {"div", m.counts[4]},
                               {"select", m.counts[5]}}}};
            c.out << j.dump() << "\n";
            return 0;
        }
        if (sub == "eval") {
            expect_args(rest, 3, "circuit eval CIRCUIT_JSON v1,v2,...");
            std::vector<u64> xs;
            std::stringstream ss(rest[2]);
            std::string item;
            while (std::getline(ss, item, ',')) xs.push_back(F.from_int(std::stoll(item)));
            auto vals = cc.eval(F, xs);
            std::string s;
            for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? "," : "") + std::to_string(vals[i]);
            emit_value(c, "values", s);
            return 0;
        }
        if (sub == "eliminate-div") {
            expect_args(rest, 3, "circuit eliminate-div CIRCUIT_JSON DEGREE");
            ArithCircuit r = eliminate_divisions(F, cc, parse_u64(rest[2]), c.cfg.seed);
            c.out << circuit_to_json(r) << "\n";
            return 0;
        }
        if (sub == "remove-select") {
            ArithCircuit r = remove_selects(F, cc, c.cfg.seed);
            c.out << circuit_to_json(r) << "\n";
            return 0;
        }
        if (sub == "pit") {
            expect_args(rest, 3, "circuit pit CIRCUIT_JSON DEGREE");
            PitResult r = pit(F, cc, parse_u64(rest[2]), c.cfg.seed);
            if (r.zero)
                emit_value(c, "pit", "zero");
            else {
                std::string s = "nonzero witness=";
                for (std::size_t i = 0; i < r.witness.size(); ++i) s += (i ? "," : "") + std::to_string(r.witness[i]);
                emit_value(c, "pit", s);
            }
            return 0;
        }
        throw ParseError("unknown circuit subcommand '" + sub + "'");
    }
    if (cmd == "mpoly") {
        expect_args(rest, 3, "mpoly gcd|lcm|sqfree DEGREE_BOUND CIRCUIT_JSON [...]");
        const std::string& sub = rest[0];
        std::size_t db = parse_u64(rest[1]);
        std::vector<MPolyCircuit> fs;
        for (std::size_t i = 2; i < rest.size(); ++i) {
            MPolyCircuit m;
            m.circuit = circuit_from_json(read_arg(rest[i]));
            m.nvars = m.circuit.n_inputs;
            m.degree_bound = db;
            fs.push_back(std::move(m));
        }
        auto check_divides_on_lines = [&](const MPolyCircuit& g) {
            oracle::Rng rng(c.cfg.seed + 31);
            for (int line = 0; line < 3; ++line) {
                std::vector<u64> base(g.nvars), dir(g.nvars);
                for (auto& x : base) x = rng.below(F.p());
                for (auto& x : dir) x = rng.below(F.p());
                auto restrict_poly = [&](const MPolyCircuit& q) {
                    std::vector<std::pair<u64, u64>> pairs;
                    std::vector<u64> pt(q.nvars);
                    for (u64 t = 0; t <= db; ++t) {
                        for (std::size_t v = 0; v < q.nvars; ++v) pt[v] = F.add(base[v], F.mul(t, dir[v]));
                        pairs.push_back({t, q.circuit.eval(F, pt)[0]});
                    }
                    return interpolate_coeffs(F, pairs);
                };
                FpPoly gr = restrict_poly(g);
                if (gr.is_zero()) continue;
                for (const auto& f : fs) {
                    FpPoly fr = restrict_poly(f);
                    if (fr.is_zero()) continue;
                    require(oracle::long_division(F, fr, gr).r.is_zero(), "mpoly gcd does not divide on a line");
                }
            }
        };
        if (sub == "gcd" || sub == "lcm") {
            MPolyCircuit r = sub == "gcd" ? mgcd(F, fs, c.cfg.seed) : mlcm(F, fs, c.cfg.seed);
            if (c.cfg.check && sub == "gcd") check_divides_on_lines(r);
            c.out << circuit_to_json(r.circuit) << "\n";
            return 0;
        }
        if (sub == "sqfree") {
            auto parts = msqfree(F, fs.at(0), c.cfg.seed);
            if (c.cfg.check) {
                // parts reconstruct f up to a scalar at random points
                oracle::Rng rng(c.cfg.seed + 37);
                u64 ratio = 0;
                for (int t = 0; t < 20; ++t) {
                    std::vector<u64> pt(fs[0].nvars);
                    for (auto& x : pt) x = rng.below(F.p());
                    u64 prod = 1;
                    for (std::size_t j = 0; j < parts.size(); ++j)
                        prod = F.mul(prod, F.pow(parts[j].circuit.eval(F, pt)[0], j + 1));
                    u64 fv = fs[0].circuit.eval(F, pt)[0];
                    if (prod == 0 && fv == 0) continue;
                    require(prod != 0 && fv != 0, "msqfree zero-set mismatch");
                    u64 rat = F.div(fv, prod);
                    if (!ratio) ratio = rat;
                    require(rat == ratio, "msqfree reconstruction is not a fixed scalar multiple");
                }
            }
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& p : parts) arr.push_back(nlohmann::json::parse(circuit_to_json(p.circuit)));
            c.out << arr.dump() << "\n";
            return 0;
        }
        throw ParseError("unknown mpoly subcommand '" + sub + "'");
    }
    throw ParseError("unknown command '" + cmd + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    std::vector<std::string> positional;
    try {
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            if (a == "-p" || a == "--prime") {
                if (++i >= args.size()) throw ParseError("-p needs a value");
                cfg.prime = parse_u64(args[i]);
            } else if (a == "--seed") {
                if (++i >= args.size()) throw ParseError("--seed needs a value");
                cfg.seed = parse_u64(args[i]);
            } else if (a == "--format") {
                if (++i >= args.size()) throw ParseError("--format needs text|json");
                cfg.json = args[i] == "json";
            } else if (a == "--check") {
                cfg.check = true;
            } else if (a == "--help" || a == "-h") {
                out << "usage: polyac [-p PRIME] [--seed S] [--format text|json] [--check] CMD ...\n"
                       "commands: gcd lcm resultant disc remainder divrem sqfree sqpart bezout\n"
                       "          sylvester bezmat toeplitz-inv compose implicitize filter threshold\n"
                       "          diamond newton circuit mpoly\n";
                return 0;
            } else {
                positional.push_back(a);
            }
        }
        if (positional.empty()) throw ParseError("missing command");
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    try {
        FieldCtx F(cfg.prime);
        Ctx c{cfg, F, out};
        std::string cmd = positional.front();
        positional.erase(positional.begin());
        return dispatch(c, cmd, std::move(positional));
    } catch (const CheckFailure& f) {
        err << "check failed: " << f.what << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
}

}  // namespace polyac
