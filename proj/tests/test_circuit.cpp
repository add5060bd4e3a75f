#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "polyac/circuit.hpp"
#include "polyac/gcdlib.hpp"
#include "polyac/oracle.hpp"
#include "polyac/structmat.hpp"
#include "test_util.hpp"

using namespace polyac;
using namespace polyac::testutil;

namespace {
FieldCtx F(1000003);
FpRing ring(F);
}  // namespace

TEST_CASE("select semantics, exhaustively to 4 arguments") {
    // select(x1 - x2, x1)
    ArithCircuit c;
    c.n_inputs = 2;
    auto x1 = c.input(0), x2 = c.input(1);
    auto neg = c.push(GateOp::Mul, {c.konst(F.neg(1)), x2});
    auto diff = c.push(GateOp::Add, {x1, neg});
    c.outputs = {c.push(GateOp::Select, {diff, x1})};
    CHECK(c.eval(F, {3, 3})[0] == 3);
    CHECK(c.eval(F, {3, 5})[0] == F.neg(2));

    for (std::size_t k = 1; k <= 4; ++k) {
        for (u64 mask = 0; mask < (u64(1) << k); ++mask) {
            ArithCircuit s;
            s.n_inputs = k;
            std::vector<std::uint32_t> ids;
            for (std::size_t i = 0; i < k; ++i) ids.push_back(s.input(std::uint32_t(i)));
            s.outputs = {s.push(GateOp::Select, ids)};
            std::vector<u64> in(k, 0);
            u64 want = 0;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) in[i] = 10 + i;
            for (std::size_t i = 0; i < k; ++i)
                if (in[i]) {
                    want = in[i];
                    break;
                }
            CHECK(s.eval(F, in)[0] == want);
        }
    }
}

TEST_CASE("metrics") {
    ArithCircuit c;
    c.n_inputs = 5;
    std::vector<std::uint32_t> ids;
    for (std::size_t i = 0; i < 5; ++i) ids.push_back(c.input(std::uint32_t(i)));
    c.outputs = {c.push(GateOp::Add, ids)};
    auto m = c.metrics();
    CHECK(m.size == 5);
    CHECK(m.depth == 1);

    ArithCircuit pass;
    pass.n_inputs = 1;
    pass.outputs = {pass.input(0)};
    CHECK(pass.metrics().depth == 0);
    CHECK(pass.metrics().size == 0);

    ArithCircuit k;
    k.n_inputs = 0;
    k.outputs = {k.konst(7)};
    CHECK(k.eval(F, {})[0] == 7);
}

TEST_CASE("division by zero at a gate") {
    ArithCircuit c;
    c.n_inputs = 1;
    auto x = c.input(0);
    c.outputs = {c.push(GateOp::Div, {c.konst(1), x})};
    CHECK(c.eval(F, {5})[0] == F.inv(5));
    CHECK_THROWS_AS(c.eval(F, {0}), DivisionByZeroAtGate);
}

TEST_CASE("JSON round trip is bit-exact") {
    ArithCircuit c = build_esym(F, 5, 2);
    std::string j = circuit_to_json(c);
    ArithCircuit back = circuit_from_json(j);
    CHECK(circuit_to_json(back) == j);
    oracle::Rng rng(151);
    for (int t = 0; t < 10; ++t) {
        std::vector<u64> in(5);
        for (auto& x : in) x = rng.below(F.p());
        CHECK(c.eval(F, in) == back.eval(F, in));
    }
    CHECK_THROWS_AS(circuit_from_json("{\"inputs\":1,\"gates\":[{\"op\":\"frob\",\"args\":[]}],\"outputs\":[0]}"),
                    MalformedCircuit);
}

TEST_CASE("Ben-Or esym builder: depth exactly 3, subset-sum oracle") {
    ArithCircuit c = build_esym(F, 3, 2);
    CHECK(c.eval(F, {1, 2, 3})[0] == 11);
    for (std::size_t n : {4u, 8u, 16u, 32u}) {
        ArithCircuit cn = build_esym(F, n, 3);
        CHECK(cn.metrics().depth == 3);
    }
    oracle::Rng rng(157);
    for (std::size_t n : {2u, 5u, 9u}) {
        for (std::size_t d = 0; d <= n + 1; ++d) {
            ArithCircuit cn = build_esym(F, n, d);
            for (int t = 0; t < 5; ++t) {
                std::vector<u64> v(n);
                for (auto& x : v) x = rng.below(F.p());
                CHECK(cn.eval(F, v)[0] == esym_values(F, v, d));
            }
        }
    }
}

TEST_CASE("power sums builder agrees with the direct conversion") {
    oracle::Rng rng(163);
    for (std::size_t n : {1u, 3u, 6u}) {
        std::size_t d = n + 2;
        ArithCircuit c = build_power_sums(F, n, d);
        for (int t = 0; t < 6; ++t) {
            FpPoly f = random_monic(F, rng, n);
            std::vector<u64> in(f.c.begin(), f.c.end() - 1);
            auto got = c.eval(F, in);
            auto want = to_power_sums(F, f, d).p;
            CHECK(got == want);
        }
    }
}

TEST_CASE("coeffs-from-power-sums builder inverts the power sums") {
    oracle::Rng rng(167);
    for (std::size_t n : {1u, 4u, 7u}) {
        ArithCircuit c = build_coeffs_from_power_sums(F, n);
        for (int t = 0; t < 6; ++t) {
            FpPoly f = random_monic(F, rng, n);
            auto ps = to_power_sums(F, f, n).p;
            std::vector<u64> in(ps.begin() + 1, ps.end());
            auto got = c.eval(F, in);
            std::vector<u64> want(f.c.begin(), f.c.end() - 1);
            CHECK(got == want);
        }
    }
}

TEST_CASE("resultant builder") {
    ArithCircuit c = build_resultant(F, 2, 1);
    // f = x^2 - 1, g = x - 2
    CHECK(c.eval(F, {F.neg(1), 0, F.neg(2), 1})[0] == 3);
    oracle::Rng rng(173);
    for (std::size_t n : {1u, 2u, 4u})
        for (std::size_t m : {1u, 2u, 3u}) {
            ArithCircuit cr = build_resultant(F, n, m);
            for (int t = 0; t < 5; ++t) {
                FpPoly f = random_monic(F, rng, n);
                FpPoly g = random_poly(F, rng, m);
                std::vector<u64> in(f.c.begin(), f.c.end() - 1);
                in.insert(in.end(), g.c.begin(), g.c.end());
                CHECK(cr.eval(F, in)[0] == resultant(F, f, g));
            }
        }
}

TEST_CASE("gcd builder on squarefree inputs") {
    ArithCircuit c = build_gcd(F, 2, 2);
    // f = (x-1)(x-2) = x^2-3x+2, g = (x-1)(x-3) = x^2-4x+3 -> gcd x-1
    auto out = c.eval(F, {2, F.neg(3), 3, F.neg(4)});
    CHECK(out[0] == F.neg(1));
    CHECK(out[1] == 1);
    CHECK(out[2] == 0);
    // candidate blocks: exactly the block for degree 1 is nonvanishing
    bool block0 = out[3] || out[4] || out[5];
    bool block1 = out[6] || out[7] || out[8];
    bool block2 = out[9] || out[10] || out[11];
    CHECK_FALSE(block0);
    CHECK(block1);
    CHECK_FALSE(block2);

    oracle::Rng rng(179);
    for (std::size_t n : {2u, 3u, 4u})
        for (std::size_t m : {2u, 3u}) {
            ArithCircuit cg = build_gcd(F, n, m);
            std::size_t dm = std::min(n, m);
            for (int t = 0; t < 4; ++t) {
                FpPoly f = random_squarefree(F, rng, n);
                FpPoly g = random_squarefree(F, rng, m);
                if (t == 0 && dm >= 1) {
                    // plant a shared root
                    u64 shared = rng.below(1000);
                    f = poly_mul(F, random_squarefree(F, rng, n - 1), from_roots(F, {{i64(shared), 1}}));
                    g = poly_mul(F, random_squarefree(F, rng, m - 1), from_roots(F, {{i64(shared), 1}}));
                    if (!pis_one(ring, oracle::euclid_gcd(F, exact_div(F, f, from_roots(F, {{i64(shared), 1}})),
                                                          poly_derivative(F, f, 1))) ||
                        f.deg() != n || g.deg() != m)
                        continue;  // extremely unlikely collision; skip
                }
                FpPoly want = oracle::euclid_gcd(F, f, g);
                std::vector<u64> in(f.c.begin(), f.c.end() - 1);
                in.insert(in.end(), g.c.begin(), g.c.end() - 1);
                auto vals = cg.eval(F, in);
                FpPoly gotp;
                gotp.c.assign(vals.begin(), vals.begin() + dm + 1);
                ptrim(ring, gotp);
                CHECK(pequal(ring, gotp, want));
            }
        }
}

TEST_CASE("builder depth constancy and size growth") {
    auto depths_sizes = [&](BuilderKind kind, std::size_t second) {
        std::vector<std::size_t> depth;
        std::vector<std::size_t> size;
        for (std::size_t n : {4u, 8u, 16u}) {
            ArithCircuit c = build_circuit(F, kind, n, kind == BuilderKind::PowerSums ? n : second);
            auto m = c.metrics();
            depth.push_back(m.depth);
            size.push_back(m.size);
        }
        return std::pair(depth, size);
    };
    for (auto [kind, second] : {std::pair(BuilderKind::Esym, std::size_t(3)),
                                std::pair(BuilderKind::PowerSums, std::size_t(0)),
                                std::pair(BuilderKind::CoeffsFromPowerSums, std::size_t(0)),
                                std::pair(BuilderKind::Resultant, std::size_t(2)),
                                std::pair(BuilderKind::Gcd, std::size_t(2))}) {
        auto [depth, size] = depths_sizes(kind, second);
        CHECK(depth[0] == depth[1]);
        CHECK(depth[1] == depth[2]);
        CHECK(size[1] * 1 <= 32 * size[0]);
        CHECK(size[2] * 1 <= 32 * size[1]);
    }
}

TEST_CASE("coefficient circuits") {
    // C = (1 + y x1)(1 + y x2) with y the last input
    ArithCircuit c;
    c.n_inputs = 3;
    auto x1 = c.input(0), x2 = c.input(1), y = c.input(2);
    auto t1 = c.push(GateOp::Add, {c.konst(1), c.push(GateOp::Mul, {y, x1})});
    auto t2 = c.push(GateOp::Add, {c.konst(1), c.push(GateOp::Mul, {y, x2})});
    c.outputs = {c.push(GateOp::Mul, {t1, t2})};
    auto coeffs = coefficient_circuits(F, c, 2, 2);
    REQUIRE(coeffs.size() == 3);
    oracle::Rng rng(181);
    for (int t = 0; t < 10; ++t) {
        u64 a = rng.below(F.p()), b = rng.below(F.p()), beta = rng.below(F.p());
        CHECK(coeffs[0].eval(F, {a, b, 0})[0] == 1);
        CHECK(coeffs[1].eval(F, {a, b, 0})[0] == F.add(a, b));
        CHECK(coeffs[2].eval(F, {a, b, 0})[0] == F.mul(a, b));
        // evaluation identity sum_i coeff_i(x) beta^i = C(x, beta)
        u64 acc = 0;
        for (std::size_t i = 0; i < 3; ++i)
            acc = F.add(acc, F.mul(coeffs[i].eval(F, {a, b, 12345})[0], F.pow(beta, i)));
        CHECK(acc == c.eval(F, {a, b, beta})[0]);
    }
}

TEST_CASE("homogeneous components") {
    // x^2 + x + 1 in one variable
    ArithCircuit c;
    c.n_inputs = 1;
    auto x = c.input(0);
    c.outputs = {c.push(GateOp::Add, {c.push(GateOp::Mul, {x, x}), x, c.konst(1)})};
    auto comps = homogeneous_components(F, c, 2);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].eval(F, {17})[0] == 1);
    CHECK(comps[1].eval(F, {17})[0] == 17);
    CHECK(comps[2].eval(F, {17})[0] == F.mul(17, 17));
    // homogeneous input: single nonzero component; components sum back
    ArithCircuit h;
    h.n_inputs = 2;
    auto u = h.input(0), v = h.input(1);
    h.outputs = {h.push(GateOp::Mul, {u, v})};
    auto hc = homogeneous_components(F, h, 2);
    oracle::Rng rng(191);
    for (int t = 0; t < 10; ++t) {
        u64 a = rng.below(F.p()), b = rng.below(F.p());
        CHECK(hc[0].eval(F, {a, b})[0] == 0);
        CHECK(hc[1].eval(F, {a, b})[0] == 0);
        CHECK(hc[2].eval(F, {a, b})[0] == F.mul(a, b));
    }
}

TEST_CASE("pit") {
    ArithCircuit z;
    z.n_inputs = 1;
    auto x = z.input(0);
    z.outputs = {z.push(GateOp::Add, {x, z.push(GateOp::Mul, {z.konst(F.neg(1)), x})})};  // x - x
    CHECK(pit(F, z, 1, 7).zero);
    ArithCircuit nz;
    nz.n_inputs = 1;
    nz.outputs = {nz.push(GateOp::Add, {nz.input(0), nz.konst(1)})};
    auto r = pit(F, nz, 1, 7);
    CHECK_FALSE(r.zero);
    CHECK(nz.eval(F, r.witness)[0] != 0);
}

TEST_CASE("find_nonzero_point") {
    ArithCircuit c;
    c.n_inputs = 2;
    c.outputs = {c.push(GateOp::Mul, {c.input(0), c.input(1)})};
    auto pt = find_nonzero_point(F, c, 2, 11);
    CHECK(pt[0] != 0);
    CHECK(pt[1] != 0);
    ArithCircuit c2;
    c2.n_inputs = 1;
    c2.outputs = {c2.push(GateOp::Add, {c2.input(0), c2.konst(F.neg(5))})};
    auto pt2 = find_nonzero_point(F, c2, 1, 11);
    CHECK(pt2[0] != 5);
    ArithCircuit z;
    z.n_inputs = 1;
    z.outputs = {z.konst(0)};
    CHECK_THROWS_AS(find_nonzero_point(F, z, 1, 11), ZeroCircuit);
    // product of random linear forms, verified witness
    oracle::Rng rng(193);
    ArithCircuit lf;
    lf.n_inputs = 3;
    std::vector<std::uint32_t> factors;
    for (int i = 0; i < 3; ++i) {
        auto xi = lf.input(std::uint32_t(i));
        factors.push_back(lf.push(GateOp::Add, {xi, lf.konst(rng.below(F.p()))}));
    }
    lf.outputs = {lf.push(GateOp::Mul, factors)};
    auto w = find_nonzero_point(F, lf, 3, 13);
    CHECK(lf.eval(F, w)[0] != 0);
}

TEST_CASE("remove_selects") {
    // select(x1 - x2, x1): the difference is a nonzero polynomial, so the
    // generic branch is the first child
    ArithCircuit c;
    c.n_inputs = 2;
    auto x1 = c.input(0), x2 = c.input(1);
    auto diff = c.push(GateOp::Add, {x1, c.push(GateOp::Mul, {c.konst(F.neg(1)), x2})});
    c.outputs = {c.push(GateOp::Select, {diff, x1})};
    ArithCircuit r = remove_selects(F, c, 17);
    CHECK_FALSE(r.has_op(GateOp::Select));
    CHECK(r.eval(F, {7, 3})[0] == 4);

    // select(0, x1) -> x1
    ArithCircuit c2;
    c2.n_inputs = 1;
    c2.outputs = {c2.push(GateOp::Select, {c2.konst(0), c2.input(0)})};
    ArithCircuit r2 = remove_selects(F, c2, 17);
    CHECK(r2.eval(F, {42})[0] == 42);

    // all-zero children -> constant 0
    ArithCircuit c3;
    c3.n_inputs = 1;
    auto xx = c3.input(0);
    auto zero = c3.push(GateOp::Add, {xx, c3.push(GateOp::Mul, {c3.konst(F.neg(1)), xx})});
    c3.outputs = {c3.push(GateOp::Select, {c3.konst(0), zero})};
    ArithCircuit r3 = remove_selects(F, c3, 17);
    CHECK(r3.eval(F, {9})[0] == 0);
}

TEST_CASE("eliminate_divisions") {
    // x^2 / x (removable singularity)
    ArithCircuit c;
    c.n_inputs = 1;
    auto x = c.input(0);
    c.outputs = {c.push(GateOp::Div, {c.push(GateOp::Mul, {x, x}), x})};
    ArithCircuit r = eliminate_divisions(F, c, 1, 19);
    CHECK_FALSE(r.has_op(GateOp::Div));
    CHECK(r.eval(F, {0})[0] == 0);  // defined at the removed singularity
    oracle::Rng rng(197);
    for (int t = 0; t < 20; ++t) {
        u64 a = rng.below(F.p());
        CHECK(r.eval(F, {a})[0] == a);
    }

    // (x^2 - 1) / (x - 1) = x + 1
    ArithCircuit c2;
    c2.n_inputs = 1;
    auto y = c2.input(0);
    auto num = c2.push(GateOp::Add, {c2.push(GateOp::Mul, {y, y}), c2.konst(F.neg(1))});
    auto den = c2.push(GateOp::Add, {y, c2.konst(F.neg(1))});
    c2.outputs = {c2.push(GateOp::Div, {num, den})};
    ArithCircuit r2 = eliminate_divisions(F, c2, 1, 19);
    CHECK_FALSE(r2.has_op(GateOp::Div));
    for (int t = 0; t < 20; ++t) {
        u64 a = rng.below(F.p());
        CHECK(r2.eval(F, {a})[0] == F.add(a, 1));
    }

    // division-free input comes back unchanged
    ArithCircuit c3 = build_esym(F, 4, 2);
    ArithCircuit r3 = eliminate_divisions(F, c3, 2, 19);
    CHECK(circuit_to_json(r3) == circuit_to_json(c3));

    // random (f g) / g circuits
    for (int t = 0; t < 10; ++t) {
        FpPoly f = random_poly(F, rng, 1 + rng.below(4));
        FpPoly g = random_poly(F, rng, 1 + rng.below(4));
        ArithCircuit cc;
        cc.n_inputs = 1;
        auto xv = cc.input(0);
        auto horner = [&](const FpPoly& p) {
            std::uint32_t acc = cc.konst(0);
            for (std::size_t i = p.c.size(); i-- > 0;)
                acc = cc.push(GateOp::Add, {cc.push(GateOp::Mul, {acc, xv}), cc.konst(p.c[i])});
            return acc;
        };
        auto fid = horner(f), gid = horner(g);
        cc.outputs = {cc.push(GateOp::Div, {cc.push(GateOp::Mul, {fid, gid}), gid})};
        ArithCircuit rr = eliminate_divisions(F, cc, f.deg(), 19 + t);
        CHECK_FALSE(rr.has_op(GateOp::Div));
        for (int s = 0; s < 20; ++s) {
            u64 a = rng.below(F.p());
            CHECK(rr.eval(F, {a})[0] == poly_eval(F, f, a));
        }
    }
}
