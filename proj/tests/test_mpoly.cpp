#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "polyac/mpoly.hpp"
#include "polyac/oracle.hpp"
#include "test_util.hpp"

using namespace polyac;
using namespace polyac::testutil;

namespace {
FieldCtx F(1000003);

// dense multivariate polynomial as a circuit, for test construction
struct DensePolyBuilder {
    std::size_t nvars;
    // list of (coefficient, exponent vector)
    std::vector<std::pair<i64, std::vector<std::size_t>>> terms;

    MPolyCircuit build(std::size_t degree_bound) const {
        MPolyCircuit m;
        m.nvars = nvars;
        m.degree_bound = degree_bound;
        ArithCircuit& c = m.circuit;
        c.n_inputs = nvars;
        std::vector<std::uint32_t> xin(nvars);
        for (std::size_t v = 0; v < nvars; ++v) xin[v] = c.input(std::uint32_t(v));
        std::vector<std::uint32_t> tg;
        for (const auto& [coef, exps] : terms) {
            std::vector<std::uint32_t> factors{c.konst(F.from_int(coef))};
            for (std::size_t v = 0; v < nvars; ++v)
                for (std::size_t e = 0; e < exps[v]; ++e) factors.push_back(xin[v]);
            tg.push_back(c.push(GateOp::Mul, factors));
        }
        c.outputs = {tg.size() == 1 ? tg[0] : c.push(GateOp::Add, tg)};
        return m;
    }
};

// product of circuits, as a circuit
MPolyCircuit mul_circuits(const std::vector<MPolyCircuit>& fs, std::size_t degree_bound) {
    MPolyCircuit m;
    m.nvars = fs[0].nvars;
    m.degree_bound = degree_bound;
    ArithCircuit& c = m.circuit;
    c.n_inputs = m.nvars;
    std::vector<std::uint32_t> feed(m.nvars);
    for (std::size_t v = 0; v < m.nvars; ++v) feed[v] = c.input(std::uint32_t(v));
    std::vector<std::uint32_t> outs;
    for (const auto& f : fs) {
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
        outs.push_back(map[f.circuit.outputs[0]]);
    }
    c.outputs = {c.push(GateOp::Mul, outs)};
    return m;
}

u64 eval1(const MPolyCircuit& f, const std::vector<u64>& pt) { return f.circuit.eval(F, pt)[0]; }
}  // namespace

TEST_CASE("top_homogeneous") {
    // x1 x2 + x1 -> x1 x2
    DensePolyBuilder b{2, {{1, {1, 1}}, {1, {1, 0}}}};
    MPolyCircuit f = b.build(2);
    MPolyCircuit t = top_homogeneous(F, f, 31);
    CHECK(t.degree_bound == 2);
    oracle::Rng rng(211);
    for (int i = 0; i < 10; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p());
        CHECK(eval1(t, {a, bq}) == F.mul(a, bq));
    }
    // already homogeneous
    DensePolyBuilder hb{2, {{3, {2, 0}}, {5, {0, 2}}}};
    MPolyCircuit h = hb.build(2);
    MPolyCircuit th = top_homogeneous(F, h, 33);
    for (int i = 0; i < 10; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p());
        CHECK(eval1(th, {a, bq}) == eval1(h, {a, bq}));
    }
    DensePolyBuilder zb{1, {{0, {0}}}};
    CHECK_THROWS_AS(top_homogeneous(F, zb.build(1), 35), ZeroCircuit);
}

TEST_CASE("monic_transform makes the image monic in y") {
    DensePolyBuilder b{2, {{1, {1, 1}}}};  // x1 x2
    MPolyCircuit f = b.build(2);
    MonicTransform mt = monic_transform(F, f, 37);
    CHECK(mt.ydeg == 2);
    // fhat(x, y) = (x1 + y a1)(x2 + y a2) / (a1 a2): y-lc is 1
    oracle::Rng rng(213);
    for (int i = 0; i < 10; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p()), y = rng.below(F.p());
        u64 got = eval1(mt.fhat, {a, bq, y});
        u64 want = F.div(F.mul(F.add(a, F.mul(y, mt.alpha[0])), F.add(bq, F.mul(y, mt.alpha[1]))), mt.scalar);
        CHECK(got == want);
    }
}

TEST_CASE("msqfree on constructed instances") {
    // f = (x1 + x2)^2 (x1 - x2)
    DensePolyBuilder sum{2, {{1, {1, 0}}, {1, {0, 1}}}};
    DensePolyBuilder dif{2, {{1, {1, 0}}, {-1, {0, 1}}}};
    MPolyCircuit f = mul_circuits({sum.build(1), sum.build(1), dif.build(1)}, 3);
    auto parts = msqfree(F, f, 41);
    REQUIRE(parts.size() == 2);
    // part 1 ~ x1 - x2, part 2 ~ x1 + x2, and the reconstruction holds
    oracle::Rng rng(215);
    u64 ratio1 = 0, ratio2 = 0, ratio = 0;
    for (int i = 0; i < 50; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p());
        u64 p1 = eval1(parts[0], {a, bq}), p2 = eval1(parts[1], {a, bq});
        u64 fv = eval1(f, {a, bq});
        u64 rec = F.mul(p1, F.mul(p2, p2));
        if (fv == 0) {
            CHECK(rec == 0);
            continue;
        }
        REQUIRE(rec != 0);
        u64 r = F.div(fv, rec);
        if (!ratio) ratio = r;
        CHECK(r == ratio);
        u64 d = F.sub(a, bq), s = F.add(a, bq);
        if (d != 0) {
            u64 r1 = F.div(p1, d);
            if (!ratio1) ratio1 = r1;
            CHECK(r1 == ratio1);
        }
        if (s != 0) {
            u64 r2 = F.div(p2, s);
            if (!ratio2) ratio2 = r2;
            CHECK(r2 == ratio2);
        }
    }

    // squarefree input: a single part, proportional to f
    MPolyCircuit sf = mul_circuits({sum.build(1), dif.build(1)}, 2);
    auto sparts = msqfree(F, sf, 43);
    REQUIRE(sparts.size() == 1);
    u64 r0 = 0;
    for (int i = 0; i < 20; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p());
        u64 fv = eval1(sf, {a, bq}), pv = eval1(sparts[0], {a, bq});
        CHECK((fv == 0) == (pv == 0));
        if (fv) {
            u64 r = F.div(fv, pv);
            if (!r0) r0 = r;
            CHECK(r == r0);
        }
    }

    // g^2 with g linear: part list (1, ~g)
    MPolyCircuit sq = mul_circuits({sum.build(1), sum.build(1)}, 2);
    auto qparts = msqfree(F, sq, 47);
    REQUIRE(qparts.size() == 2);
    for (int i = 0; i < 10; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p());
        CHECK(eval1(qparts[0], {a, bq}) == 1);  // the multiplicity-1 part is constant
    }
    // outputs are select- and division-free
    for (const auto& p : qparts) {
        CHECK_FALSE(p.circuit.has_op(GateOp::Select));
        CHECK_FALSE(p.circuit.has_op(GateOp::Div));
    }
}

TEST_CASE("mgcd on constructed instances") {
    // f = u w, g = v w with u, v, w pairwise coprime
    DensePolyBuilder u{2, {{1, {1, 0}}, {1, {0, 1}}}};            // x1 + x2
    DensePolyBuilder v{2, {{1, {1, 0}}, {-1, {0, 1}}}};           // x1 - x2
    DensePolyBuilder w{2, {{1, {1, 0}}, {2, {0, 1}}, {3, {0, 0}}}};  // x1 + 2 x2 + 3
    MPolyCircuit f = mul_circuits({u.build(1), w.build(1)}, 2);
    MPolyCircuit g = mul_circuits({v.build(1), w.build(1)}, 2);
    MPolyCircuit d = mgcd(F, {f, g}, 53);
    oracle::Rng rng(219);
    u64 ratio = 0;
    for (int i = 0; i < 50; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p());
        u64 wv = F.add(F.add(a, F.mul(2, bq)), 3);
        u64 dv = eval1(d, {a, bq});
        CHECK((wv == 0) == (dv == 0));
        if (wv) {
            u64 r = F.div(dv, wv);
            if (!ratio) ratio = r;
            CHECK(r == ratio);
        }
    }
    // gcd(f, f) ~ f
    MPolyCircuit same = mgcd(F, {f, f}, 59);
    u64 r2 = 0;
    for (int i = 0; i < 30; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p());
        u64 fv = eval1(f, {a, bq}), sv = eval1(same, {a, bq});
        CHECK((fv == 0) == (sv == 0));
        if (fv) {
            u64 r = F.div(sv, fv);
            if (!r2) r2 = r;
            CHECK(r == r2);
        }
    }
    // coprime pair: constant
    DensePolyBuilder x1{2, {{1, {1, 0}}}};
    DensePolyBuilder x2p1{2, {{1, {0, 1}}, {1, {0, 0}}}};
    MPolyCircuit cp = mgcd(F, {x1.build(1), x2p1.build(1)}, 61);
    for (int i = 0; i < 10; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p());
        u64 v0 = eval1(cp, {0, 0});
        CHECK(eval1(cp, {a, bq}) == v0);
        CHECK(v0 != 0);
    }
}

TEST_CASE("mlcm times mgcd matches f g for two operands") {
    DensePolyBuilder u{2, {{1, {1, 0}}, {1, {0, 1}}}};
    DensePolyBuilder w{2, {{1, {1, 0}}, {5, {0, 0}}}};
    DensePolyBuilder v{2, {{1, {0, 1}}, {7, {0, 0}}}};
    MPolyCircuit f = mul_circuits({u.build(1), w.build(1)}, 2);
    MPolyCircuit g = mul_circuits({v.build(1), w.build(1)}, 2);
    MPolyCircuit dd = mgcd(F, {f, g}, 67);
    MPolyCircuit ll = mlcm(F, {f, g}, 67);
    oracle::Rng rng(223);
    u64 ratio = 0;
    for (int i = 0; i < 40; ++i) {
        u64 a = rng.below(F.p()), bq = rng.below(F.p());
        u64 lhs = F.mul(eval1(dd, {a, bq}), eval1(ll, {a, bq}));
        u64 rhs = F.mul(eval1(f, {a, bq}), eval1(g, {a, bq}));
        CHECK((lhs == 0) == (rhs == 0));
        if (rhs) {
            u64 r = F.div(lhs, rhs);
            if (!ratio) ratio = r;
            CHECK(r == ratio);
        }
    }
}

TEST_CASE("three variables") {
    DensePolyBuilder w{3, {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}}};  // x1+x2+x3
    DensePolyBuilder uu{3, {{1, {1, 0, 0}}, {4, {0, 0, 0}}}};
    DensePolyBuilder vv{3, {{1, {0, 1, 0}}, {9, {0, 0, 0}}}};
    MPolyCircuit f = mul_circuits({uu.build(1), w.build(1)}, 2);
    MPolyCircuit g = mul_circuits({vv.build(1), w.build(1)}, 2);
    MPolyCircuit d = mgcd(F, {f, g}, 71);
    oracle::Rng rng(227);
    u64 ratio = 0;
    for (int i = 0; i < 30; ++i) {
        std::vector<u64> pt{rng.below(F.p()), rng.below(F.p()), rng.below(F.p())};
        u64 wv = F.add(F.add(pt[0], pt[1]), pt[2]);
        u64 dv = eval1(d, pt);
        CHECK((wv == 0) == (dv == 0));
        if (wv) {
            u64 r = F.div(dv, wv);
            if (!ratio) ratio = r;
            CHECK(r == ratio);
        }
    }
}
