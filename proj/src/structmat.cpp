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

#include "polyac/structmat.hpp"

#include <optional>

namespace polyac {

namespace {

// --- local exact linear algebra (the disc = 0 fallback; no oracle code) ----

std::optional<Matrix> ge_inverse(const FieldCtx& F, Matrix m) {
    if (m.rows != m.cols) return std::nullopt;
    const std::size_t n = m.rows;
    Matrix inv = Matrix::identity(F, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.a[k * n + j], m.a[piv * n + j]);
                std::swap(inv.a[k * n + j], inv.a[piv * n + j]);
            }
        u64 d = F.inv(m.at(k, k));
        for (std::size_t j = 0; j < n; ++j) {
            m.at(k, j) = F.mul(m.at(k, j), d);
            inv.at(k, j) = F.mul(inv.at(k, j), d);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            u64 c = m.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(k, j)));
                inv.at(i, j) = F.sub(inv.at(i, j), F.mul(c, inv.at(k, j)));
            }
        }
    }
    return inv;
}

u64 ge_det(const FieldCtx& F, Matrix m) {
    const std::size_t n = m.rows;
    u64 det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.a[k * n + j], m.a[piv * n + j]);
            det = F.neg(det);
        }
        det = F.mul(det, m.at(k, k));
        u64 d = F.inv(m.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            u64 c = F.mul(m.at(i, k), d);
            for (std::size_t j = k; j < n; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(k, j)));
        }
    }
    return det;
}

Matrix cofactor_adjugate(const FieldCtx& F, const Matrix& m) {
    const std::size_t n = m.rows;
    Matrix adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            u64 d = ge_det(F, minor);
            adj.at(i, j) = ((i + j) % 2 == 0) ? d : F.neg(d);
        }
    return adj;
}

// Synthetic division by a monic divisor; the classical fallback path.
FpPoly syndiv_remainder(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    const std::size_t dg = g.deg();
    if (f.is_zero() || f.deg() < dg) return f;
    std::vector<u64> rem = f.c;
    for (std::size_t k = f.deg();; --k) {
        u64 c = rem[k];
        if (c != 0) {
            for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] = F.sub(rem[k - dg + j], F.mul(c, g.c[j]));
        }
        if (k == dg) break;
    }
    FpPoly r;
    r.c = std::move(rem);
    ptrim(FpRing(F), r);
    return r;
}

u64 sign_pow(const FieldCtx& F, u64 exponent) { return (exponent % 2 == 0) ? 1 : F.neg(u64(1)); }

// Batched evaluation of the disc-scaled Lagrange columns over the roots
// beta_i of a monic q: for e = n+m-ell,
//   ahat_e(x) = sign * [y^(m-1)] prod_i (beta_i^e + y (x - beta_i) w(beta_i)),
// with w = other * q'. The values lambda_i = beta_i^e + y(x - beta_i)w(beta_i)
// have power sums expressible through the mixed moments
//   M(c, u) = sum_i beta_i^c w(beta_i)^u,
// shared by every column and every (x, y) grid point, so w^u is expanded
// once per operand pair instead of once per interpolation node.
class ColumnEngine {
   public:
    ColumnEngine(const FieldCtx& F, const FpPoly& q_monic, const FpPoly& other)
        : F_(F), ring_(F), m_(q_monic.deg()), N_(q_monic.deg() + other.deg()) {
        FpPoly w = poly_mul(F, other, poly_derivative(F, q_monic, 1));
        const std::size_t wdeg = w.is_zero() ? 0 : w.deg();
        P_ = power_sums_core(ring_, q_monic, m_ * wdeg + N_ * m_ + 1);
        wu_.push_back(pone(ring_));
        for (std::size_t u = 1; u <= m_; ++u) wu_.push_back(pmul_schoolbook(ring_, wu_.back(), w));
        C_.resize(m_ + 1);
        for (std::size_t k = 0; k <= m_; ++k) {
            C_[k].assign(k + 1, 1);
            for (std::size_t u = 1; u < k; ++u) C_[k][u] = F.add(C_[k - 1][u - 1], C_[k - 1][u]);
        }
        moments_.assign(m_ + 1, {});
    }

    // sign * [y^(m-1)] of the product, as a polynomial in x of degree < m.
    FpPoly ahat(std::size_t e, u64 extra_sign_exp) {
        const std::size_t m = m_;
        FpPoly out;
        if (m == 0) return out;
        // e_m values on the (x, y) grid, y-slice extracted per x-node
        std::vector<u64> xnodes(m), ynodes(m + 1);
        for (std::size_t a = 0; a < m; ++a) xnodes[a] = a;
        for (std::size_t b = 0; b <= m; ++b) ynodes[b] = b;
        std::vector<u64> slice(m);
        std::vector<u64> q(m);
        for (std::size_t a = 0; a < m; ++a) {
            std::vector<u64> evals(m + 1);
            for (std::size_t b = 0; b <= m; ++b) {
                u64 xi = xnodes[a], eta = ynodes[b];
                std::vector<u64> etap(m + 1, 1), xip(m + 1, 1);
                for (std::size_t t = 1; t <= m; ++t) {
                    etap[t] = F_.mul(etap[t - 1], eta);
                    xip[t] = F_.mul(xip[t - 1], xi);
                }
                for (std::size_t k = 1; k <= m; ++k) {
                    u64 acc = 0;
                    for (std::size_t u = 0; u <= k; ++u) {
                        u64 ybin = F_.mul(C_[k][u], etap[u]);
                        if (ybin == 0) continue;
                        u64 inner = 0;
                        for (std::size_t v = 0; v <= u; ++v) {
                            u64 t = F_.mul(C_[u][v], F_.mul(xip[v], moment(e * (k - u) + u - v, u)));
                            inner = ((u - v) % 2 == 0) ? F_.add(inner, t) : F_.sub(inner, t);
                        }
                        acc = F_.add(acc, F_.mul(ybin, inner));
                    }
                    q[k - 1] = acc;
                }
                evals[b] = esym_from_power_sums(ring_, q, m)[m];
            }
            FpPoly ypoly = pinterpolate_scalar_nodes(ring_, ynodes, evals);
            slice[a] = (m - 1) < ypoly.c.size() ? ypoly.c[m - 1] : 0;
        }
        out = pinterpolate_scalar_nodes(ring_, xnodes, slice);
        return pscale(ring_, out, sign_pow(F_, extra_sign_exp + m * (m - 1) / 2));
    }

   private:
    u64 moment(std::size_t c, std::size_t u) {
        auto& row = moments_[u];
        auto it = row.find(c);
        if (it != row.end()) return it->second;
        u64 acc = 0;
        const FpPoly& wp = wu_[u];
        for (std::size_t j = 0; j < wp.c.size(); ++j) acc = F_.add(acc, F_.mul(wp.c[j], P_[j + c]));
        row.emplace(c, acc);
        return acc;
    }

    const FieldCtx& F_;
    FpRing ring_;
    std::size_t m_, N_;
    std::vector<u64> P_;
    std::vector<FpPoly> wu_;
    std::vector<std::vector<u64>> C_;
    std::vector<std::unordered_map<std::size_t, u64>> moments_;
};

}  // namespace

Matrix sylvester_matrix(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("sylvester_matrix");
    if (f.deg() < 1 || g.deg() < 1) throw ZeroPolynomial("sylvester_matrix needs degrees >= 1");
    const std::size_t n = f.deg(), m = g.deg();
    Matrix S(n + m, n + m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i <= n; ++i) S.at(i + j, j) = f.c[n - i];
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= m; ++i) S.at(i + j, m + j) = g.c[m - i];
    (void)F;
    return S;
}

u64 resultant(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero()) throw ZeroPolynomial("resultant: f = 0");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("resultant expects monic f");
    const std::size_t n = f.deg();
    F.guard_newton(n);
    if (n == 0) return 1;
    if (g.is_zero()) return 0;
    return esym_over_roots(F, f, g, n);
}

u64 discriminant(const FieldCtx& F, const FpPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("discriminant");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("discriminant expects a monic polynomial");
    const std::size_t n = f.deg();
    F.guard_newton(n);
    if (n <= 1) return 1;
    u64 r = resultant(F, f, poly_derivative(F, f, 1));
    return F.mul(sign_pow(F, n * (n - 1) / 2), r);
}

FpPoly remainder(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial("remainder by 0");
    FpRing ring(F);
    if (!pis_monic(ring, g)) throw NotMonic("remainder expects a monic divisor");
    const std::size_t m = g.deg();
    u64 dmax = std::max<u64>(m, f.is_zero() ? 0 : f.deg());
    F.guard_newton(dmax);
    if (m == 0) return {};
    if (f.is_zero() || f.deg() < m) return f;

    u64 disc = discriminant(F, g);
    if (disc == 0) return syndiv_remainder(F, f, g);

    // rho(x) = (-1)^(m choose 2) [y^(m-1)] prod_i (f(beta_i) + y (x - beta_i) g'(beta_i))
    FpPoly gp = poly_derivative(F, g, 1);
    ParamPoly h = ParamPoly::make(std::max(f.c.size(), gp.c.size() + 1), 1, 1);
    for (std::size_t i = 0; i < f.c.size(); ++i) h.at(i, 0, 0) = f.c[i];
    for (std::size_t i = 0; i < gp.c.size(); ++i) {
        h.at(i, 1, 1) = F.add(h.at(i, 1, 1), gp.c[i]);
        h.at(i + 1, 0, 1) = F.sub(h.at(i + 1, 0, 1), gp.c[i]);
    }
    ParamValue prod = esym_over_roots_param(F, g, h, m);
    FpPoly rho;
    rho.c.assign(m, 0);
    for (std::size_t a = 0; a < m && a <= prod.du; ++a) rho.c[a] = (m - 1 <= prod.dv) ? prod.at(a, m - 1) : 0;
    ptrim(ring, rho);
    u64 scale = F.mul(sign_pow(F, m * (m - 1) / 2), F.inv(disc));
    return pscale(ring, rho, scale);
}

QuotRem div_rem(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    QuotRem out;
    out.r = remainder(F, f, g);
    if (f.is_zero() || g.deg() > f.deg()) {
        out.q = {};
        return out;
    }
    FpRing ring(F);
    FpPoly num = poly_sub(F, f, out.r);
    if (num.is_zero()) {
        out.q = {};
        return out;
    }
    auto [numm, lc] = make_monic(F, num);
    out.q = pscale(ring, exact_div_core(ring, numm, g, /*verify=*/true), lc);
    return out;
}

Matrix sylvester_adjugate(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("sylvester_adjugate");
    FpRing ring(F);
    if (!pis_monic(ring, f) || !pis_monic(ring, g)) throw NotMonic("sylvester_adjugate expects monic operands");
    const std::size_t n = f.deg(), m = g.deg();
    if (n < 1 || m < 1) throw ZeroPolynomial("sylvester_adjugate needs degrees >= 1");
    F.guard_newton(n + m);
    const std::size_t N = n + m;

    u64 disc_f = discriminant(F, f), disc_g = discriminant(F, g);
    if (disc_f != 0 && disc_g != 0) {
        Matrix adj(N, N);
        u64 invdg = F.inv(disc_g), invdf = F.inv(disc_f);
        ColumnEngine eng_a(F, g, f);  // a-side interpolates over the roots of g
        ColumnEngine eng_b(F, f, g);  // b-side: roles swapped; the sign picks
                                      // up res(g,f) = (-1)^{nm} res(f,g)
        for (std::size_t ell = 1; ell <= N; ++ell) {
            FpPoly a = pscale(ring, eng_a.ahat(N - ell, n * m), invdg);
            FpPoly b = pscale(ring, eng_b.ahat(N - ell, 0), invdf);
            for (std::size_t j = 0; j < m; ++j) adj.at(j, ell - 1) = (m - 1 - j) < a.c.size() ? a.c[m - 1 - j] : 0;
            for (std::size_t j = 0; j < n; ++j) adj.at(m + j, ell - 1) = (n - 1 - j) < b.c.size() ? b.c[n - 1 - j] : 0;
        }
        return adj;
    }

    u64 res = resultant(F, f, g);
    Matrix S = sylvester_matrix(F, f, g);
    if (res != 0) {
        auto inv = ge_inverse(F, S);
        return mat_scale(F, *inv, res);
    }
    return cofactor_adjugate(F, S);
}

Matrix sylvester_inverse(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    u64 res = resultant(F, f, g);
    if (res == 0) throw SingularMatrix("res(f, g) = 0");
    Matrix adj = sylvester_adjugate(F, f, g);
    return mat_scale(F, adj, F.inv(res));
}

CoprimeBezout bezout_coeffs_coprime(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("bezout_coeffs_coprime");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("bezout_coeffs_coprime expects monic f");
    const std::size_t n = f.deg();
    CoprimeBezout out;
    if (g.deg() == 0) {  // b = 1/g, a = 0
        out.a = {};
        out.b = pconst(ring, F.inv(g.c[0]));
        return out;
    }
    if (n == 0) {  // f = 1
        out.a = pone(ring);
        out.b = {};
        return out;
    }
    auto [gm, glc] = make_monic(F, g);
    F.guard_newton(n + gm.deg());
    u64 res = resultant(F, f, gm);
    if (res == 0) throw NotCoprime("res(f, g) = 0");
    const std::size_t m = gm.deg();
    const std::size_t N = n + m;

    u64 disc_f = discriminant(F, f), disc_g = discriminant(F, gm);
    FpPoly a, b;
    if (disc_f != 0 && disc_g != 0) {
        ColumnEngine eng_a(F, gm, f), eng_b(F, f, gm);
        a = pscale(ring, eng_a.ahat(0, n * m), F.inv(F.mul(disc_g, res)));
        b = pscale(ring, eng_b.ahat(0, 0), F.inv(F.mul(disc_f, res)));
    } else {
        Matrix S = sylvester_matrix(F, f, gm);
        auto inv = ge_inverse(F, S);
        if (!inv) throw NotCoprime("Sylvester matrix is singular");
        a.c.assign(m, 0);
        b.c.assign(n, 0);
        for (std::size_t j = 0; j < m; ++j) a.c[m - 1 - j] = inv->at(j, N - 1);
        for (std::size_t j = 0; j < n; ++j) b.c[n - 1 - j] = inv->at(m + j, N - 1);
        ptrim(ring, a);
        ptrim(ring, b);
    }
    out.a = a;
    out.b = pscale(ring, b, F.inv(glc));  // undo the monic normalization of g
    return out;
}

Matrix bezout_matrix(const FieldCtx& F, const FpPoly& f, const FpPoly& g, std::size_t n) {
    if (n < 1) throw DegreeTooHigh("bezout order must be >= 1");
    auto degof = [](const FpPoly& h) { return h.is_zero() ? std::size_t(0) : h.deg(); };
    if (degof(f) > n || degof(g) > n) throw DegreeTooHigh("degree exceeds the declared order");
    F.char_guard(2 * n);
    FpRing ring(F);
    // evaluate (f(x)g(y) - f(y)g(x)) / (x - y) on disjoint grids
    std::vector<u64> xn(n), yn(n);
    for (std::size_t i = 0; i < n; ++i) {
        xn[i] = i;
        yn[i] = n + i;
    }
    std::vector<std::vector<u64>> vals(n, std::vector<u64>(n));
    std::vector<u64> fx(n), gx(n), fy(n), gy(n);
    for (std::size_t i = 0; i < n; ++i) {
        fx[i] = peval(ring, f, xn[i]);
        gx[i] = peval(ring, g, xn[i]);
        fy[i] = peval(ring, f, yn[i]);
        gy[i] = peval(ring, g, yn[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            u64 num = F.sub(F.mul(fx[i], gy[j]), F.mul(fy[j], gx[i]));
            vals[i][j] = F.div(num, F.sub(xn[i], yn[j]));
        }
    // bivariate interpolation, y rows then x columns
    std::vector<std::vector<u64>> rows(n, std::vector<u64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        FpPoly row = pinterpolate_scalar_nodes(ring, yn, vals[i]);
        for (std::size_t b = 0; b < row.c.size(); ++b) rows[i][b] = row.c[b];
    }
    Matrix B(n, n);
    std::vector<u64> col(n);
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < n; ++i) col[i] = rows[i][b];
        FpPoly cp = pinterpolate_scalar_nodes(ring, xn, col);
        for (std::size_t a = 0; a < cp.c.size(); ++a) B.at(a, b) = cp.c[a];
    }
    return B;
}

Matrix bezout_inverse(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("bezout_inverse");
    FpRing ring(F);
    if (!pis_monic(ring, f)) throw NotMonic("bezout_inverse expects monic f");
    const std::size_t n = f.deg();
    if (n < 1) throw DegreeTooHigh("bezout_inverse needs deg f >= 1");
    if (!g.is_zero() && g.deg() > n) throw DegreeTooHigh("deg g exceeds deg f");
    F.guard_newton(2 * n);
    u64 res = resultant(F, f, g);
    if (res == 0) throw SingularMatrix("res(f, g) = 0");
    // p with p g = 1 (mod f), deg p < n
    FpPoly p = bezout_coeffs_coprime(F, f, g).b;
    // h = (x^n p(1/x)) / (x^n f(1/x)) as a power series to degree 2n-1
    FpPoly num;
    num.c.assign(n + 1, 0);
    for (std::size_t i = 0; i < p.c.size(); ++i) num.c[n - i] = p.c[i];
    ptrim(ring, num);
    FpPoly den = prev_at(ring, f, n);  // constant term 1
    FpPoly dtail = den;
    dtail.c[0] = 0;
    ptrim(ring, dtail);
    const std::size_t L = 2 * n;
    FpPoly inv_den = pone(ring), pw = pone(ring);
    for (std::size_t k = 1; k < L; ++k) {
        pw = pmul_trunc(ring, pw, dtail, L);
        if (pw.is_zero()) break;
        if (k % 2 == 1)
            inv_den = psub(ring, inv_den, pw);
        else
            inv_den = padd(ring, inv_den, pw);
    }
    FpPoly h = pmul_trunc(ring, num, inv_den, L);
    auto hc = [&](std::size_t i) { return i < h.c.size() ? h.c[i] : 0; };
    Matrix B(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) B.at(i, j) = hc(i + j + 1);
    return B;
}

Matrix toeplitz_inverse(const FieldCtx& F, const Matrix& A) {
    if (A.rows != A.cols || A.rows == 0) throw SingularMatrix("toeplitz_inverse: bad shape");
    const std::size_t n = A.rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            u64 expect = (j >= i) ? A.at(0, j - i) : 0;
            if (A.at(i, j) != expect) throw ParseError("not an upper-triangular Toeplitz matrix");
        }
    if (A.at(0, 0) == 0) throw SingularMatrix("zero diagonal");
    F.guard_newton(2 * n);
    FpPoly f;
    f.c.assign(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) f.c[j] = A.at(0, j);
    f.c[n] = 1;
    FpPoly xn;
    xn.c.assign(n + 1, 0);
    xn.c[n] = 1;
    Matrix Sinv = sylvester_inverse(F, f, xn);
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = Sinv.at(i, n + j);
    return out;
}

FpPoly composed(const FieldCtx& F, const FpPoly& f, const FpPoly& g, ComposeMode mode) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("composed");
    FpRing ring(F);
    if (!pis_monic(ring, f) || !pis_monic(ring, g)) throw NotMonic("composed expects monic operands");
    const std::size_t n = f.deg(), m = g.deg();
    if (n == 0 || m == 0) return pone(ring);
    F.char_guard(u64(n) * u64(m));
    const std::size_t D = n * m;
    std::vector<std::pair<u64, u64>> pairs(D + 1);
    for (u64 xi = 0; xi <= D; ++xi) {
        FpPoly h;
        if (mode == ComposeMode::Sum) {
            // h(y) = g(xi - y), built by Horner in (xi - y)
            FpPoly lin = poly_from_ints(F, {i64(0), -1});
            lin.c[0] = xi;
            h = {};
            for (std::size_t j = g.c.size(); j-- > 0;) {
                h = poly_mul(F, h, lin);
                h = padd(ring, h, pconst(ring, g.c[j]));
            }
        } else {
            // h(y) = y^m g(xi / y) = sum_j g_j xi^j y^(m-j)
            h.c.assign(m + 1, 0);
            u64 xp = 1;
            for (std::size_t j = 0; j <= m; ++j) {
                h.c[m - j] = F.mul(g.c[j], xp);
                xp = F.mul(xp, xi);
            }
            ptrim(ring, h);
        }
        pairs[xi] = {xi, h.is_zero() ? (n ? 0 : 1) : esym_over_roots(F, f, h, n)};
    }
    return interpolate_coeffs(F, pairs);
}

Bivar implicitize(const FieldCtx& F, const FpPoly& f, const FpPoly& g, const FpPoly& h) {
    if (h.is_zero()) throw ZeroPolynomial("implicitize: h = 0");
    FpRing ring(F);
    auto degof = [](const FpPoly& q) { return q.is_zero() ? std::size_t(0) : q.deg(); };
    const std::size_t da = std::max(degof(f), h.deg());
    const std::size_t db = std::max(degof(g), h.deg());
    if (da == 0 || db == 0) throw DegenerateParameterization("constant parameterization");
    F.char_guard(u64(std::max(da, db)) * 4 + 4);

    auto coeff_at = [](const FpPoly& q, std::size_t i) { return i < q.c.size() ? q.c[i] : 0; };
    // A(t) = x h(t) - f(t): leading t-coefficient is linear in x; pick grid
    // nodes that keep the declared degree exact.
    auto pick_nodes = [&](std::size_t count, u64 hc, u64 fc) {
        std::vector<u64> nodes;
        for (u64 v = 0; nodes.size() < count; ++v) {
            if (v >= F.p()) throw FieldTooSmall("implicitize grid");
            if (F.sub(F.mul(v, hc), fc) != 0) nodes.push_back(v);
        }
        return nodes;
    };
    std::vector<u64> xnodes = pick_nodes(db + 1, coeff_at(h, da), coeff_at(f, da));
    std::vector<u64> ynodes = pick_nodes(da + 1, coeff_at(h, db), coeff_at(g, db));

    std::vector<std::vector<u64>> vals(db + 1, std::vector<u64>(da + 1));
    for (std::size_t a = 0; a <= db; ++a) {
        // A = x h - f at x = xnodes[a], degree exactly da
        FpPoly A;
        A.c.assign(da + 1, 0);
        for (std::size_t i = 0; i <= da; ++i) A.c[i] = F.sub(F.mul(xnodes[a], coeff_at(h, i)), coeff_at(f, i));
        ptrim(ring, A);
        auto [Am, Alc] = make_monic(F, A);
        u64 lcpow = F.pow(Alc, db);
        for (std::size_t b = 0; b <= da; ++b) {
            FpPoly B;
            B.c.assign(db + 1, 0);
            for (std::size_t i = 0; i <= db; ++i) B.c[i] = F.sub(F.mul(ynodes[b], coeff_at(h, i)), coeff_at(g, i));
            ptrim(ring, B);
            u64 r = B.is_zero() ? 0 : esym_over_roots(F, Am, B, da);
            vals[a][b] = F.mul(lcpow, r);
        }
    }
    // interpolate y rows then x columns
    Bivar out;
    out.dx = db;
    out.dy = da;
    out.t.assign((db + 1) * (da + 1), 0);
    std::vector<std::vector<u64>> rows(db + 1, std::vector<u64>(da + 1, 0));
    for (std::size_t a = 0; a <= db; ++a) {
        FpPoly row = pinterpolate_scalar_nodes(ring, ynodes, vals[a]);
        for (std::size_t b = 0; b < row.c.size(); ++b) rows[a][b] = row.c[b];
    }
    for (std::size_t b = 0; b <= da; ++b) {
        std::vector<u64> col(db + 1);
        for (std::size_t a = 0; a <= db; ++a) col[a] = rows[a][b];
        FpPoly cp = pinterpolate_scalar_nodes(ring, xnodes, col);
        for (std::size_t a = 0; a < cp.c.size(); ++a) out.at(a, b) = cp.c[a];
    }
    // normalize by the lexicographically-last nonzero coefficient
    u64 lead = 0;
    for (std::size_t a = out.dx + 1; a-- > 0 && !lead;)
        for (std::size_t b = out.dy + 1; b-- > 0;)
            if (out.at(a, b)) {
                lead = out.at(a, b);
                break;
            }
    if (!lead) throw DegenerateParameterization("resultant vanishes identically");
    u64 li = F.inv(lead);
    for (auto& v : out.t) v = F.mul(v, li);
    return out;
}

}  // namespace polyac
