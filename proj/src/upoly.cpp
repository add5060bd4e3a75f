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

#include "polyac/upoly.hpp"

#include <cctype>

namespace polyac {

namespace {
constexpr std::size_t kInterpMulThreshold = 512;
}

FpPoly poly_mul_interp(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::size_t d = f.deg() + g.deg();
    F.char_guard(d);  // nodes 0..d must be distinct
    std::vector<std::pair<u64, u64>> pairs(d + 1);
    FpRing ring(F);
    for (u64 t = 0; t <= d; ++t) pairs[t] = {t, F.mul(peval(ring, f, t), peval(ring, g, t))};
    return interpolate_coeffs(F, pairs);
}

FpPoly poly_mul(const FieldCtx& F, const FpPoly& f, const FpPoly& g) {
    if (!f.is_zero() && !g.is_zero()) {
        std::size_t d = f.deg() + g.deg();
        if (std::min(f.c.size(), g.c.size()) > kInterpMulThreshold && F.p() > d) return poly_mul_interp(F, f, g);
    }
    return pmul_schoolbook(FpRing(F), f, g);
}

FpPoly interpolate_coeffs(const FieldCtx& F, const std::vector<std::pair<u64, u64>>& pairs) {
    if (pairs.empty()) throw ParseError("interpolate_coeffs: no pairs");
    std::vector<u64> nodes(pairs.size()), values(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        nodes[i] = pairs[i].first % F.p();
        values[i] = pairs[i].second % F.p();
        for (std::size_t j = 0; j < i; ++j)
            if (nodes[j] == nodes[i]) throw DuplicateNode("repeated interpolation point");
    }
    return pinterpolate_scalar_nodes(FpRing(F), nodes, values);
}

u64 leading_coeff_select(const FieldCtx& F, const std::vector<u64>& coeffs_high_to_low) {
    for (u64 c : coeffs_high_to_low)
        if (c % F.p() != 0) return c % F.p();
    return 0;
}

u64 esym_values(const FieldCtx& F, const std::vector<u64>& values, std::size_t d) {
    const std::size_t n = values.size();
    if (d == 0) return 1;
    if (d > n) return 0;
    F.char_guard(n);
    // prod(1 + t v_i) evaluated at t = 0..n, then read off the degree-d
    // coefficient. Ben-Or's method, not the naive subset sum.
    std::vector<std::pair<u64, u64>> pairs(n + 1);
    for (u64 t = 0; t <= n; ++t) {
        u64 prod = 1;
        for (u64 v : values) prod = F.mul(prod, F.add(1, F.mul(t, v % F.p())));
        pairs[t] = {t, prod};
    }
    FpPoly e = interpolate_coeffs(F, pairs);
    return d < e.c.size() ? e.c[d] : 0;
}

// --------------------------- text format ----------------------------------

namespace {

struct ExprParser {
    const FieldCtx& F;
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }

    u64 integer() {
        skip();
        if (!peek_digit()) throw ParseError("expected integer at position " + std::to_string(i));
        u64 acc = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            acc = acc * 10 + u64(s[i] - '0');
            if (acc >= (u64(1) << 62)) acc %= F.p();
            ++i;
        }
        return acc % F.p();
    }

    bool factor(u64& coeff, std::size_t& power) {
        skip();
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            std::size_t e = 1;
            if (eat('^')) e = std::size_t(integer());
            power += e;
            return true;
        }
        if (peek_digit()) {
            coeff = F.mul(coeff, integer());
            return true;
        }
        return false;
    }

    // term := factor ('*'? factor)*  (juxtaposition "3x" allowed)
    std::pair<u64, std::size_t> term() {
        u64 coeff = 1;
        std::size_t power = 0;
        if (!factor(coeff, power)) throw ParseError("expected term at position " + std::to_string(i));
        for (;;) {
            if (eat('*')) {
                if (!factor(coeff, power)) throw ParseError("expected factor after '*'");
                continue;
            }
            skip();
            if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
                factor(coeff, power);
                continue;
            }
            break;
        }
        return {coeff, power};
    }

    FpPoly parse() {
        FpPoly out;
        FpRing ring(F);
        bool neg = eat('-');
        if (!neg) (void)eat('+');
        for (;;) {
            auto [coeff, power] = term();
            if (neg) coeff = F.neg(coeff);
            if (out.c.size() < power + 1) out.c.resize(power + 1, 0);
            out.c[power] = F.add(out.c[power], coeff);
            skip();
            if (i >= s.size()) break;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                throw ParseError("unexpected character at position " + std::to_string(i));
        }
        ptrim(ring, out);
        return out;
    }
};

}  // namespace

FpPoly parse_poly(const FieldCtx& F, const std::string& text) {
    if (text.find(',') != std::string::npos ||
        text.find_first_not_of("0123456789- \t") == std::string::npos) {
        // ascending comma list
        std::vector<i64> a;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            std::size_t b = tok.find_first_not_of(" \t");
            if (b == std::string::npos) throw ParseError("empty coefficient");
            std::size_t e = tok.find_last_not_of(" \t");
            tok = tok.substr(b, e - b + 1);
            try {
                a.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw ParseError("bad coefficient '" + tok + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return poly_from_ints(F, a);
    }
    ExprParser p{F, text};
    return p.parse();
}

std::string print_poly(const FieldCtx& F, const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t k = f.c.size(); k-- > 0;) {
        u64 c = f.c[k];
        if (c == 0) continue;
        i64 b = F.balanced(c);
        bool negative = b < 0;
        u64 mag = negative ? u64(-b) : u64(b);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (k == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) {
                out += std::to_string(mag);
                out += "*";
            }
            out += "x";
            if (k > 1) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

}  // namespace polyac
