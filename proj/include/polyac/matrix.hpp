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

#ifndef POLYAC_MATRIX_HPP
#define POLYAC_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polyac/field.hpp"

namespace polyac {

// Row-major matrix over F_p.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<u64> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    u64& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    u64 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(const FieldCtx&, std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline Matrix mat_mul(const FieldCtx& F, const Matrix& x, const Matrix& y) {
    Matrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            u64 v = x.at(i, k);
            if (!v) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
        }
    return r;
}

inline Matrix mat_scale(const FieldCtx& F, const Matrix& x, u64 s) {
    Matrix r = x;
    for (auto& v : r.a) v = F.mul(v, s);
    return r;
}

// Row-major JSON array-of-arrays (CLI output format), canonical residues.
inline std::string matrix_to_json(const FieldCtx&, const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) s += ",";
            s += std::to_string(m.at(i, j));
        }
        s += "]";
    }
    s += "]";
    return s;
}

}  // namespace polyac

#endif
