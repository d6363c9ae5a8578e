// Copyright 2026 The stegoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense-matrix reference used by the tests. Deliberately naive: operators are
// built letter by letter with Kronecker products, qubit 1 as the leftmost factor.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;

struct Dense {
    std::size_t dim = 1;
    std::vector<C> m{C(1.0)};

    C &at(std::size_t r, std::size_t c) { return m[r * dim + c]; }
    C at(std::size_t r, std::size_t c) const { return m[r * dim + c]; }
};

inline Dense letter_matrix(char l) {
    Dense d;
    d.dim = 2;
    const C i(0.0, 1.0);
    switch (l) {
    case 'I':
        d.m = {1.0, 0.0, 0.0, 1.0};
        break;
    case 'X':
        d.m = {0.0, 1.0, 1.0, 0.0};
        break;
    case 'Y':
        d.m = {0.0, -i, i, 0.0};
        break;
    case 'Z':
        d.m = {1.0, 0.0, 0.0, -1.0};
        break;
    default:
        throw std::invalid_argument("bad letter");
    }
    return d;
}

inline Dense kron(const Dense &a, const Dense &b) {
    Dense out;
    out.dim = a.dim * b.dim;
    out.m.assign(out.dim * out.dim, 0.0);
    for (std::size_t r1 = 0; r1 < a.dim; ++r1)
        for (std::size_t c1 = 0; c1 < a.dim; ++c1)
            for (std::size_t r2 = 0; r2 < b.dim; ++r2)
                for (std::size_t c2 = 0; c2 < b.dim; ++c2)
                    out.at(r1 * b.dim + r2, c1 * b.dim + c2) = a.at(r1, c1) * b.at(r2, c2);
    return out;
}

inline Dense mul(const Dense &a, const Dense &b) {
    Dense out;
    out.dim = a.dim;
    out.m.assign(a.dim * a.dim, 0.0);
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t k = 0; k < a.dim; ++k) {
            const C v = a.at(r, k);
            if (v == C(0.0)) continue;
            for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) += v * b.at(k, c);
        }
    return out;
}

inline Dense scale(Dense a, C s) {
    for (auto &v : a.m) v *= s;
    return a;
}

inline Dense add(Dense a, const Dense &b) {
    for (std::size_t i = 0; i < a.m.size(); ++i) a.m[i] += b.m[i];
    return a;
}

inline Dense identity(std::size_t n) {
    Dense d;
    for (std::size_t q = 0; q < n; ++q) d = kron(d, letter_matrix('I'));
    return d;
}

/// "XZZXI", optionally prefixed by "+", "-", "i", "-i".
inline Dense pauli(const std::string &text) {
    std::size_t pos = 0;
    C phase = 1.0;
    if (text.rfind("-i", 0) == 0) {
        phase = C(0.0, -1.0);
        pos = 2;
    } else if (text.rfind("+i", 0) == 0) {
        phase = C(0.0, 1.0);
        pos = 2;
    } else if (!text.empty() && text[0] == 'i') {
        phase = C(0.0, 1.0);
        pos = 1;
    } else if (!text.empty() && text[0] == '-') {
        phase = -1.0;
        pos = 1;
    } else if (!text.empty() && text[0] == '+') {
        pos = 1;
    }
    Dense d;
    for (; pos < text.size(); ++pos) d = kron(d, letter_matrix(text[pos]));
    return scale(d, phase);
}

inline bool equal(const Dense &a, const Dense &b, double tol = 1e-12) {
    if (a.dim != b.dim) return false;
    for (std::size_t i = 0; i < a.m.size(); ++i)
        if (std::abs(a.m[i] - b.m[i]) > tol) return false;
    return true;
}

/// True iff ab = -ba.
inline bool anticommute(const Dense &a, const Dense &b) {
    return equal(mul(a, b), scale(mul(b, a), -1.0));
}

inline std::vector<C> apply(const Dense &a, const std::vector<C> &v) {
    std::vector<C> out(a.dim, 0.0);
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c) out[r] += a.at(r, c) * v[c];
    return out;
}

inline C inner(const std::vector<C> &a, const std::vector<C> &b) {
    C s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

/// Index of basis string "0110" with the first character as the MSB.
inline std::size_t index_of(const std::string &bits) {
    std::size_t v = 0;
    for (char c : bits) v = (v << 1U) | static_cast<std::size_t>(c == '1');
    return v;
}

} // namespace oracle
