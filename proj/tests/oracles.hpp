// Copyright 2026 The povmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Hand-entered reference data shared by the unit tests and the acceptance
// binary. Nothing here calls the library's generators.

#include <array>
#include <cmath>
#include <complex>

#include "povm/herm.hpp"

namespace povm::oracle {

/// The conventional d = 3 Gell-Mann matrices g1..g8 (HS-normalized),
/// typed in entry by entry.
inline std::array<CMatrix, 8> gell_mann_d3() {
    const Complex i(0.0, 1.0);
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    std::array<CMatrix, 8> g;
    for (auto& m : g) m = CMatrix::Zero(3, 3);
    g[0](0, 1) = s2;      g[0](1, 0) = s2;
    g[1](0, 1) = -i * s2; g[1](1, 0) = i * s2;
    g[2](0, 0) = s2;      g[2](1, 1) = -s2;
    g[3](0, 2) = s2;      g[3](2, 0) = s2;
    g[4](0, 2) = -i * s2; g[4](2, 0) = i * s2;
    g[5](1, 2) = s2;      g[5](2, 1) = s2;
    g[6](1, 2) = -i * s2; g[6](2, 1) = i * s2;
    g[7](0, 0) = s6;      g[7](1, 1) = s6;      g[7](2, 2) = -2.0 * s6;
    return g;
}

inline CMatrix sigma(int k) {
    const Complex i(0.0, 1.0);
    CMatrix m = CMatrix::Zero(2, 2);
    switch (k) {
        case 0: m(0, 0) = 1; m(1, 1) = 1; break;
        case 1: m(0, 1) = 1; m(1, 0) = 1; break;
        case 2: m(0, 1) = -i; m(1, 0) = i; break;
        default: m(0, 0) = 1; m(1, 1) = -1; break;
    }
    return m;
}

/// Unit Bloch vectors of a regular tetrahedron.
inline std::array<std::array<double, 3>, 4> tetrahedron() {
    const double s = 1.0 / std::sqrt(3.0);
    return {{{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}}};
}

/// (I + n.sigma)/4 for each tetrahedron vertex.
inline std::array<CMatrix, 4> sic_qubit_elements() {
    std::array<CMatrix, 4> out;
    const auto t = tetrahedron();
    for (int a = 0; a < 4; ++a) {
        CMatrix m = sigma(0);
        for (int k = 0; k < 3; ++k) m += t[a][k] * sigma(k + 1);
        out[a] = m / 4.0;
    }
    return out;
}

/// Eigenvalues of I/3 + v g8: 1/3 + v/sqrt(6) (twice) and 1/3 - 2v/sqrt(6).
/// The PSD boundary is at v = 1/sqrt(6) going up and v = -sqrt(2/3) going down.
inline double g8_boundary_plus() { return 1.0 / std::sqrt(6.0); }
inline double g8_boundary_minus() { return std::sqrt(2.0 / 3.0); }

}  // namespace povm::oracle
