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

// Seeded random matrices for property sweeps. Haar-distributed draws use the
// QR decomposition of a Gaussian matrix with the phase/sign correction of
// the diagonal of R.

#include <random>

#include "povm/herm.hpp"

namespace povm {

using Rng = std::mt19937_64;

inline RMatrix random_orthogonal(int n, Rng& rng) {
    std::normal_distribution<double> gauss;
    RMatrix g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g(i, j) = gauss(rng);
    Eigen::HouseholderQR<RMatrix> qr(g);
    RMatrix q = qr.householderQ();
    const RMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        if (r(j, j) < 0) q.col(j) *= -1.0;
    }
    return q;
}

inline CMatrix random_unitary(int d, Rng& rng) {
    std::normal_distribution<double> gauss;
    CMatrix g(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

/// Random PSD operator g g^dagger with Gaussian g of the given rank.
inline HermitianOperator random_psd(int d, Rng& rng, int rank = -1) {
    if (rank < 0) rank = d;
    std::normal_distribution<double> gauss;
    CMatrix g(d, rank);
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < d; ++i) g(i, j) = Complex(gauss(rng), gauss(rng));
    return HermitianOperator(g * g.adjoint());
}

/// Random density matrix (Ginibre ensemble). Rank 1 gives a pure state.
inline HermitianOperator random_density_matrix(int d, Rng& rng, int rank = -1) {
    HermitianOperator p = random_psd(d, rng, rank);
    return p * (1.0 / p.trace());
}

}  // namespace povm
