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

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "povm/bases.hpp"
#include "povm/random.hpp"

namespace povm {
namespace {

TEST(GellMann, MatchesConventionalD3Matrices) {
    const OperatorBasis b = gell_mann_basis(3);
    const auto g = oracle::gell_mann_d3();
    const auto pos = gell_mann_label_positions(3);
    EXPECT_EQ(pos, (std::vector<int>{2, 5, 8, 3, 6, 4, 7, 9}));
    for (int label = 1; label <= 8; ++label) {
        const CMatrix& got = b.at(pos[static_cast<std::size_t>(label - 1)]).matrix();
        EXPECT_LE(max_abs_diff(got, g[static_cast<std::size_t>(label - 1)]), 1e-15) << "g" << label;
    }
    // symmetric (rows 1,2) sits right after the identity
    EXPECT_LE(max_abs_diff(b.at(2).matrix(), g[0]), 1e-15);
}

TEST(GellMann, QubitIsPauliOverRoot2) {
    const OperatorBasis b = gell_mann_basis(2);
    ASSERT_EQ(b.size(), 4);
    for (int k = 1; k <= 3; ++k) {
        EXPECT_LE(max_abs_diff(b.at(k + 1).matrix(), oracle::sigma(k) / std::sqrt(2.0)), 1e-15);
    }
}

TEST(GellMann, VerifiesForManyDimensions) {
    for (int d = 2; d <= 12; ++d) {
        const OperatorBasis b = gell_mann_basis(d);
        ASSERT_EQ(b.size(), d * d);
        EXPECT_EQ(b.at(1).matrix(), CMatrix::Identity(d, d) / std::sqrt(double(d)));
        const BasisReport r = verify_basis(b, 1e-12);
        EXPECT_TRUE(r.passed) << "d=" << d << " ortho " << r.orthonormality_residual;
    }
    EXPECT_THROW(gell_mann_basis(1), DomainError);
}

TEST(GellMann, GramIsIdentity) {
    const OperatorBasis b = gell_mann_basis(5);
    const RMatrix g = gram_matrix(b.elements);
    EXPECT_LE((g - RMatrix::Identity(25, 25)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Pauli, QubitBasis) {
    const OperatorBasis b = pauli_tensor_basis(1);
    ASSERT_EQ(b.size(), 4);
    for (int k = 0; k < 4; ++k) EXPECT_LE(max_abs_diff(b.at(k + 1).matrix(), oracle::sigma(k) / std::sqrt(2.0)), 1e-15);
}

TEST(Pauli, TwoQubitSpectraAndOrder) {
    const OperatorBasis b = pauli_tensor_basis(2);
    ASSERT_EQ(b.size(), 16);
    // lexicographic: position 1 + 4 i1 + i2 holds sigma_i1 (x) sigma_i2 / 2
    EXPECT_LE(max_abs_diff(b.at(1 + 4 * 1 + 3).matrix(), kron(oracle::sigma(1), oracle::sigma(3)) / 2.0), 1e-15);
    for (int mu = 2; mu <= 16; ++mu) {
        const Spectrum s = eig_spectrum(b.at(mu));
        ASSERT_EQ(s.eigenvalues.size(), 2u) << mu;
        EXPECT_NEAR(s.eigenvalues[0], 0.5, 1e-14);
        EXPECT_NEAR(s.eigenvalues[1], -0.5, 1e-14);
        EXPECT_EQ(s.multiplicities, (std::vector<int>{2, 2}));
    }
}

TEST(Pauli, ScaledInvolutionAllK) {
    for (int k = 1; k <= 4; ++k) {
        const OperatorBasis b = pauli_tensor_basis(k);
        const int d = 1 << k;
        EXPECT_TRUE(verify_basis(b).passed);
        for (int mu = 2; mu <= b.size(); mu += 7) {
            const CMatrix sq = b.at(mu).matrix() * b.at(mu).matrix();
            EXPECT_LE(max_abs_diff(sq, CMatrix::Identity(d, d) / double(d)), 1e-14);
        }
    }
    EXPECT_THROW(pauli_tensor_basis(0), DomainError);
}

TEST(Pauli, TupleDigits) {
    EXPECT_EQ(pauli_tuple(0, 3), (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(pauli_tuple(7, 2), (std::vector<int>{1, 3}));
    EXPECT_EQ(pauli_tuple(63, 3), (std::vector<int>{3, 3, 3}));
}

TEST(VerifyBasis, ScaledElementFails) {
    OperatorBasis b = gell_mann_basis(3);
    b.elements[1] = b.elements[1] * 1.01;
    const BasisReport r = verify_basis(b);
    EXPECT_FALSE(r.passed);
    EXPECT_NEAR(r.orthonormality_residual, 1.01 * 1.01 - 1.0, 1e-12);
}

TEST(VerifyBasis, IdentityReplacedFails) {
    OperatorBasis b = gell_mann_basis(3);
    b.elements[0] = b.at(gell_mann_label_positions(3)[2]);
    const BasisReport r = verify_basis(b);
    EXPECT_FALSE(r.passed);
    EXPECT_GT(r.identity_residual, 0.1);
}

TEST(VerifyBasis, WrongCount) {
    OperatorBasis b = gell_mann_basis(3);
    b.elements.pop_back();
    EXPECT_THROW(verify_basis(b), StructureError);
}

TEST(RotateTraceless, StaysOrthonormal) {
    Rng rng(17);
    const OperatorBasis b = rotate_traceless(gell_mann_basis(4), random_orthogonal(15, rng));
    EXPECT_TRUE(verify_basis(b).passed);
}

TEST(Partition, ExplicitFig1) {
    const auto pos = gell_mann_label_positions(3);
    auto g = [&](int l) { return pos[static_cast<std::size_t>(l - 1)]; };
    const Partition p =
        make_partition(3, 4, 3, std::vector<std::vector<int>>{{g(1), g(8)}, {g(3), g(4)}, {g(2), g(5)}, {g(6), g(7)}});
    EXPECT_EQ(p.blocks, fig1_partition().blocks);
    EXPECT_EQ(partition_preset("fig1").blocks, (std::vector<std::vector<int>>{{2, 9}, {8, 3}, {5, 6}, {4, 7}}));
    EXPECT_THROW(partition_preset("nope"), PartitionError);
}

TEST(Partition, DefaultPacking) {
    const Partition p = make_partition(3, 4, 3);
    EXPECT_EQ(p.blocks, (std::vector<std::vector<int>>{{2, 3}, {4, 5}, {6, 7}, {8, 9}}));
}

TEST(Partition, Errors) {
    EXPECT_THROW(make_partition(2, 4, 2), PartitionError);
    using B = std::vector<std::vector<int>>;
    EXPECT_THROW(make_partition(3, 2, 3, B{{2, 3}, {3, 4}}), PartitionError);   // overlap
    EXPECT_THROW(make_partition(3, 2, 3, B{{2, 3}, {4}}), PartitionError);      // size
    EXPECT_THROW(make_partition(3, 1, 3, B{{1, 3}}), PartitionError);           // identity index
    EXPECT_THROW(make_partition(3, 1, 3, B{{2, 10}}), PartitionError);          // out of range
    EXPECT_THROW(make_partition(3, 2, 3, B{{2, 3}}), PartitionError);           // block count
}

}  // namespace
}  // namespace povm
