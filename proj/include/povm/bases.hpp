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

// Orthonormal hermitian operator bases {G_1, ..., G_{d^2}} with
// G_1 = I/sqrt(d) and every other element traceless.
//
// Basis indices are 1-based throughout the public API so that partition
// files and reports use the same numbering as the documented orderings.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "povm/herm.hpp"

namespace povm {

struct OperatorBasis {
    int dim = 0;
    std::vector<HermitianOperator> elements;

    /// 1-based access; index 1 is the identity element.
    const HermitianOperator& at(int index) const {
        if (index < 1 || index > static_cast<int>(elements.size())) {
            throw IndexError("basis index " + std::to_string(index) + " out of range 1.." +
                             std::to_string(elements.size()));
        }
        return elements[static_cast<std::size_t>(index - 1)];
    }

    int size() const { return static_cast<int>(elements.size()); }
};

/// Generalized Gell-Mann basis, HS-normalized.
///
/// Ordering (1-based):
///   1                      I/sqrt(d)
///   next (d^2-d)/2         symmetric    (E_jk + E_kj)/sqrt(2),      j<k lexicographic
///   next (d^2-d)/2         antisymmetric (-i E_jk + i E_kj)/sqrt(2), j<k lexicographic
///   last d-1               diagonal     (sum_{j<l} E_jj - l E_ll)/sqrt(l(l+1)), l = 1..d-1
///
/// For d = 2 this gives sigma_1, sigma_2, sigma_3 (each over sqrt(2)) in that order.
inline OperatorBasis gell_mann_basis(int d) {
    if (d < 2) throw DomainError("gell_mann_basis: d must be >= 2, got " + std::to_string(d));
    OperatorBasis b;
    b.dim = d;
    b.elements.reserve(static_cast<std::size_t>(d * d));
    b.elements.push_back(HermitianOperator(CMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d))));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            CMatrix m = CMatrix::Zero(d, d);
            m(j, k) = inv_sqrt2;
            m(k, j) = inv_sqrt2;
            b.elements.emplace_back(std::move(m));
        }
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            CMatrix m = CMatrix::Zero(d, d);
            m(j, k) = Complex(0.0, -inv_sqrt2);
            m(k, j) = Complex(0.0, inv_sqrt2);
            b.elements.emplace_back(std::move(m));
        }
    }
    for (int l = 1; l < d; ++l) {
        CMatrix m = CMatrix::Zero(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) m(j, j) = norm;
        m(l, l) = -l * norm;
        b.elements.emplace_back(std::move(m));
    }
    return b;
}

/// Maps the conventional Gell-Mann labels lambda_1 .. lambda_{d^2-1}
/// (for d = 3 the familiar g_1 .. g_8) to positions in gell_mann_basis(d).
///
/// The conventional order walks columns k = 2..d and lists, for each row
/// j < k, the symmetric then antisymmetric (j,k) element, followed by the
/// diagonal element that first involves row k. Entry [label - 1] holds the
/// 1-based basis position.
inline std::vector<int> gell_mann_label_positions(int d) {
    if (d < 2) throw DomainError("gell_mann_label_positions: d must be >= 2");
    std::map<std::pair<int, int>, int> pair_rank;
    int rank = 0;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) pair_rank[{j, k}] = rank++;
    const int pairs = d * (d - 1) / 2;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(d * d - 1));
    for (int k = 1; k < d; ++k) {
        for (int j = 0; j < k; ++j) {
            const int r = pair_rank.at({j, k});
            out.push_back(2 + r);
            out.push_back(2 + pairs + r);
        }
        out.push_back(2 + 2 * pairs + (k - 1));
    }
    return out;
}

/// sigma_0 .. sigma_3.
inline CMatrix pauli_matrix(int i) {
    CMatrix m = CMatrix::Zero(2, 2);
    switch (i) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw DomainError("pauli index must be in 0..3, got " + std::to_string(i));
    }
    return m;
}

/// sigma_{i_1} (x) ... (x) sigma_{i_k}, unnormalized.
inline CMatrix pauli_string(const std::vector<int>& indices) {
    if (indices.empty()) throw DomainError("pauli_string needs at least one factor");
    CMatrix m = pauli_matrix(indices.front());
    for (std::size_t j = 1; j < indices.size(); ++j) m = kron(m, pauli_matrix(indices[j]));
    return m;
}

/// The base-4 digits of `code`, most significant first, as a k-tuple.
inline std::vector<int> pauli_tuple(long code, int k) {
    std::vector<int> t(static_cast<std::size_t>(k));
    for (int j = k - 1; j >= 0; --j) {
        t[static_cast<std::size_t>(j)] = static_cast<int>(code % 4);
        code /= 4;
    }
    return t;
}

/// The 4^k operators sigma_{i_1} (x) ... (x) sigma_{i_k} / sqrt(2^k), in
/// lexicographic order of (i_1, ..., i_k) with i_1 most significant, so the
/// all-zero tuple (the identity) sits at position 1.
inline OperatorBasis pauli_tensor_basis(int k) {
    if (k < 1) throw DomainError("pauli_tensor_basis: k must be >= 1, got " + std::to_string(k));
    if (k > 6) throw DomainError("pauli_tensor_basis: k > 6 exceeds the dense-matrix size limit");
    const int d = 1 << k;
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    OperatorBasis b;
    b.dim = d;
    const long count = static_cast<long>(d) * d;
    b.elements.reserve(static_cast<std::size_t>(count));
    for (long code = 0; code < count; ++code) {
        b.elements.emplace_back(pauli_string(pauli_tuple(code, k)) * norm);
    }
    return b;
}

struct BasisReport {
    double orthonormality_residual = 0.0;  // max |Tr{G_mu G_nu} - delta_mu_nu|
    double trace_residual = 0.0;           // max |Tr{G_mu}|, mu >= 2
    double identity_residual = 0.0;        // max entrywise |G_1 - I/sqrt(d)|
    double tolerance = 0.0;
    bool passed = false;
};

inline RMatrix gram_matrix(const std::vector<HermitianOperator>& ops) {
    const auto n = static_cast<Eigen::Index>(ops.size());
    RMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            g(i, j) = hs_inner(ops[static_cast<std::size_t>(i)], ops[static_cast<std::size_t>(j)]);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

inline BasisReport verify_basis(const OperatorBasis& b, double tol = 1e-10) {
    const int d = b.dim;
    if (d < 2 || b.size() != d * d) {
        throw StructureError("basis for d=" + std::to_string(d) + " needs " + std::to_string(d * d) +
                             " elements, got " + std::to_string(b.size()));
    }
    for (const auto& e : b.elements) {
        if (e.dim() != d) throw StructureError("basis element has dimension " + std::to_string(e.dim()));
    }
    BasisReport r;
    r.tolerance = tol;
    const RMatrix g = gram_matrix(b.elements);
    r.orthonormality_residual = (g - RMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
    for (int mu = 2; mu <= b.size(); ++mu) {
        r.trace_residual = std::max(r.trace_residual, std::abs(b.at(mu).matrix().trace()));
    }
    r.identity_residual =
        max_abs_diff(b.at(1).matrix(), CMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
    r.passed = r.orthonormality_residual <= tol && r.trace_residual <= tol && r.identity_residual <= tol;
    return r;
}

/// Applies an orthogonal transformation to the traceless part of a basis:
/// G'_mu = sum_nu O(mu-2, nu-2) G_nu for mu, nu >= 2. G_1 is unchanged.
inline OperatorBasis rotate_traceless(const OperatorBasis& b, const RMatrix& o) {
    const int n = b.size() - 1;
    if (o.rows() != n || o.cols() != n) {
        throw DimensionError("rotation must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    OperatorBasis out;
    out.dim = b.dim;
    out.elements.reserve(b.elements.size());
    out.elements.push_back(b.elements.front());
    for (int mu = 0; mu < n; ++mu) {
        CMatrix m = CMatrix::Zero(b.dim, b.dim);
        for (int nu = 0; nu < n; ++nu) m += o(mu, nu) * b.elements[static_cast<std::size_t>(nu + 1)].matrix();
        out.elements.emplace_back(std::move(m));
    }
    return out;
}

/// N disjoint ordered blocks of M-1 traceless basis indices (1-based, >= 2).
/// The order inside a block fixes which simplex coordinate maps to which
/// basis element.
struct Partition {
    int dim = 0;
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

/// Validates (or, without explicit blocks, builds) a partition.
///
/// The default packs consecutive indices: {2..M}, {M+1..2M-1}, ...
inline Partition make_partition(int d, int n_povms, int m_outcomes,
                                std::optional<std::vector<std::vector<int>>> blocks = std::nullopt) {
    if (d < 2 || n_povms < 1 || m_outcomes < 2) {
        throw PartitionError("partition needs d >= 2, N >= 1, M >= 2");
    }
    const long needed = static_cast<long>(n_povms) * (m_outcomes - 1);
    const long available = static_cast<long>(d) * d - 1;
    if (needed > available) {
        throw PartitionError("N(M-1) = " + std::to_string(needed) + " exceeds d^2-1 = " + std::to_string(available));
    }
    Partition p;
    p.dim = d;
    if (!blocks) {
        int next = 2;
        for (int a = 0; a < n_povms; ++a) {
            std::vector<int> blk;
            for (int j = 0; j < m_outcomes - 1; ++j) blk.push_back(next++);
            p.blocks.push_back(std::move(blk));
        }
        return p;
    }
    if (static_cast<int>(blocks->size()) != n_povms) {
        throw PartitionError("expected " + std::to_string(n_povms) + " blocks, got " +
                             std::to_string(blocks->size()));
    }
    std::vector<bool> used(static_cast<std::size_t>(d * d + 1), false);
    for (std::size_t a = 0; a < blocks->size(); ++a) {
        const auto& blk = (*blocks)[a];
        if (static_cast<int>(blk.size()) != m_outcomes - 1) {
            throw PartitionError("block " + std::to_string(a + 1) + " has size " + std::to_string(blk.size()) +
                                 ", expected M-1 = " + std::to_string(m_outcomes - 1));
        }
        for (int idx : blk) {
            if (idx < 2 || idx > d * d) {
                throw PartitionError("index " + std::to_string(idx) + " outside 2.." + std::to_string(d * d));
            }
            if (used[static_cast<std::size_t>(idx)]) {
                throw PartitionError("index " + std::to_string(idx) + " appears in more than one block");
            }
            used[static_cast<std::size_t>(idx)] = true;
        }
    }
    p.blocks = std::move(*blocks);
    return p;
}

/// The d = 3 partition {g1,g8}, {g3,g4}, {g2,g5}, {g6,g7} of the
/// conventional Gell-Mann labels, expressed in gell_mann_basis(3) positions.
inline Partition fig1_partition() {
    const auto pos = gell_mann_label_positions(3);
    auto g = [&](int label) { return pos[static_cast<std::size_t>(label - 1)]; };
    return make_partition(3, 4, 3,
                          std::vector<std::vector<int>>{{g(1), g(8)}, {g(3), g(4)}, {g(2), g(5)}, {g(6), g(7)}});
}

/// Named partition presets. Currently only "fig1" (d = 3, N = 4, M = 3).
inline Partition partition_preset(const std::string& name) {
    if (name == "fig1") return fig1_partition();
    throw PartitionError("unknown partition preset '" + name + "'");
}

}  // namespace povm
