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

// Dense hermitian operator algebra: Hilbert-Schmidt geometry, spectra and
// positive-semidefiniteness tests. All functions are pure.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "povm/error.hpp"

namespace povm {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kClusterTol = 1e-8;
inline constexpr double kReconstructionTol = 1e-10;

/// A d x d complex matrix that is hermitian up to kHermiticityTol.
///
/// Construction checks every entry against the conjugate of its transpose and
/// then stores the exact symmetrization (a + a^dagger)/2, so downstream
/// eigensolvers see an exactly hermitian matrix.
class HermitianOperator {
  public:
    HermitianOperator() = default;

    explicit HermitianOperator(CMatrix m, double tol = kHermiticityTol) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) {
            throw StructureError("hermitian operator must be square, got " + std::to_string(m_.rows()) +
                                 "x" + std::to_string(m_.cols()));
        }
        if (m_.rows() < 2) {
            throw DomainError("hermitian operator dimension must be >= 2");
        }
        const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
        if (asym > tol) {
            throw DomainError("matrix is not hermitian: max |a_jk - conj(a_kj)| = " + std::to_string(asym));
        }
        m_ = (m_ + m_.adjoint()).eval() * 0.5;
    }

    static HermitianOperator identity(int d) { return HermitianOperator(CMatrix::Identity(d, d)); }
    static HermitianOperator zero(int d) { return HermitianOperator(CMatrix::Zero(d, d)); }

    static HermitianOperator diagonal(const std::vector<double>& diag) {
        CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(diag.size()), static_cast<Eigen::Index>(diag.size()));
        for (std::size_t j = 0; j < diag.size(); ++j) {
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = diag[j];
        }
        return HermitianOperator(std::move(m));
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const CMatrix& matrix() const { return m_; }
    Complex operator()(int j, int k) const { return m_(j, k); }

    double trace() const { return m_.trace().real(); }

    HermitianOperator& operator+=(const HermitianOperator& o) {
        check_same_dim(o);
        m_ += o.m_;
        return *this;
    }
    HermitianOperator& operator-=(const HermitianOperator& o) {
        check_same_dim(o);
        m_ -= o.m_;
        return *this;
    }
    HermitianOperator& operator*=(double s) {
        m_ *= s;
        return *this;
    }

    friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
    friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
    friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }
    friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }
    friend HermitianOperator operator-(HermitianOperator a) { return a *= -1.0; }

  private:
    void check_same_dim(const HermitianOperator& o) const {
        if (o.dim() != dim()) {
            throw DimensionError("dimension mismatch: " + std::to_string(dim()) + " vs " + std::to_string(o.dim()));
        }
    }

    CMatrix m_;
};

/// Tr{a b}. Real because both operands are hermitian.
inline double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("hs_inner: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
    // Tr{ab} = sum_jk a_jk b_kj = sum_jk a_jk conj(b_jk) for hermitian b.
    return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

inline double hs_norm(const HermitianOperator& a) { return a.matrix().norm(); }

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

struct EigenDecomposition {
    std::vector<double> values;  // descending
    CMatrix vectors;             // column j belongs to values[j]
};

/// Full eigendecomposition, eigenvalues sorted descending.
///
/// Throws NumericError if the solver fails or the reconstruction residual
/// exceeds kReconstructionTol * max(1, ||a||).
inline EigenDecomposition eigen_decompose(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw NumericError("hermitian eigensolver did not converge", std::nan(""));
    }
    const RVector& ev = solver.eigenvalues();
    const CMatrix& vec = solver.eigenvectors();
    const CMatrix rebuilt = vec * ev.cast<Complex>().asDiagonal() * vec.adjoint();
    const double residual = (rebuilt - a.matrix()).norm();
    const double scale = std::max(1.0, a.matrix().norm());
    if (residual > kReconstructionTol * scale) {
        throw NumericError("eigendecomposition reconstruction residual too large", residual);
    }
    const Eigen::Index d = ev.size();
    EigenDecomposition out;
    out.values.resize(static_cast<std::size_t>(d));
    out.vectors.resize(d, d);
    // Eigen returns ascending order.
    for (Eigen::Index j = 0; j < d; ++j) {
        out.values[static_cast<std::size_t>(j)] = ev(d - 1 - j);
        out.vectors.col(j) = vec.col(d - 1 - j);
    }
    return out;
}

/// Eigenvalues only, sorted descending. Cheaper than eigen_decompose.
inline std::vector<double> eigenvalues(const HermitianOperator& a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("hermitian eigensolver did not converge", std::nan(""));
    }
    std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

inline double min_eigenvalue(const HermitianOperator& a) { return eigenvalues(a).back(); }

/// Eigenvalues grouped into degenerate clusters.
struct Spectrum {
    std::vector<double> eigenvalues;  // one representative (cluster mean) per group, descending
    std::vector<int> multiplicities;

    int dim() const {
        int s = 0;
        for (int m : multiplicities) s += m;
        return s;
    }

    /// The flat eigenvalue list with every group repeated by its multiplicity.
    std::vector<double> expanded() const {
        std::vector<double> out;
        for (std::size_t g = 0; g < eigenvalues.size(); ++g) {
            out.insert(out.end(), static_cast<std::size_t>(multiplicities[g]), eigenvalues[g]);
        }
        return out;
    }
};

/// Groups a descending list: a value joins the current group when it lies
/// within cluster_tol of the previous value.
inline Spectrum cluster_eigenvalues(const std::vector<double>& descending, double cluster_tol = kClusterTol) {
    Spectrum s;
    double group_sum = 0.0;
    int group_size = 0;
    for (std::size_t j = 0; j < descending.size(); ++j) {
        if (group_size > 0 && descending[j - 1] - descending[j] >= cluster_tol) {
            s.eigenvalues.push_back(group_sum / group_size);
            s.multiplicities.push_back(group_size);
            group_sum = 0.0;
            group_size = 0;
        }
        group_sum += descending[j];
        ++group_size;
    }
    if (group_size > 0) {
        s.eigenvalues.push_back(group_sum / group_size);
        s.multiplicities.push_back(group_size);
    }
    return s;
}

inline Spectrum eig_spectrum(const HermitianOperator& a, double cluster_tol = kClusterTol) {
    return cluster_eigenvalues(eigen_decompose(a).values, cluster_tol);
}

/// Largest |a_j - b_j| between two spectra after expanding multiplicities.
/// Infinite when the total dimensions differ.
inline double spectrum_distance(const Spectrum& a, const Spectrum& b) {
    const auto ea = a.expanded();
    const auto eb = b.expanded();
    if (ea.size() != eb.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t j = 0; j < ea.size(); ++j) worst = std::max(worst, std::abs(ea[j] - eb[j]));
    return worst;
}

struct PsdResult {
    bool psd = true;
    double min_eigenvalue = 0.0;  // the witness when psd is false
    double threshold = 0.0;       // -tol * max(1, ||a||_HS)

    explicit operator bool() const { return psd; }
};

/// True iff the smallest eigenvalue is >= -tol * max(1, ||a||_HS).
inline PsdResult is_psd(const HermitianOperator& a, double tol = kPsdTol) {
    if (tol < 0) throw DomainError("is_psd: tolerance must be non-negative");
    PsdResult r;
    r.min_eigenvalue = min_eigenvalue(a);
    r.threshold = -tol * std::max(1.0, hs_norm(a));
    r.psd = r.min_eigenvalue >= r.threshold;
    return r;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace povm
