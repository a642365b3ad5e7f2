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

// The (N,M)-POVM data model: N POVMs with M outcomes each on a
// d-dimensional system, sharing one continuous parameter x = Tr{Pi_i^2}.

#include <sstream>
#include <vector>

#include "povm/bases.hpp"
#include "povm/herm.hpp"

namespace povm {

inline constexpr double kOptimalityTol = 1e-12;

/// (d, N, M, x) together with the derived eigenvalues of the structural map.
struct PovmParams {
    int d = 0;
    int N = 0;
    int M = 0;
    double x = 0.0;

    double lambda1 = 0.0;  // dN/M
    double gamma = 0.0;    // (x M^2 - d) / (M (M - 1))
    double x_min = 0.0;    // d/M^2, excluded
    double x_max = 0.0;    // min(d^2/M^2, d/M)
    bool optimal = false;  // |x - x_max| <= kOptimalityTol

    double optimality_gap() const { return x_max - x; }
    int element_count() const { return N * M; }
};

inline double optimal_x(int d, int m_outcomes) {
    const double dd = d;
    const double mm = m_outcomes;
    return std::min(dd * dd / (mm * mm), dd / mm);
}

/// Validated parameters. The admissible range is d/M^2 < x <= min(d^2/M^2, d/M).
inline PovmParams povm_params(int d, int n_povms, int m_outcomes, double x) {
    if (d < 2) throw ParameterError("d must be >= 2, got " + std::to_string(d));
    if (n_povms < 1) throw ParameterError("N must be >= 1, got " + std::to_string(n_povms));
    if (m_outcomes < 2) throw ParameterError("M must be >= 2, got " + std::to_string(m_outcomes));
    PovmParams p;
    p.d = d;
    p.N = n_povms;
    p.M = m_outcomes;
    p.x = x;
    const double dd = d;
    const double mm = m_outcomes;
    p.x_min = dd / (mm * mm);
    p.x_max = optimal_x(d, m_outcomes);
    if (!std::isfinite(x)) throw ParameterError("x must be finite");
    if (!(x > p.x_min)) {
        std::ostringstream os;
        os.precision(17);
        os << "lower bound violated: x = " << x << " must exceed d/M^2 = " << p.x_min;
        throw ParameterError(os.str());
    }
    if (x > p.x_max + kOptimalityTol) {
        std::ostringstream os;
        os.precision(17);
        os << "upper bound violated: x = " << x << " exceeds min(d^2/M^2, d/M) = " << p.x_max;
        throw ParameterError(os.str());
    }
    p.lambda1 = dd * n_povms / mm;
    p.gamma = (x * mm * mm - dd) / (mm * (mm - 1));
    p.optimal = std::abs(x - p.x_max) <= kOptimalityTol;
    return p;
}

/// N*M elements stored in the order i(alpha, a) = (alpha-1) M + a.
///
/// Only the shape is enforced here; the defining relations are checked by
/// validate_povm so that invalid candidates can be represented and diagnosed.
class NMPovm {
  public:
    NMPovm(PovmParams params, std::vector<HermitianOperator> elements)
        : params_(params), elements_(std::move(elements)) {
        if (static_cast<int>(elements_.size()) != params_.element_count()) {
            throw StructureError("expected N*M = " + std::to_string(params_.element_count()) + " elements, got " +
                                 std::to_string(elements_.size()));
        }
        for (const auto& e : elements_) {
            if (e.dim() != params_.d) {
                throw StructureError("element dimension " + std::to_string(e.dim()) + " != d = " +
                                     std::to_string(params_.d));
            }
        }
    }

    const PovmParams& params() const { return params_; }
    const std::vector<HermitianOperator>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }

    /// 1-based coordinate function i(alpha, a).
    int index(int alpha, int a) const { return (alpha - 1) * params_.M + a; }

    /// Element Pi_{i(alpha, a)}, alpha in 1..N, a in 1..M.
    const HermitianOperator& element(int alpha, int a) const {
        if (alpha < 1 || alpha > params_.N || a < 1 || a > params_.M) {
            throw IndexError("element (" + std::to_string(alpha) + "," + std::to_string(a) + ") out of range");
        }
        return elements_[static_cast<std::size_t>(index(alpha, a) - 1)];
    }

  private:
    PovmParams params_;
    std::vector<HermitianOperator> elements_;
};

struct ValidationReport {
    double trace_residual = 0.0;               // max |Tr{Pi_i} - d/M|
    double intra_diagonal_residual = 0.0;      // max |Tr{Pi_i^2} - x|
    double intra_offdiagonal_residual = 0.0;   // max |Tr{Pi_i Pi_i'} - (d - M x)/(M (M-1))|, same alpha
    double inter_residual = 0.0;               // max |Tr{Pi_i Pi_j} - d/M^2|, different alpha
    double completeness_residual = 0.0;        // max_alpha max entry |sum_a Pi - I|
    double psd_residual = 0.0;                 // max_i max(0, -lambda_min) / max(1, ||Pi_i||)
    double min_eigenvalue = 0.0;
    int min_eigenvalue_index = 0;              // 1-based
    double measured_x = 0.0;                   // mean of Tr{Pi_i^2}
    double optimality_gap = 0.0;
    bool optimal = false;
    double tolerance = 0.0;
    bool passed = false;

    double max_residual() const {
        return std::max({trace_residual, intra_diagonal_residual, intra_offdiagonal_residual, inter_residual,
                         completeness_residual, psd_residual});
    }
};

inline ValidationReport validate_povm(const NMPovm& p, double tol = 1e-10) {
    const auto& prm = p.params();
    const int d = prm.d;
    const int M = prm.M;
    const double dd = d;
    const double mm = M;
    const double expect_trace = dd / mm;
    const double expect_off = (dd - mm * prm.x) / (mm * (mm - 1));
    const double expect_inter = dd / (mm * mm);

    ValidationReport r;
    r.tolerance = tol;
    r.optimal = prm.optimal;
    r.optimality_gap = prm.optimality_gap();

    const RMatrix g = gram_matrix(p.elements());
    const int n = p.size();
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double tr = p.elements()[static_cast<std::size_t>(i)].trace();
        r.trace_residual = std::max(r.trace_residual, std::abs(tr - expect_trace));
        sum_sq += g(i, i);
        for (int j = 0; j < n; ++j) {
            const bool same_povm = (i / M) == (j / M);
            if (i == j) {
                r.intra_diagonal_residual = std::max(r.intra_diagonal_residual, std::abs(g(i, i) - prm.x));
            } else if (same_povm) {
                r.intra_offdiagonal_residual = std::max(r.intra_offdiagonal_residual, std::abs(g(i, j) - expect_off));
            } else {
                r.inter_residual = std::max(r.inter_residual, std::abs(g(i, j) - expect_inter));
            }
        }
    }
    r.measured_x = sum_sq / n;

    const CMatrix id = CMatrix::Identity(d, d);
    for (int alpha = 1; alpha <= prm.N; ++alpha) {
        CMatrix s = CMatrix::Zero(d, d);
        for (int a = 1; a <= M; ++a) s += p.element(alpha, a).matrix();
        r.completeness_residual = std::max(r.completeness_residual, max_abs_diff(s, id));
    }

    r.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const auto& e = p.elements()[static_cast<std::size_t>(i)];
        const double lo = min_eigenvalue(e);
        if (lo < r.min_eigenvalue) {
            r.min_eigenvalue = lo;
            r.min_eigenvalue_index = i + 1;
        }
        r.psd_residual = std::max(r.psd_residual, std::max(0.0, -lo) / std::max(1.0, hs_norm(e)));
    }
    r.passed = r.max_residual() <= tol;
    return r;
}

/// Born-rule probabilities Tr{rho Pi_i} in i(alpha, a) order.
///
/// rho must be a state: unit trace within 1e-10 and PSD at `tol`.
inline std::vector<double> born_probabilities(const NMPovm& p, const HermitianOperator& rho, double tol = kPsdTol) {
    if (rho.dim() != p.params().d) {
        throw StateError("state dimension " + std::to_string(rho.dim()) + " != d = " + std::to_string(p.params().d));
    }
    if (std::abs(rho.trace() - 1.0) > 1e-10) {
        throw StateError("state trace " + std::to_string(rho.trace()) + " != 1");
    }
    const auto psd = is_psd(rho, tol);
    if (!psd) {
        throw StateError("state is not positive semidefinite (min eigenvalue " + std::to_string(psd.min_eigenvalue) +
                         ")");
    }
    std::vector<double> probs;
    probs.reserve(p.elements().size());
    for (const auto& e : p.elements()) probs.push_back(hs_inner(rho, e));
    return probs;
}

struct CompletenessReport {
    bool parameter_condition = false;  // (M-1) N + 1 == d^2
    int operator_rank = 0;             // rank of the HS Gram matrix of all N*M elements
    bool complete = false;
};

/// Rank counts Gram eigenvalues above tol * (largest eigenvalue).
inline CompletenessReport informational_completeness(const NMPovm& p, double tol = 1e-10) {
    const auto& prm = p.params();
    CompletenessReport r;
    r.parameter_condition = (prm.M - 1) * prm.N + 1 == prm.d * prm.d;
    const RMatrix g = gram_matrix(p.elements());
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(g, Eigen::EigenvaluesOnly);
    const RVector sv = solver.eigenvalues().cwiseAbs();
    const double top = sv.maxCoeff();
    for (Eigen::Index j = 0; j < sv.size(); ++j) {
        if (sv(j) > tol * top) ++r.operator_rank;
    }
    r.complete = r.parameter_condition && r.operator_rank == prm.d * prm.d;
    return r;
}

inline bool is_informationally_complete(const NMPovm& p, double tol = 1e-10) {
    return informational_completeness(p, tol).complete;
}

}  // namespace povm
