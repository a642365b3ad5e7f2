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

// Construction of (N,M)-POVMs from an operator basis:
//
//   Pi_i = I/M + sqrt(Gamma) * sum_{mu >= 2} X(i, mu) G_mu
//
// with a real N*M x d^2 coefficient matrix X whose columns are orthonormal,
// whose first column is constant and whose per-POVM row sums vanish. The
// block ansatz used here places the vertices of a regular (M-1)-simplex in
// the M-1 columns of each partition block.

#include <array>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "povm/bases.hpp"
#include "povm/model.hpp"

namespace povm {

struct XMatrix {
    int d = 0;
    int N = 0;
    int M = 0;
    RMatrix entries;  // N*M rows, d^2 columns; row i-1 belongs to i(alpha, a)
};

struct XMatrixReport {
    double column_orthonormality_residual = 0.0;  // max |X^T X - I| over the active columns
    double first_column_residual = 0.0;           // max |X(i,1) - 1/sqrt(NM)|
    double block_sum_residual = 0.0;              // max |sum_a X(i(alpha,a), mu)|, mu >= 2
    double row_norm_residual = 0.0;               // max |sum_{mu>=2} X(i,mu)^2 - (M-1)/M|
    int active_columns = 0;                       // N(M-1) + 1
    bool passed = false;
};

/// Column orthonormality can only hold on all d^2 columns when
/// N(M-1) = d^2-1. For smaller families the N(M-1)+1 columns with non-zero
/// entries must be orthonormal and every other column must vanish; an
/// unexpected extra non-zero column shows up as a count mismatch.
inline XMatrixReport check_x_matrix(const XMatrix& x, double tol = 1e-10) {
    const auto& e = x.entries;
    XMatrixReport r;
    std::vector<Eigen::Index> active;
    for (Eigen::Index c = 0; c < e.cols(); ++c) {
        if (e.col(c).cwiseAbs().maxCoeff() > tol) active.push_back(c);
    }
    r.active_columns = static_cast<int>(active.size());
    RMatrix a(e.rows(), static_cast<Eigen::Index>(active.size()));
    for (std::size_t k = 0; k < active.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = e.col(active[k]);
    r.column_orthonormality_residual =
        active.empty() ? 1.0 : (a.transpose() * a - RMatrix::Identity(a.cols(), a.cols())).cwiseAbs().maxCoeff();
    const double c1 = 1.0 / std::sqrt(static_cast<double>(x.N) * x.M);
    r.first_column_residual = (e.col(0).array() - c1).abs().maxCoeff();
    for (int alpha = 0; alpha < x.N; ++alpha) {
        const RMatrix blk = e.block(alpha * x.M, 1, x.M, e.cols() - 1);
        r.block_sum_residual = std::max(r.block_sum_residual, blk.colwise().sum().cwiseAbs().maxCoeff());
    }
    const double target = static_cast<double>(x.M - 1) / x.M;
    const RVector row_sq = e.rightCols(e.cols() - 1).rowwise().squaredNorm();
    r.row_norm_residual = (row_sq.array() - target).abs().maxCoeff();
    r.passed = r.active_columns == x.N * (x.M - 1) + 1 &&
               std::max({r.column_orthonormality_residual, r.first_column_residual, r.block_sum_residual,
                         r.row_norm_residual}) <= tol;
    return r;
}

/// Vertices of a regular (M-1)-simplex centred at the origin, one per row,
/// with v_a . v_b = delta_ab - 1/M. Coordinates are the Helmert contrasts:
/// column k-1 is (1, ..., 1, -k, 0, ...)/sqrt(k(k+1)).
inline RMatrix simplex_vertices(int m_outcomes) {
    if (m_outcomes < 2) throw DomainError("simplex needs M >= 2");
    RMatrix v = RMatrix::Zero(m_outcomes, m_outcomes - 1);
    for (int k = 1; k < m_outcomes; ++k) {
        const double norm = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int a = 0; a < k; ++a) v(a, k - 1) = norm;
        v(k, k - 1) = -k * norm;
    }
    return v;
}

inline RMatrix rotation_2d(double angle) {
    RMatrix r(2, 2);
    r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return r;
}

/// Block-structured X: block alpha carries R_alpha v_a in the columns of
/// partition.blocks[alpha], column 1 is 1/sqrt(NM), everything else is 0.
/// `rotations` is empty or holds one (M-1)x(M-1) orthogonal matrix per block.
inline XMatrix simplex_x_matrix(int d, int n_povms, int m_outcomes, const Partition& partition,
                                const std::vector<RMatrix>& rotations = {}) {
    if (partition.dim != d) throw PartitionError("partition is for d=" + std::to_string(partition.dim));
    make_partition(d, n_povms, m_outcomes, partition.blocks);
    if (!rotations.empty() && static_cast<int>(rotations.size()) != n_povms) {
        throw DimensionError("need one block rotation per POVM");
    }
    const RMatrix v = simplex_vertices(m_outcomes);
    XMatrix x{d, n_povms, m_outcomes, RMatrix::Zero(n_povms * m_outcomes, d * d)};
    x.entries.col(0).setConstant(1.0 / std::sqrt(static_cast<double>(n_povms) * m_outcomes));
    for (int alpha = 0; alpha < n_povms; ++alpha) {
        RMatrix verts = v;
        if (!rotations.empty()) {
            const RMatrix& rot = rotations[static_cast<std::size_t>(alpha)];
            if (rot.rows() != m_outcomes - 1 || rot.cols() != m_outcomes - 1) {
                throw DimensionError("block rotation must be (M-1)x(M-1)");
            }
            verts = v * rot.transpose();
        }
        const auto& blk = partition.blocks[static_cast<std::size_t>(alpha)];
        for (int a = 0; a < m_outcomes; ++a) {
            for (int k = 0; k < m_outcomes - 1; ++k) {
                x.entries(alpha * m_outcomes + a, blk[static_cast<std::size_t>(k)] - 1) = verts(a, k);
            }
        }
    }
    return x;
}

struct PsdWitness {
    int index = 0;  // 1-based i(alpha, a)
    double min_eigenvalue = 0.0;
};

struct ExpansionResult {
    NMPovm povm;
    std::vector<PsdWitness> non_psd;  // empty iff every element is PSD
};

/// Pi_i = I/M + sqrt(Gamma) sum_{mu>=2} X(i,mu) G_mu.
///
/// With require_psd the most negative element aborts the construction with a
/// ConstructionError; otherwise every non-PSD element is listed.
inline ExpansionResult from_expansion(const OperatorBasis& basis, const XMatrix& xmat, const PovmParams& params,
                                      bool require_psd) {
    const int d = params.d;
    if (basis.dim != d || basis.size() != d * d) {
        throw DimensionError("basis does not match d = " + std::to_string(d));
    }
    if (xmat.entries.rows() != params.element_count() || xmat.entries.cols() != d * d) {
        throw DimensionError("X must be " + std::to_string(params.element_count()) + "x" + std::to_string(d * d));
    }
    const double scale = std::sqrt(params.gamma);
    std::vector<HermitianOperator> elems;
    elems.reserve(static_cast<std::size_t>(params.element_count()));
    for (int i = 0; i < params.element_count(); ++i) {
        CMatrix m = CMatrix::Identity(d, d) / static_cast<double>(params.M);
        for (int mu = 1; mu < d * d; ++mu) {
            const double c = xmat.entries(i, mu);
            if (c != 0.0) m += (scale * c) * basis.elements[static_cast<std::size_t>(mu)].matrix();
        }
        elems.emplace_back(std::move(m));
    }
    std::vector<PsdWitness> bad;
    for (int i = 0; i < params.element_count(); ++i) {
        const auto psd = is_psd(elems[static_cast<std::size_t>(i)]);
        if (!psd) bad.push_back({i + 1, psd.min_eigenvalue});
    }
    if (require_psd && !bad.empty()) {
        const auto worst = *std::min_element(bad.begin(), bad.end(), [](const auto& a, const auto& b) {
            return a.min_eigenvalue < b.min_eigenvalue;
        });
        throw ConstructionError("element " + std::to_string(worst.index) + " is not positive semidefinite (min eigenvalue " +
                                    std::to_string(worst.min_eigenvalue) + ")",
                                worst.min_eigenvalue, worst.index);
    }
    return {NMPovm(params, std::move(elems)), std::move(bad)};
}

/// Largest x for which every element built from any orthonormal traceless
/// basis is guaranteed PSD: d/M^2 + d/(M^2 (d-1)).
inline double sufficient_x_bound(int d, int m_outcomes) {
    const double dd = d;
    const double mm2 = static_cast<double>(m_outcomes) * m_outcomes;
    return dd / mm2 + dd / (mm2 * (dd - 1));
}

/// Simplex construction at an x inside the sufficient regime. PSD is
/// guaranteed for every orthonormal traceless basis and partition.
inline NMPovm sufficient_construct(int d, int n_povms, int m_outcomes, double x, const OperatorBasis& basis,
                                   const std::optional<Partition>& partition = std::nullopt) {
    const double bound = sufficient_x_bound(d, m_outcomes);
    if (x > bound + kOptimalityTol) {
        std::ostringstream os;
        os.precision(17);
        os << "x = " << x << " exceeds the sufficient bound d/M^2 + d/(M^2(d-1)) = " << bound;
        throw PreconditionError(os.str());
    }
    const PovmParams params = povm_params(d, n_povms, m_outcomes, x);
    const Partition part = partition ? *partition : make_partition(d, n_povms, m_outcomes);
    const XMatrix xm = simplex_x_matrix(d, n_povms, m_outcomes, part);
    return from_expansion(basis, xm, params, true).povm;
}

/// Optimal (N,2)-POVM in d = 2^k: Pi = I/2 +- P/2 for the first N
/// non-identity Pauli strings P in lexicographic order, x = d/2.
inline NMPovm optimal_n2_pauli(int k, int n_povms) {
    if (k < 1) throw ParameterError("k must be >= 1");
    if (k > 6) throw ParameterError("k > 6 exceeds the dense-matrix size limit");
    const int d = 1 << k;
    const long max_n = static_cast<long>(d) * d - 1;
    if (n_povms < 1 || n_povms > max_n) {
        throw ParameterError("N must be in 1.." + std::to_string(max_n) + " for k = " + std::to_string(k) + ", got " +
                             std::to_string(n_povms));
    }
    const PovmParams params = povm_params(d, n_povms, 2, d / 2.0);
    const CMatrix half_id = CMatrix::Identity(d, d) * 0.5;
    std::vector<HermitianOperator> elems;
    for (long code = 1; code <= n_povms; ++code) {
        const CMatrix half_p = pauli_string(pauli_tuple(code, k)) * 0.5;
        elems.emplace_back(half_id + half_p);
        elems.emplace_back(half_id - half_p);
    }
    return NMPovm(params, std::move(elems));
}

// ---------------------------------------------------------------------------
// Rotation search for planar (M = 3) blocks.

enum class FeasibleSetKind { interval, points, all };

inline std::string to_string(FeasibleSetKind k) {
    switch (k) {
        case FeasibleSetKind::interval: return "interval";
        case FeasibleSetKind::points: return "points";
        case FeasibleSetKind::all: return "all";
    }
    return "unknown";
}

struct BlockRotation {
    int alpha = 0;
    std::vector<int> basis_indices;
    double angle = 0.0;          // selected rotation of the default simplex, radians in [0, 2pi/3)
    double best_angle = 0.0;     // angle maximizing the admissible vertex radius
    double best_radius = 0.0;    // largest vertex radius any rotation admits
    double best_margin = 0.0;    // min eigenvalue over the block at best_angle and the final x
    double feasible_fraction = 0.0;
    FeasibleSetKind kind = FeasibleSetKind::all;
    std::vector<std::pair<double, double>> intervals;  // may wrap: first > second
    std::vector<double> points;
};

struct PlanarSearchOptions {
    double scan_step = 1e-4;       // radians
    double refine_tol = 1e-9;      // radians
    int fraction_samples = 10000;  // angles used to estimate the feasible fraction
    double feasibility_tol = kPsdTol;
    double point_margin = 1e-9;    // best margin at or below this marks an isolated set
    double dense_fraction = 0.99;
};

struct PlanarSearchResult {
    double x = 0.0;
    std::vector<BlockRotation> blocks;
    std::vector<RMatrix> rotations;
};

namespace detail {

inline constexpr double kTriangleSymmetry = 2.0 * std::numbers::pi / 3.0;

inline double wrap_angle(double angle, double period, double snap) {
    double t = std::fmod(angle, period);
    if (t < 0) t += period;
    if (t < snap || period - t < snap) t = 0.0;
    return t;
}

/// Unit-direction operators D_a(theta) = w_a . (G_p, G_q) of the rotated
/// triangle vertices.
class PlanarBlock {
  public:
    PlanarBlock(const OperatorBasis& basis, int p, int q, int m_outcomes)
        : gp_(basis.at(p).matrix()), gq_(basis.at(q).matrix()), m_(m_outcomes), d_(basis.dim) {
        const RMatrix v = simplex_vertices(3);
        for (int a = 0; a < 3; ++a) unit_[a] = v.row(a).normalized();
    }

    CMatrix direction(int a, double theta) const {
        const Eigen::Vector2d w = rotation_2d(theta) * unit_[a];
        return w(0) * gp_ + w(1) * gq_;
    }

    /// Largest s with I/M + s D_a PSD, minimized over the three vertices.
    double reach(double theta) const {
        double best = std::numeric_limits<double>::infinity();
        for (int a = 0; a < 3; ++a) {
            const double lo = min_eigenvalue(HermitianOperator(direction(a, theta)));
            if (lo < 0) best = std::min(best, 1.0 / (m_ * -lo));
        }
        return best;
    }

    /// Smallest eigenvalue among the three vertex operators at radius r.
    double margin(double theta, double radius) const {
        double lo = std::numeric_limits<double>::infinity();
        const CMatrix centre = CMatrix::Identity(d_, d_) / static_cast<double>(m_);
        for (int a = 0; a < 3; ++a) {
            lo = std::min(lo, min_eigenvalue(HermitianOperator(centre + radius * direction(a, theta))));
        }
        return lo;
    }

  private:
    CMatrix gp_, gq_;
    std::array<Eigen::Vector2d, 3> unit_;
    int m_;
    int d_;
};

template <typename F>
double golden_maximize(F&& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double e = a + inv_phi * (b - a);
    double fc = f(c), fe = f(e);
    while (b - a > tol) {
        if (fc >= fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + inv_phi * (b - a);
            fe = f(e);
        }
    }
    return 0.5 * (a + b);
}

/// Bisects for the boundary of {margin >= -tol} between a feasible and an
/// infeasible angle.
template <typename F>
double bisect_boundary(F&& feasible, double inside, double outside, double tol) {
    while (std::abs(outside - inside) > tol) {
        const double mid = 0.5 * (inside + outside);
        (feasible(mid) ? inside : outside) = mid;
    }
    return inside;
}

}  // namespace detail

/// Finds, for a partition into planar blocks (M = 3), the largest x at which
/// every block admits a rotation of its triangle keeping all three vertices
/// PSD, and classifies each block's feasible rotation set at that x.
///
/// Per block the admissible vertex radius along each ray is exact (a ray
/// I/M + s D leaves the PSD cone at s = 1/(M |lambda_min(D)|)); the rotation
/// angle is scanned over one period of the triangle's 3-fold symmetry and
/// the best angle refined by golden-section search. At the resulting x the
/// feasible set of each block is sampled, and interval endpoints are refined
/// by bisection on the min-eigenvalue function.
inline PlanarSearchResult planar_block_search(const OperatorBasis& basis, const Partition& partition,
                                              const PlanarSearchOptions& opt = {}) {
    constexpr int M = 3;
    const int d = basis.dim;
    if (partition.dim != d) throw PartitionError("partition/basis dimension mismatch");
    for (const auto& blk : partition.blocks) {
        if (blk.size() != 2) throw PartitionError("planar search needs blocks of size 2 (M = 3)");
    }
    const double period = detail::kTriangleSymmetry;
    const int steps = static_cast<int>(std::ceil(period / opt.scan_step));
    const double h = period / steps;

    PlanarSearchResult out;
    std::vector<detail::PlanarBlock> planes;
    double radius = std::numeric_limits<double>::infinity();
    for (std::size_t alpha = 0; alpha < partition.blocks.size(); ++alpha) {
        const auto& blk = partition.blocks[alpha];
        planes.emplace_back(basis, blk[0], blk[1], M);
        const auto& plane = planes.back();
        int best_k = 0;
        double best_reach = -1.0;
        for (int k = 0; k < steps; ++k) {
            const double r = plane.reach(k * h);
            if (r > best_reach * (1.0 + 1e-12)) {
                best_reach = r;
                best_k = k;
            }
        }
        double theta = detail::golden_maximize([&](double t) { return plane.reach(t); }, (best_k - 1) * h,
                                               (best_k + 1) * h, opt.refine_tol);
        double refined = plane.reach(theta);
        if (refined < best_reach) {
            theta = best_k * h;
            refined = best_reach;
        }
        BlockRotation br;
        br.alpha = static_cast<int>(alpha) + 1;
        br.basis_indices = blk;
        br.best_angle = detail::wrap_angle(theta, period, opt.refine_tol);
        br.best_radius = refined;
        out.blocks.push_back(br);
        radius = std::min(radius, refined);
    }
    if (!std::isfinite(radius)) throw NumericError("planar search: unbounded radius", radius);

    const double dd = d;
    out.x = dd / (M * M) + radius * radius;

    for (std::size_t alpha = 0; alpha < planes.size(); ++alpha) {
        const auto& plane = planes[alpha];
        auto& br = out.blocks[alpha];
        auto feasible = [&](double t) { return plane.margin(t, radius) >= -opt.feasibility_tol; };
        br.best_margin = plane.margin(br.best_angle, radius);

        const int samples = opt.fraction_samples;
        const double hs = period / samples;
        std::vector<char> ok(static_cast<std::size_t>(samples));
        int count = 0;
        for (int j = 0; j < samples; ++j) {
            ok[static_cast<std::size_t>(j)] = feasible(j * hs) ? 1 : 0;
            count += ok[static_cast<std::size_t>(j)];
        }
        br.feasible_fraction = static_cast<double>(count) / samples;

        if (br.feasible_fraction >= opt.dense_fraction) {
            br.kind = FeasibleSetKind::all;
            int first = 0;
            while (first < samples && !ok[static_cast<std::size_t>(first)]) ++first;
            br.angle = first * hs;
        } else if (br.best_margin > opt.point_margin) {
            br.kind = FeasibleSetKind::interval;
            br.angle = br.best_angle;
            // Circular runs of feasible samples; start scanning just after an infeasible one.
            int start = 0;
            while (start < samples && ok[static_cast<std::size_t>(start)]) ++start;
            for (int step = 1; step <= samples; ++step) {
                const int j = (start + step) % samples;
                const int prev = (j + samples - 1) % samples;
                if (ok[static_cast<std::size_t>(j)] && !ok[static_cast<std::size_t>(prev)]) {
                    int end = j;
                    while (ok[static_cast<std::size_t>((end + 1) % samples)]) end = (end + 1) % samples;
                    // Unwrapped angles so that bisection brackets stay contiguous.
                    const double lo_in = j * hs;
                    const double lo_out = lo_in - hs;
                    const double hi_in = (end >= j ? end : end + samples) * hs;
                    const double hi_out = hi_in + hs;
                    const double lo = detail::bisect_boundary(feasible, lo_in, lo_out, opt.refine_tol);
                    const double hi = detail::bisect_boundary(feasible, hi_in, hi_out, opt.refine_tol);
                    br.intervals.emplace_back(detail::wrap_angle(lo, period, 0.0), detail::wrap_angle(hi, period, 0.0));
                }
            }
        } else if (br.best_margin >= -opt.feasibility_tol) {
            br.kind = FeasibleSetKind::points;
            br.angle = br.best_angle;
            br.points.push_back(br.best_angle);
        } else {
            throw NumericError("planar search: block " + std::to_string(br.alpha) + " infeasible at its best angle",
                               br.best_margin);
        }
        out.rotations.push_back(rotation_2d(br.angle));
    }
    return out;
}

struct Mum3Result {
    NMPovm povm;
    PlanarSearchResult search;
};

/// The maximal (4,3)-POVM (MUM) in d = 3 reachable with the Gell-Mann basis
/// and the fig1 partition, at the x found by planar_block_search (5/9).
inline Mum3Result mum3_optimal_partition(const PlanarSearchOptions& opt = {}) {
    const OperatorBasis basis = gell_mann_basis(3);
    const Partition part = fig1_partition();
    PlanarSearchResult search = planar_block_search(basis, part, opt);
    const PovmParams params = povm_params(3, 4, 3, search.x);
    const XMatrix xm = simplex_x_matrix(3, 4, 3, part, search.rotations);
    NMPovm povm = from_expansion(basis, xm, params, true).povm;
    return {std::move(povm), std::move(search)};
}

// ---------------------------------------------------------------------------
// Reference fixtures.

enum class Fixture { sic_qubit, mub_d2, mub_d3 };

inline std::string to_string(Fixture f) {
    switch (f) {
        case Fixture::sic_qubit: return "sic_qubit";
        case Fixture::mub_d2: return "mub_d2";
        case Fixture::mub_d3: return "mub_d3";
    }
    return "unknown";
}

inline Fixture fixture_from_string(const std::string& name) {
    if (name == "sic_qubit") return Fixture::sic_qubit;
    if (name == "mub_d2") return Fixture::mub_d2;
    if (name == "mub_d3") return Fixture::mub_d3;
    throw DomainError("unknown fixture '" + name + "' (expected sic_qubit, mub_d2, mub_d3)");
}

inline std::vector<Fixture> all_fixtures() { return {Fixture::sic_qubit, Fixture::mub_d2, Fixture::mub_d3}; }

namespace detail {

inline HermitianOperator projector(const CVector& v) { return HermitianOperator(v * v.adjoint()); }

inline NMPovm sic_qubit() {
    const double s = std::sqrt(2.0) / 3.0;
    const double t = std::sqrt(2.0 / 3.0);
    const std::array<std::array<double, 3>, 4> bloch{{{0.0, 0.0, 1.0},
                                                      {2.0 * s, 0.0, -1.0 / 3.0},
                                                      {-s, t, -1.0 / 3.0},
                                                      {-s, -t, -1.0 / 3.0}}};
    std::vector<HermitianOperator> elems;
    for (const auto& n : bloch) {
        CMatrix m = pauli_matrix(0);
        for (int j = 0; j < 3; ++j) m += n[static_cast<std::size_t>(j)] * pauli_matrix(j + 1);
        elems.emplace_back(m * 0.25);
    }
    return NMPovm(povm_params(2, 1, 4, 0.25), std::move(elems));
}

/// Computational basis followed by the three bases
/// |psi_{j,m}> = sum_n w^{j n^2 + m n} |n> / sqrt(3), w = exp(2 pi i/3).
inline NMPovm mub_d3() {
    constexpr int d = 3;
    std::vector<HermitianOperator> elems;
    for (int m = 0; m < d; ++m) elems.push_back(projector(CVector::Unit(d, m)));
    for (int j = 0; j < d; ++j) {
        for (int m = 0; m < d; ++m) {
            CVector v(d);
            for (int n = 0; n < d; ++n) {
                const int phase = (j * n * n + m * n) % d;
                v(n) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), 2.0 * std::numbers::pi * phase / d);
            }
            elems.push_back(projector(v));
        }
    }
    return NMPovm(povm_params(d, d + 1, d, 1.0), std::move(elems));
}

}  // namespace detail

inline NMPovm fixture_povm(Fixture f) {
    switch (f) {
        case Fixture::sic_qubit: return detail::sic_qubit();
        case Fixture::mub_d2: return optimal_n2_pauli(1, 3);
        case Fixture::mub_d3: return detail::mub_d3();
    }
    throw DomainError("unknown fixture");
}

}  // namespace povm
